"""Command-line frontend tying the pipeline together.

Subcommands: validate, transform, solve, codegen, inspect.  stdout carries
machine-stable ``key=value`` lines (and, for transform/codegen without
``-o``, the produced document); everything human-facing goes to stderr.

Exit codes: 0 success, 1 validation or semantic error, 2 I/O or syntax
error, 3 solver did not converge, 64 usage error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from . import anneal as annealing
from . import codegen, models, transform, vqe
from .errors import (
    IsingForgeError,
    ModelSyntaxError,
    NotRepresentable,
    UnknownTopology,
    ValidationError,
)
from .ising import edge_set, exact_ground
from .models import AnnealerPsm, GatePsm, Pim

EXIT_OK = 0
EXIT_SEMANTIC = 1
EXIT_IO = 2
EXIT_NO_CONVERGENCE = 3
EXIT_USAGE = 64


def _fmt(value: float) -> str:
    """Minimal-digit real for stdout: -4 rather than -4.000000."""
    return np.format_float_positional(float(value), trim="-")


def _say(message: str) -> None:
    print(message, file=sys.stderr)


def _load(path: str, check: bool = True) -> Pim | AnnealerPsm | GatePsm:
    text = Path(path).read_text(encoding="utf-8")
    return models.parse_document(text, check=check)


def _write_output(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")
        _say(f"wrote {output}")


def _cmd_validate(args) -> int:
    model = _load(args.file, check=False)
    report = models.validate(model)
    for issue in report.issues:
        _say(f"{issue.severity}: {issue.field}: {issue.message}")
    print(f"ok={'true' if report.ok else 'false'}")
    return EXIT_OK if report.ok else EXIT_SEMANTIC


def _to_pim(model) -> Pim:
    if isinstance(model, AnnealerPsm):
        return transform.annealer_to_pim(model)
    if isinstance(model, GatePsm):
        return transform.gate_to_pim(model)
    return model


def _cmd_transform(args) -> int:
    model = _load(args.file)
    kind = {Pim: "pim", AnnealerPsm: "annealer", GatePsm: "gate"}[type(model)]
    if kind == args.to:
        _say(f"input is already a {args.to} model; nothing to transform")
        return EXIT_SEMANTIC
    if args.to == "pim":
        result = _to_pim(model)
    elif args.to == "gate":
        result = transform.pim_to_gate(_to_pim(model))
    else:
        result = transform.pim_to_annealer(_to_pim(model))
    _write_output(models.serialize(result), args.output)
    return EXIT_OK


def _as_model(document):
    if isinstance(document, Pim):
        return transform.model_from_pim(document)
    if isinstance(document, AnnealerPsm):
        return transform.model_from_annealer(document)
    return transform.model_from_gate(document)


def _solve_exact(args, document) -> int:
    result = exact_ground(_as_model(document))
    print(f"energy={_fmt(result.energy)}")
    print(f"config={result.representative}")
    print(f"degenerate={result.degeneracy}")
    return EXIT_OK


def _solve_vqe(args, document) -> int:
    if isinstance(document, AnnealerPsm):
        _say("an annealer PSM cannot run on the vqe backend; transform it first")
        return EXIT_SEMANTIC
    psm = transform.pim_to_gate(document) if isinstance(document, Pim) else document
    model = transform.model_from_gate(psm)
    optimizer = psm.optimizer
    if args.seed is not None:
        optimizer = replace(optimizer, seed=args.seed)
    spec = vqe.AnsatzSpec(psm.qubits, psm.layers, psm.entangle_pattern)
    result = vqe.minimize(spec, model, optimizer)
    if args.trace:
        Path(args.trace).write_text(result.trace.csv(), encoding="utf-8")
        _say(f"wrote {args.trace}")
    config, _probability = vqe.dominant_config(spec, model, result)
    print(f"energy={_fmt(result.energy)}")
    print(f"config={config}")
    if not result.converged:
        _say("vqe did not converge within max_iters")
        return EXIT_NO_CONVERGENCE
    return EXIT_OK


def _solve_anneal(args, document) -> int:
    if isinstance(document, GatePsm):
        _say("a gate PSM cannot run on the anneal backend; transform it first")
        return EXIT_SEMANTIC
    psm = transform.pim_to_annealer(document) if isinstance(document, Pim) else document
    model = transform.model_from_annealer(psm)
    schedule = annealing.AnnealSchedule(psm.sweeps, psm.t_initial, psm.t_final)
    seed = 0 if args.seed is None else args.seed
    samples = annealing.anneal(model, schedule, reads=psm.reads, seed=seed)
    if args.samples:
        Path(args.samples).write_text(samples.csv(), encoding="utf-8")
        _say(f"wrote {args.samples}")
    config, value = annealing.best(samples)
    print(f"energy={_fmt(value)}")
    print(f"config={config}")
    return EXIT_OK


def _cmd_solve(args) -> int:
    if args.trace and args.backend != "vqe":
        _say("--trace applies only to the vqe backend")
        return EXIT_USAGE
    if args.samples and args.backend != "anneal":
        _say("--samples applies only to the anneal backend")
        return EXIT_USAGE
    document = _load(args.file)
    handler = {"exact": _solve_exact, "vqe": _solve_vqe, "anneal": _solve_anneal}
    return handler[args.backend](args, document)


def _cmd_codegen(args) -> int:
    document = _load(args.file)
    if args.target == "gate":
        if isinstance(document, AnnealerPsm):
            document = transform.annealer_to_pim(document)
        psm = transform.pim_to_gate(document) if isinstance(document, Pim) else document
        source = codegen.emit_gate_code(psm)
    else:
        if isinstance(document, GatePsm):
            document = transform.gate_to_pim(document)
        psm = transform.pim_to_annealer(document) if isinstance(document, Pim) else document
        source = codegen.emit_annealer_code(psm)
    _write_output(source, args.output)
    return EXIT_OK


def _edges_text(edges) -> str:
    return ",".join(f"{a}-{b}" for a, b in edges)


def _cmd_inspect(args) -> int:
    document = _load(args.file)
    if isinstance(document, Pim):
        print("kind=pim")
        print(f"qubits={document.qubits}")
        print(f"topology={document.entanglement.value}")
        print(f"edges={_edges_text(edge_set(document.entanglement, document.qubits))}")
        print(f"field={_fmt(document.field_const)}")
        print(f"coupling={_fmt(document.coupler_const)}")
        if document.target is not None:
            print(f"target={document.target}")
    elif isinstance(document, AnnealerPsm):
        print("kind=psm-annealer")
        print(f"qubits={document.qubits}")
        try:
            topology = models.infer_topology(set(document.j), document.qubits).value
        except (UnknownTopology, ValueError):
            topology = "unknown"
        print(f"topology={topology}")
        print(f"edges={_edges_text(sorted(document.j))}")
        for q, value in sorted(document.h.items()):
            print(f"field.{q}={_fmt(value)}")
        for (a, b), value in sorted(document.j.items()):
            print(f"coupling.{a}-{b}={_fmt(value)}")
        print(f"reads={document.reads}")
        print(f"sweeps={document.sweeps}")
    else:
        print("kind=psm-gate")
        print(f"qubits={document.qubits}")
        print(f"topology={document.entangle_pattern.value}")
        zz = [term.support for term in document.hamiltonian if len(term.support) == 2]
        print(f"edges={_edges_text(zz)}")
        print(f"layers={document.layers}")
        for term in document.hamiltonian:
            label = "*".join(f"z{q}" for q in term.support)
            print(f"term.{label}={_fmt(term.coefficient)}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isingforge",
        description="Ising ground-state toolchain: validate, transform, solve, and "
        "generate platform scripts from .pim/.apsm/.gpsm models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cmd = sub.add_parser("validate", help="parse a model document and report issues")
    cmd.add_argument("file")
    cmd.set_defaults(handler=_cmd_validate)

    cmd = sub.add_parser("transform", help="model-to-model transformation")
    cmd.add_argument("--to", required=True, choices=("pim", "gate", "annealer"))
    cmd.add_argument("file")
    cmd.add_argument("-o", "--output")
    cmd.set_defaults(handler=_cmd_transform)

    cmd = sub.add_parser("solve", help="compute the ground state with a backend")
    cmd.add_argument("--backend", required=True, choices=("exact", "vqe", "anneal"))
    cmd.add_argument("file")
    cmd.add_argument("--seed", type=int, default=None, help="override any embedded seed")
    cmd.add_argument("--trace", help="write the vqe iteration trace CSV here")
    cmd.add_argument("--samples", help="write the annealer sample CSV here")
    cmd.set_defaults(handler=_cmd_solve)

    cmd = sub.add_parser("codegen", help="emit a platform SDK script")
    cmd.add_argument("--target", required=True, choices=("gate", "annealer"))
    cmd.add_argument("file")
    cmd.add_argument("-o", "--output")
    cmd.set_defaults(handler=_cmd_codegen)

    cmd = sub.add_parser("inspect", help="summarize a model document")
    cmd.add_argument("file")
    cmd.set_defaults(handler=_cmd_inspect)
    return parser


def run(argv: list[str] | None = None) -> int:
    """Process entry point; returns the exit code instead of raising."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.handler(args)
    except ModelSyntaxError as exc:
        _say(f"syntax error: {exc}")
        return EXIT_IO
    except OSError as exc:
        _say(f"io error: {exc}")
        return EXIT_IO
    except (ValidationError, NotRepresentable, UnknownTopology) as exc:
        _say(f"error: {exc}")
        return EXIT_SEMANTIC
    except IsingForgeError as exc:
        _say(f"error: {exc}")
        return EXIT_SEMANTIC


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
