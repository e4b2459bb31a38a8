"""Platform-independent and platform-specific model types with text formats.

The on-disk grammar is line-oriented UTF-8 ``key: value`` text with LF line
endings; ``#`` starts a comment line and blank lines are ignored.  Canonical
serialization uses a fixed key order, one space after the colon, and reals
rendered positionally with a decimal point and minimal digits.  Recommended
file extensions: ``.pim``, ``.apsm``, ``.gpsm``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import InvalidSize, ModelSyntaxError, UnknownTopology, ValidationError
from .ising import Topology, edge_set

TARGETS = ("gate", "annealer")

_KEY_RE = re.compile(r"[a-z_]+")
_TERM_RE = re.compile(r"z(\d+)(?:\*z(\d+))?\s*=\s*(\S+)")
_MAP_ENTRY_RE = re.compile(r"(\d+)=(\S+)")
_PAIR_ENTRY_RE = re.compile(r"(\d+)-(\d+)=(\S+)")


def format_real(value: float) -> str:
    """Shortest positional decimal that round-trips, always with a point."""
    return np.format_float_positional(float(value), trim="0")


@dataclass(frozen=True, eq=False)
class Pim:
    """The five platform-independent parameters of a uniform Ising problem.

    ``target`` is routing metadata only and is excluded from equality.
    """

    qubits: int
    field_const: float
    coupler_const: float
    entanglement: Topology
    target: str | None = None

    def __eq__(self, other):
        if not isinstance(other, Pim):
            return NotImplemented
        return (
            self.qubits == other.qubits
            and self.field_const == other.field_const
            and self.coupler_const == other.coupler_const
            and self.entanglement is other.entanglement
        )

    def __hash__(self):
        return hash((self.qubits, self.field_const, self.coupler_const, self.entanglement))


@dataclass(frozen=True)
class AnnealerPsm:
    """Annealer-facing model: per-qubit fields, pair couplings, run controls."""

    qubits: int
    h: Mapping[int, float]
    j: Mapping[tuple[int, int], float]
    reads: int = 100
    sweeps: int = 1000
    t_initial: float = 10.0
    t_final: float = 0.01

    def __post_init__(self):
        object.__setattr__(self, "h", {int(k): float(v) for k, v in self.h.items()})
        object.__setattr__(
            self, "j", {(int(a), int(b)): float(v) for (a, b), v in self.j.items()}
        )


@dataclass(frozen=True)
class OptimizerConfig:
    """Gradient-descent settings for the variational loop."""

    learning_rate: float = 0.1
    max_iters: int = 2000
    tolerance: float = 1e-8
    restarts: int = 5
    seed: int = 42


DEFAULT_OPTIMIZER = OptimizerConfig()


@dataclass(frozen=True)
class HamiltonianTerm:
    """One Z or ZZ Pauli term: a coefficient on a 1- or 2-qubit support."""

    coefficient: float
    support: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficient", float(self.coefficient))
        object.__setattr__(self, "support", tuple(sorted(self.support)))


@dataclass(frozen=True)
class GatePsm:
    """Gate-facing model: diagonal Hamiltonian terms plus ansatz and optimizer settings.

    Terms are kept in canonical order (lexicographic by support).
    """

    qubits: int
    layers: int
    entangle_pattern: Topology
    hamiltonian: tuple[HamiltonianTerm, ...]
    optimizer: OptimizerConfig = DEFAULT_OPTIMIZER

    def __post_init__(self):
        terms = tuple(sorted(self.hamiltonian, key=lambda term: term.support))
        object.__setattr__(self, "hamiltonian", terms)


@dataclass(frozen=True)
class Issue:
    severity: str
    field: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    """All invariant violations found in one model, without raising."""

    issues: tuple[Issue, ...]

    @property
    def ok(self) -> bool:
        return not any(issue.severity == "error" for issue in self.issues)


def _error(issues: list[Issue], field: str, message: str) -> None:
    issues.append(Issue("error", field, message))


def _validate_pim(pim: Pim) -> list[Issue]:
    issues: list[Issue] = []
    if pim.qubits < 2:
        _error(issues, "qubits", f"must be at least 2, got {pim.qubits}")
    elif pim.entanglement is Topology.CIRCULAR and pim.qubits < 3:
        _error(issues, "entanglement", "circular requires qubits >= 3")
    if pim.target is not None and pim.target not in TARGETS:
        _error(issues, "target", f"must be one of {TARGETS}, got {pim.target!r}")
    return issues


def _validate_annealer(psm: AnnealerPsm) -> list[Issue]:
    issues: list[Issue] = []
    if psm.qubits < 1:
        _error(issues, "qubits", f"must be positive, got {psm.qubits}")
    for q in range(psm.qubits):
        if q not in psm.h:
            _error(issues, "h", f"missing entry for qubit {q}")
    for q in psm.h:
        if not 0 <= q < psm.qubits:
            _error(issues, "h", f"entry for out-of-range qubit {q}")
    for i, j in psm.j:
        if not 0 <= i < j < psm.qubits:
            _error(issues, "j", f"pair ({i}, {j}) must satisfy 0 <= i < j < {psm.qubits}")
    if psm.reads < 1:
        _error(issues, "reads", f"must be positive, got {psm.reads}")
    if psm.sweeps < 2:
        _error(issues, "sweeps", f"must be at least 2, got {psm.sweeps}")
    if psm.t_initial <= 0:
        _error(issues, "t_initial", f"must be positive, got {psm.t_initial}")
    if psm.t_final <= 0:
        _error(issues, "t_final", f"must be positive, got {psm.t_final}")
    elif psm.t_final >= psm.t_initial:
        _error(issues, "t_final", "schedule requires t_final < t_initial")
    return issues


def _term_label(support: Sequence[int]) -> str:
    return "*".join(f"z{q}" for q in support)


def _validate_gate(psm: GatePsm) -> list[Issue]:
    issues: list[Issue] = []
    if psm.qubits < 2:
        _error(issues, "qubits", f"must be at least 2, got {psm.qubits}")
    elif psm.entangle_pattern is Topology.CIRCULAR and psm.qubits < 3:
        _error(issues, "pattern", "circular requires qubits >= 3")
    if psm.layers < 1:
        _error(issues, "layers", f"must be positive, got {psm.layers}")
    seen: set[tuple[int, ...]] = set()
    for term in psm.hamiltonian:
        label = _term_label(term.support)
        if len(term.support) not in (1, 2):
            _error(issues, "hamiltonian", f"support must have 1 or 2 qubits: {label}")
            continue
        if len(set(term.support)) != len(term.support):
            _error(issues, "hamiltonian", f"support indices equal: {label}")
            continue
        if any(not 0 <= q < psm.qubits for q in term.support):
            _error(issues, "hamiltonian", f"support out of range: {label}")
        if term.support in seen:
            _error(issues, "hamiltonian", f"duplicate support {label}")
        seen.add(term.support)
    opt = psm.optimizer
    if opt.max_iters < 1:
        _error(issues, "max_iters", f"must be positive, got {opt.max_iters}")
    if opt.tolerance <= 0:
        _error(issues, "tolerance", f"must be positive, got {opt.tolerance}")
    if opt.restarts < 1:
        _error(issues, "restarts", f"must be positive, got {opt.restarts}")
    if opt.seed < 0:
        _error(issues, "seed", f"must be non-negative, got {opt.seed}")
    return issues


def validate(model: Pim | AnnealerPsm | GatePsm) -> ValidationReport:
    """Collect every invariant violation; content errors never raise here."""
    if isinstance(model, Pim):
        issues = _validate_pim(model)
    elif isinstance(model, AnnealerPsm):
        issues = _validate_annealer(model)
    elif isinstance(model, GatePsm):
        issues = _validate_gate(model)
    else:
        raise TypeError(f"cannot validate {type(model).__name__}")
    return ValidationReport(tuple(issues))


def _check_valid(model) -> None:
    report = validate(model)
    if not report.ok:
        first = next(issue for issue in report.issues if issue.severity == "error")
        raise ValidationError(first.field, first.message)


def infer_topology(edges: set[tuple[int, int]], n: int) -> Topology:
    """Match an edge set against the known patterns.

    Precedence is linear, then circular, then full, which resolves the
    coincidences at n=2 (full == linear) and n=3 (full == circular)
    deterministically.
    """
    if n < 2:
        raise InvalidSize(f"need at least 2 qubits, got {n}")
    normalized = set()
    for i, j in edges:
        if not 0 <= i < j < n:
            raise ValueError(f"edge ({i}, {j}) must satisfy 0 <= i < j < {n}")
        normalized.add((i, j))
    for topology in (Topology.LINEAR, Topology.CIRCULAR, Topology.FULL):
        try:
            if normalized == set(edge_set(topology, n)):
                return topology
        except InvalidSize:
            continue
    raise UnknownTopology(normalized)


# --- parsing ---------------------------------------------------------------


def _scan(text: str) -> list[tuple[int, str, str]]:
    entries = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or not _KEY_RE.fullmatch(key):
            raise ModelSyntaxError(lineno, f"expected 'key: value', got {raw!r}")
        entries.append((lineno, key, value.strip()))
    return entries


def _collect(
    entries: list[tuple[int, str, str]],
    known: Sequence[str],
    repeated: Sequence[str] = (),
) -> tuple[dict[str, tuple[int, str]], dict[str, list[tuple[int, str]]]]:
    singles: dict[str, tuple[int, str]] = {}
    repeats: dict[str, list[tuple[int, str]]] = {key: [] for key in repeated}
    for lineno, key, value in entries:
        if key in repeats:
            repeats[key].append((lineno, value))
            continue
        if key not in known:
            raise ModelSyntaxError(lineno, f"unknown key {key!r}")
        if key in singles:
            raise ModelSyntaxError(lineno, f"duplicate key {key!r}")
        singles[key] = (lineno, value)
    return singles, repeats


def _take(singles: dict[str, tuple[int, str]], key: str) -> tuple[int, str]:
    if key not in singles:
        raise ValidationError(key, "missing")
    return singles[key]


def _field(singles: dict[str, tuple[int, str]], key: str, parser) -> object:
    lineno, value = _take(singles, key)
    return parser(lineno, key, value)


def _parse_int(lineno: int, key: str, value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ModelSyntaxError(lineno, f"{key}: expected an integer, got {value!r}") from None


def _parse_real(lineno: int, key: str, value: str) -> float:
    try:
        result = float(value)
    except ValueError:
        raise ModelSyntaxError(lineno, f"{key}: expected a real, got {value!r}") from None
    if not math.isfinite(result):
        raise ModelSyntaxError(lineno, f"{key}: expected a finite real, got {value!r}")
    return result


def _parse_topology(lineno: int, key: str, value: str) -> Topology:
    try:
        return Topology(value)
    except ValueError:
        raise ModelSyntaxError(
            lineno, f"{key}: unknown entanglement {value!r} (full|linear|circular)"
        ) from None


def _check_header(singles: dict[str, tuple[int, str]], kind: str) -> None:
    _, found_kind = _take(singles, "kind")
    if found_kind != kind:
        raise ValidationError("kind", f"expected {kind}, got {found_kind!r}")
    lineno, version = _take(singles, "version")
    if _parse_int(lineno, "version", version) != 1:
        raise ValidationError("version", f"unsupported version {version}")


_PIM_KEYS = ("kind", "version", "qubits", "field", "coupling", "entanglement", "target")


def parse_pim(text: str, check: bool = True) -> Pim:
    """Parse a PIM document; raises on syntax errors and (if ``check``) contract violations."""
    singles, _ = _collect(_scan(text), _PIM_KEYS)
    _check_header(singles, "pim")
    pim = Pim(
        qubits=_field(singles, "qubits", _parse_int),
        field_const=_field(singles, "field", _parse_real),
        coupler_const=_field(singles, "coupling", _parse_real),
        entanglement=_field(singles, "entanglement", _parse_topology),
        target=_parse_target(singles),
    )
    if check:
        _check_valid(pim)
    return pim


def _parse_target(singles) -> str | None:
    if "target" not in singles:
        return None
    lineno, value = singles["target"]
    if value not in TARGETS:
        raise ModelSyntaxError(lineno, f"target: unknown platform {value!r} (gate|annealer)")
    return value


def serialize_pim(pim: Pim) -> str:
    """Canonical PIM document: fixed key order, newline-terminated lines."""
    lines = [
        "kind: pim",
        "version: 1",
        f"qubits: {pim.qubits}",
        f"field: {format_real(pim.field_const)}",
        f"coupling: {format_real(pim.coupler_const)}",
        f"entanglement: {pim.entanglement.value}",
    ]
    if pim.target is not None:
        lines.append(f"target: {pim.target}")
    return "\n".join(lines) + "\n"


_ANNEALER_KEYS = (
    "kind",
    "version",
    "qubits",
    "h",
    "j",
    "reads",
    "sweeps",
    "t_initial",
    "t_final",
)


def _parse_h_map(lineno: int, value: str) -> dict[int, float]:
    result: dict[int, float] = {}
    if not value:
        return result
    for part in value.split(","):
        part = part.strip()
        match = _MAP_ENTRY_RE.fullmatch(part)
        if not match:
            raise ModelSyntaxError(lineno, f"h: expected <i>=<real>, got {part!r}")
        qubit = int(match.group(1))
        if qubit in result:
            raise ModelSyntaxError(lineno, f"h: duplicate entry for qubit {qubit}")
        result[qubit] = _parse_real(lineno, "h", match.group(2))
    return result


def _parse_j_map(lineno: int, value: str) -> dict[tuple[int, int], float]:
    result: dict[tuple[int, int], float] = {}
    if not value:
        return result
    for part in value.split(","):
        part = part.strip()
        match = _PAIR_ENTRY_RE.fullmatch(part)
        if not match:
            raise ModelSyntaxError(lineno, f"j: expected <i>-<j>=<real>, got {part!r}")
        i, j = int(match.group(1)), int(match.group(2))
        if i == j:
            raise ValidationError("j", f"pair indices equal: {i}-{j}")
        if i > j:
            i, j = j, i
        if (i, j) in result:
            raise ModelSyntaxError(lineno, f"j: duplicate entry for pair {i}-{j}")
        result[(i, j)] = _parse_real(lineno, "j", match.group(3))
    return result


def parse_annealer_psm(text: str, check: bool = True) -> AnnealerPsm:
    singles, _ = _collect(_scan(text), _ANNEALER_KEYS)
    _check_header(singles, "psm-annealer")
    psm = AnnealerPsm(
        qubits=_field(singles, "qubits", _parse_int),
        h=_parse_h_map(*_take(singles, "h")),
        j=_parse_j_map(*_take(singles, "j")),
        reads=_field(singles, "reads", _parse_int),
        sweeps=_field(singles, "sweeps", _parse_int),
        t_initial=_field(singles, "t_initial", _parse_real),
        t_final=_field(singles, "t_final", _parse_real),
    )
    if check:
        _check_valid(psm)
    return psm


def serialize_annealer_psm(psm: AnnealerPsm) -> str:
    h_text = ",".join(f"{q}={format_real(v)}" for q, v in sorted(psm.h.items()))
    j_text = ",".join(f"{i}-{j}={format_real(v)}" for (i, j), v in sorted(psm.j.items()))
    lines = [
        "kind: psm-annealer",
        "version: 1",
        f"qubits: {psm.qubits}",
        f"h: {h_text}",
        f"j: {j_text}",
        f"reads: {psm.reads}",
        f"sweeps: {psm.sweeps}",
        f"t_initial: {format_real(psm.t_initial)}",
        f"t_final: {format_real(psm.t_final)}",
    ]
    return "\n".join(lines) + "\n"


_GATE_KEYS = (
    "kind",
    "version",
    "qubits",
    "layers",
    "pattern",
    "learning_rate",
    "max_iters",
    "tolerance",
    "restarts",
    "seed",
)


def _parse_term(lineno: int, value: str) -> HamiltonianTerm:
    match = _TERM_RE.fullmatch(value)
    if not match:
        raise ModelSyntaxError(lineno, f"term: expected z<i>[*z<j>] = <real>, got {value!r}")
    i = int(match.group(1))
    support: tuple[int, ...]
    if match.group(2) is None:
        support = (i,)
    else:
        j = int(match.group(2))
        if i == j:
            raise ValidationError("hamiltonian", f"support indices equal: z{i}*z{j}")
        support = (i, j)
    return HamiltonianTerm(_parse_real(lineno, "term", match.group(3)), support)


def parse_gate_psm(text: str, check: bool = True) -> GatePsm:
    singles, repeats = _collect(_scan(text), _GATE_KEYS, repeated=("term",))
    _check_header(singles, "psm-gate")
    terms = [_parse_term(lineno, value) for lineno, value in repeats["term"]]
    seen: set[tuple[int, ...]] = set()
    for term in terms:
        if term.support in seen:
            raise ValidationError("hamiltonian", f"duplicate support {_term_label(term.support)}")
        seen.add(term.support)
    psm = GatePsm(
        qubits=_field(singles, "qubits", _parse_int),
        layers=_field(singles, "layers", _parse_int),
        entangle_pattern=_field(singles, "pattern", _parse_topology),
        hamiltonian=tuple(terms),
        optimizer=OptimizerConfig(
            learning_rate=_field(singles, "learning_rate", _parse_real),
            max_iters=_field(singles, "max_iters", _parse_int),
            tolerance=_field(singles, "tolerance", _parse_real),
            restarts=_field(singles, "restarts", _parse_int),
            seed=_field(singles, "seed", _parse_int),
        ),
    )
    if check:
        _check_valid(psm)
    return psm


def serialize_gate_psm(psm: GatePsm) -> str:
    lines = [
        "kind: psm-gate",
        "version: 1",
        f"qubits: {psm.qubits}",
        f"layers: {psm.layers}",
        f"pattern: {psm.entangle_pattern.value}",
    ]
    for term in psm.hamiltonian:
        lines.append(f"term: {_term_label(term.support)} = {format_real(term.coefficient)}")
    opt = psm.optimizer
    lines += [
        f"learning_rate: {format_real(opt.learning_rate)}",
        f"max_iters: {opt.max_iters}",
        f"tolerance: {format_real(opt.tolerance)}",
        f"restarts: {opt.restarts}",
        f"seed: {opt.seed}",
    ]
    return "\n".join(lines) + "\n"


_KIND_PARSERS = {
    "pim": parse_pim,
    "psm-annealer": parse_annealer_psm,
    "psm-gate": parse_gate_psm,
}


def parse_document(text: str, check: bool = True) -> Pim | AnnealerPsm | GatePsm:
    """Parse any supported document, dispatching on its ``kind`` line."""
    entries = _scan(text)
    kind = next((value for _, key, value in entries if key == "kind"), None)
    if kind is None:
        raise ValidationError("kind", "missing")
    parser = _KIND_PARSERS.get(kind)
    if parser is None:
        raise ValidationError("kind", f"unknown kind {kind!r}")
    return parser(text, check=check)


def serialize(model: Pim | AnnealerPsm | GatePsm) -> str:
    if isinstance(model, Pim):
        return serialize_pim(model)
    if isinstance(model, AnnealerPsm):
        return serialize_annealer_psm(model)
    if isinstance(model, GatePsm):
        return serialize_gate_psm(model)
    raise TypeError(f"cannot serialize {type(model).__name__}")
