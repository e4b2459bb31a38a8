"""Model-to-code transformation: emit runnable platform SDK scripts from PSMs.

Output is a pure function of the PSM, byte-stable across runs.  The first
line is the generator banner and is the stability contract; every model
constant lands on exactly one declaration line so the emitted text can be
checked against its PSM statically.  Generated scripts are not executed by
the test suite (they need the platform SDKs and accounts); goldens pin the
exact bytes instead.
"""

from __future__ import annotations

from .ising import edge_set
from .models import AnnealerPsm, GatePsm, _check_valid, format_real

GATE_BANNER = "# generated-by: isingforge gate v1"
ANNEALER_BANNER = "# generated-by: isingforge annealer v1"


def emit_gate_code(psm: GatePsm) -> str:
    """A qiskit script: build the operator and ansatz, minimize, print the energy."""
    _check_valid(psm)
    lines = [
        GATE_BANNER,
        f"# Variational ground-state search for a {psm.qubits}-qubit Ising operator.",
        "# Requires: qiskit, numpy.",
        "",
        "import numpy as np",
        "from qiskit.circuit import QuantumCircuit",
        "from qiskit.quantum_info import SparsePauliOp, Statevector",
        "",
        f"NUM_QUBITS = {psm.qubits}",
        f"NUM_LAYERS = {psm.layers}",
        "",
        "# Hamiltonian declarations: (pauli label, qubit support, coefficient).",
        "PAULI_TERMS = [",
    ]
    for term in psm.hamiltonian:
        label = "Z" * len(term.support)
        support = ", ".join(str(q) for q in term.support)
        if len(term.support) == 1:
            support += ","
        lines.append(f'    ("{label}", ({support}), {format_real(term.coefficient)}),')
    lines += [
        "]",
        "",
        "# Entangler pairs applied by every ansatz layer.",
        "ENTANGLER_PAIRS = [",
    ]
    for a, b in edge_set(psm.entangle_pattern, psm.qubits):
        lines.append(f"    ({a}, {b}),")
    opt = psm.optimizer
    lines += [
        "]",
        "",
        f"LEARNING_RATE = {format_real(opt.learning_rate)}",
        f"MAX_ITERS = {opt.max_iters}",
        f"TOLERANCE = {format_real(opt.tolerance)}",
        f"RESTARTS = {opt.restarts}",
        f"SEED = {opt.seed}",
        "",
        "",
        "def hamiltonian():",
        "    sparse = [(label, list(support), coefficient)",
        "              for label, support, coefficient in PAULI_TERMS]",
        "    return SparsePauliOp.from_sparse_list(sparse, num_qubits=NUM_QUBITS)",
        "",
        "",
        "def ansatz(thetas):",
        "    circuit = QuantumCircuit(NUM_QUBITS)",
        "    index = 0",
        "    for qubit in range(NUM_QUBITS):",
        "        circuit.ry(thetas[index], qubit)",
        "        index += 1",
        "    for _ in range(NUM_LAYERS):",
        "        for a, b in ENTANGLER_PAIRS:",
        "            circuit.cz(a, b)",
        "        for qubit in range(NUM_QUBITS):",
        "            circuit.ry(thetas[index], qubit)",
        "            index += 1",
        "    return circuit",
        "",
        "",
        "def energy(operator, thetas):",
        "    state = Statevector(ansatz(thetas))",
        "    return float(state.expectation_value(operator).real)",
        "",
        "",
        "def gradient(operator, thetas):",
        "    shift = np.pi / 2",
        "    grad = np.zeros_like(thetas)",
        "    for k in range(thetas.size):",
        "        plus = thetas.copy()",
        "        plus[k] += shift",
        "        minus = thetas.copy()",
        "        minus[k] -= shift",
        "        grad[k] = 0.5 * (energy(operator, plus) - energy(operator, minus))",
        "    return grad",
        "",
        "",
        "def main():",
        "    operator = hamiltonian()",
        "    best = None",
        "    for restart in range(RESTARTS):",
        "        rng = np.random.default_rng(SEED + restart)",
        "        thetas = rng.uniform(-np.pi, np.pi, NUM_QUBITS * (NUM_LAYERS + 1))",
        "        previous = None",
        "        flat = 0",
        "        for _ in range(MAX_ITERS):",
        "            value = energy(operator, thetas)",
        "            if previous is not None and abs(value - previous) < TOLERANCE:",
        "                flat += 1",
        "                if flat >= 25:",
        "                    break",
        "            else:",
        "                flat = 0",
        "            previous = value",
        "            grad = gradient(operator, thetas)",
        "            if np.linalg.norm(grad) < 1e-6:",
        "                break",
        "            thetas = thetas - LEARNING_RATE * grad",
        "        value = energy(operator, thetas)",
        "        if best is None or value < best:",
        "            best = value",
        '    print(f"energy={best}")',
        "",
        "",
        "main()",
    ]
    return "\n".join(lines) + "\n"


def emit_annealer_code(psm: AnnealerPsm) -> str:
    """A Leap SDK script: declare h and J, sample, print the lowest-energy read."""
    _check_valid(psm)
    lines = [
        ANNEALER_BANNER,
        f"# Ising ground-state sampling for a {psm.qubits}-qubit problem.",
        f"# Desk-scale reference schedule: sweeps={psm.sweeps},"
        f" t_initial={format_real(psm.t_initial)}, t_final={format_real(psm.t_final)}.",
        "# Requires: dwave-system.",
        "",
        "from dwave.system import DWaveSampler, EmbeddingComposite",
        "",
        f"NUM_QUBITS = {psm.qubits}",
        f"reads = {psm.reads}",
        "",
        "h = {}",
    ]
    for q, value in sorted(psm.h.items()):
        lines.append(f"h[{q}] = {format_real(value)}  # field {q}")
    lines += ["", "J = {}"]
    for (a, b), value in sorted(psm.j.items()):
        lines.append(f"J[({a}, {b})] = {format_real(value)}  # coupler {a}-{b}")
    lines += [
        "",
        "",
        "def main():",
        "    sampler = EmbeddingComposite(DWaveSampler())",
        "    result = sampler.sample_ising(h, J, num_reads=reads)",
        "    lowest = result.first",
        '    bits = "".join("0" if lowest.sample[q] > 0 else "1" for q in range(NUM_QUBITS))',
        '    print(f"config={bits}")',
        '    print(f"energy={lowest.energy}")',
        "",
        "",
        "main()",
    ]
    return "\n".join(lines) + "\n"
