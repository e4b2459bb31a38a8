# generated-by: isingforge gate v1
# Variational ground-state search for a 4-qubit Ising operator.
# Requires: qiskit, numpy.

import numpy as np
from qiskit.circuit import QuantumCircuit
from qiskit.quantum_info import SparsePauliOp, Statevector

NUM_QUBITS = 4
NUM_LAYERS = 2

# Hamiltonian declarations: (pauli label, qubit support, coefficient).
PAULI_TERMS = [
    ("Z", (0,), 1.0),
    ("ZZ", (0, 1), 1.0),
    ("ZZ", (0, 2), 1.0),
    ("ZZ", (0, 3), 1.0),
    ("Z", (1,), 1.0),
    ("ZZ", (1, 2), 1.0),
    ("ZZ", (1, 3), 1.0),
    ("Z", (2,), 1.0),
    ("ZZ", (2, 3), 1.0),
    ("Z", (3,), 1.0),
]

# Entangler pairs applied by every ansatz layer.
ENTANGLER_PAIRS = [
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 2),
    (1, 3),
    (2, 3),
]

LEARNING_RATE = 0.1
MAX_ITERS = 2000
TOLERANCE = 0.00000001
RESTARTS = 5
SEED = 42


def hamiltonian():
    sparse = [(label, list(support), coefficient)
              for label, support, coefficient in PAULI_TERMS]
    return SparsePauliOp.from_sparse_list(sparse, num_qubits=NUM_QUBITS)


def ansatz(thetas):
    circuit = QuantumCircuit(NUM_QUBITS)
    index = 0
    for qubit in range(NUM_QUBITS):
        circuit.ry(thetas[index], qubit)
        index += 1
    for _ in range(NUM_LAYERS):
        for a, b in ENTANGLER_PAIRS:
            circuit.cz(a, b)
        for qubit in range(NUM_QUBITS):
            circuit.ry(thetas[index], qubit)
            index += 1
    return circuit


def energy(operator, thetas):
    state = Statevector(ansatz(thetas))
    return float(state.expectation_value(operator).real)


def gradient(operator, thetas):
    shift = np.pi / 2
    grad = np.zeros_like(thetas)
    for k in range(thetas.size):
        plus = thetas.copy()
        plus[k] += shift
        minus = thetas.copy()
        minus[k] -= shift
        grad[k] = 0.5 * (energy(operator, plus) - energy(operator, minus))
    return grad


def main():
    operator = hamiltonian()
    best = None
    for restart in range(RESTARTS):
        rng = np.random.default_rng(SEED + restart)
        thetas = rng.uniform(-np.pi, np.pi, NUM_QUBITS * (NUM_LAYERS + 1))
        previous = None
        flat = 0
        for _ in range(MAX_ITERS):
            value = energy(operator, thetas)
            if previous is not None and abs(value - previous) < TOLERANCE:
                flat += 1
                if flat >= 25:
                    break
            else:
                flat = 0
            previous = value
            grad = gradient(operator, thetas)
            if np.linalg.norm(grad) < 1e-6:
                break
            thetas = thetas - LEARNING_RATE * grad
        value = energy(operator, thetas)
        if best is None or value < best:
            best = value
    print(f"energy={best}")


main()
