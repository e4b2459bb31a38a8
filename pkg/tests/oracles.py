"""Independent reference implementations used to compute expected values.

Everything here is written directly from the definitions, without calling
into the package, so tests can cross-check the production code paths.
"""

import itertools

import numpy as np

from isingforge import CX, CZ, RY, Circuit


def spin(bit):
    return 1 - 2 * bit


def reference_energy(bits, fields, couplings):
    """Direct transcription of sum(J_ij s_i s_j) + sum(h_i s_i)."""
    total = 0.0
    for (i, j), value in couplings.items():
        total += value * spin(bits[i]) * spin(bits[j])
    for i, h in enumerate(fields):
        total += h * spin(bits[i])
    return total


def enumerate_ground(fields, couplings):
    """Brute-force minimum energy and the complete minimizer set (bit tuples)."""
    n = len(fields)
    best_energy = None
    minimizers = []
    for bits in itertools.product((0, 1), repeat=n):
        e = reference_energy(bits, fields, couplings)
        if best_energy is None or e < best_energy:
            best_energy, minimizers = e, [bits]
        elif e == best_energy:
            minimizers.append(bits)
    return best_energy, set(minimizers)


def annealer_psm_energy(psm, bits):
    """Energy function induced by an annealer PSM's h and j maps."""
    total = 0.0
    for (i, j), value in psm.j.items():
        total += value * spin(bits[i]) * spin(bits[j])
    for q in range(psm.qubits):
        total += psm.h[q] * spin(bits[q])
    return total


def gate_psm_basis_expectation(psm, bits):
    """Diagonal expectation of a gate PSM's term list on one basis state."""
    total = 0.0
    for term in psm.hamiltonian:
        z = 1
        for q in term.support:
            z *= spin(bits[q])
        total += term.coefficient * z
    return total


def random_circuit(rng, n, depth):
    """Random RY/CZ/CX circuit for simulator property tests."""
    gates = []
    for _ in range(depth):
        kind = int(rng.integers(0, 3))
        if kind == 0 or n == 1:
            gates.append(RY(int(rng.integers(0, n)), float(rng.uniform(-np.pi, np.pi))))
        else:
            a, b = rng.choice(n, size=2, replace=False)
            gates.append(CZ(int(a), int(b)) if kind == 1 else CX(int(a), int(b)))
    return Circuit(n, tuple(gates))


def random_model_data(rng, n, max_edges=None):
    """Random fields and couplings for an n-qubit model."""
    fields = tuple(float(v) for v in rng.uniform(-2, 2, n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if n >= 2:
        count = int(rng.integers(0, len(pairs) + 1 if max_edges is None else max_edges))
        chosen = rng.choice(len(pairs), size=min(count, len(pairs)), replace=False)
        couplings = {pairs[int(k)]: float(rng.uniform(-2, 2)) for k in chosen}
    else:
        couplings = {}
    return fields, couplings
