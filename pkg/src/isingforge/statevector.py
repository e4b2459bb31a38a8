"""Dense statevector simulation for the gate-based path.

Qubit 0 is the least-significant bit of the amplitude index, matching the
configuration convention in :mod:`isingforge.ising`.  A state is mutated in
place while a circuit runs; distinct states evolve independently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DimensionMismatch, TooLarge
from .ising import IsingModel, SpinConfig, energy_vector

QUBIT_LIMIT = 20


@dataclass(frozen=True)
class RY:
    """Rotation about Y: [[cos t/2, -sin t/2], [sin t/2, cos t/2]]."""

    qubit: int
    angle: float


@dataclass(frozen=True)
class CZ:
    """Controlled-Z: flips the sign of amplitudes where both qubits are 1."""

    control: int
    target: int


@dataclass(frozen=True)
class CX:
    """Controlled-X: flips the target bit where the control qubit is 1."""

    control: int
    target: int


Gate = RY | CZ | CX


def _check_gate(n: int, gate: Gate) -> None:
    if isinstance(gate, RY):
        if not 0 <= gate.qubit < n:
            raise IndexError(f"qubit {gate.qubit} out of range for {n} qubits")
        return
    control, target = gate.control, gate.target
    if not (0 <= control < n and 0 <= target < n):
        raise IndexError(f"gate ({control}, {target}) out of range for {n} qubits")
    if control == target:
        raise ValueError(f"control and target must differ, both are {control}")


@dataclass(frozen=True)
class Circuit:
    """Ordered gate list over ``n`` qubits."""

    n: int
    gates: tuple[Gate, ...]

    def __post_init__(self):
        gates = tuple(self.gates)
        for gate in gates:
            _check_gate(self.n, gate)
        object.__setattr__(self, "gates", gates)

    def inverse(self) -> "Circuit":
        """Reversed gate order with negated rotation angles (CZ/CX self-invert)."""
        inverted = tuple(
            RY(gate.qubit, -gate.angle) if isinstance(gate, RY) else gate
            for gate in reversed(self.gates)
        )
        return Circuit(self.n, inverted)


class StateVector:
    """2**n complex amplitudes; qubit q lives in bit (index >> q) & 1."""

    def __init__(self, n: int, amplitudes: np.ndarray):
        amplitudes = np.asarray(amplitudes, dtype=np.complex128)
        if amplitudes.shape != (1 << n,):
            raise DimensionMismatch(
                f"expected {1 << n} amplitudes for {n} qubits, got {amplitudes.shape}"
            )
        self.n = n
        self.amplitudes = amplitudes

    def norm(self) -> float:
        return float(np.sqrt(np.sum(self.amplitudes.real**2 + self.amplitudes.imag**2)))

    def copy(self) -> "StateVector":
        return StateVector(self.n, self.amplitudes.copy())


def init_zero(n: int) -> StateVector:
    """The all-zeros basis state |0...0>."""
    if not 1 <= n <= QUBIT_LIMIT:
        raise TooLarge(f"qubit count must be in [1, {QUBIT_LIMIT}], got {n}")
    amplitudes = np.zeros(1 << n, dtype=np.complex128)
    amplitudes[0] = 1.0
    return StateVector(n, amplitudes)


@lru_cache(maxsize=None)
def _both_set_mask(n: int, a: int, b: int) -> np.ndarray:
    k = np.arange(1 << n)
    return ((k >> a) & (k >> b) & 1).astype(bool)


def apply_gate(state: StateVector, gate: Gate) -> StateVector:
    """Apply one gate in place and return the state."""
    _check_gate(state.n, gate)
    amps = state.amplitudes
    if isinstance(gate, RY):
        half = 0.5 * gate.angle
        c, s = math.cos(half), math.sin(half)
        paired = amps.reshape(-1, 2, 1 << gate.qubit)
        low = paired[:, 0, :].copy()
        high = paired[:, 1, :]
        paired[:, 0, :] = c * low - s * high
        paired[:, 1, :] = s * low + c * high
    elif isinstance(gate, CZ):
        amps[_both_set_mask(state.n, gate.control, gate.target)] *= -1.0
    else:
        k = np.arange(1 << state.n)
        source = k[((k >> gate.control) & 1 == 1) & ((k >> gate.target) & 1 == 0)]
        partner = source | (1 << gate.target)
        swap = amps[source].copy()
        amps[source] = amps[partner]
        amps[partner] = swap
    return state


def apply_circuit(state: StateVector, circuit: Circuit) -> StateVector:
    if circuit.n != state.n:
        raise DimensionMismatch(f"circuit on {circuit.n} qubits, state has {state.n}")
    for gate in circuit.gates:
        apply_gate(state, gate)
    return state


def probabilities(state: StateVector) -> np.ndarray:
    """Measurement probabilities |amplitude|**2 per basis index."""
    amps = state.amplitudes
    return amps.real**2 + amps.imag**2


def expectation_diagonal(state: StateVector, model: IsingModel) -> float:
    """Expected energy of a diagonal Hamiltonian: probability-weighted basis energies."""
    if state.n != model.n:
        raise DimensionMismatch(f"state has {state.n} qubits, model has {model.n}")
    return float(probabilities(state) @ energy_vector(model))


def expectation_termwise(state: StateVector, model: IsingModel) -> float:
    """Independent route to the same expectation: per-term Pauli-Z averages.

    Computes <Z_i Z_j> and <Z_i> directly from the amplitudes and combines
    them with the model constants; kept separate from
    :func:`expectation_diagonal` so the two can cross-check each other.
    """
    if state.n != model.n:
        raise DimensionMismatch(f"state has {state.n} qubits, model has {model.n}")
    weights = np.abs(state.amplitudes) ** 2
    k = np.arange(weights.shape[0])
    total = 0.0
    for (i, j), value in model.couplings.items():
        total += value * float(weights @ (1.0 - 2.0 * ((k >> i ^ k >> j) & 1)))
    for i, h in enumerate(model.fields):
        total += h * float(weights @ (1.0 - 2.0 * ((k >> i) & 1)))
    return total


def sample(state: StateVector, shots: int, seed: int) -> dict[SpinConfig, int]:
    """Multinomial measurement counts from a seeded deterministic generator."""
    if shots < 1:
        raise ValueError(f"shots must be positive, got {shots}")
    rng = np.random.default_rng(seed)
    probs = probabilities(state)
    counts = rng.multinomial(shots, probs / probs.sum())
    hits = np.nonzero(counts)[0]
    return {SpinConfig.from_index(int(k), state.n): int(counts[k]) for k in hits}
