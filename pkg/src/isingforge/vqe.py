"""Variational ground-state search on the simulated gate path.

The ansatz is a hardware-efficient stack: one RY rotation layer, then per
layer a CZ entangler on every topology edge followed by another RY layer.
Parameter k of layer l acts on qubit k with flat index l*n + k.  Gradients
use the parameter-shift rule for RY, (E(t + pi/2) - E(t - pi/2)) / 2, which
is exact for this gate family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DimensionMismatch
from .ising import IsingModel, SpinConfig, Topology, edge_set, energy_vector
from .models import DEFAULT_OPTIMIZER, OptimizerConfig, format_real
from .statevector import (
    CZ,
    RY,
    Circuit,
    _both_set_mask,
    apply_circuit,
    init_zero,
    probabilities,
)

SHIFT = math.pi / 2
GRADIENT_NORM_STOP = 1e-6
FLAT_WINDOW = 25


@dataclass(frozen=True)
class AnsatzSpec:
    """Shape of the variational circuit: n qubits, depth, entangler pattern.

    ``layers`` may be 0, which leaves a single rotation layer and no
    entanglers (useful for single-qubit toys).
    """

    n: int
    layers: int
    pattern: Topology

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need at least 1 qubit, got {self.n}")
        if self.layers < 0:
            raise ValueError(f"layers must be non-negative, got {self.layers}")

    @property
    def parameter_count(self) -> int:
        return self.n * (self.layers + 1)


class TraceRow(NamedTuple):
    iteration: int
    energy: float
    gradient_norm: float


@dataclass(frozen=True)
class VqeTrace:
    """Per-iteration energies and gradient norms of one optimization run."""

    rows: tuple[TraceRow, ...]

    def csv(self) -> str:
        lines = ["iteration,energy,gradient_norm"]
        for row in self.rows:
            lines.append(
                f"{row.iteration},{format_real(row.energy)},{format_real(row.gradient_norm)}"
            )
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class VqeResult:
    """Winning restart of a minimize run; ``energy`` matches the last trace row."""

    energy: float
    parameters: np.ndarray
    trace: VqeTrace
    converged: bool
    best_restart: int


def build_ansatz(spec: AnsatzSpec, params) -> Circuit:
    """Materialize the layered RY/CZ circuit for one parameter vector."""
    values = np.asarray(params, dtype=float)
    if values.shape != (spec.parameter_count,):
        raise DimensionMismatch(
            f"expected {spec.parameter_count} parameters, got {values.shape}"
        )
    gates: list = [RY(q, float(values[q])) for q in range(spec.n)]
    if spec.layers:
        edges = edge_set(spec.pattern, spec.n)
        for layer in range(1, spec.layers + 1):
            gates.extend(CZ(a, b) for a, b in edges)
            base = layer * spec.n
            gates.extend(RY(q, float(values[base + q])) for q in range(spec.n))
    return Circuit(spec.n, tuple(gates))


def energy_of(spec: AnsatzSpec, model: IsingModel, params) -> float:
    """Exact statevector expectation of the model energy at one parameter point."""
    if model.n != spec.n:
        raise DimensionMismatch(f"model has {model.n} qubits, ansatz expects {spec.n}")
    state = apply_circuit(init_zero(spec.n), build_ansatz(spec, params))
    return float(probabilities(state) @ energy_vector(model))


def gradient(spec: AnsatzSpec, model: IsingModel, params) -> np.ndarray:
    """Parameter-shift gradient of :func:`energy_of` (exact, no finite differences)."""
    values = np.asarray(params, dtype=float)
    if values.shape != (spec.parameter_count,):
        raise DimensionMismatch(
            f"expected {spec.parameter_count} parameters, got {values.shape}"
        )
    grad = np.empty(values.shape[0])
    for k in range(values.shape[0]):
        shifted = values.copy()
        shifted[k] += SHIFT
        plus = energy_of(spec, model, shifted)
        shifted[k] -= 2 * SHIFT
        minus = energy_of(spec, model, shifted)
        grad[k] = 0.5 * (plus - minus)
    return grad


def _rotate_layer(amps: np.ndarray, n: int, angles: np.ndarray) -> None:
    # amps: (rows, 2**n) real; angles: (rows, n); RY keeps amplitudes real
    for q in range(n):
        half = 0.5 * angles[:, q]
        c = np.cos(half)[:, None, None]
        s = np.sin(half)[:, None, None]
        paired = amps.reshape(amps.shape[0], -1, 2, 1 << q)
        low = paired[:, :, 0, :].copy()
        high = paired[:, :, 1, :]
        paired[:, :, 0, :] = c * low - s * high
        paired[:, :, 1, :] = s * low + c * high


def _energies_at(
    spec: AnsatzSpec, edges: list[tuple[int, int]], evec: np.ndarray, thetas: np.ndarray
) -> np.ndarray:
    """Ansatz energies for a batch of parameter rows in one simulation pass."""
    rows = thetas.shape[0]
    amps = np.zeros((rows, 1 << spec.n))
    amps[:, 0] = 1.0
    _rotate_layer(amps, spec.n, thetas[:, : spec.n])
    for layer in range(1, spec.layers + 1):
        for a, b in edges:
            amps[:, _both_set_mask(spec.n, a, b)] *= -1.0
        _rotate_layer(amps, spec.n, thetas[:, layer * spec.n : (layer + 1) * spec.n])
    return (amps * amps) @ evec


def minimize(
    spec: AnsatzSpec, model: IsingModel, optimizer: OptimizerConfig | None = None
) -> VqeResult:
    """Seeded multi-restart gradient descent on the ansatz energy.

    Restart r draws its start uniformly from [-pi, pi] with seed
    ``optimizer.seed + r`` and runs plain gradient descent.  A restart stops
    when the energy change stays below ``tolerance`` for 25 consecutive
    iterations, when the gradient norm drops below 1e-6, or at
    ``max_iters``; only the first two count as converged.  The lowest-energy
    restart wins, ties going to the lowest restart index.
    """
    if model.n != spec.n:
        raise DimensionMismatch(f"model has {model.n} qubits, ansatz expects {spec.n}")
    config = optimizer if optimizer is not None else DEFAULT_OPTIMIZER
    edges = edge_set(spec.pattern, spec.n) if spec.layers else []
    evec = energy_vector(model)
    dim = spec.parameter_count
    best: VqeResult | None = None
    for restart in range(config.restarts):
        rng = np.random.default_rng(config.seed + restart)
        params = rng.uniform(-math.pi, math.pi, dim)
        rows: list[TraceRow] = []
        converged = False
        flat = 0
        previous: float | None = None
        grad: np.ndarray | None = None
        for iteration in range(config.max_iters):
            if grad is not None:
                params = params - config.learning_rate * grad
            thetas = np.tile(params, (2 * dim + 1, 1))
            for k in range(dim):
                thetas[2 * k + 1, k] += SHIFT
                thetas[2 * k + 2, k] -= SHIFT
            energies = _energies_at(spec, edges, evec, thetas)
            current = float(energies[0])
            grad = 0.5 * (energies[1::2] - energies[2::2])
            norm = float(np.linalg.norm(grad))
            rows.append(TraceRow(iteration, current, norm))
            if norm < GRADIENT_NORM_STOP:
                converged = True
                break
            if previous is not None and abs(current - previous) < config.tolerance:
                flat += 1
                if flat >= FLAT_WINDOW:
                    converged = True
                    break
            else:
                flat = 0
            previous = current
        candidate = VqeResult(
            energy=rows[-1].energy,
            parameters=params.copy(),
            trace=VqeTrace(tuple(rows)),
            converged=converged,
            best_restart=restart,
        )
        if best is None or candidate.energy < best.energy:
            best = candidate
    return best


def dominant_config(
    spec: AnsatzSpec, model: IsingModel, result: VqeResult
) -> tuple[SpinConfig, float]:
    """Highest-probability basis state of the optimized ansatz, with its probability."""
    if model.n != spec.n:
        raise DimensionMismatch(f"model has {model.n} qubits, ansatz expects {spec.n}")
    state = apply_circuit(init_zero(spec.n), build_ansatz(spec, result.parameters))
    probs = probabilities(state)
    k = int(np.argmax(probs))
    return SpinConfig.from_index(k, spec.n), float(probs[k])
