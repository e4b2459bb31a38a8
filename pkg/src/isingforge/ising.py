"""Ising problem representation, energy evaluation, and the exact oracle.

Conventions shared by the whole package:

- couplings are keyed by ordered pairs (i, j) with i < j;
- a configuration is a tuple of bits, qubit 0 first, where bit 0 encodes
  spin +1 and bit 1 encodes spin -1;
- basis-state index k carries qubit q in bit (k >> q) & 1 (qubit 0 is the
  least-significant bit), so configurations, enumeration order, and
  statevector indices all agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Mapping

import numpy as np

from .errors import DimensionMismatch, InvalidSize, TooLarge

ENUMERATION_LIMIT = 24
_CHUNK = 1 << 20


class Topology(Enum):
    """Entanglement pattern of the coupling graph."""

    FULL = "full"
    LINEAR = "linear"
    CIRCULAR = "circular"


def edge_set(topology: Topology, n: int) -> list[tuple[int, int]]:
    """Ordered coupling pairs for a topology on ``n`` qubits.

    Full yields all pairs i < j in lexicographic order, linear the chain
    (0,1)..(n-2,n-1), and circular the chain plus the wrap edge normalized
    to (0, n-1) and appended last.
    """
    if n < 2:
        raise InvalidSize(f"need at least 2 qubits, got {n}")
    if topology is Topology.FULL:
        return [(i, j) for i in range(n) for j in range(i + 1, n)]
    if topology is Topology.LINEAR:
        return [(i, i + 1) for i in range(n - 1)]
    if topology is Topology.CIRCULAR:
        if n < 3:
            raise InvalidSize(f"circular topology needs at least 3 qubits, got {n}")
        return [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    raise TypeError(f"not a topology: {topology!r}")


@dataclass(frozen=True, order=True)
class SpinConfig:
    """Bit configuration of n qubits; bit 0 means spin +1, bit 1 spin -1.

    Ordering and string rendering are both lexicographic in the bit tuple
    with qubit 0 first, e.g. ``str(SpinConfig((0, 1, 0, 1))) == "0101"``.
    """

    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"bits must be 0 or 1, got {bits}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_string(cls, text: str) -> "SpinConfig":
        return cls(tuple(int(c) for c in text))

    @classmethod
    def from_index(cls, index: int, n: int) -> "SpinConfig":
        return cls(tuple((index >> q) & 1 for q in range(n)))

    @property
    def index(self) -> int:
        return sum(b << q for q, b in enumerate(self.bits))

    @property
    def spins(self) -> tuple[int, ...]:
        return tuple(1 - 2 * b for b in self.bits)

    def flip(self, i: int) -> "SpinConfig":
        if not 0 <= i < len(self.bits):
            raise IndexError(f"qubit {i} out of range for {len(self.bits)} qubits")
        bits = list(self.bits)
        bits[i] ^= 1
        return SpinConfig(tuple(bits))

    def complement(self) -> "SpinConfig":
        return SpinConfig(tuple(1 - b for b in self.bits))

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


@dataclass(frozen=True)
class IsingModel:
    """An n-qubit Ising problem: per-site fields h_i and pair couplings J_ij.

    Immutable after construction and safe to share across workers.
    """

    n: int
    fields: tuple[float, ...]
    couplings: Mapping[tuple[int, int], float]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidSize(f"need at least 1 qubit, got {self.n}")
        fields = tuple(float(h) for h in self.fields)
        if len(fields) != self.n:
            raise DimensionMismatch(f"expected {self.n} fields, got {len(fields)}")
        couplings: dict[tuple[int, int], float] = {}
        for key, value in self.couplings.items():
            i, j = key
            if not 0 <= i < j < self.n:
                raise ValueError(f"coupling key {key} must satisfy 0 <= i < j < {self.n}")
            couplings[(i, j)] = float(value)
        object.__setattr__(self, "fields", fields)
        object.__setattr__(self, "couplings", couplings)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, float], ...], ...]:
        """Per-qubit tuple of (neighbor, coupling) pairs."""
        adj: list[list[tuple[int, float]]] = [[] for _ in range(self.n)]
        for (i, j), value in self.couplings.items():
            adj[i].append((j, value))
            adj[j].append((i, value))
        return tuple(tuple(entries) for entries in adj)


@dataclass(frozen=True)
class GroundStateResult:
    """Global minimum energy with the complete degenerate minimizer set."""

    energy: float
    minimizers: frozenset[SpinConfig]
    representative: SpinConfig

    @property
    def degeneracy(self) -> int:
        return len(self.minimizers)


def build_model(n: int, field: float, coupling: float, topology: Topology) -> IsingModel:
    """Uniform-constant model: every site gets ``field``, every topology edge ``coupling``."""
    edges = edge_set(topology, n)
    return IsingModel(
        n=n,
        fields=(float(field),) * n,
        couplings={edge: float(coupling) for edge in edges},
    )


def energy(model: IsingModel, config: SpinConfig) -> float:
    """Classical energy sum(J_ij s_i s_j) + sum(h_i s_i) of a configuration."""
    if len(config) != model.n:
        raise DimensionMismatch(
            f"configuration has {len(config)} bits, model has {model.n} qubits"
        )
    s = config.spins
    total = 0.0
    for (i, j), value in model.couplings.items():
        total += value * s[i] * s[j]
    for i, h in enumerate(model.fields):
        total += h * s[i]
    return total


def delta_energy(model: IsingModel, config: SpinConfig, i: int) -> float:
    """Energy change from flipping qubit i, in O(degree(i)) time."""
    if len(config) != model.n:
        raise DimensionMismatch(
            f"configuration has {len(config)} bits, model has {model.n} qubits"
        )
    if not 0 <= i < model.n:
        raise IndexError(f"qubit {i} out of range for {model.n} qubits")
    s = config.spins
    local = model.fields[i]
    for j, value in model.adjacency[i]:
        local += value * s[j]
    return -2.0 * s[i] * local


def energy_vector(model: IsingModel, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Energies of basis states ``start .. stop-1`` in index order.

    Index k holds qubit q in bit (k >> q) & 1.  Terms are accumulated in
    the same order as :func:`energy`, so both paths agree bit-for-bit.
    """
    if stop is None:
        stop = 1 << model.n
    k = np.arange(start, stop, dtype=np.int64)
    out = np.zeros(k.shape[0])
    for (i, j), value in model.couplings.items():
        out += value * (1.0 - 2.0 * ((k >> i ^ k >> j) & 1))
    for i, h in enumerate(model.fields):
        out += h * (1.0 - 2.0 * ((k >> i) & 1))
    return out


def exact_ground(model: IsingModel) -> GroundStateResult:
    """Brute-force oracle: scan all 2**n configurations for the global minimum.

    Returns the full degenerate minimizer set plus its lexicographically
    smallest member.  The scan is chunked so memory stays bounded up to the
    n <= 24 enumeration limit.
    """
    if model.n > ENUMERATION_LIMIT:
        raise TooLarge(
            f"exact enumeration is limited to {ENUMERATION_LIMIT} qubits, got {model.n}"
        )
    size = 1 << model.n
    best = np.inf
    minimizer_indices: list[int] = []
    for chunk_start in range(0, size, _CHUNK):
        chunk_stop = min(chunk_start + _CHUNK, size)
        energies = energy_vector(model, chunk_start, chunk_stop)
        chunk_min = energies.min()
        if chunk_min < best:
            best = chunk_min
            minimizer_indices = []
        hits = np.nonzero(energies == best)[0]
        minimizer_indices.extend(chunk_start + int(offset) for offset in hits)
    minimizers = frozenset(SpinConfig.from_index(k, model.n) for k in minimizer_indices)
    return GroundStateResult(
        energy=float(best),
        minimizers=minimizers,
        representative=min(minimizers),
    )
