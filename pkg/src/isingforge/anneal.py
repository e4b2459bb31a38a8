"""Metropolis simulated annealing: the desk-scale stand-in for a hardware annealer.

Each read is an independent annealing run with its own generator seeded
``seed + read``; a read draws its random initial bits first and then one
uniform per (sweep, spin) visit, whether or not the visit needs it.  That
fixed consumption order is the determinism contract: reads can be executed
in any order (or batched, as here) and merge to the same result.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import EmptySampleSet
from .ising import IsingModel, SpinConfig, energy
from .models import format_real


@dataclass(frozen=True)
class AnnealSchedule:
    """Geometric temperature ramp from t_initial down to t_final."""

    sweeps: int = 1000
    t_initial: float = 10.0
    t_final: float = 0.01

    def __post_init__(self):
        if self.sweeps < 2:
            raise ValueError(f"sweeps must be at least 2, got {self.sweeps}")
        if not 0 < self.t_final < self.t_initial:
            raise ValueError(
                f"schedule requires 0 < t_final < t_initial, "
                f"got {self.t_final} and {self.t_initial}"
            )

    def temperatures(self) -> np.ndarray:
        """T_k = t_initial * (t_final / t_initial) ** (k / (sweeps - 1))."""
        exponents = np.arange(self.sweeps) / (self.sweeps - 1)
        return self.t_initial * (self.t_final / self.t_initial) ** exponents


DEFAULT_SCHEDULE = AnnealSchedule()


class SampleRecord(NamedTuple):
    config: SpinConfig
    energy: float
    occurrences: int


@dataclass(frozen=True)
class SampleSet:
    """Aggregated reads, sorted ascending by energy then by configuration."""

    records: tuple[SampleRecord, ...]

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def csv(self) -> str:
        lines = ["config,energy,occurrences"]
        for record in self.records:
            lines.append(f"{record.config},{format_real(record.energy)},{record.occurrences}")
        return "\n".join(lines) + "\n"


def acceptance_probability(delta, temperature):
    """Metropolis rule: 1 for downhill or neutral moves, exp(-delta/T) uphill."""
    return np.exp(-np.maximum(delta, 0.0) / temperature)


def anneal(
    model: IsingModel,
    schedule: AnnealSchedule = DEFAULT_SCHEDULE,
    reads: int = 100,
    seed: int = 0,
) -> SampleSet:
    """Sample the model ``reads`` times by Metropolis annealing.

    Every sweep visits spins 0..n-1 in order at the sweep's temperature;
    downhill flips are always taken, uphill flips with probability
    exp(-delta/T).  Final configurations are merged and each record's
    energy is recomputed from scratch.
    """
    if reads < 1:
        raise ValueError(f"reads must be positive, got {reads}")
    n = model.n
    temperatures = schedule.temperatures()
    spins = np.empty((reads, n))
    uniforms = np.empty((reads, schedule.sweeps, n))
    for r in range(reads):
        rng = np.random.default_rng(seed + r)
        spins[r] = 1.0 - 2.0 * rng.integers(0, 2, n)
        uniforms[r] = rng.random((schedule.sweeps, n))
    neighbor_index = [
        np.array([j for j, _ in model.adjacency[i]], dtype=np.intp) for i in range(n)
    ]
    neighbor_value = [np.array([v for _, v in model.adjacency[i]]) for i in range(n)]
    for k, temperature in enumerate(temperatures):
        for i in range(n):
            local = spins[:, neighbor_index[i]] @ neighbor_value[i] + model.fields[i]
            delta = -2.0 * spins[:, i] * local
            accept = uniforms[:, k, i] < acceptance_probability(delta, temperature)
            spins[accept, i] = -spins[accept, i]
    counts: dict[SpinConfig, int] = {}
    for r in range(reads):
        config = SpinConfig(tuple(int((1 - s) // 2) for s in spins[r]))
        counts[config] = counts.get(config, 0) + 1
    records = sorted(
        (SampleRecord(config, energy(model, config), count) for config, count in counts.items()),
        key=lambda record: (record.energy, record.config.bits),
    )
    return SampleSet(tuple(records))


def best(samples: SampleSet) -> tuple[SpinConfig, float]:
    """Lowest-energy record (lexicographic tie-break) of a sample set."""
    if not samples.records:
        raise EmptySampleSet("sample set has no records")
    first = samples.records[0]
    return first.config, first.energy
