"""Model-to-model transformations between the PIM and both PSM forms.

All transformations are pure functions over immutable inputs.  Lowering a
PIM fills in the solver defaults recorded here; lifting a PSM back requires
exactly uniform constants and a recognizable topology.
"""

from __future__ import annotations

from .errors import MissingFieldTerm, NotRepresentable
from .ising import IsingModel, edge_set
from .models import (
    AnnealerPsm,
    GatePsm,
    HamiltonianTerm,
    Pim,
    _check_valid,
    infer_topology,
)


def pim_to_annealer(pim: Pim) -> AnnealerPsm:
    """Lower a PIM to the annealer form with default run controls."""
    _check_valid(pim)
    edges = edge_set(pim.entanglement, pim.qubits)
    return AnnealerPsm(
        qubits=pim.qubits,
        h={q: pim.field_const for q in range(pim.qubits)},
        j={edge: pim.coupler_const for edge in edges},
        reads=100,
        sweeps=1000,
        t_initial=10.0,
        t_final=0.01,
    )


def pim_to_gate(pim: Pim) -> GatePsm:
    """Lower a PIM to the gate form: ZZ terms on every edge, a Z term on every qubit."""
    _check_valid(pim)
    edges = edge_set(pim.entanglement, pim.qubits)
    terms = [HamiltonianTerm(pim.coupler_const, edge) for edge in edges]
    terms += [HamiltonianTerm(pim.field_const, (q,)) for q in range(pim.qubits)]
    return GatePsm(
        qubits=pim.qubits,
        layers=2,
        entangle_pattern=pim.entanglement,
        hamiltonian=tuple(terms),
    )


def _uniform(values, what: str) -> float:
    distinct = sorted(set(values))
    if len(distinct) != 1:
        raise NotRepresentable(
            f"PIM requires uniform constants; {what} has values {distinct}"
        )
    return distinct[0]


def annealer_to_pim(psm: AnnealerPsm) -> Pim:
    """Lift an annealer PSM back to a PIM; requires uniform h, uniform j."""
    _check_valid(psm)
    field = _uniform(psm.h.values(), "h")
    coupler = _uniform(psm.j.values(), "j")
    topology = infer_topology(set(psm.j), psm.qubits)
    return Pim(psm.qubits, field, coupler, topology, target="annealer")


def gate_to_pim(psm: GatePsm) -> Pim:
    """Lift a gate PSM back to a PIM.

    Every qubit must carry an explicit Z term (zero fields included) so
    field uniformity is decidable without guessing absent terms.
    """
    _check_valid(psm)
    z = {term.support[0]: term.coefficient for term in psm.hamiltonian if len(term.support) == 1}
    zz = {term.support: term.coefficient for term in psm.hamiltonian if len(term.support) == 2}
    for q in range(psm.qubits):
        if q not in z:
            raise MissingFieldTerm(q)
    field = _uniform(z.values(), "field terms")
    coupler = _uniform(zz.values(), "coupling terms")
    topology = infer_topology(set(zz), psm.qubits)
    return Pim(psm.qubits, field, coupler, topology, target="gate")


def model_from_pim(pim: Pim) -> IsingModel:
    """The classical Ising problem a PIM describes."""
    _check_valid(pim)
    return IsingModel(
        n=pim.qubits,
        fields=(pim.field_const,) * pim.qubits,
        couplings={edge: pim.coupler_const for edge in edge_set(pim.entanglement, pim.qubits)},
    )


def model_from_annealer(psm: AnnealerPsm) -> IsingModel:
    """The classical Ising problem an annealer PSM describes (non-uniform allowed)."""
    _check_valid(psm)
    return IsingModel(
        n=psm.qubits,
        fields=tuple(psm.h[q] for q in range(psm.qubits)),
        couplings=dict(sorted(psm.j.items())),
    )


def model_from_gate(psm: GatePsm) -> IsingModel:
    """The diagonal Hamiltonian a gate PSM describes, as a classical model.

    Qubits without a Z term get a zero field (the lift is permissive; only
    the PIM direction requires explicit terms).
    """
    _check_valid(psm)
    fields = [0.0] * psm.qubits
    couplings: dict[tuple[int, int], float] = {}
    for term in psm.hamiltonian:
        if len(term.support) == 1:
            fields[term.support[0]] = term.coefficient
        else:
            couplings[term.support] = term.coefficient
    return IsingModel(n=psm.qubits, fields=tuple(fields), couplings=couplings)
