"""isingforge: a platform-independent Ising ground-state toolchain.

A uniform Ising problem is described once as a platform-independent model
(PIM) and lowered to either platform-specific model (gate or annealer),
solved at desk scale (exact enumeration, statevector VQE, or simulated
annealing), round-tripped back, or turned into platform SDK scripts.
"""

from .anneal import AnnealSchedule, SampleRecord, SampleSet, acceptance_probability, anneal, best
from .codegen import emit_annealer_code, emit_gate_code
from .errors import (
    DimensionMismatch,
    EmptySampleSet,
    InvalidSize,
    IsingForgeError,
    MissingFieldTerm,
    ModelSyntaxError,
    NotRepresentable,
    TooLarge,
    UnknownTopology,
    ValidationError,
)
from .ising import (
    GroundStateResult,
    IsingModel,
    SpinConfig,
    Topology,
    build_model,
    delta_energy,
    edge_set,
    energy,
    energy_vector,
    exact_ground,
)
from .models import (
    AnnealerPsm,
    GatePsm,
    HamiltonianTerm,
    OptimizerConfig,
    Pim,
    ValidationReport,
    format_real,
    infer_topology,
    parse_annealer_psm,
    parse_document,
    parse_gate_psm,
    parse_pim,
    serialize,
    serialize_annealer_psm,
    serialize_gate_psm,
    serialize_pim,
    validate,
)
from .statevector import (
    CX,
    CZ,
    RY,
    Circuit,
    StateVector,
    apply_circuit,
    apply_gate,
    expectation_diagonal,
    expectation_termwise,
    init_zero,
    probabilities,
    sample,
)
from .transform import (
    annealer_to_pim,
    gate_to_pim,
    model_from_annealer,
    model_from_gate,
    model_from_pim,
    pim_to_annealer,
    pim_to_gate,
)
from .vqe import (
    AnsatzSpec,
    VqeResult,
    VqeTrace,
    build_ansatz,
    dominant_config,
    energy_of,
    gradient,
    minimize,
)

__version__ = "0.1.0"
