"""Interference-aware prospect ranking over tensor-product mind spaces."""

from .actions import (
    Action,
    ActionRing,
    Event,
    enumerate_elementary,
    event_conjunction,
    event_union,
    identity_event,
    impossible_event,
    prospect_support,
    ring_from_dims,
)
from .decision import (
    DecisionRecord,
    ProspectLattice,
    attraction_factor_raw,
    decompose,
    order_prospects,
    raw_probability,
    utility_factor_raw,
)
from .errors import (
    DegenerateLatticeError,
    ProblemSemanticError,
    ProblemSyntaxError,
    QProspectError,
    StructureError,
    ValidationError,
)
from .hilbert import (
    MindSpace,
    StateVector,
    StrategicState,
    basic_state,
    inner,
    make_strategic,
    random_state,
    tensor,
)
from .machine import MachineConfig, MachineRun, run_pipeline, sample_counts
from .problem import ProblemDocument, parse_problem
from .prospects import (
    ProspectState,
    is_projector,
    operator_matrix,
    prospect_from_amplitudes,
    prospect_from_support_uniform,
)

__version__ = "0.1.0"
