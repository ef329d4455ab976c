"""Exact computations on the lattice of information of discrete random variables."""

from .errors import *  # noqa: F401,F403
from .geometry import (
    Limits,
    VariableSet,
    convex_envelope,
    generated_sublattice,
    is_convex,
    segment,
)
from .lattice import (
    BlockStructure,
    ComplementTensor,
    block_diagonalize,
    complement,
    is_equivalent,
    is_leq,
    is_zero,
    join,
    join_all,
    meet,
    one,
    zero,
)
from .logexpr import LogExpr, LogRatio
from .metrics import (
    conditional_entropy,
    conditional_mutual_information,
    dependency,
    entropy,
    inequality_suite,
    is_aligned_rajski,
    is_aligned_shannon,
    is_conditionally_independent,
    is_independent,
    joint_entropy,
    mutual_information,
    rajski_distance,
    shannon_distance,
)
from .probability import (
    JointDistribution,
    PairLabel,
    ProbabilitySpace,
    RandomVariable,
    from_function,
    joint,
    map_values,
    marginal,
    new_space,
    restrict_support,
    rv,
    space_from_weights,
    uniform_space,
)
from .reconstruction import (
    ReconstructionReport,
    analyze,
    impossibility_margin,
    mutually_independent,
    validate_components,
)

__version__ = "0.1.0"
