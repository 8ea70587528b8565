"""Exact-arithmetic ranks and rank loci: binary Waring rank, Kronecker
pencils, conciseness and orbit dimensions, and the full 2x4x4 tensor
classification."""

from .apolarity import (
    BinaryStratumReport,
    apolar_theta,
    binary_generic_rank,
    binary_max_rank,
    binary_rank,
    catalecticant,
)
from .binary import (
    BinaryForm,
    SquarefreeDecomposition,
    gcd_binary,
    has_multiple_root,
    squarefree_decompose,
)
from .forms import (
    ConcisenessReport,
    MultiForm,
    PowerSumExpression,
    apolar_apply,
    catalecticant_rank_bound,
    essential_variables,
    expand_power_sum,
    generic_waring_rank,
    high_rank_implies_concise,
    max_rank_bounds,
    power_of_quadric,
    reznick_quartic_identity,
    reznick_sextic_identity,
    verify_identity,
)
from .orbits import OrbitReport, form_stabilizer, pencil_stabilizer
from .pencils import (
    KroneckerInvariants,
    Pencil,
    PencilRankReport,
    build_L,
    build_regular,
    direct_sum,
    invariant_factors,
    minimal_indices,
    pencil_rank,
    zero_pencil,
)
from .t244 import (
    CrossRatioClass,
    T244Report,
    classify_t244,
    det_pencil,
    discriminant_quartic,
    max_rank_tensor,
    nesting_experiment,
    t4_pencil,
    t5_pencil,
)

__version__ = "0.1.0"
