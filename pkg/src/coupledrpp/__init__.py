"""Exact-arithmetic toolkit for reverse plane partitions coupled through a
two-color five-vertex model: hook-product generating functions, Yang-Baxter
verification, the weight-preserving bijections, and the zero-interaction
sliding bijection."""

from .partitions import (
    BorderStrip,
    Cell,
    MayaDiagram,
    border_strips,
    conjugate,
    hook,
    hook_table,
    interlaces,
    maya,
    partition_from_maya,
)
from .qt_series import (
    QTSeries,
    geometric_inverse,
    hook_product_pair,
    hook_product_single,
)
from .rpp_core import (
    RPP,
    SliceSequence,
    enumerate_rpps,
    from_slices,
    interaction_pattern,
    to_slices,
    validate,
    zero_rpp,
)
from .vertex_model import (
    A_lambda,
    Monomial,
    config_weight_q,
    cross_weight,
    gray_weight,
    row_weight_closed,
    row_weight_explicit,
    rpp_to_config,
    verify_commutation,
    verify_ybe,
    white_weight,
)
from .coupling import (
    PairRPP,
    colored_cross_weight,
    colored_gray_weight,
    colored_white_weight,
    coupled_pairs,
    g_via_lozenges,
    g_via_vertex,
    make_pair,
    pair_config_weight,
    pair_genfun_bruteforce,
    verify_colored_ybe,
)
from .sliding import (
    ColoredPathSystem,
    check_t0_constraints,
    paths_of,
    slide,
    unslide,
    verify_t0_counting,
)

__version__ = "0.1.0"
