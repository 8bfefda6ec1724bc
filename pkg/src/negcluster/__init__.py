"""Workbench for negative cluster categories of Dynkin type A.

The category with ``rank`` simples at Calabi-Yau weight ``-w`` is modelled
on an N-gon whose admissible diagonals are the indecomposable objects.
The package enumerates simple minded systems, computes Hom dimensions,
extension triangles and extension closures, performs simple-minded left
and right tilting, builds AR quivers and tilting graphs, and checks all
of it against an independent quiver-representation oracle.
"""

from .arquiver import ArQuiver, build_ar_quiver, enumerate_indecomposables, irreducible_targets
from .errors import (
    NoExtensionError,
    NotAdmissibleError,
    NotSmsError,
    ParameterError,
    TiltRuleIncompleteError,
    UnsupportedWeightError,
    WorkbenchError,
)
from .homs import (
    ExtCase,
    ExtTriangle,
    cy_pairing_dims,
    ext_case,
    ext_triangle,
    hom_dim,
    hom_dim_neg1,
    middle_term,
)
from .polygon import (
    CategoryParams,
    Diagonal,
    ar_translate,
    crosses,
    is_admissible,
    make_category,
    normalize,
    shares_endpoint,
    suspend,
)
from .sms import (
    ClosureResult,
    SimpleMindedSystem,
    TorsionPair,
    check_orthogonality,
    enumerate_sms,
    extension_closure,
    is_sms,
    make_sms,
    simples_of_closure,
    sms_violation,
    sub_closure,
    torsion_pair,
)
from .tilting import (
    TiltMove,
    TiltingGraph,
    gabriel_quiver,
    left_tilt,
    right_tilt,
    tilting_graph,
    verify_tilt_theorem_c,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
