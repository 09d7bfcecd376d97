"""Free cyclic submodules of the two-dimensional module over finite rings."""

__version__ = "0.1.0"

from .catalog import (
    CATALOG,
    catalog_ring,
    catalog_rings,
    load_ring,
    ring_gf,
    ring_m2_gf2,
    ring_poly_sq,
    ring_product,
    ring_ternions,
    ring_zn,
    save_ring,
)
from .ideals import (
    IdealSet,
    RadicalInfo,
    Side,
    all_ideals,
    ideal_closure,
    is_local,
    is_principal,
    is_principal_ideal_ring,
    jacobson_radical,
    maximal_ideals,
    principal_ideal,
)
from .module import (
    SubmoduleSet,
    Vector2,
    VectorClass,
    UnimodularType,
    classify_vector,
    cyclic_submodule,
    fcs_intersection_matrix,
    fcs_list,
    is_free,
    is_unimodular,
    left_annihilator,
    outliers,
    unimodular_type,
)
from .ring import FiniteRing, is_commutative, opposite, units, validate_ring
from .theorems import TheoremReport, run_all
