"""Surfaces isogenous to a product: invariants, first homology, and
automorphism bounds from Hurwitz generating vectors."""

__version__ = "0.1.0"

from ._kernels import BACKEND
from .autbound import (
    AutBoundReport,
    NielsenClass,
    aut_q_bound,
    centralizer_is_center,
    detect_exceptions,
    nielsen_preserving_automorphisms,
    pgl2_orbit_bound,
)
from .errors import InconsistentDatumError, IsoprodError, ParseError, ResourceError, UsageError
from .families import FAMILIES, FAMILY_NAMES, get_family
from .group import (
    FiniteGroup,
    GroupHom,
    automorphisms,
    center,
    direct_product,
    group_from_abelian_invariants,
    group_from_permutations,
    realize_presentation,
    word_for_element,
)
from .homology import (
    SurfaceHomology,
    central_action_trivial_set,
    diagonal_coset_action,
    homology_h1,
    lift_central_element,
    schreier_rewrite,
)
from .invariants import SurfaceInvariants, curve_genus, surface_invariants
from .parsing import Datum, load_datum, parse_datum, parse_element, parse_word
from .presentation import (
    GeneratingVector,
    direct_product_presentation,
    disjoint,
    orbifold_presentation,
    stabilizer_set,
    validate_vector,
)
from .snf import AbelianInvariants, IntegerMatrix, abelian_invariants, smith_normal_form
from .words import Presentation
