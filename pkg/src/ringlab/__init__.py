"""ringlab: an exhaustive laboratory for finite unital rings with involution.

Build small rings from tables or constructors, validate involutions,
decide the regularity properties with replayable witnesses, and
cross-check the equivalences that tie them together.
"""

from .core import (
    DEFAULT_ORDER_CAP,
    INVOLUTION_ENUM_CAP,
    ORACLE_ORDER_CAP,
    FiniteRing,
    LeftIdeal,
    PowerProfile,
    TwoSidedIdeal,
    build_ring,
    center,
    global_order_cap,
    idempotents,
    is_abelian_ring,
    is_commutative,
    jacobson_radical,
    jacobson_radical_oracle,
    left_ideal,
    left_ideal_violation,
    nilpotents,
    power_profile,
    principal_left_image,
    quotient_ring,
    right_image,
    two_sided_ideal,
    two_sided_violation,
    units,
)
from .star import (
    Involution,
    ProjectionConstruction,
    QuotientStarRing,
    StarRing,
    certified_range_projection,
    idempotents_are_projections,
    induced_quotient_star,
    is_star_abelian,
    lift_projection,
    projections,
    range_projection,
    validate_involution,
)
from .predicates import (
    PredicateOutcome,
    PropertyReport,
    condition_decomposition,
    condition_ideal_powers,
    condition_projections,
    condition_star_ideals,
    is_pi_regular,
    is_strongly_pi_regular,
    is_strongly_pi_star_regular,
    is_strongly_star_clean,
    projection_tests_commuting,
    projection_tests_star_abelian,
    property_report,
    radical_quotient_equivalence,
    replay_report,
    strongly_pi_star_regular_conditions,
)
from .constructions import (
    default_corpus,
    gf4,
    involution_for,
    matrix_ring,
    product,
    showcase_ring,
    star_ring,
    star_ring_from_spec,
    upper_triangular,
    zn,
)
from .search import (
    AtlasRecord,
    SearchTask,
    enumerate_involutions,
    load_atlas,
    matrix_ring_scan,
    parse_profile,
    persist_atlas,
    run_profile_search,
)
from . import errors

__version__ = "0.1.0"
