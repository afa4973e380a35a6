"""Exact invariants of Seifert fibered spaces and Sol torus bundles, and
enumeration of the finite census of candidate degree-one map targets under
invariant budgets."""

from .domination import (
    CensusRecord,
    DominationBudget,
    check_necessary_conditions,
    enumerate_all,
    enumerate_case_a,
    enumerate_case_b,
    enumerate_case_c,
    search_cutoffs,
)
from .errors import ConjugacyInstabilityError, DomainError
from .homology import (
    H1Summary,
    h1_from_presentation,
    presentation_matrix_bundle,
    presentation_matrix_seifert,
    seifert_torsion_oracle,
    smith_normal_form,
)
from .seifert import (
    Geometry,
    HorizontalSurface,
    InvariantSummary,
    SeifertData,
    classify_geometry,
    enumerate_flat_bases,
    euler_number,
    invariant_summary,
    is_normalized,
    minimal_horizontal,
    normalize,
    orbifold_euler,
    orientation_canonical,
    rank_lower_bound,
    reverse_orientation,
    seifert_volume,
    torsion_order,
)
from .torus_bundle import (
    AnosovMatrix,
    ReductionCertificate,
    bounded_partition,
    bundle_torsion_order,
    conjugacy_classes_bounded,
    reduce_trace_bounded,
    same_bundle,
    trace_conjugacy_classes,
    validate_anosov,
)
