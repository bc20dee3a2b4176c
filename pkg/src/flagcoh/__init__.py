"""Exact Lie-theoretic cohomology arithmetic for Picard-rank-one flag varieties."""

__version__ = "0.1.0"

from .rootsys import (  # noqa: F401
    ConfigError,
    Family,
    LieType,
    Root,
    RootSystem,
    Weight,
    all_lie_types,
    build_root_system,
    copairing,
    fundamental_weight,
    pairing,
    root_system,
    root_to_weight_coords,
    simple_reflection,
    simple_root,
    weight_to_root_coords,
    zero_weight,
)

from .bwb import (  # noqa: F401
    SINGULAR,
    CohomologyTable,
    WeightClass,
    bwb_cohomology,
    classify,
    classify_cotangent_twist_weights,
    partial_weyl_product,
    shape_of_table_weight,
    to_dominant,
    weyl_dim,
)

from .parabolic import (  # noqa: F401
    KonnoEntry,
    MacaulayStatus,
    ParabolicData,
    UnsupportedPairError,
    h0_twisted_cotangent,
    konno_lowest_weights,
    konno_pairs,
    konno_table_rows,
    macaulay_exceptions,
    parabolic_data,
    sigma,
)

from .verify import (  # noqa: F401
    CaseResult,
    Report,
    check_lemma_studiopesi,
    check_theorem_lungo,
    emit_report,
)
