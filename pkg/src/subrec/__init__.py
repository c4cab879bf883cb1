"""Recurrence times of cylinder sets in Sturmian and substitution subshifts.

The library builds infinite words (substitution fixed points, composition
towers, Sturmian codings), measures how fast their cylinder sets recur,
and cross-validates everything against an exact model of the underlying
circle rotation.
"""

from .contfrac import (
    CFExpansion,
    Convergent,
    InsufficientCoefficients,
    NonPeriodic,
    convergents,
    nearest_int_distance,
    parse_cf,
    quadratic_of_cf,
)
from .generators import (
    FixedPointSource,
    FixedTextSource,
    GeneratedWord,
    KappaRuleSource,
    KappaSource,
    Morphism,
    NotProlongable,
    PeriodicSource,
    RotationCodingSource,
    SequenceTooShort,
    ShiftedSource,
    StandardWordSource,
    WordSource,
    as_source,
    fixed_point_prefix,
    gamma,
    kappa_image_lengths,
    kappa_images,
    kappa_prefix,
    length_ratio,
    parse_kappa,
    rho,
    rotation_coding_prefix,
    standard_word_prefix,
    sturmian_source,
    thue_morse,
)
from .quadratic import ONE, ZERO, QuadraticReal
from .recurrence import (
    DEFAULT_POLICY,
    LRReport,
    PowerReport,
    RateEntry,
    RateSeries,
    ReturnTableRow,
    SubInvarianceReport,
    TauResult,
    WindowCapExceeded,
    WindowPolicy,
    lr_constant_estimate,
    power_report,
    rate_series,
    return_table,
    sub_invariance_check,
    tau_cylinder,
)
from .rotation import (
    CrossCheckReport,
    CrossCheckRow,
    IntervalAtom,
    RotationSpec,
    atom_lengths,
    atom_of,
    cross_check,
    cylinder_interval,
    cylinder_measure,
    mu_tower_values,
    partition_points,
    tau_interval,
    tau_length,
    tau_length_linear,
)
from .words import (
    EmptyPattern,
    InsufficientWindow,
    PowerWitness,
    fractional_power,
    max_fractional_power,
    max_power_witness,
    min_return_length,
    occurrences,
    return_words,
    word_counts,
)
from . import presets

__version__ = "0.1.0"

__all__ = [
    "CFExpansion",
    "Convergent",
    "CrossCheckReport",
    "CrossCheckRow",
    "DEFAULT_POLICY",
    "EmptyPattern",
    "FixedPointSource",
    "FixedTextSource",
    "GeneratedWord",
    "InsufficientCoefficients",
    "InsufficientWindow",
    "IntervalAtom",
    "KappaRuleSource",
    "KappaSource",
    "LRReport",
    "Morphism",
    "NonPeriodic",
    "NotProlongable",
    "ONE",
    "PeriodicSource",
    "PowerReport",
    "PowerWitness",
    "QuadraticReal",
    "RateEntry",
    "RateSeries",
    "RotationCodingSource",
    "RotationSpec",
    "SequenceTooShort",
    "ShiftedSource",
    "StandardWordSource",
    "SubInvarianceReport",
    "TauResult",
    "WindowCapExceeded",
    "WindowPolicy",
    "WordSource",
    "ZERO",
    "as_source",
    "atom_lengths",
    "atom_of",
    "convergents",
    "cross_check",
    "cylinder_interval",
    "cylinder_measure",
    "fixed_point_prefix",
    "fractional_power",
    "gamma",
    "kappa_image_lengths",
    "kappa_images",
    "kappa_prefix",
    "length_ratio",
    "lr_constant_estimate",
    "max_fractional_power",
    "max_power_witness",
    "min_return_length",
    "mu_tower_values",
    "nearest_int_distance",
    "occurrences",
    "parse_cf",
    "parse_kappa",
    "partition_points",
    "power_report",
    "presets",
    "quadratic_of_cf",
    "rate_series",
    "ReturnTableRow",
    "return_table",
    "return_words",
    "rho",
    "rotation_coding_prefix",
    "standard_word_prefix",
    "sturmian_source",
    "sub_invariance_check",
    "tau_cylinder",
    "tau_interval",
    "tau_length",
    "tau_length_linear",
    "thue_morse",
    "word_counts",
]
