"""Exact invariants of m-primary monomial ideals: Newton polytopes,
multiplier ideals, colength, Samuel multiplicity, integral closure and
log canonical thresholds, plus executable checks of the length and
multiplicity bounds they satisfy."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    ConfigError,
    DimensionMismatchError,
    DomainError,
    IdealSyntaxError,
    InternalConsistencyError,
    MonidealError,
    ResourceLimitError,
    UnsupportedIdealError,
)
from .lattice import (  # noqa: E402
    Limits,
    MonomialIdeal,
    colength,
    contains,
    ideal_contains,
    is_m_primary,
    max_ideal_power,
    minimalize,
    order,
    power,
    product,
    pure_power_exponents,
)
from .multiplier import k_level, multiplier_ideal, test_ideal_monomial  # noqa: E402
from .newton import (  # noqa: E402
    DualNormalSet,
    RegionClass,
    classify,
    complement_volume,
    dual_normals,
    integral_closure,
    lct,
    multiplicity,
    scaled_multiplicity,
)
from .parse import format_ideal, parse_ideal  # noqa: E402
