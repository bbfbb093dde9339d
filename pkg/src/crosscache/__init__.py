"""Multi-access coded caching from cross resolvable designs.

Builds resolvable designs (affine-geometry constructions, bundled reference
designs, or design files), instantiates the cache placement and XOR
multicast delivery schedule, verifies decodability end to end at byte
level, and computes exact rate/gain/per-user-rate numbers with sweeps
against the dedicated-cache MaN baseline.
"""

from crosscache.designs import (
    CrdProfile,
    DesignError,
    ResolvableDesign,
    crd_profile,
    cross_intersection,
    find_resolution,
    validate,
)
from crosscache.fields import FieldError, FieldTable, build_field
from crosscache.catalog import builtin, builtin_names
from crosscache.constructions import (
    AffineParams,
    ParseError,
    affine_parameters,
    affine_resolvable,
    parse_design,
    serialize_design,
)
from crosscache.system import (
    CachePlacement,
    ConfigError,
    SystemConfig,
    User,
    accessible_set,
    configure,
    enumerate_users,
    memory_fraction,
    place,
)
from crosscache.delivery import (
    DeliveryError,
    DemandVector,
    Group,
    Term,
    Transmission,
    enumerate_groups,
    f_set,
    generate_transmissions,
    group_members,
    schedule_to_csv,
    schedule_to_jsonl,
)
from crosscache.verify import (
    DecodeReport,
    FileStore,
    VerificationError,
    brute_force_oracle,
    decode_user,
    verify_scheme,
)
from crosscache.metrics import (
    ManMetrics,
    SchemeMetrics,
    SweepRow,
    man_metrics,
    scheme_metrics,
    sweep,
    sweep_to_csv,
)

__version__ = "0.1.0"

__all__ = [
    "AffineParams",
    "CachePlacement",
    "ConfigError",
    "CrdProfile",
    "DecodeReport",
    "DeliveryError",
    "DemandVector",
    "DesignError",
    "FieldError",
    "FieldTable",
    "FileStore",
    "Group",
    "ManMetrics",
    "ParseError",
    "ResolvableDesign",
    "SchemeMetrics",
    "SweepRow",
    "SystemConfig",
    "Term",
    "Transmission",
    "User",
    "VerificationError",
    "accessible_set",
    "affine_parameters",
    "affine_resolvable",
    "brute_force_oracle",
    "builtin",
    "builtin_names",
    "build_field",
    "configure",
    "crd_profile",
    "cross_intersection",
    "decode_user",
    "enumerate_groups",
    "enumerate_users",
    "f_set",
    "find_resolution",
    "generate_transmissions",
    "group_members",
    "man_metrics",
    "memory_fraction",
    "parse_design",
    "place",
    "schedule_to_csv",
    "schedule_to_jsonl",
    "scheme_metrics",
    "serialize_design",
    "sweep",
    "sweep_to_csv",
    "validate",
    "verify_scheme",
]
