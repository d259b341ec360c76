"""Zero-dimensional local compactifications of pierced Cantor spaces."""

from ._core import (
    CapacityError,
    DomainError,
    Extension,
    Instance,
    InvariantError,
    ParseError,
    PresentedMap,
    World,
    Zlba,
    alpha0,
    bell,
    beta0,
    catalog,
    check_axioms,
    check_zeq,
    check_zlba,
    extend_remainder,
    extension_leq,
    is_skeletal,
    leq0,
    main_theorem,
    partial_partitions,
    proximity_round_trip,
    run_cli,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
