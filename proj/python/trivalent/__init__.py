"""Canonical strings and exhaustive enumeration of trivalent 2-stratifold graphs."""

from ._core import (
    CatalogError,
    Color,
    DecodeError,
    EnumerationResult,
    OracleSizeError,
    TrivalentGraph,
    __version__,
    ahu_modified,
    apply_o1,
    apply_o1_star,
    apply_o2,
    b12,
    b111,
    census,
    center,
    decode,
    eccentricity,
    encode,
    enumerate,
    farthest_path,
    inverse_witness,
    is_isomorphic_bruteforce,
    make_tag,
    read_catalog,
    relabel,
    symmetry_classes,
    to_dot,
    validate,
)

__all__ = [
    "CatalogError",
    "Color",
    "DecodeError",
    "EnumerationResult",
    "OracleSizeError",
    "TrivalentGraph",
    "__version__",
    "ahu_modified",
    "apply_o1",
    "apply_o1_star",
    "apply_o2",
    "b12",
    "b111",
    "census",
    "center",
    "decode",
    "eccentricity",
    "encode",
    "enumerate",
    "farthest_path",
    "inverse_witness",
    "is_isomorphic_bruteforce",
    "make_tag",
    "read_catalog",
    "relabel",
    "symmetry_classes",
    "to_dot",
    "validate",
]
