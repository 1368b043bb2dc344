"""Inverse semigroup cohomology and crossed module extensions.

Thin wrapper around the compiled core.  All functions take plain dicts in
the same JSON formats the CLI consumes:

semigroup: {"elements": [names], "table": [[row-major ids]]}
module:    {"theta": {...}, "components": {...}, "eta": {...}}
cochain:   {"degree": n, "entries": {"s1,s2,...": "a"}}
"""

try:
    from ._isgcoh import (
        BudgetExceeded,
        FormatError,
        PreconditionFailed,
        cohomology,
        is_f_inverse,
        normalize_cocycle,
        roundtrip,
        validate,
    )
except ImportError:  # build-tree layout: extension module next to the package
    from _isgcoh import (
        BudgetExceeded,
        FormatError,
        PreconditionFailed,
        cohomology,
        is_f_inverse,
        normalize_cocycle,
        roundtrip,
        validate,
    )

__all__ = [
    "BudgetExceeded",
    "FormatError",
    "PreconditionFailed",
    "cohomology",
    "is_f_inverse",
    "normalize_cocycle",
    "roundtrip",
    "validate",
]
