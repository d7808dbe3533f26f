"""Kernel selection.

The compiled ``_kernels`` extension is used when it was built; otherwise the
pure-Python twin. Set ``NFOLD_PURE=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if not os.environ.get("NFOLD_PURE"):
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py

trim = _impl.trim
lex_cmp = _impl.lex_cmp
add_seq = _impl.add_seq
merge_desc = _impl.merge_desc
nat_minimal_dp = _impl.nat_minimal_dp
nat_enum_max = _impl.nat_enum_max
nat_first_violation = _impl.nat_first_violation

__all__ = [
    "BACKEND",
    "trim",
    "lex_cmp",
    "add_seq",
    "merge_desc",
    "nat_minimal_dp",
    "nat_enum_max",
    "nat_first_violation",
]
