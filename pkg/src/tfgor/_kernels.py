"""Selects the rank kernel implementation at import time.

The compiled extension (dense 64-bit elimination) is used when present;
otherwise, or when TFGOR_PURE is set to a nonempty value other than "0",
the pure sparse kernels take over.  The compiled integer kernel bails out
(returns -1) whenever an intermediate value could overflow, in which case
the call is replayed on the pure bignum path, so results are exact either
way.
"""

from __future__ import annotations

import os

from . import _purerank

_fast = None
if os.environ.get("TFGOR_PURE", "0") in ("", "0"):
    try:
        from . import _fastrank as _fast  # type: ignore[no-redef]
    except ImportError:
        _fast = None

BACKEND = "compiled" if _fast is not None else "pure"

_INT31 = 2**31 - 1


def rank_mod_p(nrows: int, ncols: int, triples, p: int) -> int:
    triples = list(triples)
    if _fast is not None and 2 <= p <= _INT31:
        return _fast.rank_mod_p(nrows, ncols, triples, p)
    return _purerank.rank_mod_p(nrows, ncols, triples, p)


def rank_int(nrows: int, ncols: int, triples) -> int:
    triples = list(triples)
    if _fast is not None and all(-_INT31 <= t[2] <= _INT31 for t in triples):
        r = _fast.rank_bareiss(nrows, ncols, triples)
        if r >= 0:
            return r
    return _purerank.rank_int(nrows, ncols, triples)
