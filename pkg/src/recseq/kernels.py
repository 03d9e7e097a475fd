"""Backend selection for the modular fast-path kernels.

At import time the compiled extension is preferred when present, with the
pure-Python twin as fallback.  Set ``RECSEQ_BACKEND=python`` or
``RECSEQ_BACKEND=compiled`` to force a choice (forcing ``compiled`` raises
if the extension is missing).

The kernels only cover Z/m with a modulus small enough for the active
backend; callers check :func:`handles` and keep the generic object path
for everything else.
"""

from __future__ import annotations

import os

from . import _kernels_py as _py

try:
    from . import _kernels_cy as _cy
except ImportError:
    _cy = None

_forced = os.environ.get("RECSEQ_BACKEND", "")
if _forced in ("", None):
    _impl = _cy if _cy is not None else _py
elif _forced in ("py", "python"):
    _impl = _py
elif _forced in ("cy", "compiled"):
    if _cy is None:
        raise ImportError(
            f"RECSEQ_BACKEND={_forced!r} requested but the compiled kernels are not built"
        )
    _impl = _cy
else:
    raise ValueError(f"unrecognized RECSEQ_BACKEND {_forced!r}")

BACKEND = _impl.BACKEND_NAME
MOD_LIMIT = _impl.MOD_LIMIT

lin_terms_mod = _impl.lin_terms_mod
berkowitz_mod = _impl.berkowitz_mod
conv_sum_mod = _impl.conv_sum_mod
conv_hadamard_mod = _impl.conv_hadamard_mod
conv_cauchy_mod = _impl.conv_cauchy_mod
conv_hurwitz_mod = _impl.conv_hurwitz_mod
conv_newton_mod = _impl.conv_newton_mod


def handles(modulus: int) -> bool:
    """True iff the active backend can run at this modulus."""
    return MOD_LIMIT is None or modulus <= MOD_LIMIT
