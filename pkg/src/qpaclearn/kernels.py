"""Kernel backend selection: compiled extension if built, numpy otherwise.

Set QPACLEARN_BACKEND=pure (or =compiled) to force a choice; forcing
"compiled" when the extension is missing raises immediately rather than
silently degrading.
"""
import os

from . import _kernels_py

_forced = os.environ.get("QPACLEARN_BACKEND", "").strip().lower()

if _forced == "pure":
    _impl = _kernels_py
elif _forced == "compiled":
    from . import _kernels_cy as _impl
else:
    if _forced:
        raise ValueError(f"QPACLEARN_BACKEND must be 'pure' or 'compiled', got {_forced!r}")
    try:
        from . import _kernels_cy as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND
apply_mcx = _impl.apply_mcx
apply_cry = _impl.apply_cry
apply_phase_mask = _impl.apply_phase_mask
masked_probability = _impl.masked_probability


def backend_name() -> str:
    return BACKEND
