"""Backend selection: compiled kernels when available, else pure Python.

Set ``GEOMBS_PURE_PYTHON=1`` to force the fallback (used by the kernel
benchmark and the backend-parity tests).
"""
import os

from . import _pykernels

MODE_INDEPENDENT = _pykernels.MODE_INDEPENDENT
MODE_BIPARTITE = _pykernels.MODE_BIPARTITE
MODE_TRIANGLE_FREE = _pykernels.MODE_TRIANGLE_FREE

_impl = _pykernels
if not os.environ.get("GEOMBS_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND


_C_SCAN_LIMIT = 25


def max_subset(masks, mode):
    masks = list(masks)
    if _impl is not _pykernels and len(masks) > _C_SCAN_LIMIT:
        return _pykernels.max_subset(masks, mode)
    return _impl.max_subset(masks, mode)


def subset_feasible(masks, mask, mode):
    masks = list(masks)
    if _impl is not _pykernels and len(masks) > 64:
        return _pykernels.subset_feasible(masks, mask, mode)
    return _impl.subset_feasible(masks, mask, mode)


def chain_mbs(masks):
    masks = list(masks)
    if _impl is not _pykernels and len(masks) > 64:
        return _pykernels.chain_mbs(masks)
    return _impl.chain_mbs(masks)


def has_induced_cycle_at_least(masks, min_len):
    masks = list(masks)
    if _impl is not _pykernels and len(masks) > _C_SCAN_LIMIT:
        return _pykernels.has_induced_cycle_at_least(masks, min_len)
    return _impl.has_induced_cycle_at_least(masks, min_len)
