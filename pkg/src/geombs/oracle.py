"""Exhaustive exact solvers for MBS, MTFS, and MIS on small graphs.

These are the ground truth for every guarantee test in the suite.  Ties
between optima break to the lexicographically smallest index set, so golden
outputs are deterministic regardless of backend.
"""
from typing import Optional

from . import _kernels
from .errors import CapacityError
from .model import IntersectionGraph, Solution, is_bipartite

DEFAULT_CAP = 20


def _check_cap(g: IntersectionGraph, cap: Optional[int]):
    cap = DEFAULT_CAP if cap is None else cap
    if g.n > cap:
        raise CapacityError(f"oracle capped at {cap} vertices, got {g.n}")


def _mask_to_indices(mask: int):
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return tuple(out)


def exact_mbs(g: IntersectionGraph, cap: Optional[int] = None) -> Solution:
    """Maximum subset inducing a bipartite subgraph, with its 2-coloring."""
    _check_cap(g, cap)
    _, mask = _kernels.max_subset(g.masks, _kernels.MODE_BIPARTITE)
    selected = _mask_to_indices(mask)
    coloring = is_bipartite(g, selected)
    assert coloring is not None
    return Solution(selected, coloring)


def exact_mtfs(g: IntersectionGraph, cap: Optional[int] = None) -> Solution:
    """Maximum subset inducing a triangle-free subgraph."""
    _check_cap(g, cap)
    _, mask = _kernels.max_subset(g.masks, _kernels.MODE_TRIANGLE_FREE)
    return Solution(_mask_to_indices(mask))


def exact_mis(g: IntersectionGraph, cap: Optional[int] = None) -> Solution:
    """Maximum independent set."""
    _check_cap(g, cap)
    _, mask = _kernels.max_subset(g.masks, _kernels.MODE_INDEPENDENT)
    return Solution(_mask_to_indices(mask))
