"""Deterministic seeded scene generators for every supported kind.

All coordinates come out on a quarter-unit grid (eighth of a turn for
arcs), so tangencies and shared endpoints occur with useful frequency
while staying exactly representable.  Interval and arc endpoints are drawn
without replacement, so they are pairwise distinct by construction.
"""
import random
from fractions import Fraction

from .errors import ValidationError
from .model import (
    ARCS,
    INTERVALS,
    KINDS,
    RECTS,
    UNIT_DISKS,
    UNIT_HEIGHT_RECTS,
    UNIT_SQUARES,
    ArcObj,
    DiskObj,
    GeometricInstance,
    IntervalObj,
    Point,
    RectObj,
)

DISK_MODES = ("general", "one_sided", "two_sided", "slab")
GRID = 4  # coordinate denominator


def _grid_value(rng, lo_units, hi_units) -> Fraction:
    """Uniform grid point in [lo_units, hi_units] quarter-units."""
    return Fraction(rng.randrange(lo_units, hi_units + 1), GRID)


def generate_instance(
    kind: str,
    n: int,
    seed: int,
    spread=None,
    radius=Fraction(1),
    disk_mode: str = "general",
    slab_k: int = 2,
) -> GeometricInstance:
    """Pseudo-random scene; identical arguments give an identical scene.

    ``spread`` controls the x-extent in object units (defaults to the object
    count, a density that mixes dense and sparse regions).  Disk modes:
    ``general`` places centers anywhere, ``one_sided`` keeps center heights
    in [0, r], ``two_sided`` in [-r, r], and ``slab`` confines whole disks
    to a slab of ``slab_k`` diameters starting at y = 0.
    """
    if kind not in KINDS:
        raise ValidationError(f"unknown kind {kind!r}; expected one of {KINDS}")
    if n < 1:
        raise ValidationError("need n >= 1 objects")
    if disk_mode not in DISK_MODES:
        raise ValidationError(f"unknown disk mode {disk_mode!r}")
    radius = Fraction(radius)
    if radius <= 0:
        raise ValidationError("radius must be positive")
    if slab_k < 1:
        raise ValidationError("slab_k must be >= 1")
    spread = n if spread is None else int(spread)
    if spread < 1:
        raise ValidationError("spread must be >= 1")
    rng = random.Random(seed)

    if kind == INTERVALS:
        pool = max(GRID * spread, 2 * n)
        values = [Fraction(v, GRID) for v in rng.sample(range(pool + 1), 2 * n)]
        rng.shuffle(values)
        objs = tuple(
            IntervalObj(min(a, b), max(a, b))
            for a, b in zip(values[::2], values[1::2])
        )
        return GeometricInstance(INTERVALS, objs)

    if kind == ARCS:
        den = max(2 * GRID * n, 8)
        values = [Fraction(v, den) for v in rng.sample(range(den), 2 * n)]
        rng.shuffle(values)
        objs = tuple(ArcObj(a, b) for a, b in zip(values[::2], values[1::2]))
        return GeometricInstance(ARCS, objs)

    if kind == UNIT_DISKS:
        objs = []
        for _ in range(n):
            x = radius * _grid_value(rng, 0, GRID * spread)
            if disk_mode == "one_sided":
                y = radius * _grid_value(rng, 0, GRID)
            elif disk_mode == "two_sided":
                y = radius * _grid_value(rng, -GRID, GRID)
            elif disk_mode == "slab":
                # whole disk inside [0, slab_k * 2r]: center in r*[1, 2k-1]
                y = radius * _grid_value(rng, GRID, GRID * (2 * slab_k - 1))
            else:
                y = radius * _grid_value(rng, 0, GRID * spread)
            objs.append(DiskObj(Point(x, y)))
        return GeometricInstance(UNIT_DISKS, tuple(objs), radius)

    objs = []
    for _ in range(n):
        x0 = _grid_value(rng, 0, GRID * spread)
        y0 = _grid_value(rng, 0, GRID * spread)
        if kind == UNIT_SQUARES:
            w = h = Fraction(1)
        elif kind == UNIT_HEIGHT_RECTS:
            w = _grid_value(rng, 1, 2 * GRID)
            h = Fraction(1)
        else:
            w = _grid_value(rng, 1, 2 * GRID)
            h = _grid_value(rng, 1, 2 * GRID)
        objs.append(RectObj(x0, x0 + w, y0, y0 + h))
    return GeometricInstance(kind, tuple(objs))


def generate_weights(n: int, seed: int):
    """Deterministic positive rational weights on the quarter-unit grid."""
    if n < 1:
        raise ValidationError("need n >= 1 weights")
    rng = random.Random(seed)
    return [Fraction(rng.randrange(1, 4 * GRID + 1), GRID) for _ in range(n)]
