"""Geometric object types, exact intersection predicates, graph construction,
and the subset verifiers (bipartite / triangle-free / independent).

All coordinates are exact rationals (``fractions.Fraction``); predicates
compare squared distances, so there is no tolerance parameter anywhere.
Intersection is closed: tangent objects are adjacent.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import ValidationError

Rational = Fraction

# Scene kinds.
INTERVALS = "intervals"
ARCS = "arcs"
UNIT_DISKS = "unit_disks"
UNIT_SQUARES = "unit_squares"
UNIT_HEIGHT_RECTS = "unit_height_rects"
RECTS = "rects"

KINDS = (INTERVALS, ARCS, UNIT_DISKS, UNIT_SQUARES, UNIT_HEIGHT_RECTS, RECTS)

RECT_KINDS = (UNIT_SQUARES, UNIT_HEIGHT_RECTS, RECTS)


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise ValidationError(f"expected an exact rational, got {value!r}")


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", _frac(self.x))
        object.__setattr__(self, "y", _frac(self.y))


@dataclass(frozen=True)
class IntervalObj:
    left: Fraction
    right: Fraction

    def __post_init__(self):
        object.__setattr__(self, "left", _frac(self.left))
        object.__setattr__(self, "right", _frac(self.right))
        if not self.left < self.right:
            raise ValidationError(f"interval needs left < right, got {self}")


@dataclass(frozen=True)
class ArcObj:
    """Closed arc swept clockwise from ``start`` to ``end``.

    Angles are rational fractions of a full turn in [0, 1); the angle
    parameter increases in the clockwise direction.
    """

    start: Fraction
    end: Fraction

    def __post_init__(self):
        object.__setattr__(self, "start", _frac(self.start))
        object.__setattr__(self, "end", _frac(self.end))
        for a in (self.start, self.end):
            if not (0 <= a < 1):
                raise ValidationError(f"arc angle {a} outside [0, 1)")
        if self.start == self.end:
            raise ValidationError("arc needs start != end")

    def contains(self, angle: Fraction) -> bool:
        a = angle % 1
        if self.start < self.end:
            return self.start <= a <= self.end
        return a >= self.start or a <= self.end


@dataclass(frozen=True)
class DiskObj:
    center: Point


@dataclass(frozen=True)
class RectObj:
    x_min: Fraction
    x_max: Fraction
    y_min: Fraction
    y_max: Fraction

    def __post_init__(self):
        for name in ("x_min", "x_max", "y_min", "y_max"):
            object.__setattr__(self, name, _frac(getattr(self, name)))
        if not (self.x_min < self.x_max and self.y_min < self.y_max):
            raise ValidationError(f"degenerate rectangle {self}")


@dataclass(frozen=True)
class GeometricInstance:
    """A scene of objects of one kind plus global parameters."""

    kind: str
    objects: tuple
    disk_radius: Optional[Fraction] = None

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        if self.disk_radius is not None:
            object.__setattr__(self, "disk_radius", _frac(self.disk_radius))

    @property
    def n(self) -> int:
        return len(self.objects)


_OBJECT_TYPES = {
    INTERVALS: IntervalObj,
    ARCS: ArcObj,
    UNIT_DISKS: DiskObj,
    UNIT_SQUARES: RectObj,
    UNIT_HEIGHT_RECTS: RectObj,
    RECTS: RectObj,
}


def validate_instance(instance: GeometricInstance, require_nonempty: bool = False):
    """Check kind/payload consistency and per-kind invariants."""
    if instance.kind not in KINDS:
        raise ValidationError(f"unknown kind {instance.kind!r}")
    want = _OBJECT_TYPES[instance.kind]
    for obj in instance.objects:
        if not isinstance(obj, want):
            raise ValidationError(
                f"kind {instance.kind!r} holds a {type(obj).__name__}"
            )
    if instance.kind == UNIT_DISKS:
        if instance.disk_radius is None or instance.disk_radius <= 0:
            raise ValidationError("unit_disks scene needs disk_radius > 0")
    elif instance.disk_radius is not None:
        raise ValidationError("disk_radius only applies to unit_disks scenes")
    if instance.kind == UNIT_SQUARES:
        for obj in instance.objects:
            if obj.x_max - obj.x_min != 1 or obj.y_max - obj.y_min != 1:
                raise ValidationError(f"non-unit square {obj}")
    if instance.kind == UNIT_HEIGHT_RECTS:
        for obj in instance.objects:
            if obj.y_max - obj.y_min != 1:
                raise ValidationError(f"non-unit-height rectangle {obj}")
    if require_nonempty and not instance.objects:
        raise ValidationError("instance has no objects")


def intervals_intersect(a: IntervalObj, b: IntervalObj) -> bool:
    return a.left <= b.right and b.left <= a.right


def arcs_intersect(a: ArcObj, b: ArcObj) -> bool:
    # Two closed arcs overlap iff one contains an endpoint of the other.
    return (
        a.contains(b.start)
        or a.contains(b.end)
        or b.contains(a.start)
        or b.contains(a.end)
    )


def disks_intersect(a: DiskObj, b: DiskObj, radius: Fraction) -> bool:
    dx = a.center.x - b.center.x
    dy = a.center.y - b.center.y
    return dx * dx + dy * dy <= (2 * radius) ** 2


def rects_intersect(a: RectObj, b: RectObj) -> bool:
    return (
        a.x_min <= b.x_max
        and b.x_min <= a.x_max
        and a.y_min <= b.y_max
        and b.y_min <= a.y_max
    )


def objects_intersect(instance: GeometricInstance, i: int, j: int) -> bool:
    a, b = instance.objects[i], instance.objects[j]
    if instance.kind == INTERVALS:
        return intervals_intersect(a, b)
    if instance.kind == ARCS:
        return arcs_intersect(a, b)
    if instance.kind == UNIT_DISKS:
        return disks_intersect(a, b, instance.disk_radius)
    return rects_intersect(a, b)


@dataclass(frozen=True)
class IntersectionGraph:
    """Vertex-indexed adjacency; ``masks[i]`` is the neighbor bitmask of i."""

    n: int
    masks: tuple

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple]) -> "IntersectionGraph":
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValidationError(f"bad edge ({u}, {v})")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(n, tuple(masks))

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.masks[i] >> j & 1)

    def degree(self, i: int) -> int:
        return bin(self.masks[i]).count("1")

    def edges(self):
        for u in range(self.n):
            m = self.masks[u] >> (u + 1) << (u + 1)
            while m:
                v = (m & -m).bit_length() - 1
                yield (u, v)
                m &= m - 1

    def induced_masks(self, subset: Sequence[int]):
        """Adjacency masks of the induced subgraph, relabelled 0..len-1."""
        order = list(subset)
        pos = {v: i for i, v in enumerate(order)}
        out = []
        for v in order:
            m = 0
            for w in order:
                if w != v and self.adjacent(v, w):
                    m |= 1 << pos[w]
            out.append(m)
        return out


def build_intersection_graph(instance: GeometricInstance) -> IntersectionGraph:
    validate_instance(instance)
    n = instance.n
    masks = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if objects_intersect(instance, i, j):
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return IntersectionGraph(n, tuple(masks))


def _check_subset(g: IntersectionGraph, subset: Iterable[int]) -> list:
    out = sorted(set(subset))
    if out and (out[0] < 0 or out[-1] >= g.n):
        raise ValidationError(f"subset index out of range 0..{g.n - 1}")
    return out


def _two_color(g: IntersectionGraph, subset: Sequence[int]):
    """BFS layering per component.

    Returns (coloring, None) on success or (None, odd_cycle_vertices) where
    the cycle is returned as an ordered vertex list.
    """
    sub = set(subset)
    color = {}
    parent = {}
    for root in subset:
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                m = g.masks[u]
                while m:
                    v = (m & -m).bit_length() - 1
                    m &= m - 1
                    if v not in sub:
                        continue
                    if v not in color:
                        color[v] = color[u] ^ 1
                        parent[v] = u
                        nxt.append(v)
                    elif color[v] == color[u]:
                        return None, _odd_cycle(parent, u, v)
            frontier = nxt
    return color, None


def _odd_cycle(parent, u, v):
    pu = []
    w = u
    while w is not None:
        pu.append(w)
        w = parent[w]
    seen = set(pu)
    pv = []
    w = v
    while w not in seen:
        pv.append(w)
        w = parent[w]
    meet = w
    cycle = pu[: pu.index(meet) + 1]
    cycle.reverse()
    cycle.extend(reversed(pv))
    return cycle


def is_bipartite(g: IntersectionGraph, subset: Iterable[int]):
    """Proper 2-coloring of the induced subgraph, or None."""
    sub = _check_subset(g, subset)
    coloring, _ = _two_color(g, sub)
    return coloring


def is_triangle_free(g: IntersectionGraph, subset: Iterable[int]):
    """None if the induced subgraph has no K3, else one witness triple."""
    sub = _check_subset(g, subset)
    mask = 0
    for v in sub:
        mask |= 1 << v
    for u in sub:
        m = g.masks[u] & mask >> (u + 1) << (u + 1)
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            common = g.masks[u] & g.masks[v] & mask
            common = common >> (v + 1) << (v + 1)
            if common:
                w = (common & -common).bit_length() - 1
                return (u, v, w)
    return None


def is_independent(g: IntersectionGraph, subset: Iterable[int]):
    """None if the subset induces no edge, else one witness edge."""
    sub = _check_subset(g, subset)
    mask = 0
    for v in sub:
        mask |= 1 << v
    for u in sub:
        m = g.masks[u] & mask >> (u + 1) << (u + 1)
        if m:
            v = (m & -m).bit_length() - 1
            return (u, v)
    return None


@dataclass(frozen=True)
class Solution:
    """A selected index subset plus an optional 2-coloring certificate."""

    selected: tuple
    coloring: Optional[dict] = None

    def __post_init__(self):
        object.__setattr__(self, "selected", tuple(sorted(self.selected)))

    @property
    def size(self) -> int:
        return len(self.selected)


def translate_instance(
    instance: GeometricInstance, dx: Fraction, dy: Fraction = 0
) -> GeometricInstance:
    """Shift every object by a common vector (1D kinds use only dx)."""
    dx, dy = _frac(dx), _frac(dy)
    objs = []
    for o in instance.objects:
        if isinstance(o, IntervalObj):
            objs.append(IntervalObj(o.left + dx, o.right + dx))
        elif isinstance(o, ArcObj):
            objs.append(ArcObj((o.start + dx) % 1, (o.end + dx) % 1))
        elif isinstance(o, DiskObj):
            objs.append(DiskObj(Point(o.center.x + dx, o.center.y + dy)))
        else:
            objs.append(
                RectObj(o.x_min + dx, o.x_max + dx, o.y_min + dy, o.y_max + dy)
            )
    return GeometricInstance(instance.kind, tuple(objs), instance.disk_radius)
