"""JSON instance and solution files with exact rational coordinates.

Rationals are serialized as ``"p/q"`` strings (integer shorthand allowed on
input) so the text format round-trips losslessly.  Solution files carry the
2-coloring certificate, which keeps verification linear in the graph size
and independent of whichever solver produced them.
"""
import json
from fractions import Fraction

from .errors import ValidationError
from .model import (
    ARCS,
    INTERVALS,
    KINDS,
    UNIT_DISKS,
    ArcObj,
    DiskObj,
    GeometricInstance,
    IntervalObj,
    Point,
    RectObj,
    Solution,
)

FORMAT_VERSION = 1


def format_rational(value) -> str:
    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def parse_rational(text) -> Fraction:
    if isinstance(text, (int, str)):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"bad rational {text!r}: {exc}") from exc
    raise ValidationError(f"rationals must be strings or integers, got {text!r}")


def _object_record(kind, obj) -> dict:
    if kind == INTERVALS:
        return {"left": format_rational(obj.left), "right": format_rational(obj.right)}
    if kind == ARCS:
        return {"start": format_rational(obj.start), "end": format_rational(obj.end)}
    if kind == UNIT_DISKS:
        return {"x": format_rational(obj.center.x), "y": format_rational(obj.center.y)}
    return {
        "x_min": format_rational(obj.x_min),
        "x_max": format_rational(obj.x_max),
        "y_min": format_rational(obj.y_min),
        "y_max": format_rational(obj.y_max),
    }


def _object_from_record(kind, rec):
    if not isinstance(rec, dict):
        raise ValidationError(f"object record must be a mapping, got {rec!r}")

    def get(*names):
        missing = [nm for nm in names if nm not in rec]
        if missing:
            raise ValidationError(f"object record missing fields {missing}")
        return [parse_rational(rec[nm]) for nm in names]

    if kind == INTERVALS:
        return IntervalObj(*get("left", "right"))
    if kind == ARCS:
        return ArcObj(*get("start", "end"))
    if kind == UNIT_DISKS:
        return DiskObj(Point(*get("x", "y")))
    return RectObj(*get("x_min", "x_max", "y_min", "y_max"))


def instance_to_dict(instance: GeometricInstance, weights=None) -> dict:
    doc = {
        "format": FORMAT_VERSION,
        "kind": instance.kind,
        "objects": [_object_record(instance.kind, o) for o in instance.objects],
    }
    if instance.disk_radius is not None:
        doc["disk_radius"] = format_rational(instance.disk_radius)
    if weights is not None:
        if len(weights) != instance.n:
            raise ValidationError("one weight per object required")
        doc["weights"] = [format_rational(w) for w in weights]
    return doc


def instance_from_dict(doc: dict):
    """Parse a document; returns (instance, weights-or-None)."""
    if not isinstance(doc, dict):
        raise ValidationError("instance document must be a mapping")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise ValidationError(f"unknown kind {kind!r}; expected one of {KINDS}")
    objects = doc.get("objects")
    if not isinstance(objects, list):
        raise ValidationError("instance document needs an 'objects' list")
    radius = doc.get("disk_radius")
    instance = GeometricInstance(
        kind,
        tuple(_object_from_record(kind, rec) for rec in objects),
        parse_rational(radius) if radius is not None else None,
    )
    weights = doc.get("weights")
    if weights is not None:
        if not isinstance(weights, list) or len(weights) != instance.n:
            raise ValidationError("'weights' must list one rational per object")
        weights = [parse_rational(w) for w in weights]
        if any(w < 0 for w in weights):
            raise ValidationError("weights must be nonnegative")
    return instance, weights


def solution_to_dict(solution: Solution, mode: str = "bipartite") -> dict:
    doc = {
        "format": FORMAT_VERSION,
        "mode": mode,
        "selected": list(solution.selected),
    }
    if solution.coloring is not None:
        doc["coloring"] = {str(v): c for v, c in solution.coloring.items()}
    return doc


def solution_from_dict(doc: dict):
    """Parse a document; returns (solution, mode)."""
    if not isinstance(doc, dict):
        raise ValidationError("solution document must be a mapping")
    mode = doc.get("mode", "bipartite")
    if mode not in ("bipartite", "triangle_free", "independent"):
        raise ValidationError(f"unknown solution mode {mode!r}")
    selected = doc.get("selected")
    if not isinstance(selected, list) or not all(
        isinstance(v, int) and v >= 0 for v in selected
    ):
        raise ValidationError("'selected' must list nonnegative indices")
    if len(set(selected)) != len(selected):
        raise ValidationError("'selected' has repeated indices")
    coloring = doc.get("coloring")
    if coloring is not None:
        if not isinstance(coloring, dict):
            raise ValidationError("'coloring' must map index -> 0/1")
        try:
            coloring = {int(v): c for v, c in coloring.items()}
        except ValueError as exc:
            raise ValidationError(f"bad coloring key: {exc}") from exc
        if any(c not in (0, 1) for c in coloring.values()):
            raise ValidationError("coloring values must be 0 or 1")
    return Solution(tuple(selected), coloring), mode


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path} is not valid JSON: {exc}") from exc


def _dump_json(doc, path):
    try:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
    except OSError as exc:
        raise ValidationError(f"cannot write {path}: {exc}") from exc


def load_instance(path):
    """Read an instance file; returns (instance, weights-or-None)."""
    return instance_from_dict(_load_json(path))


def save_instance(instance, path, weights=None):
    _dump_json(instance_to_dict(instance, weights), path)


def load_solution(path):
    """Read a solution file; returns (solution, mode)."""
    return solution_from_dict(_load_json(path))


def save_solution(solution, path, mode: str = "bipartite"):
    _dump_json(solution_to_dict(solution, mode), path)
