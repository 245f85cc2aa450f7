"""JSON pair descriptors: parsing, validation and canonical serialization.

A descriptor looks like::

    {
      "surface": {"kind": "Fn", "n": 2},
      "boundary": [{"id": "c1", "class": [1, 0]}, {"id": "c2", "class": [1, 2]}],
      "points": [{"id": "p1", "on": "c1"}],
      "incidences": [{"class": [0, 1], "points": ["p1"], "mults": [1]}],
      "beta": ["1/8", "1/16"]
    }

``points``, ``incidences`` and ``beta`` are optional.  Numbers must be
integers; rationals are written as ``"p/q"`` strings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .errors import InvalidInputError
from .flags import BlowupConfig, BlownPoint, IncidenceDecl
from .lattice import DivisorClass, SurfaceModel
from .positivity import LogPair

__all__ = ["PairDescriptor", "parse", "dumps", "parse_rational", "from_config"]


class DescriptorError(InvalidInputError):
    """Schema or syntax error in a descriptor."""


def _reject_float(text: str):
    raise DescriptorError(f"floating-point number {text} is not allowed; write rationals as \"p/q\" strings")


def parse_rational(value: Any, where: str = "value") -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise DescriptorError(f"{where}: expected an integer or a \"p/q\" string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            num, _, den = value.strip().partition("/")
            return Fraction(int(num), int(den) if den else 1)
        except (ValueError, ZeroDivisionError):
            pass
    raise DescriptorError(f"{where}: expected an integer or a \"p/q\" string, got {value!r}")


def _format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class PairDescriptor:
    surface: SurfaceModel
    boundary: tuple[tuple[str, tuple[int, ...]], ...]
    points: tuple[tuple[str, tuple[str, ...], Optional[str]], ...] = ()
    incidences: tuple[tuple[tuple[int, ...], tuple[str, ...], tuple[int, ...], bool], ...] = ()
    beta: Optional[tuple[Fraction, ...]] = None

    def pair(self) -> LogPair:
        return LogPair(self.surface, tuple((cid, DivisorClass(c)) for cid, c in self.boundary))

    def config(self) -> BlowupConfig:
        points = tuple(BlownPoint(pid, on, near) for pid, on, near in self.points)
        incs = tuple(
            IncidenceDecl(DivisorClass(cls), pts, mults, tangent) for cls, pts, mults, tangent in self.incidences
        )
        return BlowupConfig(self.pair(), points, incs)

    def to_json(self) -> dict:
        s = {"kind": self.surface.kind}
        if self.surface.kind == "Fn":
            s["n"] = self.surface.n
        out: dict[str, Any] = {
            "surface": s,
            "boundary": [{"id": cid, "class": list(c)} for cid, c in self.boundary],
        }
        if self.points:
            pts = []
            for pid, on, near in self.points:
                p: dict[str, Any] = {"id": pid, "on": on[0] if len(on) == 1 else list(on)}
                if near is not None:
                    p["near"] = near
                pts.append(p)
            out["points"] = pts
        if self.incidences:
            incs = []
            for cls, pts, mults, tangent in self.incidences:
                d: dict[str, Any] = {"class": list(cls), "points": list(pts), "mults": list(mults)}
                if tangent:
                    d["tangent"] = True
                incs.append(d)
            out["incidences"] = incs
        if self.beta is not None:
            out["beta"] = [_format_rational(b) for b in self.beta]
        return out


def dumps(obj: Any) -> str:
    """Canonical serialization: sorted keys, two-space indent, trailing newline."""
    if isinstance(obj, PairDescriptor):
        obj = obj.to_json()
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DescriptorError(f"{where}: expected an integer, got {value!r}")
    return value


def _str(value: Any, where: str) -> str:
    if not isinstance(value, str) or not value:
        raise DescriptorError(f"{where}: expected a non-empty string, got {value!r}")
    return value


def _list(value: Any, where: str) -> list:
    if not isinstance(value, list):
        raise DescriptorError(f"{where}: expected a list, got {value!r}")
    return value


def _obj(value: Any, where: str, allowed: set[str], required: set[str]) -> dict:
    if not isinstance(value, dict):
        raise DescriptorError(f"{where}: expected an object, got {value!r}")
    extra = set(value) - allowed
    if extra:
        raise DescriptorError(f"{where}: unknown field(s) {sorted(extra)}")
    missing = required - set(value)
    if missing:
        raise DescriptorError(f"{where}: missing field(s) {sorted(missing)}")
    return value


def _surface(raw: Any) -> SurfaceModel:
    d = _obj(raw, "surface", {"kind", "n"}, {"kind"})
    kind = _str(d["kind"], "surface.kind")
    if kind == "Fn":
        if "n" not in d:
            raise DescriptorError("surface.n: required for kind Fn")
        n = _int(d["n"], "surface.n")
        if n < 0:
            raise DescriptorError("surface.n: must be >= 0")
        return SurfaceModel("Fn", n)
    if kind not in ("P2", "P1xP1"):
        raise DescriptorError(f"surface.kind: expected P2, Fn or P1xP1, got {kind!r}")
    if "n" in d:
        raise DescriptorError(f"surface.n: {kind} takes no index")
    return SurfaceModel(kind)


def _class(raw: Any, where: str, rank: int) -> tuple[int, ...]:
    coords = tuple(_int(x, f"{where}[{i}]") for i, x in enumerate(_list(raw, where)))
    if len(coords) != rank:
        raise DescriptorError(f"{where}: expected {rank} coordinate(s), got {len(coords)}")
    return coords


def parse(text: str) -> PairDescriptor:
    try:
        raw = json.loads(text, parse_float=_reject_float, parse_constant=_reject_float)
    except json.JSONDecodeError as exc:
        raise DescriptorError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    top = _obj(raw, "descriptor", {"surface", "boundary", "points", "incidences", "beta"}, {"surface", "boundary"})
    surface = _surface(top["surface"])

    boundary = []
    ids: set[str] = set()
    for i, b in enumerate(_list(top["boundary"], "boundary")):
        where = f"boundary[{i}]"
        d = _obj(b, where, {"id", "class"}, {"id", "class"})
        cid = _str(d["id"], f"{where}.id")
        if cid in ids:
            raise DescriptorError(f"{where}.id: duplicate id {cid!r}")
        ids.add(cid)
        boundary.append((cid, _class(d["class"], f"{where}.class", surface.rank)))
    if not boundary:
        raise DescriptorError("boundary: at least one component is required")
    comp_ids = set(ids)

    points = []
    point_ids: set[str] = set()
    for i, p in enumerate(_list(top.get("points", []), "points")):
        where = f"points[{i}]"
        d = _obj(p, where, {"id", "on", "near"}, {"id", "on"})
        pid = _str(d["id"], f"{where}.id")
        if pid in ids:
            raise DescriptorError(f"{where}.id: duplicate id {pid!r}")
        ids.add(pid)
        point_ids.add(pid)
        on_raw = d["on"]
        on_list = [on_raw] if isinstance(on_raw, str) else _list(on_raw, f"{where}.on")
        on = tuple(_str(x, f"{where}.on") for x in on_list)
        for c in on:
            if c not in comp_ids:
                raise DescriptorError(f"{where}.on: unknown component {c!r}")
        near = d.get("near")
        if near is not None:
            near = _str(near, f"{where}.near")
        points.append((pid, on, near))
    for pid, _, near in points:
        if near is not None and near not in point_ids:
            raise DescriptorError(f"point {pid!r}: near refers to unknown point {near!r}")

    incidences = []
    for i, inc in enumerate(_list(top.get("incidences", []), "incidences")):
        where = f"incidences[{i}]"
        d = _obj(inc, where, {"class", "points", "mults", "tangent"}, {"class", "points"})
        cls = _class(d["class"], f"{where}.class", surface.rank)
        pts = tuple(_str(x, f"{where}.points") for x in _list(d["points"], f"{where}.points"))
        for x in pts:
            if x not in point_ids:
                raise DescriptorError(f"{where}.points: unknown point {x!r}")
        if "mults" in d:
            mults = tuple(_int(x, f"{where}.mults") for x in _list(d["mults"], f"{where}.mults"))
            if len(mults) != len(pts):
                raise DescriptorError(f"{where}.mults: need one multiplicity per point")
        else:
            mults = (1,) * len(pts)
        tangent = d.get("tangent", False)
        if not isinstance(tangent, bool):
            raise DescriptorError(f"{where}.tangent: expected true or false")
        incidences.append((cls, pts, mults, tangent))

    beta = None
    if "beta" in top:
        beta = tuple(parse_rational(x, f"beta[{i}]") for i, x in enumerate(_list(top["beta"], "beta")))

    return PairDescriptor(surface, tuple(boundary), tuple(points), tuple(incidences), beta)


def from_config(config: BlowupConfig) -> PairDescriptor:
    pair = config.base
    return PairDescriptor(
        pair.surface,
        tuple((label, cls.base) for label, cls in pair.boundary),
        tuple((p.id, p.on, p.near) for p in config.points),
        tuple((i.sigma.base, i.point_ids, i.mults, i.tangent) for i in config.incidences),
    )
