"""Flags obstructing strong asymptotic positivity after blowing up boundary
points, and the resulting verdict for blow-up configurations.

A blow-up of a strongly asymptotically log del Pezzo pair ``(s, c)`` at
distinct smooth points of ``c`` stays strongly asymptotically log del Pezzo
exactly when no flag ``{points} in Sigma in s`` exists.  Flags come in two
kinds:

* ``Sigma`` a boundary component: decided by a point-count threshold on
  that component;
* ``Sigma`` off the boundary: ``Sigma.c`` equals the total multiplicity of
  ``Sigma`` at the blown-up points, and ``(K + c).Sigma = 0``.

Which special positions the points occupy is declared explicitly through
incidences; anything undeclared is taken to be general, except where an
expected-dimension count forces a curve through the points.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import InvalidInputError
from .lattice import (
    DivisorClass,
    canonical_class,
    classes_in_box,
    intersection_number,
    irreducible_class_predicate,
    linear_system_dimension,
)
from .positivity import LogPair, is_strongly_asymptotically_ample

__all__ = [
    "BlownPoint",
    "IncidenceDecl",
    "BlowupConfig",
    "FlagWitness",
    "FlagFamily",
    "SALdPVerdict",
    "default_max_degree",
    "config_violations",
    "off_boundary_flag_test",
    "boundary_flag_threshold",
    "generic_presence",
    "enumerate_flag_families",
    "find_flag",
    "verify_witness",
    "is_saldp_blowup",
]

DEFAULT_MAX_DEGREE = 4


def default_max_degree() -> int:
    """Enumeration bound, overridable through ``SALDP_MAX_DEGREE``."""
    raw = os.environ.get("SALDP_MAX_DEGREE")
    if raw is None:
        return DEFAULT_MAX_DEGREE
    try:
        value = int(raw)
    except ValueError:
        raise InvalidInputError(f"SALDP_MAX_DEGREE must be an integer, got {raw!r}") from None
    if value < 1:
        raise InvalidInputError("SALDP_MAX_DEGREE must be >= 1")
    return value


@dataclass(frozen=True)
class BlownPoint:
    """A point to blow up.  ``on`` lists the boundary components through it;
    a valid configuration has exactly one.  ``near`` names another point this
    one is infinitely near to (never valid, kept so it can be reported)."""

    id: str
    on: tuple[str, ...]
    near: Optional[str] = None

    def __post_init__(self) -> None:
        on = (self.on,) if isinstance(self.on, str) else tuple(self.on)
        object.__setattr__(self, "on", on)

    @property
    def host(self) -> str:
        return self.on[0]


@dataclass(frozen=True)
class IncidenceDecl:
    """A declared curve of class ``sigma`` through the listed points with the
    listed multiplicities."""

    sigma: DivisorClass
    point_ids: tuple[str, ...]
    mults: tuple[int, ...] = ()
    tangent: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "point_ids", tuple(self.point_ids))
        mults = tuple(int(m) for m in self.mults) or (1,) * len(self.point_ids)
        object.__setattr__(self, "mults", mults)


@dataclass(frozen=True)
class BlowupConfig:
    base: LogPair
    points: tuple[BlownPoint, ...] = ()
    incidences: tuple[IncidenceDecl, ...] = ()

    def __post_init__(self) -> None:
        pts = tuple(p if isinstance(p, BlownPoint) else BlownPoint(*p) for p in self.points)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "incidences", tuple(self.incidences))

    @classmethod
    def on_components(
        cls,
        base: LogPair,
        counts: Sequence[int],
        incidences: Iterable[IncidenceDecl] = (),
        prefix: str = "p",
    ) -> "BlowupConfig":
        """General points: ``counts[i]`` of them on the i-th component, ids ``p1, p2, ...``."""
        if len(counts) != base.r:
            raise InvalidInputError("need one count per boundary component")
        points = []
        for label, k in zip(base.labels, counts):
            for _ in range(k):
                points.append(BlownPoint(f"{prefix}{len(points) + 1}", (label,)))
        return cls(base, tuple(points), tuple(incidences))

    @property
    def surface(self):
        return self.base.surface

    @property
    def m(self) -> int:
        return len(self.points)

    @property
    def point_ids(self) -> tuple[str, ...]:
        return tuple(p.id for p in self.points)

    def point(self, pid: str) -> BlownPoint:
        for p in self.points:
            if p.id == pid:
                return p
        raise InvalidInputError(f"no point {pid!r}")

    def point_index(self, pid: str) -> int:
        return self.point_ids.index(pid)

    def points_on(self, label: str) -> tuple[str, ...]:
        return tuple(p.id for p in self.points if label in p.on)

    def counts(self) -> tuple[int, ...]:
        return tuple(len(self.points_on(label)) for label in self.base.labels)

    def dot(self, A: DivisorClass, B: DivisorClass) -> int:
        return intersection_number(self.surface, A, B)

    def canonical(self) -> DivisorClass:
        return canonical_class(self.surface, self.m)

    def boundary_transforms(self) -> tuple[DivisorClass, ...]:
        """Proper transforms of the boundary components (multiplicity 1 at hosted points)."""
        out = []
        for label, cls in self.base.boundary:
            exc = tuple(-1 if label in p.on else 0 for p in self.points)
            out.append(DivisorClass(cls.base, exc))
        return tuple(out)

    def incidence_transform(self, inc: IncidenceDecl) -> DivisorClass:
        exc = [0] * self.m
        for pid, mu in zip(inc.point_ids, inc.mults):
            exc[self.point_index(pid)] = -mu
        return DivisorClass(inc.sigma.base, tuple(exc))


@dataclass(frozen=True)
class FlagWitness:
    kind: str  # "boundary" | "off_boundary"
    sigma: DivisorClass
    point_ids: tuple[str, ...]
    mults: tuple[int, ...]
    fired_condition: str
    component: Optional[str] = None


@dataclass(frozen=True)
class FlagFamily:
    """One family of flags on a base pair.

    Boundary families: ``component`` with at least (``>=``) or more than
    (``>``) ``threshold`` points.  Off-boundary families: curves of class
    ``sigma`` through ``sigma.c_alpha`` points of each component; ``unbounded``
    marks pairs with ``K + c ~ 0``, where every class contributes.
    """

    kind: str
    component: Optional[str] = None
    comparison: Optional[str] = None
    threshold: Optional[int] = None
    sigma: Optional[DivisorClass] = None
    points_per_component: tuple[int, ...] = ()
    unbounded: bool = False

    @property
    def min_points(self) -> int:
        if self.kind == "boundary":
            return self.threshold if self.comparison == ">=" else self.threshold + 1
        return sum(self.points_per_component)

    def signature(self) -> tuple:
        if self.kind == "boundary":
            return ("boundary", self.component, self.comparison, self.threshold)
        if self.unbounded:
            return ("off_boundary", "unbounded")
        return ("off_boundary", self.sigma.base, self.points_per_component)


@dataclass(frozen=True)
class SALdPVerdict:
    is_saldp: bool
    witness: Optional[FlagWitness] = None
    max_degree: int = DEFAULT_MAX_DEGREE

    def __bool__(self) -> bool:
        return self.is_saldp


def _is_rigid_component(base: LogPair, sigma: DivisorClass) -> Optional[str]:
    """Label of the boundary component that *is* ``sigma``, when its class is rigid."""
    for label, cls in base.boundary:
        if cls == sigma and base.dot(cls, cls) < 0:
            return label
    return None


def config_violations(config: BlowupConfig) -> list[str]:
    """Everything that keeps ``config`` outside the model: returned, not raised."""
    out: list[str] = []
    base = config.base
    labels = set(base.labels)
    seen: set[str] = set()
    for p in config.points:
        if p.id in seen:
            out.append(f"duplicate point id {p.id!r}")
        seen.add(p.id)
        unknown = [lab for lab in p.on if lab not in labels]
        if unknown:
            out.append(f"point {p.id!r} lies on unknown component(s) {unknown}")
        if len(p.on) == 0:
            out.append(f"point {p.id!r} is not on the boundary (away blow-ups are outside the model)")
        elif len(set(p.on)) > 1:
            out.append(f"point {p.id!r} is not in the smooth locus: it lies on {list(p.on)}")
        if p.near is not None:
            out.append(f"point {p.id!r} is infinitely near {p.near!r}; infinitely near points are not allowed")

    for n, inc in enumerate(config.incidences, start=1):
        where = f"incidence {n} ({inc.sigma})"
        if len(inc.mults) != len(inc.point_ids):
            out.append(f"{where}: {len(inc.point_ids)} points but {len(inc.mults)} multiplicities")
            continue
        if len(set(inc.point_ids)) != len(inc.point_ids):
            out.append(f"{where}: repeated point ids")
        missing = [pid for pid in inc.point_ids if pid not in seen]
        if missing:
            out.append(f"{where}: unknown points {missing}")
            continue
        if any(mu < 1 for mu in inc.mults):
            out.append(f"{where}: multiplicities must be positive")
        if inc.tangent:
            out.append(f"{where}: tangency is not allowed, all incidences must be transverse")
        if not inc.sigma.is_base_only or len(inc.sigma.base) != base.surface.rank:
            out.append(f"{where}: sigma must be a class on {base.surface}")
            continue
        if inc.sigma.is_zero() or not irreducible_class_predicate(base.surface, inc.sigma):
            out.append(f"{where}: sigma holds no irreducible curve")
            continue
        rigid = _is_rigid_component(base, inc.sigma)
        if rigid is not None:
            out.append(f"{where}: sigma is the boundary component {rigid}")
            continue
        for label, cls in base.boundary:
            used = sum(
                mu for pid, mu in zip(inc.point_ids, inc.mults) if label in config.point(pid).on
            )
            avail = base.dot(inc.sigma, cls)
            if used > avail:
                out.append(
                    f"{where}: total multiplicity {used} on {label} exceeds sigma.{label} = {avail}"
                )
    return out


def require_valid(config: BlowupConfig) -> None:
    problems = config_violations(config)
    if problems:
        raise InvalidInputError("; ".join(problems))


def off_boundary_flag_test(base: LogPair, sigma: DivisorClass, mults: Sequence[int]) -> bool:
    """``sigma.c == sum(mults)`` and ``(K + c).sigma == 0``."""
    if not sigma.is_base_only or sigma.is_zero() or not irreducible_class_predicate(base.surface, sigma):
        raise InvalidInputError(f"sigma must be an irreducible base class, got {sigma}")
    rigid = _is_rigid_component(base, sigma)
    if rigid is not None:
        raise InvalidInputError(f"sigma is the boundary component {rigid}; use the boundary test")
    if any(int(mu) < 0 for mu in mults):
        raise InvalidInputError("multiplicities must be >= 0")
    c = base.total()
    return base.dot(sigma, c) == sum(mults) and base.dot(base.canonical() + c, sigma) == 0


def _middle_component(base: LogPair, i: int) -> bool:
    ci = base.classes[i]
    met = [base.dot(ci, cj) for j, cj in enumerate(base.classes) if j != i]
    hits = [x for x in met if x > 0]
    return len(hits) == 2 and all(x == 1 for x in hits)


def boundary_flag_threshold(base: LogPair, i: int) -> Optional[tuple[str, int]]:
    """``(comparison, value)`` such that ``count comparison value`` makes the
    i-th component, with ``count`` blown-up points on it, a flag."""
    if not 0 <= i < base.r:
        raise InvalidInputError(f"component index {i} out of range")
    ci = base.classes[i]
    if base.is_anticanonical():
        if base.r == 1:
            K = base.canonical()
            return (">=", base.dot(K, K))
        return (">", base.dot(ci, ci))
    if base.r >= 3 and _middle_component(base, i):
        return (">", base.dot(ci, ci))
    return None


def _fires(count: int, threshold: tuple[str, int]) -> bool:
    op, value = threshold
    return count >= value if op == ">=" else count > value


def generic_presence(base: LogPair, sigma: DivisorClass, mults: Sequence[int]) -> bool:
    """Expected dimension ``dim|sigma| - sum mu(mu+1)/2 >= 0``."""
    conditions = sum(int(mu) * (int(mu) + 1) // 2 for mu in mults)
    return linear_system_dimension(base.surface, sigma) - conditions >= 0


def _flag_classes(base: LogPair, max_degree: int) -> Iterable[tuple[DivisorClass, tuple[int, ...]]]:
    """Irreducible off-boundary classes with ``(K + c).sigma = 0`` and ``sigma.c > 0``."""
    kc = base.canonical() + base.total()
    for sigma in classes_in_box(base.surface, max_degree):
        if not irreducible_class_predicate(base.surface, sigma):
            continue
        if _is_rigid_component(base, sigma) is not None:
            continue
        if base.dot(kc, sigma) != 0:
            continue
        per = tuple(base.dot(sigma, cls) for cls in base.classes)
        if sum(per) > 0:
            yield sigma, per


def enumerate_flag_families(base: LogPair, max_degree: int = DEFAULT_MAX_DEGREE, max_m: int = 12) -> list[FlagFamily]:
    if max_degree < 1:
        raise InvalidInputError("max_degree must be >= 1")
    families = []
    for i, label in enumerate(base.labels):
        thr = boundary_flag_threshold(base, i)
        if thr is not None:
            families.append(FlagFamily("boundary", component=label, comparison=thr[0], threshold=thr[1]))
    unbounded = base.is_anticanonical()
    for sigma, per in _flag_classes(base, max_degree):
        if sum(per) <= max_m:
            families.append(
                FlagFamily("off_boundary", sigma=sigma, points_per_component=per, unbounded=unbounded)
            )
    return families


def find_flag(config: BlowupConfig, max_degree: Optional[int] = None) -> Optional[FlagWitness]:
    require_valid(config)
    base = config.base
    if max_degree is None:
        max_degree = default_max_degree()

    for i, (label, cls) in enumerate(base.boundary):
        thr = boundary_flag_threshold(base, i)
        on = config.points_on(label)
        if thr is not None and _fires(len(on), thr):
            op, value = thr
            return FlagWitness(
                "boundary", cls, on, (1,) * len(on), f"boundary: {len(on)} point(s) on {label}, {op} {value}", label
            )

    for inc in config.incidences:
        if off_boundary_flag_test(base, inc.sigma, inc.mults):
            return FlagWitness(
                "off_boundary", inc.sigma, inc.point_ids, inc.mults, "off-boundary: declared incidence"
            )

    for sigma, per in _flag_classes(base, max_degree):
        if any(sigma == cls for cls in base.classes):
            # the boundary curve itself lies in |sigma|; the count below would see it
            continue
        chosen: list[str] = []
        for label, need in zip(base.labels, per):
            on = config.points_on(label)
            if need > len(on):
                break
            chosen.extend(on[:need])
        else:
            ones = (1,) * len(chosen)
            if generic_presence(base, sigma, ones):
                return FlagWitness(
                    "off_boundary", sigma, tuple(chosen), ones, "off-boundary: forced by expected dimension"
                )
    return None


def verify_witness(base: LogPair, witness: FlagWitness) -> bool:
    if witness.kind == "boundary":
        thr = boundary_flag_threshold(base, base.index(witness.component))
        return thr is not None and _fires(len(witness.point_ids), thr)
    return off_boundary_flag_test(base, witness.sigma, witness.mults)


def is_saldp_blowup(config: BlowupConfig, max_degree: Optional[int] = None) -> SALdPVerdict:
    if not is_strongly_asymptotically_ample(config.base):
        raise InvalidInputError("the base pair is not strongly asymptotically log del Pezzo")
    if max_degree is None:
        max_degree = default_max_degree()
    witness = find_flag(config, max_degree)
    return SALdPVerdict(witness is None, witness, max_degree)
