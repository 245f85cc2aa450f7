"""-1-curves on blow-up configurations and reduction to a rank <= 2 base.

The -1-curves of a pair split three ways against the boundary transform
``C``: meeting it once (``perp``), missing it (``away``), or being one of its
components (``in_boundary``).  Contracting the ``perp`` curves undoes proper
blow-ups; iterating that lands on a base of Picard rank at most 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .errors import InvalidInputError, InvariantViolation
from .flags import BlowupConfig, BlownPoint, IncidenceDecl, find_flag, require_valid
from .lattice import P2, DivisorClass, irreducible_class_predicate
from .positivity import LogPair, is_strongly_asymptotically_ample

__all__ = [
    "MinusOnePartition",
    "Contraction",
    "ReductionReport",
    "enumerate_minus_one_classes",
    "partition_minus_one",
    "blowdown_type",
    "reduce_to_rank2",
]

DEFAULT_BOUND = 6


@dataclass(frozen=True)
class MinusOnePartition:
    perp: tuple[DivisorClass, ...]
    away: tuple[DivisorClass, ...]
    in_boundary: tuple[DivisorClass, ...]
    out_of_model: tuple[DivisorClass, ...] = ()
    bound: int = DEFAULT_BOUND
    capped: bool = False

    def all(self) -> tuple[DivisorClass, ...]:
        return self.perp + self.away + self.in_boundary + self.out_of_model


def _mult_vectors(length: int, total: int, squares: int) -> Iterator[tuple[int, ...]]:
    """Non-negative integer vectors with the given sum and sum of squares."""
    if length == 0:
        if total == 0 and squares == 0:
            yield ()
        return
    if total < 0 or squares < 0:
        return
    # Cauchy-Schwarz: total^2 <= length * squares
    if total * total > length * squares:
        return
    mu = 0
    while mu * mu <= squares and mu <= total:
        for rest in _mult_vectors(length - 1, total - mu, squares - mu * mu):
            yield (mu,) + rest
        mu += 1


def _base_range(config: BlowupConfig, bound: int) -> Iterator[DivisorClass]:
    if config.surface.kind == "P2":
        for d in range(bound + 1):
            yield DivisorClass((d,))
        return
    for a in range(bound + 1):
        for b in range(bound + 1):
            yield DivisorClass((a, b))


def enumerate_minus_one_classes(config: BlowupConfig, bound: int = DEFAULT_BOUND) -> list[DivisorClass]:
    """Classes ``E`` with ``E^2 = K.E = -1`` and base coordinates in ``[0, bound]``
    that survive an effectivity screen: the push-forward is irreducible and
    ``E`` meets every known curve (boundary transforms, declared incidences,
    exceptional curves) non-negatively unless it is that curve."""
    if bound < 1:
        raise InvalidInputError("bound must be >= 1")
    require_valid(config)
    m = config.m
    K = config.canonical()
    known = list(config.boundary_transforms()) + [config.incidence_transform(i) for i in config.incidences]
    found: list[DivisorClass] = []
    for A in _base_range(config, bound):
        if A.is_zero():
            for k in range(m):
                exc = [0] * m
                exc[k] = 1
                found.append(DivisorClass(A.base, tuple(exc)))
            continue
        if not irreducible_class_predicate(config.surface, A):
            continue
        up = DivisorClass(A.base, (0,) * m)
        total = -1 - config.dot(K, up)
        squares = config.dot(up, up) + 1
        for mu in _mult_vectors(m, total, squares):
            E = DivisorClass(A.base, tuple(-x for x in mu))
            if all(E == curve or config.dot(E, curve) >= 0 for curve in known):
                found.append(E)
    return sorted(found)


def partition_minus_one(
    config: BlowupConfig, classes: Optional[list[DivisorClass]] = None, bound: int = DEFAULT_BOUND
) -> MinusOnePartition:
    if classes is None:
        classes = enumerate_minus_one_classes(config, bound)
    transforms = config.boundary_transforms()
    C = transforms[0]
    for t in transforms[1:]:
        C = C + t
    K = config.canonical()
    for t in transforms:
        if config.dot(t, t) == -1 and config.dot(K, t) == -1 and t not in classes:
            classes = list(classes) + [t]
    perp, away, inside, other = [], [], [], []
    for E in sorted(set(classes)):
        if E in transforms:
            inside.append(E)
            continue
        e = config.dot(E, C)
        (perp if e == 1 else away if e == 0 else other).append(E)
    capped = any(max(E.base, default=0) >= bound for E in classes)
    return MinusOnePartition(tuple(perp), tuple(away), tuple(inside), tuple(other), bound, capped)


def _is_chain_end(config: BlowupConfig, i: int) -> bool:
    transforms = config.boundary_transforms()
    meets = [config.dot(transforms[i], t) for j, t in enumerate(transforms) if j != i]
    hits = [x for x in meets if x > 0]
    # an isolated component counts as a (degenerate) chain end
    return len(hits) <= 1 and all(x == 1 for x in hits)


def blowdown_type(config: BlowupConfig, E: DivisorClass, partition: Optional[MinusOnePartition] = None) -> str:
    """``proper``, ``away`` or ``tail``."""
    if partition is None:
        partition = partition_minus_one(config)
    if E in partition.perp:
        return "proper"
    if E in partition.away:
        return "away"
    if E in partition.in_boundary:
        i = config.boundary_transforms().index(E)
        if not _is_chain_end(config, i):
            raise InvariantViolation(
                f"boundary -1-curve {config.base.labels[i]} is not a chain end"
            )
        return "tail"
    raise InvalidInputError(f"{E} is not among the enumerated -1-curves")


@dataclass(frozen=True)
class Contraction:
    curve: DivisorClass
    kind: str
    point_id: Optional[str] = None
    on: Optional[str] = None


@dataclass(frozen=True)
class ReductionReport:
    """What was contracted, the same configuration presented over the reduced
    base, and the lattice map taking classes over the reduced base back to
    the input lattice."""

    contractions: tuple[Contraction, ...]
    equivalent: BlowupConfig
    to_original: Callable[[DivisorClass], DivisorClass] = field(compare=False, repr=False)

    def round_trip(self) -> tuple[DivisorClass, ...]:
        return tuple(self.to_original(t) for t in self.equivalent.boundary_transforms())


def _fresh_id(taken: set[str]) -> str:
    k = 0
    while f"q{k}" in taken:
        k += 1
    return f"q{k}"


def _contract_z1(config: BlowupConfig) -> tuple[BlowupConfig, Contraction, Callable]:
    """Blow ``Z_1`` on F_1 down to a point ``q`` of P^2.

    ``aZ + bF`` becomes a plane curve of degree ``b`` with multiplicity
    ``b - a`` at ``q``; in the other direction ``H = Z + F`` and ``E_q = Z``.
    """
    base = config.base
    Z = DivisorClass((1, 0))
    host = [label for label, cls in base.boundary if base.dot(Z, cls) == 1]
    q = _fresh_id(set(config.point_ids) | set(base.labels))
    new_base = LogPair(P2, tuple((label, DivisorClass((cls.base[1],))) for label, cls in base.boundary))
    points = (BlownPoint(q, tuple(host)),) + config.points
    incs = []
    for inc in config.incidences:
        a, b = inc.sigma.base
        if b - a > 0:
            incs.append(IncidenceDecl(DivisorClass((b,)), (q,) + inc.point_ids, (b - a,) + inc.mults))
        else:
            incs.append(IncidenceDecl(DivisorClass((b,)), inc.point_ids, inc.mults))
    equivalent = BlowupConfig(new_base, points, tuple(incs))

    def back(cls: DivisorClass) -> DivisorClass:
        x = cls.base[0]
        y, *rest = cls.exceptional
        return DivisorClass((x + y, x), tuple(rest))

    return equivalent, Contraction(Z, "proper", q, host[0] if host else None), back


def reduce_to_rank2(config: BlowupConfig, bound: int = DEFAULT_BOUND) -> tuple[LogPair, ReductionReport]:
    """Contract the proper -1-curves until none are left.

    The exceptional curves of the configuration go first; on F_1 the
    negative section follows when it meets the boundary once without
    belonging to it, landing on P^2.
    """
    require_valid(config)
    if not is_strongly_asymptotically_ample(config.base) or find_flag(config) is not None:
        raise InvalidInputError("reduction is defined for strongly asymptotically log del Pezzo configurations")
    part = partition_minus_one(config, bound=bound)
    if part.out_of_model:
        raise InvariantViolation(f"-1-curves meeting the boundary more than once: {part.out_of_model}")
    contractions = []
    rank = config.surface.rank
    for k, p in enumerate(config.points):
        E = DivisorClass((0,) * rank, tuple(1 if j == k else 0 for j in range(config.m)))
        if E not in part.perp:
            raise InvariantViolation(f"exceptional curve over {p.id} is not a proper -1-curve")
        contractions.append(Contraction(E, blowdown_type(config, E, part), p.id, p.host))

    equivalent = config
    to_original: Callable[[DivisorClass], DivisorClass] = lambda cls: cls
    base = config.base
    base_part = partition_minus_one(BlowupConfig(base), bound=bound)
    if base_part.perp:
        if not (base.surface.kind == "Fn" and base.surface.n == 1 and base_part.perp == (DivisorClass((1, 0)),)):
            raise InvariantViolation(f"unexpected proper -1-curves on the base: {base_part.perp}")
        equivalent, contraction, to_original = _contract_z1(config)
        contractions.append(contraction)
        base = equivalent.base
    residual = partition_minus_one(BlowupConfig(base), bound=bound)
    if residual.perp or base.surface.rank > 2:
        raise InvariantViolation("reduction did not reach a rank <= 2 base without proper -1-curves")
    return base, ReductionReport(tuple(contractions), equivalent, to_original)
