"""Picard lattices of P^2, the Hirzebruch surfaces F_n, P^1 x P^1 and their
blow-ups at finitely many distinct points.

A divisor class is stored as integer coordinates in a fixed basis:

* ``P2``     -- ``(d,)`` for ``d*H``;
* ``Fn``     -- ``(a, b)`` for ``a*Z_n + b*F``;
* ``P1xP1``  -- ``(a, b)`` for ``a*(1,0) + b*(0,1)``.

Blown-up points contribute one exceptional coordinate each, so that
``DivisorClass((d,), (m1, m2))`` reads ``d*H + m1*E_1 + m2*E_2``.  Proper
transforms therefore carry *negative* exceptional coordinates.

Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidInputError

__all__ = [
    "SurfaceModel",
    "DivisorClass",
    "P2",
    "P1xP1",
    "hirzebruch",
    "intersection_number",
    "canonical_class",
    "pullback",
    "proper_transform",
    "exceptional_class",
    "irreducible_class_predicate",
    "adjunction_number",
    "linear_system_dimension",
    "arithmetic_genus",
]

_KINDS = ("P2", "Fn", "P1xP1")


@dataclass(frozen=True, order=True)
class SurfaceModel:
    """One of the minimal rational surfaces ``P2``, ``Fn`` or ``P1xP1``."""

    kind: str
    n: int = 0

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise InvalidInputError(f"unknown surface kind {self.kind!r}")
        if self.kind == "Fn":
            if not isinstance(self.n, int) or self.n < 0:
                raise InvalidInputError(f"Hirzebruch index must be >= 0, got {self.n!r}")
        elif self.n != 0:
            raise InvalidInputError(f"{self.kind} takes no index")

    @property
    def rank(self) -> int:
        return 1 if self.kind == "P2" else 2

    @property
    def is_quadric(self) -> bool:
        """True for P^1 x P^1, whether written as ``P1xP1`` or as ``F_0``."""
        return self.kind == "P1xP1" or (self.kind == "Fn" and self.n == 0)

    def gram(self) -> tuple[tuple[int, ...], ...]:
        if self.kind == "P2":
            return ((1,),)
        if self.kind == "Fn":
            return ((-self.n, 1), (1, 0))
        return ((0, 1), (1, 0))

    def __str__(self) -> str:
        return f"F_{self.n}" if self.kind == "Fn" else self.kind


P2 = SurfaceModel("P2")
P1xP1 = SurfaceModel("P1xP1")


def hirzebruch(n: int) -> SurfaceModel:
    return SurfaceModel("Fn", n)


@dataclass(frozen=True, order=True)
class DivisorClass:
    """Integer coordinates of a divisor class; see the module docstring."""

    base: tuple[int, ...]
    exceptional: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", tuple(int(x) for x in self.base))
        object.__setattr__(self, "exceptional", tuple(int(x) for x in self.exceptional))

    @classmethod
    def of(cls, *base: int) -> "DivisorClass":
        return cls(tuple(base))

    @property
    def n_points(self) -> int:
        return len(self.exceptional)

    @property
    def is_base_only(self) -> bool:
        return not self.exceptional

    def is_zero(self) -> bool:
        return not any(self.base) and not any(self.exceptional)

    def _check_same_shape(self, other: "DivisorClass") -> None:
        if len(self.base) != len(other.base) or len(self.exceptional) != len(other.exceptional):
            raise InvalidInputError(f"incompatible classes {self} and {other}")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_same_shape(other)
        return DivisorClass(
            tuple(x + y for x, y in zip(self.base, other.base)),
            tuple(x + y for x, y in zip(self.exceptional, other.exceptional)),
        )

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-x for x in self.base), tuple(-x for x in self.exceptional))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __mul__(self, k: int) -> "DivisorClass":
        return DivisorClass(tuple(k * x for x in self.base), tuple(k * x for x in self.exceptional))

    __rmul__ = __mul__

    def drop_exceptional(self) -> "DivisorClass":
        """Push forward to the minimal surface (forget exceptional coordinates)."""
        return DivisorClass(self.base)

    def __str__(self) -> str:
        parts = [str(list(self.base))]
        if self.exceptional:
            parts.append(str(list(self.exceptional)))
        return "|".join(parts)


def _check_surface(surface: SurfaceModel, A: DivisorClass) -> None:
    if len(A.base) != surface.rank:
        raise InvalidInputError(
            f"class {A} has {len(A.base)} base coordinates, {surface} needs {surface.rank}"
        )


def intersection_number(surface: SurfaceModel, A: DivisorClass, B: DivisorClass) -> int:
    """Intersection pairing; exceptional classes satisfy E_j.E_k = -delta_jk."""
    _check_surface(surface, A)
    _check_surface(surface, B)
    if len(A.exceptional) != len(B.exceptional):
        raise InvalidInputError(
            f"classes {A} and {B} live on blow-ups at different numbers of points"
        )
    g = surface.gram()
    total = 0
    for i, x in enumerate(A.base):
        if x:
            for j, y in enumerate(B.base):
                total += x * g[i][j] * y
    for x, y in zip(A.exceptional, B.exceptional):
        total -= x * y
    return total


def self_intersection(surface: SurfaceModel, A: DivisorClass) -> int:
    return intersection_number(surface, A, A)


def canonical_class(surface: SurfaceModel, n_points: int = 0) -> DivisorClass:
    """K of the blow-up of ``surface`` at ``n_points`` distinct points."""
    if n_points < 0:
        raise InvalidInputError("n_points must be >= 0")
    if surface.kind == "P2":
        base = (-3,)
    elif surface.kind == "Fn":
        base = (-2, -(surface.n + 2))
    else:
        base = (-2, -2)
    return DivisorClass(base, (1,) * n_points)


def pullback(A: DivisorClass, n_points: int) -> DivisorClass:
    if not A.is_base_only:
        raise InvalidInputError(f"pullback expects a class on the minimal surface, got {A}")
    if n_points < 0:
        raise InvalidInputError("n_points must be >= 0")
    return DivisorClass(A.base, (0,) * n_points)


def exceptional_class(k: int, n_points: int, rank: int) -> DivisorClass:
    """The class E_k (0-based ``k``) on a blow-up at ``n_points`` points."""
    if not 0 <= k < n_points:
        raise InvalidInputError(f"no exceptional curve {k} among {n_points}")
    exc = [0] * n_points
    exc[k] = 1
    return DivisorClass((0,) * rank, tuple(exc))


def proper_transform(A: DivisorClass, mults: Sequence[int]) -> DivisorClass:
    """``pullback(A) - sum mults[k] * E_k``."""
    if not A.is_base_only:
        raise InvalidInputError(f"proper_transform expects a base class, got {A}")
    mults = tuple(int(m) for m in mults)
    if any(m < 0 for m in mults):
        raise InvalidInputError(f"multiplicities must be >= 0, got {mults}")
    return DivisorClass(A.base, tuple(-m for m in mults))


def irreducible_class_predicate(surface: SurfaceModel, A: DivisorClass) -> bool:
    """Does the class contain an irreducible curve?

    P^2: ``d >= 1``.  P^1 x P^1 (and F_0): the two rulings, or both
    coordinates positive.  F_n with n >= 1: ``Z_n``, ``F``, or ``a >= 1`` and
    ``b >= n*a``.
    """
    _check_surface(surface, A)
    if not A.is_base_only:
        raise InvalidInputError("irreducibility is decided on the minimal surface only")
    if A.is_zero():
        raise InvalidInputError("the zero class is not a curve class")
    if surface.kind == "P2":
        return A.base[0] >= 1
    a, b = A.base
    if surface.is_quadric:
        return (a, b) in ((1, 0), (0, 1)) or (a >= 1 and b >= 1)
    n = surface.n
    return (a, b) in ((1, 0), (0, 1)) or (a >= 1 and b >= n * a)


def adjunction_number(surface: SurfaceModel, A: DivisorClass) -> int:
    """``K.A + A^2``; equals ``2*p_a - 2``."""
    K = canonical_class(surface, A.n_points)
    return intersection_number(surface, K, A) + intersection_number(surface, A, A)


def arithmetic_genus(surface: SurfaceModel, A: DivisorClass) -> int:
    return adjunction_number(surface, A) // 2 + 1


def linear_system_dimension(surface: SurfaceModel, A: DivisorClass) -> int:
    """Projective dimension of the complete linear system of an irreducible class.

    Tabulated: ``d(d+3)/2`` on P^2, ``(a+1)(b+1)-1`` on P^1 x P^1, and on F_n
    ``ab - n*a(a+1)/2 + a + b`` for ``b >= n*a`` (Riemann-Roch with vanishing
    h^1), with ``dim|Z_n| = 0``.
    """
    _check_surface(surface, A)
    if surface.kind == "P2":
        d = A.base[0]
        return d * (d + 3) // 2
    a, b = A.base
    if surface.is_quadric:
        return (a + 1) * (b + 1) - 1
    n = surface.n
    if (a, b) == (1, 0):
        return 0 if n >= 1 else 1
    if b < n * a:
        raise InvalidInputError(f"dimension is tabulated only for b >= n*a, got {A} on {surface}")
    return a * b - n * a * (a + 1) // 2 + a + b


def classes_in_box(surface: SurfaceModel, bound: int) -> Iterable[DivisorClass]:
    """Nonzero base classes with every coordinate in ``[0, bound]``."""
    if surface.kind == "P2":
        for d in range(1, bound + 1):
            yield DivisorClass((d,))
        return
    for a in range(bound + 1):
        for b in range(bound + 1):
            if a or b:
                yield DivisorClass((a, b))
