"""Ampleness on rank <= 2 surfaces and the small-angle ampleness decision.

A pair is *strongly asymptotically log del Pezzo* when
``-K - sum (1 - beta_i) C_i`` is ample for every ``beta`` in some box
``(0, eps]^r``.  On P^2, F_n and P^1 x P^1 ampleness is a conjunction of
strict linear inequalities in the class coordinates, so the condition
becomes a finite list of affine forms in ``beta`` that must all be
eventually positive near the origin.  That is decided from signs alone;
``eps`` is never computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidInputError
from .lattice import (
    DivisorClass,
    SurfaceModel,
    canonical_class,
    intersection_number,
    irreducible_class_predicate,
)

__all__ = [
    "LogPair",
    "AffineLinearForm",
    "is_ample",
    "is_nef",
    "asymptotic_divisor_forms",
    "failing_forms",
    "is_strongly_asymptotically_ample",
    "is_log_del_pezzo",
    "ample_at_beta",
    "square_positivity_check",
]


@dataclass(frozen=True)
class LogPair:
    """A rank <= 2 surface with an ordered, labelled boundary.

    Two components may share a class (two lines, two fibres); only classes of
    negative square are rigid and so may occur once.
    """

    surface: SurfaceModel
    boundary: tuple[tuple[str, DivisorClass], ...]

    def __post_init__(self) -> None:
        boundary = tuple((str(label), cls) for label, cls in self.boundary)
        object.__setattr__(self, "boundary", boundary)
        if not boundary:
            raise InvalidInputError("a log pair needs at least one boundary component")
        labels = [label for label, _ in boundary]
        if len(set(labels)) != len(labels):
            raise InvalidInputError(f"duplicate boundary labels in {labels}")
        for label, cls in boundary:
            if not isinstance(cls, DivisorClass) or not cls.is_base_only:
                raise InvalidInputError(f"component {label} must be a base class, got {cls}")
            if len(cls.base) != self.surface.rank:
                raise InvalidInputError(f"component {label}: wrong coordinate count for {self.surface}")
            if cls.is_zero() or not irreducible_class_predicate(self.surface, cls):
                raise InvalidInputError(f"component {label}: {cls} holds no irreducible curve")
        for (l1, c1), (l2, c2) in combinations(boundary, 2):
            if c1 == c2 and self.dot(c1, c1) < 0:
                raise InvalidInputError(f"components {l1} and {l2} repeat the rigid class {c1}")
            if self.dot(c1, c2) < 0:
                raise InvalidInputError(f"components {l1} and {l2} meet negatively")

    @classmethod
    def build(cls, surface: SurfaceModel, *classes: Sequence[int]) -> "LogPair":
        """Shorthand: components labelled ``c1, c2, ...`` from coordinate tuples."""
        return cls(surface, tuple((f"c{i + 1}", DivisorClass(tuple(c))) for i, c in enumerate(classes)))

    @property
    def r(self) -> int:
        return len(self.boundary)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.boundary)

    @property
    def classes(self) -> tuple[DivisorClass, ...]:
        return tuple(cls for _, cls in self.boundary)

    def component(self, label: str) -> DivisorClass:
        for lab, cls in self.boundary:
            if lab == label:
                return cls
        raise InvalidInputError(f"no boundary component {label!r}")

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InvalidInputError(f"no boundary component {label!r}") from None

    def total(self) -> DivisorClass:
        total = self.classes[0]
        for cls in self.classes[1:]:
            total = total + cls
        return total

    def dot(self, A: DivisorClass, B: DivisorClass) -> int:
        return intersection_number(self.surface, A, B)

    def canonical(self) -> DivisorClass:
        return canonical_class(self.surface)

    def is_anticanonical(self) -> bool:
        """Is ``c ~ -K``?"""
        return (self.canonical() + self.total()).is_zero()


@dataclass(frozen=True)
class AffineLinearForm:
    """``constant + sum coefficients[i] * beta_i`` with integer data."""

    constant: int
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))

    def evaluate(self, beta: Sequence[Fraction]) -> Fraction:
        if len(beta) != len(self.coefficients):
            raise InvalidInputError("beta has the wrong length")
        return self.constant + sum((c * Fraction(b) for c, b in zip(self.coefficients, beta)), Fraction(0))

    def is_identically_zero(self) -> bool:
        return self.constant == 0 and not any(self.coefficients)

    def eventually_positive(self) -> bool:
        """Exact elimination of ``exists eps > 0 forall beta in (0, eps]^r: form > 0``."""
        if self.constant != 0:
            return self.constant > 0
        return all(c >= 0 for c in self.coefficients) and any(c > 0 for c in self.coefficients)

    def __str__(self) -> str:
        terms = [str(self.constant)] if self.constant or not any(self.coefficients) else []
        for i, c in enumerate(self.coefficients, start=1):
            if c:
                sign = "-" if c < 0 else "+"
                terms.append(f"{sign} {abs(c)}*beta{i}" if terms else f"{c}*beta{i}")
        return " ".join(terms)


def _require_base(A: DivisorClass) -> None:
    if not A.is_base_only:
        raise InvalidInputError(
            "ampleness is decided on the minimal surface only; route blow-ups through the flag criterion"
        )


def _positive_coordinates(surface: SurfaceModel, coords: Sequence) -> list:
    """Quantities whose strict positivity is ampleness (non-negativity is nefness)."""
    if surface.kind == "P2":
        return [coords[0]]
    a, b = coords
    if surface.kind == "Fn":
        return [a, b - surface.n * a]
    return [a, b]


def is_ample(surface: SurfaceModel, A: DivisorClass) -> bool:
    _require_base(A)
    return all(x > 0 for x in _positive_coordinates(surface, A.base))


def is_nef(surface: SurfaceModel, A: DivisorClass) -> bool:
    _require_base(A)
    return all(x >= 0 for x in _positive_coordinates(surface, A.base))


def asymptotic_divisor_forms(pair: LogPair) -> list[AffineLinearForm]:
    """Ampleness conditions of ``-K - sum (1 - beta_i) c_i`` as forms to keep ``> 0``."""
    constant = -pair.canonical() - pair.total()
    const_part = _positive_coordinates(pair.surface, constant.base)
    per_beta = [_positive_coordinates(pair.surface, cls.base) for cls in pair.classes]
    return [
        AffineLinearForm(const_part[j], tuple(coeffs[j] for coeffs in per_beta))
        for j in range(len(const_part))
    ]


def failing_forms(pair: LogPair) -> list[AffineLinearForm]:
    """The forms that are not eventually positive (certificates of rejection)."""
    return [f for f in asymptotic_divisor_forms(pair) if not f.eventually_positive()]


def is_strongly_asymptotically_ample(pair: LogPair) -> bool:
    return not failing_forms(pair)


def is_log_del_pezzo(pair: LogPair) -> bool:
    return is_ample(pair.surface, -pair.canonical() - pair.total())


def _as_beta(beta: Iterable, r: int) -> tuple[Fraction, ...]:
    out = []
    for b in beta:
        if isinstance(b, float):
            raise InvalidInputError("beta entries must be exact rationals, not floats")
        out.append(Fraction(b))
    if len(out) != r:
        raise InvalidInputError(f"expected {r} beta entries, got {len(out)}")
    if not all(0 < b < 1 for b in out):
        raise InvalidInputError(f"beta entries must lie strictly in (0, 1): {out}")
    return tuple(out)


def ample_at_beta(pair: LogPair, beta: Sequence) -> bool:
    """Evaluate ``-K - sum (1 - beta_i) c_i`` at a concrete rational ``beta``.

    Builds the rational class directly rather than going through the
    affine forms, so it serves as an independent check of the symbolic
    decision.
    """
    beta = _as_beta(beta, pair.r)
    coords = [Fraction(-x) for x in pair.canonical().base]
    for b, cls in zip(beta, pair.classes):
        for j, x in enumerate(cls.base):
            coords[j] -= (1 - b) * x
    return all(x > 0 for x in _positive_coordinates(pair.surface, coords))


def square_positivity_check(pair: LogPair, points_per_component: Sequence[int]) -> bool:
    """Whether ``(K_S + sum (1 - beta_i) C_i)^2 > 0`` for small beta after
    blowing up the given numbers of boundary points on each component."""
    counts = [int(k) for k in points_per_component]
    if len(counts) != pair.r or any(k < 0 for k in counts):
        raise InvalidInputError("need one non-negative point count per component")
    if not pair.is_anticanonical():
        return True
    if pair.r == 1:
        K = pair.canonical()
        return counts[0] < pair.dot(K, K)
    return all(k <= pair.dot(c, c) for k, c in zip(counts, pair.classes))
