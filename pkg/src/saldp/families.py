"""Registry of the rank <= 2 strongly asymptotically log del Pezzo families.

Each family fixes a surface (or the whole Hirzebruch series) and a boundary
pattern.  Component order follows the order in which the families are
usually tabulated; matching is done on normalized keys, so order and the
ruling swap of P^1 x P^1 do not matter.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Optional

from .lattice import P2, P1xP1, DivisorClass, SurfaceModel, hirzebruch
from .positivity import LogPair

__all__ = ["FamilySpec", "FAMILIES", "family", "pair_key", "symbolic_key", "natural_key"]

Coords = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FamilySpec:
    label: str
    surface: str  # "P2", "P1xP1", "F_1" or "F_n"
    pattern: tuple[str, ...]
    make: Callable[[int], Coords]
    blowup_tag: Optional[str] = None  # label of its proper blow-ups
    blowup_of: Optional[str] = None  # set on the seven one-point blow-ups of a P^2 family

    @property
    def n_parameterized(self) -> bool:
        return self.surface == "F_n"

    def surface_model(self, n: int = 0) -> SurfaceModel:
        if self.surface == "P2":
            return P2
        if self.surface == "P1xP1":
            return P1xP1
        if self.surface == "F_1":
            return hirzebruch(1)
        return hirzebruch(n)

    def instance(self, n: int = 0) -> LogPair:
        return LogPair.build(self.surface_model(n), *self.make(n))


def _fixed(*coords) -> Callable[[int], Coords]:
    return lambda n: tuple(tuple(c) for c in coords)


FAMILIES: tuple[FamilySpec, ...] = (
    FamilySpec("I.1A", "P2", ("cubic",), _fixed((3,)), "I.5.m"),
    FamilySpec("I.1B", "P2", ("conic",), _fixed((2,)), "I.6B.m"),
    FamilySpec("I.1C", "P2", ("line",), _fixed((1,)), "I.6C.m"),
    FamilySpec("I.2.n", "F_n", ("Z_n",), lambda n: ((1, 0),), "I.7.n.m"),
    FamilySpec("I.3A", "F_1", ("2Z_1+2F",), _fixed((2, 2))),
    FamilySpec("I.3B", "F_1", ("Z_1+F",), _fixed((1, 1)), "I.8B.m"),
    FamilySpec("I.4A", "P1xP1", ("(2,2)",), _fixed((2, 2))),
    FamilySpec("I.4B", "P1xP1", ("(2,1)",), _fixed((2, 1)), "I.9B.m"),
    FamilySpec("I.4C", "P1xP1", ("(1,1)",), _fixed((1, 1)), "I.9C.m"),
    FamilySpec("I.5.1", "F_1", ("2Z_1+3F",), _fixed((2, 3)), blowup_of="I.1A"),
    FamilySpec("I.6B.1", "F_1", ("Z_1+2F",), _fixed((1, 2)), blowup_of="I.1B"),
    FamilySpec("I.6C.1", "F_1", ("F",), _fixed((0, 1)), blowup_of="I.1C"),
    FamilySpec("II.1A", "P2", ("conic", "line"), _fixed((2,), (1,)), "II.5A.m"),
    FamilySpec("II.1B", "P2", ("line", "line"), _fixed((1,), (1,)), "II.5B.m"),
    FamilySpec("II.2A.n", "F_n", ("Z_n", "Z_n+nF"), lambda n: ((1, 0), (1, n)), "II.6A.n.m"),
    FamilySpec("II.2B.n", "F_n", ("Z_n", "Z_n+(n+1)F"), lambda n: ((1, 0), (1, n + 1)), "II.6B.n.m"),
    FamilySpec("II.2C.n", "F_n", ("Z_n", "F"), lambda n: ((1, 0), (0, 1)), "II.6C.n.m"),
    FamilySpec("II.3", "F_1", ("Z_1+F", "Z_1+F"), _fixed((1, 1), (1, 1)), "II.7.m"),
    FamilySpec("II.4A", "P1xP1", ("(1,1)", "(1,1)"), _fixed((1, 1), (1, 1))),
    FamilySpec("II.4B", "P1xP1", ("(2,1)", "(0,1)"), _fixed((2, 1), (0, 1))),
    FamilySpec("II.5A.1 (a)", "F_1", ("2Z_1+2F", "F"), _fixed((2, 2), (0, 1)), blowup_of="II.1A"),
    FamilySpec("II.5A.1 (b)", "F_1", ("Z_1+2F", "Z_1+F"), _fixed((1, 2), (1, 1)), blowup_of="II.1A"),
    FamilySpec("II.5B.1", "F_1", ("F", "Z_1+F"), _fixed((0, 1), (1, 1)), blowup_of="II.1B"),
    FamilySpec("III.1", "P2", ("line", "line", "line"), _fixed((1,), (1,), (1,)), "III.4.m"),
    FamilySpec("III.2", "P1xP1", ("(1,1)", "(0,1)", "(1,0)"), _fixed((1, 1), (0, 1), (1, 0))),
    FamilySpec(
        "III.3.n", "F_n", ("Z_n", "F", "Z_n+nF"), lambda n: ((1, 0), (0, 1), (1, n)), "III.5.n.m"
    ),
    FamilySpec(
        "III.4.1", "F_1", ("F", "Z_1+F", "Z_1+F"), _fixed((0, 1), (1, 1), (1, 1)), blowup_of="III.1"
    ),
    FamilySpec("IV", "P1xP1", ("(1,0)", "(1,0)", "(0,1)", "(0,1)"), _fixed((1, 0), (1, 0), (0, 1), (0, 1))),
)

# Bases whose blow-ups carry no label of their own: blowing up one boundary
# point identifies them with a labelled family, shifting ``m`` by ``shift``.
ALIASES: dict[str, tuple[str, int]] = {
    "I.3A": ("I.9B.m", 0),
    "I.4A": ("I.5.m", 1),
    "II.4A": ("II.5A.m", 1),
    "II.4B": ("II.5A.m", 1),
    "III.2": ("III.4.m", 1),
}


def family(label: str) -> FamilySpec:
    for f in FAMILIES:
        if f.label == label:
            return f
    raise KeyError(label)


def natural_key(label: str) -> tuple:
    """Sort key: roman group, then the rest with numbers compared numerically."""
    head, _, tail = label.partition(".")
    parts = tuple(int(t) if t.isdigit() else t for t in re.split(r"(\d+)", tail) if t)
    return (head, tuple((0, p) if isinstance(p, int) else (1, p) for p in parts))


def pair_key(surface: SurfaceModel, classes) -> tuple:
    """Concrete key, invariant under component order and the quadric ruling swap."""
    coords = sorted(tuple(c.base) if isinstance(c, DivisorClass) else tuple(c) for c in classes)
    if surface.is_quadric:
        swapped = sorted((c[1], c[0]) for c in coords)
        return ("Q", 0, tuple(min(coords, swapped)))
    if surface.kind == "P2":
        return ("P2", 0, tuple(coords))
    return ("F", surface.n, tuple(coords))


def symbolic_key(n: int, classes) -> tuple:
    """Key of an F_n boundary (n >= 1) as a pattern in n: ``Z_n`` stays itself,
    any other ``aZ_n + bF`` is recorded as ``(a, b - n*a)``."""
    out = []
    for c in classes:
        a, b = tuple(c.base) if isinstance(c, DivisorClass) else tuple(c)
        out.append(("Z",) if (a, b) == (1, 0) else (a, b - n * a))
    return tuple(sorted(out, key=repr))
