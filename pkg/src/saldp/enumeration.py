"""Brute-force search for rank <= 2 strongly asymptotically log del Pezzo pairs.

Every boundary on F_n with ``sum a_i <= 2`` and ``sum b_i <= n + 2`` (the
only ones for which ``-K - c`` can be nef) and every plane boundary of total
degree at most 3 is tested with the exact small-angle decision.  Survivors
on F_n, n >= 1, are grouped by their pattern in n; F_0 survivors are grouped
with P^1 x P^1 up to swapping the rulings.  The groups are then matched one
to one against the family registry.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import InvalidInputError, InvariantViolation
from .families import FAMILIES, FamilySpec, natural_key, pair_key, symbolic_key
from .flags import BlowupConfig
from .lattice import P2, DivisorClass, hirzebruch, irreducible_class_predicate
from .positivity import LogPair, is_strongly_asymptotically_ample
from .reduction import partition_minus_one

__all__ = [
    "BaseFamily",
    "candidate_space",
    "plane_candidates",
    "saldp_candidates",
    "enumerate_rank2_saldp",
    "minimal_base_list",
]

DEFAULT_N_MAX = 12


@dataclass(frozen=True)
class BaseFamily:
    spec: FamilySpec
    n_values: tuple[int, ...]

    @property
    def label(self) -> str:
        return self.spec.label

    def instances(self) -> list[LogPair]:
        if self.spec.n_parameterized:
            return [self.spec.instance(n) for n in self.n_values]
        return [self.spec.instance()]

    def to_json(self) -> dict:
        return {
            "label": self.spec.label,
            "surface": self.spec.surface,
            "boundary": list(self.spec.pattern),
            "n_values": list(self.n_values) if self.spec.n_parameterized else None,
        }


def _irreducible_small(n: int) -> list[tuple[int, int]]:
    surface = hirzebruch(n)
    out = []
    for a in range(3):
        for b in range(n + 3):
            if (a or b) and irreducible_class_predicate(surface, DivisorClass((a, b))):
                out.append((a, b))
    return out


def candidate_space(n: int) -> list[tuple[tuple[int, int], ...]]:
    """Boundaries on F_n (as sorted coefficient tuples) with ``sum a <= 2``,
    ``sum b <= n + 2``, irreducible components and no repeated ``Z_n`` for n >= 1."""
    if n < 0:
        raise InvalidInputError("n must be >= 0")
    classes = _irreducible_small(n)
    out: list[tuple[tuple[int, int], ...]] = []

    def grow(start: int, chosen: list, sa: int, sb: int) -> None:
        if chosen:
            out.append(tuple(chosen))
        for k in range(start, len(classes)):
            a, b = classes[k]
            if sa + a > 2 or sb + b > n + 2:
                continue
            if n >= 1 and (a, b) == (1, 0) and (1, 0) in chosen:
                continue
            chosen.append((a, b))
            grow(k, chosen, sa + a, sb + b)
            chosen.pop()

    grow(0, [], 0, 0)
    return out


def plane_candidates() -> list[tuple[int, ...]]:
    """Degree partitions of total at most 3."""
    return [(1,), (2,), (3,), (1, 1), (2, 1), (1, 1, 1)]


def saldp_candidates(n_max: int) -> Iterator[LogPair]:
    for degrees in plane_candidates():
        pair = LogPair.build(P2, *((d,) for d in degrees))
        if is_strongly_asymptotically_ample(pair):
            yield pair
    for n in range(n_max + 1):
        for coords in candidate_space(n):
            pair = LogPair.build(hirzebruch(n), *coords)
            if is_strongly_asymptotically_ample(pair):
                yield pair


def enumerate_rank2_saldp(n_max: int = DEFAULT_N_MAX) -> list[BaseFamily]:
    if n_max < 2:
        raise InvalidInputError("n_max must be >= 2")
    concrete: dict[tuple, LogPair] = {}
    clusters: dict[tuple, set[int]] = {}
    for pair in saldp_candidates(n_max):
        surface = pair.surface
        if surface.kind == "Fn" and surface.n >= 1:
            clusters.setdefault(symbolic_key(surface.n, pair.classes), set()).add(surface.n)
        else:
            concrete.setdefault(pair_key(surface, pair.classes), pair)

    by_symbol: dict[tuple, FamilySpec] = {}
    by_concrete: dict[tuple, FamilySpec] = {}
    for spec in FAMILIES:
        if spec.n_parameterized:
            by_symbol[symbolic_key(2, spec.make(2))] = spec
            inst = spec.instance(0)
            by_concrete[pair_key(inst.surface, inst.classes)] = spec
        elif spec.surface == "F_1":
            by_symbol[symbolic_key(1, spec.make(1))] = spec
        else:
            inst = spec.instance()
            by_concrete[pair_key(inst.surface, inst.classes)] = spec

    found: dict[str, set[int]] = {}
    for sig, ns in clusters.items():
        spec = by_symbol.get(sig)
        if spec is None:
            raise InvariantViolation(f"unrecognized pattern {sig} at n = {sorted(ns)}")
        expected = set(range(1, n_max + 1)) if spec.n_parameterized else {1}
        if ns != expected:
            raise InvariantViolation(f"{spec.label} found for n = {sorted(ns)}, expected {sorted(expected)}")
        found.setdefault(spec.label, set()).update(ns)
    for key in concrete:
        spec = by_concrete.get(key)
        if spec is None:
            raise InvariantViolation(f"unrecognized pair {key}")
        found.setdefault(spec.label, set()).update({0} if spec.n_parameterized else set())

    families = []
    for spec in FAMILIES:
        if spec.label not in found:
            raise InvariantViolation(f"family {spec.label} was not found")
        if spec.n_parameterized and 0 not in found[spec.label]:
            raise InvariantViolation(f"family {spec.label} is missing at n = 0")
        ns = tuple(sorted(found[spec.label])) if spec.n_parameterized else ((1,) if spec.surface == "F_1" else ())
        families.append(BaseFamily(spec, ns))
    return sorted(families, key=lambda f: natural_key(f.label))


def is_one_point_blowup(pair: LogPair) -> bool:
    """Does the pair carry a -1-curve meeting the boundary once, off it?"""
    return bool(partition_minus_one(BlowupConfig(pair)).perp)


def minimal_base_list(n_max: int = DEFAULT_N_MAX, families: Optional[list[BaseFamily]] = None) -> list[BaseFamily]:
    if families is None:
        families = enumerate_rank2_saldp(n_max)
    out = []
    for fam in families:
        flags = {is_one_point_blowup(p) for p in fam.instances()}
        if len(flags) != 1:
            raise InvariantViolation(f"{fam.label}: one-point blow-up status varies with n")
        if not flags.pop():
            out.append(fam)
    return out
