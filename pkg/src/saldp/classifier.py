"""End-to-end verdicts and family labels for pairs and blow-up configurations."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Union

from .errors import InvalidInputError, InvariantViolation
from .families import ALIASES, FAMILIES, FamilySpec, family, pair_key
from .flags import (
    BlowupConfig,
    FlagWitness,
    config_violations,
    enumerate_flag_families,
    find_flag,
    generic_presence,
)
from .lattice import arithmetic_genus
from .positivity import AffineLinearForm, LogPair, failing_forms
from .reduction import reduce_to_rank2

__all__ = [
    "ClassificationTag",
    "NotSALdP",
    "GeneralityCondition",
    "TAG_VOCABULARY",
    "validate_config",
    "match_family",
    "classify",
    "expected_generality_conditions",
    "derived_generality_conditions",
]

# label template -> inclusive m range (None: m >= 1 unbounded); base tags carry no m
TAG_VOCABULARY: dict[str, Optional[tuple[int, Optional[int]]]] = {
    "I.1A": None, "I.1B": None, "I.1C": None, "I.2.n": None, "I.3A": None, "I.3B": None,
    "I.4A": None, "I.4B": None, "I.4C": None,
    "I.5.m": (1, 8), "I.6B.m": (1, None), "I.6C.m": (1, None), "I.7.n.m": (1, None),
    "I.8B.m": (1, None), "I.9B.m": (1, None), "I.9C.m": (1, None),
    "II.1A": None, "II.1B": None, "II.2A.n": None, "II.2B.n": None, "II.2C.n": None,
    "II.3": None, "II.4A": None, "II.4B": None,
    "II.5A.m": (1, 5), "II.5B.m": (1, None), "II.6A.n.m": (1, None), "II.6B.n.m": (1, None),
    "II.6C.n.m": (1, None), "II.7.m": (1, None),
    "III.1": None, "III.2": None, "III.3.n": None, "III.4.m": (1, 3), "III.5.n.m": (1, None),
    "IV": None,
}


@dataclass(frozen=True)
class ClassificationTag:
    label: str
    n: Optional[int] = None
    m: Optional[int] = None

    def __post_init__(self) -> None:
        if self.label not in TAG_VOCABULARY:
            raise InvalidInputError(f"unknown tag {self.label!r}")
        parts = self.label.split(".")
        if ("n" in parts) != (self.n is not None):
            raise InvalidInputError(f"{self.label} {'needs' if 'n' in parts else 'takes no'} n")
        if ("m" in parts) != (self.m is not None):
            raise InvalidInputError(f"{self.label} {'needs' if 'm' in parts else 'takes no'} m")
        if self.n is not None and self.n < 0:
            raise InvalidInputError("n must be >= 0")
        rng = TAG_VOCABULARY[self.label]
        if self.m is not None:
            lo, hi = rng
            if self.m < lo or (hi is not None and self.m > hi):
                raise InvalidInputError(f"{self.label} needs {lo} <= m <= {hi}, got {self.m}")

    @property
    def is_blowup(self) -> bool:
        return self.m is not None

    def __str__(self) -> str:
        subst = {"n": self.n, "m": self.m}
        return ".".join(str(subst[p]) if p in subst else p for p in self.label.split("."))


@dataclass(frozen=True)
class NotSALdP:
    reason: str
    witness: Optional[FlagWitness] = None
    failing_forms: tuple[AffineLinearForm, ...] = ()

    def __bool__(self) -> bool:
        return False


Verdict = Union[ClassificationTag, NotSALdP]


@dataclass(frozen=True)
class GeneralityCondition:
    """A forbidden position of the blown-up points.

    ``boundary``: ``counts`` points on one component.  ``off_boundary``: a
    curve of class ``sigma`` through ``counts[i]`` points of the i-th
    component with multiplicities ``mults``.
    """

    kind: str
    sigma: tuple[int, ...]
    counts: tuple[int, ...]
    mults: tuple[int, ...] = ()
    component: Optional[str] = None
    text: str = ""

    def key(self) -> tuple:
        return (self.kind, self.component, self.sigma, self.counts, tuple(sorted(self.mults, reverse=True)))


def validate_config(config: Union[BlowupConfig, LogPair]) -> list[str]:
    if isinstance(config, LogPair):
        return []
    return config_violations(config)


def match_family(pair: LogPair) -> tuple[FamilySpec, Optional[int]]:
    """The registry family of a rank <= 2 pair, with its n when parameterized."""
    key = pair_key(pair.surface, pair.classes)
    s = pair.surface
    for spec in FAMILIES:
        if spec.n_parameterized:
            if s.kind == "P2":
                continue
            n = 0 if s.is_quadric else s.n
            inst = spec.instance(n)
            if pair_key(inst.surface, inst.classes) == key:
                return spec, n
            continue
        inst = spec.instance()
        if pair_key(inst.surface, inst.classes) == key:
            return spec, None
    raise InvariantViolation(f"strongly asymptotically log del Pezzo pair outside the registry: {key}")


def _rank2_tag(spec: FamilySpec, n: Optional[int]) -> ClassificationTag:
    if spec.blowup_of is not None:
        return ClassificationTag(family(spec.blowup_of).blowup_tag, None, 1)
    return ClassificationTag(spec.label, n)


def _blowup_tag(spec: FamilySpec, n: Optional[int], m: int) -> ClassificationTag:
    if spec.label in ALIASES:
        label, shift = ALIASES[spec.label]
        return ClassificationTag(label, None, m + shift)
    if spec.blowup_tag is None:
        raise InvariantViolation(f"{spec.label} has no proper blow-ups that stay log del Pezzo")
    return ClassificationTag(spec.blowup_tag, n if spec.n_parameterized else None, m)


def classify(config: Union[BlowupConfig, LogPair]) -> Verdict:
    if isinstance(config, LogPair):
        config = BlowupConfig(config)
    problems = validate_config(config)
    if problems:
        raise InvalidInputError("; ".join(problems))
    forms = tuple(failing_forms(config.base))
    if forms:
        return NotSALdP("base pair is not strongly asymptotically log del Pezzo", failing_forms=forms)
    if config.m == 0:
        return _rank2_tag(*match_family(config.base))
    witness = find_flag(config)
    if witness is not None:
        return NotSALdP(witness.fired_condition, witness=witness)
    base, report = reduce_to_rank2(config)
    spec, n = match_family(base)
    return _blowup_tag(spec, n, report.equivalent.m)


def _boundary(comp: int, r: int, k: int, cls: tuple, text: str) -> GeneralityCondition:
    counts = tuple(k if i == comp else 0 for i in range(r))
    return GeneralityCondition("boundary", cls, counts, (), f"c{comp + 1}", text)


def _off(sigma: tuple, counts: tuple, text: str, mults: Optional[tuple] = None) -> GeneralityCondition:
    if mults is None:
        mults = (1,) * sum(counts)
    return GeneralityCondition("off_boundary", sigma, counts, mults, None, text)


_FIBER_PAIR = "no two on the same curve in |F|"

_EXPECTED: dict[str, list[GeneralityCondition]] = {
    "I.5.m": [
        _boundary(0, 1, 9, (3,), "at most eight points"),
        _off((1,), (3,), "no three collinear"),
        _off((2,), (6,), "no six on a conic"),
        _off((3,), (8,), "no eight on a cubic with a double point at one of them", (2, 1, 1, 1, 1, 1, 1, 1)),
    ],
    "I.6B.m": [],
    "I.6C.m": [],
    "I.7.n.m": [],
    "I.8B.m": [],
    "I.9B.m": [_off((0, 1), (2,), "no two on the same (0,1)-curve")],
    "I.9C.m": [],
    "II.5A.m": [
        _boundary(0, 2, 5, (2,), "no five on the conic"),
        _boundary(1, 2, 2, (1,), "no two on the line"),
        _off((1,), (2, 1), "no three collinear"),
    ],
    "II.5B.m": [],
    "II.6A.n.m": [_off((0, 1), (1, 1), _FIBER_PAIR)],
    "II.6B.n.m": [_off((0, 1), (1, 1), _FIBER_PAIR)],
    "II.6C.n.m": [],
    "II.7.m": [_off((0, 1), (1, 1), _FIBER_PAIR)],
    "III.4.m": [
        _boundary(0, 3, 2, (1,), "at most one point on the first line"),
        _boundary(1, 3, 2, (1,), "at most one point on the second line"),
        _boundary(2, 3, 2, (1,), "at most one point on the third line"),
        _off((1,), (1, 1, 1), "no three collinear"),
    ],
    "III.5.n.m": [
        _boundary(1, 3, 1, (0, 1), "none on the fiber c2"),
        _off((0, 1), (1, 0, 1), _FIBER_PAIR),
    ],
}


def expected_generality_conditions(tag: Union[ClassificationTag, str]) -> list[GeneralityCondition]:
    """Hard-coded prohibitions for a blow-up label; empty for base labels."""
    label = tag.label if isinstance(tag, ClassificationTag) else tag
    if label not in TAG_VOCABULARY:
        raise InvalidInputError(f"unknown tag {label!r}")
    return list(_EXPECTED.get(label, []))


def blowup_base(label: str) -> FamilySpec:
    """The minimal base whose proper blow-ups carry ``label``."""
    for spec in FAMILIES:
        if spec.blowup_tag == label:
            return spec
    raise InvalidInputError(f"{label} is not a blow-up label")


def _partitions(total: int, largest: Optional[int] = None):
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def derived_generality_conditions(
    base: LogPair, max_degree: int = 4, max_m: int = 12
) -> tuple[list[GeneralityCondition], list[GeneralityCondition]]:
    """Conditions read off the flag families of ``base``.

    Returns ``(conditions, forced)``.  A curve class contributes one pattern
    per way of spending its intersection with each component on points with
    multiplicities, keeping only patterns an irreducible curve can carry, that
    no boundary threshold already forbids, and that general points avoid.
    Patterns general points cannot avoid go to ``forced``.
    """
    conditions: list[GeneralityCondition] = []
    forced: list[GeneralityCondition] = []
    limit = [None] * base.r
    families = enumerate_flag_families(base, max_degree, max_m)
    for fam in families:
        if fam.kind == "boundary":
            i = base.index(fam.component)
            limit[i] = fam.min_points
            conditions.append(
                _boundary(i, base.r, fam.min_points, base.classes[i].base, f"{fam.min_points} points on {fam.component}")
            )
    for fam in families:
        if fam.kind != "off_boundary":
            continue
        genus = arithmetic_genus(base.surface, fam.sigma)
        seen = set()
        for parts in product(*(_partitions(k) for k in fam.points_per_component)):
            counts = tuple(len(p) for p in parts)
            mults = tuple(sorted((mu for p in parts for mu in p), reverse=True))
            if sum(mu * (mu - 1) // 2 for mu in mults) > genus:
                continue
            if any(lim is not None and k >= lim for k, lim in zip(counts, limit)):
                continue
            if sum(counts) > max_m or (counts, mults) in seen:
                continue
            seen.add((counts, mults))
            cond = _off(fam.sigma.base, counts, f"{fam.sigma} through {sum(counts)} points", mults)
            (forced if generic_presence(base, fam.sigma, mults) else conditions).append(cond)
    return conditions, forced
