import random
from fractions import Fraction

import pytest

from corpus import coarse_diagonal_failures, grid_agrees, pair_of, random_rejected
from saldp.errors import InvalidInputError
from saldp.families import FAMILIES
from saldp.lattice import P2, P1xP1, DivisorClass, hirzebruch
from saldp.positivity import (
    AffineLinearForm,
    LogPair,
    ample_at_beta,
    asymptotic_divisor_forms,
    failing_forms,
    is_ample,
    is_log_del_pezzo,
    is_nef,
    is_strongly_asymptotically_ample,
    square_positivity_check,
)

F = hirzebruch


def D(*base):
    return DivisorClass(tuple(base))


def test_ampleness_examples():
    assert not is_ample(F(2), D(2, 4))
    assert is_ample(F(1), D(1, 2))
    assert not is_ample(F(3), D(1, 0))
    assert is_ample(P1xP1, D(1, 1)) and not is_ample(P1xP1, D(1, 0))


def test_nef_examples():
    assert is_nef(F(2), D(0, 2))
    assert is_nef(P2, D(0))
    assert not is_nef(F(1), D(1, 0))


def test_ampleness_rejects_blowup_classes():
    with pytest.raises(InvalidInputError):
        is_ample(P2, DivisorClass((1,), (0,)))
    with pytest.raises(InvalidInputError):
        is_nef(P2, DivisorClass((1,), (-1,)))


@pytest.mark.parametrize("n", range(0, 7))
def test_forms_of_two_sections(n):
    # -K - (1-b1) Z - (1-b2)(Z + nF) reduces to [b1 + b2, 2 - n*b1]
    forms = asymptotic_divisor_forms(pair_of("II.2A.n", n))
    assert [(f.constant, f.coefficients) for f in forms] == [(0, (1, 1)), (2, (-n, 0))]


def test_forms_on_the_plane():
    assert [(f.constant, f.coefficients) for f in asymptotic_divisor_forms(pair_of("I.1C"))] == [(2, (1,))]
    assert [(f.constant, f.coefficients) for f in asymptotic_divisor_forms(pair_of("I.1A"))] == [(0, (3,))]


def test_eventual_positivity_rule():
    assert AffineLinearForm(1, (-100,)).eventually_positive()
    assert not AffineLinearForm(-1, (100,)).eventually_positive()
    assert AffineLinearForm(0, (0, 2)).eventually_positive()
    assert not AffineLinearForm(0, (1, -1)).eventually_positive()
    assert not AffineLinearForm(0, (0, 0)).eventually_positive()


def test_excluded_hirzebruch_cases():
    single = LogPair.build(F(2), (2, 4))
    double = LogPair.build(F(2), (1, 2), (1, 2))
    assert not is_strongly_asymptotically_ample(single)
    assert not is_strongly_asymptotically_ample(double)
    assert [(f.constant, f.coefficients) for f in failing_forms(single)] == [(0, (0,))]
    assert [(f.constant, f.coefficients) for f in failing_forms(double)] == [(0, (0, 0))]


def test_four_rulings_accepted():
    assert is_strongly_asymptotically_ample(pair_of("IV"))


def test_log_del_pezzo_examples():
    assert is_log_del_pezzo(pair_of("I.1B"))
    assert not is_log_del_pezzo(pair_of("I.1A"))
    for n in range(0, 8):
        assert is_log_del_pezzo(pair_of("I.2.n", n))


def test_ample_at_beta_examples():
    assert ample_at_beta(pair_of("I.1C"), [Fraction(1, 8)])
    double = LogPair.build(F(2), (1, 2), (1, 2))
    for b in (Fraction(1, 8), Fraction(1, 1024), Fraction(1, 2)):
        assert not ample_at_beta(double, [b, b])
    assert ample_at_beta(pair_of("II.2A.n", 1), [Fraction(1, 2), Fraction(1, 2)])
    with pytest.raises(InvalidInputError):
        ample_at_beta(pair_of("II.2A.n", 1), [3, Fraction(1, 2)])
    with pytest.raises(InvalidInputError):
        ample_at_beta(pair_of("I.1C"), [0.5])
    with pytest.raises(InvalidInputError):
        ample_at_beta(pair_of("I.1C"), [Fraction(1, 2), Fraction(1, 2)])


def test_square_positivity_examples():
    assert square_positivity_check(pair_of("I.1A"), [8])
    assert not square_positivity_check(pair_of("I.1A"), [9])
    assert square_positivity_check(pair_of("II.4A"), [2, 2])
    assert not square_positivity_check(pair_of("II.4A"), [3, 0])
    assert all(square_positivity_check(pair_of("I.4B"), [k]) for k in range(20))


def test_pair_validation():
    with pytest.raises(InvalidInputError):
        LogPair(P2, ())
    with pytest.raises(InvalidInputError):
        LogPair.build(F(2), (1, 0), (1, 0))
    with pytest.raises(InvalidInputError):
        LogPair.build(P1xP1, (0, 2))
    # two lines share a class but are different curves
    assert LogPair.build(P2, (1,), (1,)).r == 2


def _registry_instances():
    for spec in FAMILIES:
        for n in (range(0, 13) if spec.n_parameterized else [0]):
            yield spec.label, n, spec.instance(n)


@pytest.mark.parametrize("label,n,pair", list(_registry_instances()), ids=lambda x: str(x) if isinstance(x, (str, int)) else "")
def test_registry_soundness_on_grid(label, n, pair):
    assert is_strongly_asymptotically_ample(pair)
    assert grid_agrees(pair)


def test_box_shrinks_like_one_over_n():
    # surviving form 1 + beta_2 - n*beta_1: beta = 1/8 is outside the box once n > 8
    late = {
        (label, n)
        for label, n, pair in _registry_instances()
        if coarse_diagonal_failures(pair)
    }
    assert late == {(lab, n) for lab in ("II.2B.n", "II.2C.n", "III.3.n") for n in range(9, 13)}
    assert coarse_diagonal_failures(pair_of("II.2C.n", 12)) == [Fraction(1, 8)]


def test_rejected_candidates_fail_on_grid():
    for pair in random_rejected(random.Random(7), 40):
        assert grid_agrees(pair), pair


def test_log_del_pezzo_pairs_are_accepted():
    for s in [P2, P1xP1, *(F(n) for n in range(0, 6))]:
        coords = [(d,) for d in range(1, 4)] if s is P2 else [(a, b) for a in range(3) for b in range(8)]
        for c in coords:
            try:
                pair = LogPair.build(s, c)
            except InvalidInputError:
                continue
            if is_log_del_pezzo(pair):
                assert is_strongly_asymptotically_ample(pair), pair


def test_nef_limit_over_registry():
    for _, _, pair in _registry_instances():
        assert is_nef(pair.surface, -pair.canonical() - pair.total()), pair
