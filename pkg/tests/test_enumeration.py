import json
from pathlib import Path

import pytest

from saldp.classifier import classify, match_family
from saldp.enumeration import (
    candidate_space,
    enumerate_rank2_saldp,
    is_one_point_blowup,
    minimal_base_list,
    saldp_candidates,
)
from saldp.errors import InvalidInputError
from saldp.families import FAMILIES, family
from saldp.flags import BlowupConfig
from saldp.lattice import hirzebruch
from saldp.positivity import LogPair, failing_forms, is_strongly_asymptotically_ample
from saldp.reduction import reduce_to_rank2

FIXTURES = Path(__file__).parent / "fixtures"

REMOVED = {
    "I.5.1": "I.1A",
    "I.6B.1": "I.1B",
    "I.6C.1": "I.1C",
    "II.5A.1 (a)": "II.1A",
    "II.5A.1 (b)": "II.1A",
    "II.5B.1": "II.1B",
    "III.4.1": "III.1",
}


@pytest.fixture(scope="module")
def full():
    return enumerate_rank2_saldp(12)


def test_candidate_space_examples():
    assert ((2, 4),) in candidate_space(2)
    assert ((0, 1), (0, 1), (1, 0), (1, 0)) in candidate_space(0)
    assert ((0, 1), (0, 1), (0, 1), (1, 0)) in candidate_space(1)
    assert not is_strongly_asymptotically_ample(LogPair.build(hirzebruch(1), (1, 0), (0, 1), (0, 1), (0, 1)))
    with pytest.raises(InvalidInputError):
        candidate_space(-1)


def test_full_list_matches_fixture(full):
    expected = json.loads((FIXTURES / "base_list_n12.json").read_text())
    assert [f.to_json() for f in full] == expected
    assert len(full) == 28


def test_minimal_list_matches_fixture(full):
    expected = json.loads((FIXTURES / "base_list_minimal.json").read_text())
    minimal = minimal_base_list(12, full)
    assert [f.to_json() for f in minimal] == expected
    assert {f.label for f in full} - {f.label for f in minimal} == set(REMOVED)


def test_parameterized_families_cover_every_n(full):
    by_label = {f.label: f for f in full}
    for spec in FAMILIES:
        if spec.n_parameterized:
            assert by_label[spec.label].n_values == tuple(range(0, 13))


def test_excluded_hirzebruch_cases_are_absent():
    found = {(p.surface, tuple(sorted(c.base for c in p.classes))) for p in saldp_candidates(4)}
    F2 = hirzebruch(2)
    assert (F2, ((2, 4),)) not in found
    assert (F2, ((1, 2), (1, 2))) not in found


def test_every_candidate_is_accepted_once_or_rejected_with_a_form():
    for n in range(0, 6):
        for coords in candidate_space(n):
            pair = LogPair.build(hirzebruch(n), *coords)
            if is_strongly_asymptotically_ample(pair):
                spec, _ = match_family(pair)
                assert spec.label in {f.label for f in FAMILIES}
            else:
                assert failing_forms(pair)


@pytest.mark.parametrize("label", sorted(REMOVED))
def test_removed_families_blow_down(label):
    pair = family(label).instance()
    assert is_one_point_blowup(pair)
    base, report = reduce_to_rank2(BlowupConfig(pair))
    assert match_family(base)[0].label == REMOVED[label]
    assert report.equivalent.m == 1
    assert report.round_trip() == BlowupConfig(pair).boundary_transforms()
    tag = classify(pair)
    assert tag.label == family(REMOVED[label]).blowup_tag and tag.m == 1


def test_retained_families_are_not_blowups(full):
    for fam in minimal_base_list(12, full):
        assert not any(is_one_point_blowup(p) for p in fam.instances())


def test_n_max_guard():
    with pytest.raises(InvalidInputError):
        enumerate_rank2_saldp(1)
