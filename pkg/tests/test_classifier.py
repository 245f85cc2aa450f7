import pytest

from corpus import BLOWUP_TAGS, mutations, pair_of, saldp_corpus, tag_template
from saldp.classifier import (
    TAG_VOCABULARY,
    ClassificationTag,
    NotSALdP,
    blowup_base,
    classify,
    derived_generality_conditions,
    expected_generality_conditions,
    validate_config,
)
from saldp.enumeration import minimal_base_list
from saldp.errors import InvalidInputError
from saldp.flags import BlownPoint, BlowupConfig, IncidenceDecl
from saldp.lattice import P2, DivisorClass
from saldp.positivity import LogPair, is_log_del_pezzo

LOG_DEL_PEZZO_BASES = {"I.1C", "II.1B", "I.1B", "I.2.n", "II.2C.n", "I.3B", "I.4C"}


def D(*base):
    return DivisorClass(tuple(base))


def cfg(label, counts, n=0, incidences=()):
    return BlowupConfig.on_components(pair_of(label, n), counts, incidences)


def test_validation_examples():
    two = BlowupConfig(pair_of("II.1A"), (BlownPoint("p", ("c1", "c2")),))
    assert any("smooth locus" in v for v in validate_config(two))
    assert validate_config(cfg("I.2.n", (5,), 3)) == []
    over = cfg("I.1C", (2,), incidences=[IncidenceDecl(D(1), ("p1", "p2"))])
    assert any("exceeds" in v for v in validate_config(over))
    with pytest.raises(InvalidInputError):
        classify(two)


def test_classify_examples():
    assert str(classify(cfg("I.2.n", (5,), 3))) == "I.7.3.5"
    collinear = cfg("III.1", (1, 1, 1), incidences=[IncidenceDecl(D(1), ("p1", "p2", "p3"))])
    v = classify(collinear)
    assert isinstance(v, NotSALdP) and v.witness.sigma == D(1) and len(v.witness.point_ids) == 3
    fiber = cfg("II.2B.n", (1, 1), 2, [IncidenceDecl(D(0, 1), ("p1", "p2"))])
    v = classify(fiber)
    assert isinstance(v, NotSALdP) and v.witness.sigma == D(0, 1)


def test_rank_two_tags():
    assert str(classify(pair_of("II.2A.n", 4))) == "II.2A.4"
    assert str(classify(pair_of("IV"))) == "IV"
    assert str(classify(pair_of("I.5.1"))) == "I.5.1"
    v = classify(LogPair.build(P2, (3,), (1,)))
    assert isinstance(v, NotSALdP) and v.failing_forms and v.witness is None


def test_base_without_saldp_blowups():
    v = classify(cfg("IV", (1, 0, 0, 0)))
    assert isinstance(v, NotSALdP) and v.witness.kind == "boundary"


def test_expected_condition_examples():
    assert [c.sigma for c in expected_generality_conditions("I.9B.m")] == [(0, 1)]
    conds = expected_generality_conditions("III.5.n.m")
    assert {(c.kind, c.sigma) for c in conds} == {("boundary", (0, 1)), ("off_boundary", (0, 1))}
    assert expected_generality_conditions("I.6C.m") == []
    assert expected_generality_conditions("I.1A") == []
    with pytest.raises(InvalidInputError):
        expected_generality_conditions("II.8.m")


@pytest.mark.parametrize("tag", BLOWUP_TAGS)
def test_table_matches_engine(tag):
    spec = blowup_base(tag)
    expected = sorted(c.key() for c in expected_generality_conditions(tag))
    for n in (range(0, 6) if spec.n_parameterized else [0]):
        derived, forced = derived_generality_conditions(spec.instance(n), 4, 12)
        assert forced == []
        assert sorted(c.key() for c in derived) == expected, (tag, n)


def test_log_del_pezzo_bases_among_minimal_bases():
    marked = {
        fam.label for fam in minimal_base_list(12) if all(is_log_del_pezzo(p) for p in fam.instances())
    }
    assert marked == LOG_DEL_PEZZO_BASES


def test_tag_validation():
    assert str(ClassificationTag("I.7.n.m", 3, 5)) == "I.7.3.5"
    with pytest.raises(InvalidInputError):
        ClassificationTag("I.5.m", None, 9)
    with pytest.raises(InvalidInputError):
        ClassificationTag("II.5A.m", None, 6)
    with pytest.raises(InvalidInputError):
        ClassificationTag("I.7.n.m", None, 2)
    with pytest.raises(InvalidInputError):
        ClassificationTag("II.8.m", None, 1)
    with pytest.raises(InvalidInputError):
        ClassificationTag("IV", None, 1)
    assert "II.8.m" not in TAG_VOCABULARY


@pytest.mark.parametrize("case", saldp_corpus(), ids=lambda c: c.name)
def test_corpus_classifies(case):
    verdict = classify(case.config)
    assert isinstance(verdict, ClassificationTag)
    assert str(verdict) == case.expected


def test_corpus_covers_every_blowup_tag():
    assert {tag_template(c.expected) for c in saldp_corpus()} == set(BLOWUP_TAGS)
    assert len(saldp_corpus()) >= 50


@pytest.mark.parametrize("mut", mutations(), ids=lambda m: f"{m.tag}:{m.condition}")
def test_single_condition_mutations(mut):
    verdict = classify(mut.config)
    assert isinstance(verdict, NotSALdP)
    w = verdict.witness
    assert (w.kind, w.sigma.base, w.component) == (mut.kind, mut.sigma, mut.component)
    # removing the violation restores the tag
    clean = BlowupConfig(mut.config.base, mut.config.points)
    if mut.kind == "off_boundary":
        assert tag_template(str(classify(clean))) == mut.tag


def test_ruling_swap_and_order_do_not_matter():
    swapped = LogPair.build(pair_of("I.4B").surface, (1, 2))
    assert str(classify(swapped)) == "I.4B"
    reordered = LogPair.build(P2, (1,), (2,))
    assert str(classify(reordered)) == "II.1A"
