import json
import subprocess
import sys
from pathlib import Path

import pytest

from saldp.cli import main
from saldp.descriptor import DescriptorError, dumps, parse

FIXTURES = Path(__file__).parent / "fixtures"

I1C = '{"surface": {"kind": "P2"}, "boundary": [{"id": "line", "class": [1]}]}'

FIGURE_II5A3 = {
    "surface": {"kind": "P2"},
    "boundary": [{"id": "conic", "class": [2]}, {"id": "line", "class": [1]}],
    "points": [{"id": "a", "on": "conic"}, {"id": "b", "on": "conic"}, {"id": "c", "on": "line"}],
    "incidences": [{"class": [1], "points": ["a", "b", "c"]}],
}

EXCLUDED_DOUBLE = {
    "surface": {"kind": "Fn", "n": 2},
    "boundary": [{"id": "c1", "class": [1, 2]}, {"id": "c2", "class": [1, 2]}],
}


def write(tmp_path, obj, name="pair.json"):
    path = tmp_path / name
    path.write_text(obj if isinstance(obj, str) else json.dumps(obj), encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# ---- descriptors ---------------------------------------------------------

def test_minimal_descriptor_parses():
    d = parse(I1C)
    assert d.pair().r == 1 and d.config().m == 0


def test_canonical_round_trip():
    d = parse(json.dumps(FIGURE_II5A3))
    text = dumps(d)
    assert dumps(parse(text)) == text
    beta = parse('{"surface": {"kind": "P2"}, "boundary": [{"id": "c", "class": [1]}], "beta": ["1/2"]}')
    assert '"1/2"' in dumps(beta)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ('{"surface": {"kind": "P2"}, "boundary": [{"id": "c", "class": [1]}], "beta": [0.5]}', "floating-point"),
        ('{"surface": {"kind": "P2"}, "boundary": [{"id": "c", "class": [1]}],'
         ' "points": [{"id": "p", "on": "c"}, {"id": "p", "on": "c"}]}', "duplicate id"),
        ('{"surface": {"kind": "P2"}, "boundary": [{"id": "c", "class": [1, 0]}]}', "boundary[0].class"),
        ('{"surface": {"kind": "Fn"}, "boundary": []}', "surface.n"),
        ('{"surface": {"kind": "P2"}, "boundary": [{"id": "c", "class": [1]}],'
         ' "points": [{"id": "p", "on": "d"}]}', "unknown component"),
        ('{"surface": {"kind": "P2"},\n "boundary": [}', "line 2"),
        ('{"surface": {"kind": "P3"}, "boundary": []}', "surface.kind"),
    ],
)
def test_descriptor_errors(text, fragment):
    with pytest.raises(DescriptorError) as exc:
        parse(text)
    assert fragment in str(exc.value)


# ---- subcommands ---------------------------------------------------------

def test_base_list_against_fixtures(capsys):
    code, out, _ = run(capsys, "base-list", "--n-max", "12")
    assert code == 0 and out == (FIXTURES / "base_list_n12.json").read_text()
    code, out, _ = run(capsys, "base-list", "--minimal")
    assert code == 0 and out == (FIXTURES / "base_list_minimal.json").read_text()
    assert len(json.loads(out)) == 21


def test_classify_figure_configuration(capsys, tmp_path):
    code, out, _ = run(capsys, "classify", "--pair", write(tmp_path, FIGURE_II5A3))
    result = json.loads(out)
    assert code == 0 and result["verdict"] is False
    assert result["witness"]["sigma"] == [1] and result["witness"]["kind"] == "off_boundary"


def test_classify_tag(capsys, tmp_path):
    clean = dict(FIGURE_II5A3, incidences=[])
    code, out, _ = run(capsys, "classify", "--pair", write(tmp_path, clean))
    assert code == 0 and json.loads(out)["tag"] == "II.5A.3"


def test_check_excluded_case(capsys, tmp_path):
    path = write(tmp_path, EXCLUDED_DOUBLE)
    for beta in ("1/8,1/8", "1/1024,1/3"):
        code, out, _ = run(capsys, "check", "--pair", path, "--beta", beta)
        result = json.loads(out)
        assert code == 0 and result["ample_at_beta"] is False
        assert result["strongly_asymptotically_ample"] is False
    code, _, err = run(capsys, "check", "--pair", path, "--beta", "0.5,0.5")
    assert code == 1 and json.loads(err)["error"] == "invalid-input"
    code, _, err = run(capsys, "check", "--pair", path)
    assert code == 1


def test_flags_subcommand(capsys, tmp_path):
    pair = {"surface": {"kind": "P1xP1"}, "boundary": [{"id": "c", "class": [2, 1]}]}
    code, out, _ = run(capsys, "flags", "--pair", write(tmp_path, pair))
    result = json.loads(out)
    assert code == 0 and result["max_degree"] == 4
    assert result["families"] == [
        {"kind": "off_boundary", "points_per_component": [2], "sigma": [0, 1], "unbounded": False}
    ]


def test_minus_one_subcommand(capsys, tmp_path):
    pair = {
        "surface": {"kind": "P2"},
        "boundary": [{"id": "c", "class": [2]}],
        "points": [{"id": "a", "on": "c"}, {"id": "b", "on": "c"}],
    }
    code, out, _ = run(capsys, "minus-one", "--pair", write(tmp_path, pair))
    result = json.loads(out)
    assert code == 0
    assert len(result["perp"]) == 2 and result["away"] == [{"base": [1], "exceptional": [-1, -1]}]


def test_reduce_subcommand(capsys, tmp_path):
    pair = {"surface": {"kind": "Fn", "n": 1}, "boundary": [{"id": "c", "class": [2, 3]}]}
    code, out, _ = run(capsys, "reduce", "--pair", write(tmp_path, pair))
    result = json.loads(out)
    assert code == 0
    assert result["reduced_base"]["surface"] == {"kind": "P2"}
    assert result["reduced_base"]["boundary"] == [{"class": [3], "id": "c"}]
    assert [c["type"] for c in result["contractions"]] == ["proper"]


def test_invalid_configuration_exit_code(capsys, tmp_path):
    bad = dict(FIGURE_II5A3, points=[{"id": "a", "on": ["conic", "line"]}], incidences=[])
    code, out, err = run(capsys, "classify", "--pair", write(tmp_path, bad))
    assert code == 1 and out == "" and "smooth locus" in json.loads(err)["message"]
    code, _, err = run(capsys, "classify", "--pair", str(tmp_path / "missing.json"))
    assert code == 1


def test_module_entry_point_is_deterministic(tmp_path):
    path = write(tmp_path, FIGURE_II5A3)
    outs = {
        subprocess.run(
            [sys.executable, "-m", "saldp", "classify", "--pair", path], capture_output=True, check=True
        ).stdout
        for _ in range(3)
    }
    assert len(outs) == 1


def test_invariant_violation_exit_code(capsys, monkeypatch):
    import saldp.cli
    from saldp.errors import InvariantViolation

    def boom(n_max):
        raise InvariantViolation("unrecognized pattern")

    monkeypatch.setattr(saldp.cli, "enumerate_rank2_saldp", boom)
    code, out, err = run(capsys, "base-list")
    assert code == 2 and out == "" and json.loads(err)["error"] == "invariant-violation"
