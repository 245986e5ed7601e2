import io
import json
import pathlib

import pytest

from mdeg.cli import main
from mdeg.inputlang import parse_input

FIXTURES = pathlib.Path(__file__).parent / "fixtures"
EX46 = str(FIXTURES / "example46.ring")
RMK59 = str(FIXTURES / "remark59.ring")

SMALL = """\
field QQ
vars x y z
deg x = (1)
deg y = (1)
deg z = (1)
ideal I = [ x*y; x*z^2 ]
ideal Z = []
"""

WEIGHTED = """\
vars x y z
deg x = (1)
deg y = (1)
deg z = (2)
ideal I = [ x*y - z ]
"""


@pytest.fixture
def small(tmp_path):
    f = tmp_path / "small.ring"
    f.write_text(SMALL)
    return str(f)


def run(capsys, argv):
    rc = main(argv)
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_kpoly_json(small, capsys):
    rc, out, _ = run(capsys, ["kpoly", small, "--ideal", "I", "--json"])
    assert rc == 0
    obj = json.loads(out)
    terms = {tuple(t["exp"]): int(t["coeff"]) for t in obj["result"]["poly"]}
    assert terms == {(0,): 1, (2,): -1, (3,): -1, (4,): 1}


def test_empty_ideal_gives_unit_k(small, capsys):
    rc, out, _ = run(capsys, ["kpoly", small, "--ideal", "Z", "--json"])
    assert rc == 0
    obj = json.loads(out)
    assert obj["result"]["poly"] == [{"coeff": "1", "exp": [0]}]


def test_cee_threefold_fixture(capsys):
    rc, out, _ = run(capsys, ["cee", EX46, "--ideal", "P", "--json"])
    assert rc == 0
    obj = json.loads(out)
    terms = {tuple(t["exp"]): int(t["coeff"]) for t in obj["result"]["poly"]}
    assert terms == {
        (3, 3, 0): 2, (3, 2, 1): 4, (3, 1, 2): 2, (2, 3, 1): 2, (2, 2, 2): 4
    }


def test_project_then_cee_pipe(capsys, monkeypatch):
    rc, projected, _ = run(capsys, ["project", EX46, "--ideal", "P", "--blocks", "2,3"])
    assert rc == 0
    session = parse_input(projected)  # round-trips through the grammar
    assert session.ring.p == 3 and session.ring.n == 8
    monkeypatch.setattr("sys.stdin", io.StringIO(projected))
    rc, out, _ = run(capsys, ["cee", "-", "--ideal", "P", "--json"])
    assert rc == 0
    obj = json.loads(out)
    terms = {tuple(t["exp"]): int(t["coeff"]) for t in obj["result"]["poly"]}
    # the projection keeps the original grading labels t2, t3
    assert terms == {(0, 3, 0): 2, (0, 2, 1): 4, (0, 1, 2): 2}


def test_parse_error_reports_position(tmp_path, capsys):
    f = tmp_path / "bad.ring"
    f.write_text("vars x\ndeg x = (0)\n")
    rc, _, err = run(capsys, ["kpoly", str(f), "--ideal", "I"])
    assert rc == 2
    assert "line 2" in err


def test_unknown_variable_in_generator(tmp_path, capsys):
    f = tmp_path / "bad.ring"
    f.write_text("vars x\ndeg x = (1)\nideal I = [ x*w ]\n")
    rc, _, err = run(capsys, ["kpoly", str(f), "--ideal", "I"])
    assert rc == 2
    assert "unknown variable" in err


def test_unknown_ideal_and_order(small, capsys):
    rc, _, err = run(capsys, ["cee", small, "--ideal", "Nope"])
    assert rc == 2
    rc, _, err = run(capsys, ["cee", small, "--ideal", "I", "--order", "mystery"])
    assert rc == 2


def test_gin_needs_large_field(capsys):
    rc, _, err = run(capsys, ["gin", EX46, "--ideal", "P"])
    assert rc == 3
    assert "field" in err.lower()


def test_gin_report_nonprime_exits_four(capsys):
    rc, out, _ = run(capsys, ["gin-report", RMK59, "--ideal", "J"])
    assert rc == 4
    assert "contraction_mlength_monotone: FAIL" in out


def test_gin_report_prime_exits_zero(capsys):
    rc, out, _ = run(capsys, ["gin-report", RMK59, "--ideal", "Z", "--json"])
    assert rc == 0
    obj = json.loads(out)
    assert all(obj["result"]["clauses"].values())


def test_polymatroid_check_from_cee(capsys):
    rc, out, _ = run(capsys, ["polymatroid-check", EX46, "--from-cee", "P"])
    assert rc == 0
    assert out.strip() == "polymatroid"


def test_polymatroid_and_snp_points_files(tmp_path, capsys):
    good = tmp_path / "good.pts"
    good.write_text("1 1 0\n1 0 1\n0 1 1\n")
    bad = tmp_path / "bad.pts"
    bad.write_text("2 0\n0 2\n")
    rc, out, _ = run(capsys, ["polymatroid-check", "--points", str(good)])
    assert rc == 0
    rc, out, _ = run(capsys, ["polymatroid-check", "--points", str(bad)])
    assert rc == 4 and "witness" in out
    rc, out, _ = run(capsys, ["snp-check", "--points", str(bad)])
    assert rc == 4 and "missing lattice point" in out
    rc, _, _ = run(capsys, ["snp-check", "--points", str(good)])
    assert rc == 0


def test_snp_check_requires_source(capsys):
    rc, _, err = run(capsys, ["snp-check"])
    assert rc == 2


def test_json_output_is_byte_stable(capsys):
    rc, out1, _ = run(capsys, ["cee", EX46, "--ideal", "P", "--json"])
    rc2, out2, _ = run(capsys, ["cee", EX46, "--ideal", "P", "--json"])
    assert rc == rc2 == 0
    assert out1 == out2


def test_mdeg_seed_env_overrides_flag(capsys, monkeypatch):
    monkeypatch.setenv("MDEG_SEED", "5")
    rc, out, _ = run(
        capsys, ["gin", RMK59, "--ideal", "Z", "--seed", "0", "--json"]
    )
    assert rc == 0
    obj = json.loads(out)
    assert obj["result"]["meta"]["seed"] == 5


def test_det_matches_closed_formulas(capsys):
    rc, out, _ = run(capsys, ["det", "--m", "2", "--n", "3", "--r", "2", "--json"])
    assert rc == 0
    obj = json.loads(out)
    assert obj["result"]["meta"]["matches_closed_formulas"] is True
    assert obj["result"]["diff"]["C"] == []


def test_det_formulas_only_needs_maximal(capsys):
    rc, _, err = run(
        capsys, ["det", "--m", "2", "--n", "3", "--r", "1", "--formulas-only"]
    )
    assert rc == 2


def test_hf_oracle_text(small, capsys):
    rc, out, _ = run(capsys, ["hf-oracle", small, "--ideal", "I", "--bound", "3"])
    assert rc == 0
    lines = dict(
        l.replace("HF(", "").replace(")", "").split(" = ") for l in out.splitlines()
    )
    # S/(xy, xz^2) has Hilbert function 1, 3, 5, 6 in degrees 0..3
    assert [lines[str(k)] for k in range(4)] == ["1", "3", "5", "6"]


def test_standardize_verify_and_roundtrip(tmp_path, capsys):
    f = tmp_path / "weighted.ring"
    f.write_text(WEIGHTED)
    rc, out, err = run(capsys, ["standardize", str(f), "--ideal", "I", "--verify"])
    assert rc == 0
    assert "FAIL" not in err
    session = parse_input(out)
    assert session.ring.is_standard
    assert session.ring.n == 4  # z of weight 2 splits into two copies
