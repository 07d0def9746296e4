import json
import os
import subprocess

import pytest

import aglab

EX = [0, 0, 0, 0, 0,
      0, 1, 1, 1, 1,
      0, 1, 3, 4, 2,
      0, 1, 2, 3, 4,
      0, 1, 4, 2, 3]
E2 = [0, 0, 0, 0, 0,
      0, 4, 4, 2, 4,
      0, 4, 4, 1, 4,
      0, 1, 2, 3, 4,
      0, 4, 4, 4, 4]
LABELS = ["a", "b", "c", "d", "e"]


def test_table_and_laws():
    m = aglab.FiniteMagma(5, EX, LABELS)
    assert m.n == 5
    assert m.at(2, 3) == 4
    assert m.label(3) == "d"
    assert aglab.is_left_invertive(m)
    assert aglab.is_medial(m)
    assert aglab.left_identities(m) == [3]
    assert aglab.is_regular(m)
    assert aglab.regular_witness(m, 0) == 0

    e2 = aglab.FiniteMagma(5, E2, LABELS)
    assert not aglab.is_regular(e2)
    assert aglab.regular_witness(e2, 2) is None
    assert aglab.intra_regular_witness(e2, 4) == (1, 1)


def test_parse_format_round_trip():
    m = aglab.FiniteMagma(5, EX, LABELS)
    text = aglab.format_cayley_table(m)
    assert aglab.parse_cayley_table(text) == m
    with pytest.raises(ValueError):
        aglab.parse_cayley_table("order 0\n")


def test_ideals():
    e2 = aglab.FiniteMagma(5, E2, LABELS)
    lefts = aglab.all_ideals(e2, "left")
    assert len(lefts) == 6
    assert 0b00001 in lefts  # {a}
    assert aglab.all_ideals(e2, "right") == aglab.all_ideals(e2, "two-sided")
    assert not aglab.is_semiprime_subset(e2, 0b10001)  # {a,e}
    assert aglab.format_subset(e2, 0b10001) == "{a,e}"


def test_ifs_predicates():
    e2 = aglab.FiniteMagma(5, E2, LABELS)
    qer = aglab.unchecked_ifs(
        ["0.8", "0.5", "0.4", "0.3", "0.6"],
        ["0.1", "0.7", "0.6", "0.8", "0.3"],
    )
    assert aglab.is_if_left_ideal(e2, qer)
    assert not aglab.is_if_right_ideal(e2, qer)
    assert aglab.right_ideal_violation(e2, qer) == (1, 3)

    chi = aglab.characteristic(0b00001, 5)
    assert aglab.is_if_two_sided(e2, chi)
    assert aglab.is_idempotent(e2, chi)
    assert aglab.point_image(chi, 0) == ("1", "0")
    assert aglab.ifs_leq(chi, aglab.delta(5))
    assert aglab.parse_ifs(aglab.format_ifs(qer)) == qer
    with pytest.raises(ValueError):
        aglab.make_ifs(["1"], ["1/2"])


def test_enumeration_counts():
    assert aglab.count_ag_groupoids(3) == 105
    assert aglab.count_ag_groupoids(3, require_left_identity=True) == 30
    assert aglab.count_ag_groupoids(3, up_to_isomorphism=True) == 20
    assert aglab.oracle_count(2, False) == 6
    reps = aglab.list_ag_groupoids(2, up_to_isomorphism=True)
    assert len(reps) == 3
    assert all(aglab.canonical_form(m) == m for m in reps)
    assert sum(aglab.orbit_size(m) for m in reps) == 6
    assert aglab.grid_count(2, "0,1/2,1") == 36


def test_harness_reports():
    names = aglab.check_names()
    assert len(names) == 30
    assert "thm_RL" in names

    report = json.loads(aglab.run_all(order_max=2, grid="0,1", workers=2))
    checks = report["checks"]
    assert set(checks) == set(names)
    fails = [n for n, e in checks.items() if e["verdict"] == "fail"]
    assert fails == ["counterexamples_suite"]

    scenarios = json.loads(aglab.run_scenarios())["scenarios"]
    assert [s["name"] for s in scenarios] == ["aw", "fgh", "qer", "c1", "cor11"]
    assert [s["pass"] for s in scenarios] == [False, False, True, True, False]


def _cli():
    path = os.environ.get("AGLAB_CLI")
    if not path:
        pytest.skip("AGLAB_CLI not set")
    return path


def test_cli_exit_codes():
    cli = _cli()
    data = os.environ.get("AGLAB_DATA", "data")
    ok = subprocess.run([cli, "check", os.path.join(data, "ex.tbl")],
                        capture_output=True, text=True)
    assert ok.returncode == 0
    assert "left invertive: yes" in ok.stdout

    replay = subprocess.run([cli, "counterexamples"], capture_output=True, text=True)
    assert replay.returncode == 1  # three scenarios do not hold as documented
    assert "2/5 scenarios" in replay.stdout

    usage = subprocess.run([cli, "bogus"], capture_output=True)
    assert usage.returncode == 2
