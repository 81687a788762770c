import json

import pytest

from smashcoh.cli import main, run_compute, run_tables, run_verify
from smashcoh.rationals import Rat
from smashcoh.scenario import builtin_scenario


def test_compute_deterministic_across_threads():
    s = builtin_scenario(Rat(2))
    r1 = run_compute(s, weight_max=3, threads=1)
    r3 = run_compute(s, weight_max=3, threads=3)
    assert json.dumps(r1, sort_keys=True) == json.dumps(r3, sort_keys=True)


def test_compute_report_contents():
    s = builtin_scenario(Rat(2))
    r = run_compute(s, weight_max=2)
    assert r["scenario"]["q"] == "2"
    assert r["dimensions"]["invariant"]["0"] == {"0": 3, "1": 4, "2": 1}
    assert r["dimensions"]["invariant"]["-2"] == {"0": 0, "1": 0, "2": 5}
    assert r["dimensions"]["full"]["0"] == {"0": 4, "1": 8, "2": 4}
    assert len(r["invariant_bases"]["-2"]["2"]) == 5


def test_verify_passes_on_builtin():
    s = builtin_scenario(Rat(2))
    r = run_verify(s, weight_max=4)
    assert r["pass"], [c for c in r["checks"] if not c["pass"]]


def test_tables_small_fragment():
    s = builtin_scenario(Rat(2))
    r = run_tables(s, index_max=1)
    assert r["pass"]
    assert not r["unexplained_mismatches"]
    t1 = r["tables"]["deg0_times_deg0"]
    assert t1["eps1[0,0] . eps1[0,0]"] == {"eps1[0,0]": "2"}
    t4 = r["tables"]["deg1_times_deg1"]
    # the minus sign in the degree-1 squared table: -om2[i+t, j+s]
    assert t4["eta4[0,1] . eta4[1,0]"] == {"om2[0,2]": "-1"}
    # every reference-table diff is in the documented eps4-column sign set
    for d in r["reference_table_diff"]:
        row, col = d["entry"].split(" . ")
        assert col.startswith(("eps2", "eps4")) and \
            row[:4] in ("eps2", "eps4", "eta2", "eta4"), d


def test_tables_rejects_custom_scenario():
    from smashcoh.scenario import ValidationError
    s = builtin_scenario(Rat(2))
    s.name = "custom"
    with pytest.raises(ValidationError):
        run_tables(s, index_max=1)


def test_compute_on_group_swap_scenario():
    # sanity scenario: the order-2 group swapping the generators of the
    # commutative plane computes without error
    from smashcoh.scenario import parse_scenario
    data = {
        "algebra": {"generators": ["u", "v"], "q": {"0,1": "1"}},
        "hopf": {"group": [[0, 1], [1, 0]]},
        "action": {"g0": [["1", "0"], ["0", "1"]],
                   "g1": [["0", "1"], ["1", "0"]]},
    }
    s = parse_scenario(data)
    r = run_compute(s, weight_max=4)
    # HH^0 weight 0 is the scalars
    assert r["dimensions"]["invariant"]["0"]["0"] == 1
    full = r["dimensions"]["full"]
    inv = r["dimensions"]["invariant"]
    assert all(inv[w][m] <= full[w][m] for w in full for m in full[w])


def test_cli_exit_codes(tmp_path, capsys):
    out = tmp_path / "r.json"
    code = main(["compute", "--builtin", "kac-paljutkin-qplane",
                 "--weight-max", "1", "--out", str(out)])
    assert code == 0
    json.loads(out.read_text())

    assert main(["compute", "--builtin", "kac-paljutkin-qplane",
                 "--q", "0"]) == 2
    assert main(["compute", "--scenario", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{}")
    assert main(["compute", "--scenario", str(bad)]) == 2
    capsys.readouterr()


def test_cli_byte_identical_reports(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    base = ["compute", "--builtin", "kac-paljutkin-qplane",
            "--weight-max", "2"]
    assert main(base + ["--threads", "1", "--out", str(a)]) == 0
    assert main(base + ["--threads", "4", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_cli_text_format(tmp_path, capsys):
    code = main(["verify", "--builtin", "kac-paljutkin-qplane",
                 "--weight-max", "2", "--format", "text"])
    out = capsys.readouterr().out
    assert code == 0
    assert "hopf_axioms" in out and "pass: True" in out
