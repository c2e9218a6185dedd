import json

import pytest

import mopw.cli as cli
from mopw.analyze import RootSolveError
from mopw.construct import SingularSystemError

HERMITE01 = '{"kind":"hermite","c":["0","1"]}'
HERMITE_FIG = '{"kind":"hermite","c":["1/3","34/35"]}'
LAG1 = '{"kind":"laguerre1","alpha":["1/2","1/3"]}'
LAG2 = '{"kind":"laguerre2","alpha":"1/2","c":["2","3/5"]}'


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def last_json(stdout):
    return json.loads(stdout.strip().split("\n")[-1])


def test_construct_anchor(capsys):
    code, out, _ = run(capsys, "construct", "--family", HERMITE01, "--n", "1,1")
    assert code == 0
    assert last_json(out)["poly"] == ["-1/2", "-1/2", "1"]


def test_construct_trivial(capsys):
    code, out, _ = run(capsys, "construct", "--family", HERMITE01, "--n", "0,0")
    assert code == 0
    assert last_json(out)["poly"] == ["1"]


def test_construct_both_methods_agree(capsys):
    code, out, _ = run(
        capsys, "construct", "--family", LAG2, "--n", "2,1", "--method", "both"
    )
    assert code == 0
    assert last_json(out)["degree"] == 3


def test_construct_type1(capsys):
    code, out, _ = run(capsys, "construct", "--family", HERMITE01, "--n", "1,1", "--type1")
    assert code == 0
    assert "coeff_polys" in last_json(out)


def test_wronskian_trivial(capsys):
    code, out, _ = run(capsys, "wronskian", "--family", HERMITE01, "--n", "0,0", "--l", "2")
    assert code == 0
    obj = last_json(out)
    assert obj["poly"] == ["1"] and obj["degree"] == 0


def test_wronskian_equals_construct_at_l1(capsys):
    _, out1, _ = run(capsys, "wronskian", "--family", HERMITE01, "--n", "2,1", "--l", "1")
    _, out2, _ = run(capsys, "construct", "--family", HERMITE01, "--n", "2,1")
    assert last_json(out1)["poly"] == last_json(out2)["poly"]


def test_hankel_quintic(capsys):
    code, out, _ = run(
        capsys, "wronskian", "--family", LAG1, "--n", "1,1", "--l", "2", "--hankel"
    )
    assert code == 0
    assert last_json(out)["poly"] == ["-10", "185/3", "-7495/72", "647/9", "-119/6", "2"]


def test_verify_theorem1(capsys):
    code, out, _ = run(
        capsys, "verify", "theorem1", "--family", HERMITE_FIG, "--n", "3,3", "--l", "2"
    )
    assert code == 0
    assert last_json(out)["ok"]


def test_verify_theorem1_needs_even_l(capsys):
    code, _, err = run(
        capsys, "verify", "theorem1", "--family", HERMITE01, "--n", "1,1", "--l", "3"
    )
    assert code == 2 and "even" in err


def test_verify_theorem2(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "theorem2",
        "--family",
        '{"kind":"hermite","c":["1/3","2/5"]}',
        "--n",
        "2,3",
        "--l",
        "3",
    )
    assert code == 0
    obj = last_json(out)
    assert obj["ok"] and obj["details"]["count"] == 5


def test_verify_theorem3(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "theorem3",
        "--family",
        HERMITE01,
        "--n",
        "1,0",
        "--l",
        "2",
        "--grid-points",
        "9",
    )
    assert code == 0 and last_json(out)["ok"]


def test_verify_turan_refuted(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "turan",
        "--family",
        LAG1,
        "--n",
        "1,1",
        "--variant",
        "plain",
    )
    assert code == 1
    obj = last_json(out)
    assert not obj["ok"]
    assert "/" in obj["witness"]  # exact rational witness


def test_verify_turan_positive(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "turan",
        "--family",
        '{"kind":"hermite","c":["1/3","2/5"]}',
        "--n",
        "1,1",
        "--variant",
        "diag",
    )
    assert code == 0 and last_json(out)["ok"]


def test_verify_hankel_id(capsys):
    code, out, _ = run(
        capsys, "verify", "hankel-id", "--family", HERMITE01, "--n", "1,1", "--l", "3", "--j", "2"
    )
    assert code == 0 and last_json(out)["ok"]
    code, _, _ = run(
        capsys, "verify", "hankel-id", "--family", LAG1, "--n", "1,1", "--l", "2"
    )
    assert code == 2


def test_verify_path_free(capsys):
    code, out, _ = run(
        capsys, "verify", "path-free", "--family", HERMITE01, "--n", "1,1", "--l", "3"
    )
    assert code == 0 and last_json(out)["ok"]


def test_verify_confluent(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "confluent",
        "--family",
        HERMITE01,
        "--n",
        "1,1",
        "--l",
        "3",
        "--z",
        "1",
    )
    assert code == 0
    assert all(r > 1 for r in last_json(out)["details"]["ratios"])


def test_verify_at_probe(capsys):
    code, out, _ = run(
        capsys, "verify", "at-probe", "--family", LAG1, "--n", "1,1", "--trials", "3"
    )
    assert code == 0 and last_json(out)["ok"]


def test_verify_raising(capsys):
    for fam in (HERMITE01, LAG1, LAG2):
        code, out, _ = run(
            capsys, "verify", "raising", "--family", fam, "--n", "1,1", "--j", "2"
        )
        assert code == 0 and last_json(out)["ok"]


def test_roots_sweep(capsys):
    code, out, _ = run(
        capsys,
        "roots",
        "--family",
        HERMITE_FIG,
        "--n",
        "3,3",
        "--l-values",
        "2",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "re,im,series"
    assert len(lines) == 13
    assert all(line.endswith(",l=2") for line in lines[1:])


def test_roots_trivial_empty(capsys):
    code, out, _ = run(
        capsys, "roots", "--family", HERMITE01, "--n", "0,0", "--l-values", "2"
    )
    assert code == 0 and out == "re,im,series\n"


def test_roots_by_n(capsys, tmp_path):
    target = tmp_path / "roots.csv"
    code, out, _ = run(
        capsys,
        "roots",
        "--family",
        HERMITE01,
        "--series-by",
        "n",
        "--n-values",
        "1,0;1,1",
        "--l",
        "2",
        "--out",
        str(target),
    )
    assert code == 0
    lines = target.read_text().strip().split("\n")
    assert lines[0] == "re,im,series"
    assert len(lines) == 7  # 2 + 4 roots
    assert {line.rsplit(",", 1)[1] for line in lines[1:]} == {"n=1-0", "n=1-1"}


def test_roots_by_n_requires_values(capsys):
    code, _, err = run(capsys, "roots", "--family", HERMITE01, "--series-by", "n")
    assert code == 2 and "--n-values" in err


def test_deterministic_output(capsys):
    args = ("wronskian", "--family", HERMITE_FIG, "--n", "2,1", "--l", "3")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_usage_errors(capsys):
    code, _, err = run(capsys, "construct", "--n", "1,1")
    assert code == 2 and "--family" in err
    code, _, _ = run(capsys, "construct", "--family", "not json", "--n", "1,1")
    assert code == 2
    code, _, _ = run(
        capsys, "construct", "--family", '{"kind":"hermite","c":["1","1"]}', "--n", "1,1"
    )
    assert code == 2
    code, _, _ = run(capsys, "construct", "--family", HERMITE01, "--n", "1,1,1")
    assert code == 2
    code, _, _ = run(capsys, "construct", "--family", HERMITE01)
    assert code == 2


def test_singular_exit_code(capsys, monkeypatch):
    def boom(*a, **k):
        raise SingularSystemError("index not normal")

    monkeypatch.setattr(cli, "construct_type2", boom)
    code, _, err = run(
        capsys, "construct", "--family", HERMITE01, "--n", "1,1", "--method", "moments"
    )
    assert code == 3 and "not normal" in err


def test_numerical_exit_code(capsys, monkeypatch):
    def boom(*a, **k):
        raise RootSolveError("did not converge")

    monkeypatch.setattr(cli, "complex_roots", boom)
    code, _, err = run(
        capsys, "roots", "--family", HERMITE01, "--n", "1,1", "--l-values", "2"
    )
    assert code == 4 and "converge" in err


def test_config_file_defaults(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"family": json.loads(HERMITE01), "n": "1,1"}))
    code, out, _ = run(capsys, "--config", str(cfg), "construct")
    assert code == 0
    assert last_json(out)["poly"] == ["-1/2", "-1/2", "1"]
    # explicit flags win over config values
    code, out, _ = run(capsys, "--config", str(cfg), "construct", "--n", "0,0")
    assert code == 0 and last_json(out)["poly"] == ["1"]
    code, _, _ = run(capsys, "--config", str(tmp_path / "missing.json"), "construct")
    assert code == 2


def test_seed_env_override(capsys, monkeypatch):
    monkeypatch.setenv("MOPW_SEED", "12345")
    code, out, _ = run(
        capsys, "verify", "path-free", "--family", HERMITE01, "--n", "1,1", "--l", "2", "--seed", "9"
    )
    assert code == 0 and last_json(out)["ok"]
