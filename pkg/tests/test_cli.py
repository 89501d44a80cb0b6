import json

import pytest

from yoklab import cli

import _helpers as H


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dim(capsys):
    code, out, _ = run(capsys, "dim", "--r", "2", "--n", "3")
    assert code == 0
    assert "dimension = 48" in out
    code, out, _ = run(capsys, "dim", "--r", "2", "--n", "3", "--nil")
    assert code == 0 and "48" in out
    code, out, _ = run(capsys, "dim", "--r", "2", "--n", "2", "--json")
    assert json.loads(out)["dimension"] == 8


def test_limits_guard(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["dim", "--r", "9", "--n", "2"])
    assert exc.value.code == 2
    capsys.readouterr()
    # the guard lifts with the explicit flag
    code, out, _ = run(capsys, "dim", "--r", "5", "--n", "2", "--allow-large")
    assert code == 0 and "50" in out


def test_verify(capsys):
    for pres in ("1", "2"):
        code, out, _ = run(capsys, "verify", "--r", "2", "--n", "2",
                           "--presentation", pres)
        assert code == 0, out
    code, out, _ = run(capsys, "verify", "--r", "2", "--n", "2",
                       "--presentation", "4", "--q", "5", "--field", "fp:13")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--r", "2", "--n", "2",
                       "--presentation", "nil", "--json")
    assert code == 0
    assert json.loads(out)["all_zero"] is True


def test_simples(capsys):
    code, out, _ = run(capsys, "simples", "--count", "--r", "2", "--n", "2")
    assert code == 0
    assert "6" in out
    code, out, _ = run(capsys, "simples", "--r", "2", "--n", "2",
                       "--bruteforce", "--list", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 6 and payload["bruteforce"] == 6
    assert len(payload["labels"]) == 6


def test_mult_roundtrip(capsys):
    alg = H.yalg(2, 2)
    x = alg.gen_g(1)
    blob = json.dumps(alg.element_to_json(x))
    code, out, _ = run(capsys, "mult", "--r", "2", "--n", "2",
                       "--lhs", blob, "--rhs", blob)
    assert code == 0
    parsed = alg.element_from_json(json.loads(out))
    assert parsed == x * x


def test_mult_bad_input(capsys):
    code, _, err = run(capsys, "mult", "--r", "2", "--n", "2",
                       "--lhs", "{not json", "--rhs", "{}")
    assert code == 2
    # well-formed JSON for the wrong algebra counts as bad input
    wrong = json.dumps({"basis": "T", "r": 3, "n": 2,
                        "terms": [{"a": [0, 0], "w": [1, 2], "coeff": "1"}]})
    code, _, err = run(capsys, "mult", "--r", "2", "--n", "2",
                       "--lhs", wrong, "--rhs", wrong)
    assert code == 2
    assert "error" in err


def test_gram_and_export(tmp_path, capsys):
    out_file = tmp_path / "gram.json"
    code, out, _ = run(capsys, "gram", "--r", "1", "--n", "2",
                       "--export", str(out_file))
    assert code == 0
    blob = json.loads(out_file.read_text())
    assert blob["entries"] == [["0", "1"], ["1", "-1"]]
    code, _, _ = run(capsys, "gram", "--r", "2", "--n", "2", "--nil")
    assert code == 0


def test_nakayama(capsys):
    code, out, _ = run(capsys, "nakayama", "--r", "2", "--n", "2", "--exhaustive")
    assert code == 0
    code, out, _ = run(capsys, "nakayama", "--r", "2", "--n", "2",
                       "--samples", "20", "--nil", "--json")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_cells_json_frozen():
    # also pins the example shape: two cells at (1,2), classification matches
    import io
    import contextlib
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli.main(["cells", "--r", "1", "--n", "2", "--json"])
    assert code == 0
    payload = json.loads(buf.getvalue())
    assert payload["count"] == 2
    assert payload["match"] is True
    assert payload["triangular"] is True


def test_radical(capsys):
    code, out, _ = run(capsys, "radical", "--r", "2", "--n", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["power_dims"] == [2, 0]
    code, out, _ = run(capsys, "radical", "--r", "2", "--n", "3", "--nil", "--json")
    assert code == 0
    assert json.loads(out)["power_dims"] == [40, 24, 8, 0]


def test_aks_compare(capsys):
    code, out, _ = run(capsys, "aks-compare", "--r", "2", "--n", "2")
    assert code == 0
    assert "ok" in out and "MISMATCH" not in out


def test_report_deterministic(capsys):
    code, out1, _ = run(capsys, "report", "--r", "1", "--n", "2")
    assert code == 0
    payload = json.loads(out1)
    assert payload["all_ok"] is True
    assert payload["schema"] == "yoklab/1"
    code, out2, _ = run(capsys, "report", "--r", "1", "--n", "2")
    assert out1 == out2


def test_field_argument(capsys):
    code, out, _ = run(capsys, "verify", "--r", "3", "--n", "2",
                       "--presentation", "1", "--field", "fp:13")
    assert code == 0
    # 14 is composite, F_5 lacks cube roots of unity: both are config errors
    for bad in ("fp:14", "fp:5", "fp:x", "gf:13"):
        with pytest.raises(SystemExit) as exc:
            cli.main(["verify", "--r", "3", "--n", "2",
                      "--presentation", "1", "--field", bad])
        assert exc.value.code == 2
        capsys.readouterr()
