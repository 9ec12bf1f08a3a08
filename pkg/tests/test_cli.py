import json

import pytest

from affinejt import cli
from affinejt import symfun as SF
from affinejt import verify as V


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_hl(capsys):
    code, out, _ = run(capsys, "compute", "hl", "--lambda", "2", "--vars", "2")
    assert code == 0
    assert out.strip() == "x1^2 + x2^2 + (1-t)*x1*x2"


def test_compute_e_r0(capsys):
    code, out, _ = run(capsys, "compute", "e", "--r", "0", "--vars", "3")
    assert code == 0 and out.strip() == "1"


def test_compute_qt_series_rr(capsys):
    code, out, _ = run(capsys, "compute", "qt-series", "--check", "T15", "--k", "1", "--sigma", "0",
                       "--t", "q", "--order", "10", "--format", "json")
    assert code == 0
    assert json.loads(out)["value"] == [1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6]


@pytest.mark.parametrize("argv", [
    ["compute", "hl", "--lambda", "2,1", "--vars", "3"],
    ["compute", "schur", "--lambda", "2,1", "--vars", "3", "--method", "jacobi_trudi_h"],
    ["compute", "jt-sum", "--k", "2", "--r", "1", "--n", "2"],
    ["compute", "qt-series", "--check", "T15", "--k", "1", "--order", "4"],
    ["compute", "theta", "--corollary", "5.1a", "--k", "1", "--n", "1", "--order", "6"],
])
def test_json_round_trip(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    payload = json.loads(out)
    value = cli.payload_value(payload)
    again = cli.payload_value(json.loads(json.dumps(payload)))
    assert value == again
    if payload["type"] == "poly":
        code, text, _ = run(capsys, *argv)
        assert text.strip() == payload["text"]


def test_round_trip_matches_library(capsys):
    _, out, _ = run(capsys, "compute", "hl", "--lambda", "2,1", "--vars", "3", "--format", "json")
    assert cli.payload_value(json.loads(out)) == SF.hall_littlewood((2, 1), 3)


def test_verify_json_single_instance(capsys):
    code, out, _ = run(capsys, "verify", "--id", "thm1.1", "--params", "k=2,r=2,n=3", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 1 and rows[0]["status"] == "pass"


def test_verify_failure_exit_code(capsys, tmp_path):
    spec = V.make_spec("cor5.10", k=1, n=1, D=20)
    path = V.fixture_path(tmp_path, spec)
    path.write_text(json.dumps({"id": "cor5.10", "coefficients": ["1", "5"]}))
    code, _, err = run(capsys, "verify", "--id", "cor5.10", "--params", "k=1,n=1,D=20", "--fixtures", str(tmp_path))
    assert code == 1
    assert "FAIL cor5.10" in err


@pytest.mark.parametrize("argv", [
    ["verify", "--id", "nonsense"],
    ["verify", "--id", "thm1.1", "--params", "k=0,r=2,n=3"],
    ["verify", "--id", "thm1.1", "--update-fixtures"],
    ["verify", "--order", "0"],
    ["verify", "--params", "k=1"],
    ["compute", "qt-series", "--check", "T15", "--k", "1", "--order", "0"],
    ["compute", "e", "--vars", "3"],
    ["compute", "bc-hl", "--lambda", "1", "--vars", "2", "--family", "Z9"],
    ["list", "--status", "maybe"],
    ["frobnicate"],
    ["compute", "hl", "--lambda", "2", "--vars", "2", "--bogus-flag"],
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_verify_update_fixtures(capsys, tmp_path):
    code, _, _ = run(capsys, "verify", "--id", "thm1.5", "--params", "k=1,sigma=0,D=10",
                     "--fixtures", str(tmp_path), "--update-fixtures")
    assert code == 0
    assert list(tmp_path.glob("thm1.5__*.json"))


def test_verify_order_override(capsys):
    code, out, _ = run(capsys, "verify", "--id-prefix", "classical-rr", "--order", "5", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows and all(r["params"]["D"] == 5 for r in rows)


def test_verify_threads_deterministic(capsys):
    outs = []
    for threads in ("1", "2"):
        code, out, _ = run(capsys, "verify", "--id-prefix", "cor5.2", "--threads", threads, "--format", "json")
        assert code == 0
        outs.append([{k: v for k, v in r.items() if k != "elapsed_ms"} for r in json.loads(out)])
    assert outs[0] == outs[1]


def test_list_conjecture(capsys):
    code, out, _ = run(capsys, "list", "--status", "conjecture", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert all(r["status"] == "conjecture" for r in rows)
    ids = {r["id"] for r in rows}
    assert {"conj-B0", "conj-B_neg_sqrt", "conj-B1", "conj-C0", "conj-Ct", "conj-BC"} <= ids


def test_list_cor5(capsys):
    code, out, _ = run(capsys, "list", "--id-prefix", "cor5", "--format", "json")
    assert code == 0
    ids = [r["id"] for r in json.loads(out)]
    numbers = {int(i.split(".")[1].rstrip("ab").split("_")[0]) for i in ids}
    assert numbers == set(range(1, 19))
    for r in json.loads(out):
        assert set(r) >= {"id", "status", "anchor", "params"}


def test_list_empty_filter(capsys):
    code, out, _ = run(capsys, "list", "--id-prefix", "zzz", "--format", "json")
    assert code == 0 and json.loads(out) == []
    code, out, _ = run(capsys, "list", "--id-prefix", "zzz")
    assert code == 0 and len(out.strip().splitlines()) <= 1
