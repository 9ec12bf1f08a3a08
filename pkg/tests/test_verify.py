import json
import shutil
from pathlib import Path

import pytest

from affinejt import qtseries as QS
from affinejt import verify as V
from affinejt.exactalg import TruncSeries
from affinejt.qtseries import QV

FIXTURES = Path(__file__).parent / "fixtures" / "series"


def test_registry_has_no_gaps():
    assert V.coverage_gaps() == []


def test_spec_examples_pass():
    assert V.run_check(V.make_spec("thm1.1", k=2, r=2, n=3)).status == "pass"
    assert V.run_check(V.make_spec("conj-C0", k=1, n=2)).status == "pass"


def test_invalid_parameters():
    with pytest.raises(V.InvalidParameters):
        V.make_spec("thm1.1", k=0, r=2, n=3)
    with pytest.raises(V.InvalidParameters):
        V.make_spec("thm1.1", k=2, r=2, n=3, bogus=1)
    with pytest.raises(V.InvalidParameters):
        V.make_spec("thm1.1", k="two", r=2, n=3)


def test_unknown_id():
    with pytest.raises(V.UnknownCheck):
        V.make_spec("thm9.9")


def test_run_check_rejects_raw_input():
    with pytest.raises(TypeError):
        V.run_check("thm1.1")


def test_parse_params_keeps_bracketed_commas():
    assert V.parse_params("k=2,lam=[2,1],family=B0") == {"k": "2", "lam": "[2,1]", "family": "B0"}
    assert V.parse_params("  ") == {}
    with pytest.raises(V.InvalidParameters):
        V.parse_params("k2")


def test_partition_param_coercion():
    spec = V.make_spec("jt.schur", lam="(2,1)", n=3)
    assert spec.param_dict["lam"] == (2, 1)


def test_prefix_and_empty_filters():
    cor = {s.id for s in V.expand(id_prefix="cor5.")}
    assert len(cor) >= 18
    assert V.expand(id_prefix="no-such-prefix") == []
    assert V.run_suite(id_prefix="no-such-prefix") == []
    with pytest.raises(V.InvalidParameters):
        V.expand(status_class="maybe")


def test_status_filter():
    conj = V.expand(status_class="conjecture")
    assert conj and all(V.entry(s.id).status == "conjecture" for s in conj)


def test_max_cost_filter():
    cheap = V.expand(id_prefix="jt.", max_cost=1)
    assert all(s.cost <= 1 for s in cheap)


def test_deterministic_reports():
    specs = V.expand(id_prefix="cor5.1")
    a = V.reports_json(V.run_specs(specs, threads=1), timing=False)
    b = V.reports_json(V.run_specs(specs, threads=2), timing=False)
    assert a == b
    assert "elapsed_ms" not in a
    assert [r["id"] for r in json.loads(a)] == [s.id for s in specs]


def test_summary_table_lists_each_report():
    reports = V.run_specs(V.expand(id_prefix="thm1.5"), threads=1)
    table = V.summary_table(reports)
    assert table.count("thm1.5") == len(reports)


def test_mismatch_witness_reevaluates():
    Q = QV.gen("Q")
    a = TruncSeries(1 + Q**2 + 2 * Q**4, 10)
    b = TruncSeries(1 + Q**2 + 3 * Q**4, 10)
    w = V.mismatch(a, b)
    assert w["monomial"] == "Q^4"
    assert (int(w["lhs"]), int(w["rhs"])) == (a.poly.coeff((4,)), b.poly.coeff((4,)))
    assert V.mismatch(a, a) is None
    assert V.mismatch([1, 2, 3], [1, 2, 4]) == {"index": 2, "lhs": "3", "rhs": "4"}
    assert V.mismatch([1, 2], [1, 2, 3])["index"] == 2


def test_printed_variant_expected_to_fail():
    # the misprint entries pass because the printed form disagrees
    reports = V.run_specs(V.expand(id_prefix="misprint-"), threads=1)
    assert reports and all(r.status == "pass" for r in reports)


@pytest.mark.parametrize("path", sorted(FIXTURES.glob("*.json")), ids=lambda p: p.stem)
def test_fixture_snapshots(path):
    data = json.loads(path.read_text())
    spec = V.make_spec(data["id"], data["params"])
    assert V.fixture_path(FIXTURES, spec) == path
    report = V.run_check(spec, fixtures=FIXTURES)
    assert report.status == "pass", report.witness


def test_tampered_fixture_detected(tmp_path):
    src = FIXTURES / "cor5.10__k-1_n-1_D-20.json"
    shutil.copy(src, tmp_path / src.name)
    data = json.loads(src.read_text())
    data["coefficients"][7] = str(int(data["coefficients"][7]) + 1)
    (tmp_path / src.name).write_text(json.dumps(data))
    report = V.run_check(V.make_spec("cor5.10", k=1, n=1, D=20), fixtures=tmp_path)
    assert report.status == "fail"
    assert report.witness["label"] == "fixture"
    assert report.witness["index"] == 7


def test_update_fixtures_writes_snapshot(tmp_path):
    spec = V.make_spec("thm1.5", k=1, sigma=0, D=10)
    V.run_check(spec, fixtures=tmp_path, update_fixtures=True)
    written = json.loads(V.fixture_path(tmp_path, spec).read_text())
    stored = json.loads(V.fixture_path(FIXTURES, spec).read_text())
    assert written == stored


def test_det_transform_check():
    assert V.det_transform_check("plus_form", 1, 1, 3).status == "pass"
    assert V.det_transform_check("minus_form", 0, 1, 2).status == "pass"
    with pytest.raises(KeyError):
        V.det_transform_check("sideways", 1, 1, 3)


def test_ss_delta_check():
    assert V.ss_delta_check(2, [1, 1], 1).status == "pass"


@pytest.mark.parametrize("kind", ["signed_Fbar", "unsigned_F"])
def test_cylindric_f_check(kind):
    assert V.cylindric_f_check(kind, 1, 2).status == "pass"


def test_bounded_pieri_identity_check():
    for n, k, cap in [(1, 0, 2), (2, 1, 4), (3, 1, 5)]:
        assert V.bounded_pieri_identity_check(n, k, cap).status == "pass"


def test_modified_hl_spec_check():
    assert V.modified_hl_spec_check([2], 1, 10).status == "pass"


@pytest.mark.parametrize("ident", ["E1", "E4", "A34", "A5"])
def test_slater_binomial_identity(ident):
    assert V.slater_binomial_identity(ident, 3).status == "pass"


@pytest.mark.parametrize("variant", ["qt_deformation", "foda_quano", "bressoud"])
def test_finite_rr_poly(variant):
    assert V.finite_rr_poly(1, 3, variant).status == "pass"


def test_theta_duality_check():
    assert V.theta_duality_check("theta2", 1, 2, 20).status == "pass"


def test_bailey_pair_verify():
    alpha, beta = QS.unit_bailey_pair(4, 20)
    assert V.bailey_pair_verify(alpha, beta, 0, 4).status == "pass"
    Q = QV.gen("Q")
    beta[1] = TruncSeries(Q**2, 20)
    report = V.bailey_pair_verify(alpha, beta, 0, 4)
    assert report.status == "fail"
    assert report.witness["n"] == 1


def test_whole_registry_passes():
    reports = V.run_suite()
    failed = [(r.id, r.params, r.witness) for r in reports if r.status != "pass"]
    assert len(reports) == len(V.expand())
    assert not failed, failed[:3]
