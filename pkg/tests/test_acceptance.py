"""Acceptance criteria 1-12, each run against the check registry.

Every test records one PASS/FAIL line; the lines are echoed in the terminal summary.
"""
import time

import pytest

from affinejt import qtseries as QS
from affinejt import verify as V
from conftest import ACCEPTANCE_LINES


def _select(ids, keep=lambda p: True, **override):
    specs = []
    for i in ids:
        for row in V.entry(i).grid():
            if keep(row):
                specs.append(V.make_spec(i, {**row, **override}) if override else V.make_spec(i, row))
    return specs


def _record(n, label, specs, info=None):
    start = time.perf_counter()
    reports = V.run_specs(specs)
    failed = [r for r in reports if r.status != "pass"]
    ok = bool(reports) and not failed
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {label} ({len(reports) - len(failed)}/{len(reports)}, {time.perf_counter() - start:.1f}s)"
    if info:
        line += f"; {info}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return reports, failed


def _ids(prefix):
    return [i for i in V.REGISTRY if i.startswith(prefix)]


CONJ = ["conj-B0", "conj-B_neg_sqrt", "conj-B1", "conj-C0", "conj-Ct", "conj-BC"]


def test_criterion_01_affine_jt_gl():
    specs = _select(["thm1.1"], lambda p: p["k"] <= 3 and p["r"] <= 3 and p["n"] <= 5)
    _, failed = _record(1, "affine JT sum equals P_(k^r) for k,r <= 3, n <= 5", specs)
    assert not failed, failed[0].witness


def test_criterion_02_bc_conjectures():
    proven = _select(CONJ, lambda p: p["k"] == 1 and p["n"] <= 3)
    proven += _select(["conj-B0-t1", "conj-BC-t1"], lambda p: p["k"] <= 2 and p["n"] <= 3)
    # k = 2 with formal t is the conjecture tier: reported, never a build failure
    tier = V.run_specs(_select(CONJ, lambda p: p["k"] == 2 and p["n"] <= 3))
    bad = [f"{r.id}{r.params}" for r in tier if r.status != "pass"]
    info = f"conjecture tier k=2: {len(tier) - len(bad)}/{len(tier)} confirmed" + (f", open: {bad}" if bad else "")
    _, failed = _record(2, "six BC families at k=1 and B0, BC at t=1", proven, info)
    assert not failed, failed[0].witness


def test_criterion_03_qt_rogers_ramanujan():
    specs = _select(["thm1.5", "thm1.6a", "thm1.6b", "thm1.7", "thm1.8"], D=10)
    _, failed = _record(3, "bivariate q,t-RR identities through q^10, k in {1,2}, sigma in {0,1}", specs)
    assert not failed, failed[0].witness


def _count_mod5(N, residues):
    # partitions of m into parts congruent to residues mod 5, by a plain coin-change count
    ways = [1] + [0] * N
    for part in range(1, N + 1):
        if part % 5 in residues:
            for m in range(part, N + 1):
                ways[m] += ways[m - part]
    return ways


def test_criterion_04_classical_rr():
    specs = _select(["classical-rr"], D=50)
    reports, failed = _record(4, "classical Rogers-Ramanujan through q^50 against partition counts", specs)
    assert not failed, failed[0].witness
    for sigma, residues in ((0, {1, 4}), (1, {2, 3})):
        series = QS.rr_sum_side("T15", 1, sigma, 50, t_exp=1)
        assert QS.q_coefficients(series)[:51] == _count_mod5(50, residues)


def test_criterion_05_corollaries():
    specs = _select(_ids("cor5."), lambda p: p["k"] <= 2 and p["n"] <= 2, D=20)
    reports, failed = _record(5, "cor5.1-cor5.18 sum = product through q^20", specs)
    assert {r.id.split("_")[0].rstrip("ab") for r in reports} == {f"cor5.{i}" for i in range(1, 19)}
    assert not failed, failed[0].witness


def test_criterion_06_bounded_littlewood():
    specs = _select(_ids("littlewood-"), lambda p: p["k"] <= 2 and p["n"] <= 3)
    assert len({s.id for s in specs}) == 6
    _, failed = _record(6, "six bounded Littlewood identities, k <= 2, n <= 3", specs)
    assert not failed, failed[0].witness


def test_criterion_07_kirillov_and_delta():
    specs = _select(["kirillov"], lambda p: len(p["alpha"]) <= 3 and max(p["alpha"], default=0) <= 3 and p["n"] <= 4)
    specs += _select(["ss-delta"], lambda p: p["k"] <= 3 and p["s"] <= 2)
    _, failed = _record(7, "Kirillov transition and delta identity", specs)
    assert not failed, failed[0].witness


def test_criterion_08_determinant_lemma():
    keep = lambda p: 1 <= p["k"] <= 3 and p["n"] <= 4 and p["K"] in (2 * p["k"], 2 * p["k"] + 1, 2 * p["k"] + 2)
    specs = _select(["detlemma-plus", "detlemma-minus"], keep)
    assert {s.id for s in specs} == {"detlemma-plus", "detlemma-minus"}
    _, failed = _record(8, "both determinant transforms, K in {2k, 2k+1, 2k+2}", specs)
    assert not failed, failed[0].witness


def test_criterion_09_cylindric():
    specs = _select(["cyl"], lambda p: p["n"] <= 4 and p["k"] <= 3 and p["ell"] <= 2)
    specs += _select(["cyl-ell0", "cyl-ell1"])
    specs += _select(["cylf-signed_Fbar"], lambda p: p["k"] <= 2)
    specs += _select(["cylf-unsigned_F"], lambda p: p["k"] == 1)
    _, failed = _record(9, "cylindric determinant, closed forms, t=1 F and Fbar evaluations", specs)
    assert not failed, failed[0].witness


def test_criterion_10_kostka():
    specs = _select(["kostka"], lambda p: p["k"] <= 3 and p["r"] <= 2 and p["ell"] in (1, 2))
    specs += _select(["ak-summation"], lambda p: p["k"] <= 3 and p["n"] <= 5)
    _, failed = _record(10, "level-restricted Kostka expansion and binomial summation", specs)
    assert not failed, failed[0].witness


def test_criterion_11_binomial_layer():
    slater = _ids("slater-")
    assert len(slater) == 8
    specs = _select(slater, lambda p: p["s"] <= 10)
    specs += _select(_ids("finite-"), lambda p: p["n"] <= 6)
    specs += _select(_ids("macdonald-"), lambda p: p["k"] <= 2 and p["p_order"] == 3)
    _, failed = _record(11, "Slater identities, finite RR analogues, Macdonald identities", specs)
    assert not failed, failed[0].witness


def test_criterion_12_extras():
    specs = _select(["extra-A2km1"], lambda p: p["k"] <= 2 and p["n"] <= 3)
    specs += _select(["extra-klone", "extra-virasoro"], D=30)
    specs += _select(["extra-klone-finite"])
    misprint = _select(["misprint-A5"])
    mis_reports = V.run_specs(misprint)
    resolved = all(r.status == "pass" for r in mis_reports)
    info = f"t^(n^2) misprint: q^(n^2) confirmed, printed form refuted for n <= {max(s.param_dict['n'] for s in misprint)}"
    _, failed = _record(12, "A_{2k-1}^(2) JT identity, k=l=1 chain and Virasoro through q^30", specs + misprint,
                        info if resolved else "t^(n^2) misprint unresolved")
    assert resolved
    assert not failed, failed[0].witness
