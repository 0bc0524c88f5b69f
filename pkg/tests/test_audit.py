"""Audit harness: statuses, determinism, and replay of FLAG evidence."""

import json

import pytest

from jacobi_orbits import complex_orbits as co
from jacobi_orbits import real_orbits as ro
from jacobi_orbits.audit import FLAG, PASS, report_json, report_text, run_audit
from jacobi_orbits.jacobi import AlgebraElement, GroupElement, adjoint
from jacobi_orbits.labels import Label
from jacobi_orbits.sampling import SamplerConfig

CFG = SamplerConfig(seed=42, trials=60, height_bound=10)

EXPECTED_FLAGS = {
    "L3.3-PiP-display",          # finding A1
    "T3.6-completeness",         # finding A2
    "L3.3-PiZ-sheet",            # finding A3
    "B1-orbit-vs-display",       # finding B1
    "B2-isotropic-coverage",     # finding B2
    "S2-negated-triple-ordering",
}


@pytest.fixture(scope="module")
def records():
    return run_audit(CFG)


def by_id(records):
    return {r.claim_id: r for r in records}


def test_statuses(records):
    table = by_id(records)
    assert set(table) >= EXPECTED_FLAGS
    for claim_id, rec in table.items():
        want = FLAG if claim_id in EXPECTED_FLAGS else PASS
        assert rec.status == want, claim_id


def test_flag_records_carry_evidence(records):
    for rec in records:
        if rec.status == FLAG:
            assert rec.evidence, rec.claim_id


def test_sorted_and_deterministic(records):
    ids = [r.claim_id for r in records]
    assert ids == sorted(ids)
    again = run_audit(CFG)
    blob1 = json.dumps(report_json(records, CFG), sort_keys=True)
    blob2 = json.dumps(report_json(again, CFG), sort_keys=True)
    assert blob1 == blob2


def test_summary_counts(records):
    report = report_json(records, CFG)
    assert report["summary"]["pass"] + report["summary"]["flag"] == len(records)
    assert report["summary"]["flag"] == len(EXPECTED_FLAGS)
    text = report_text(records, CFG)
    assert text.count("FLAG") >= len(EXPECTED_FLAGS)


def test_replay_a1_evidence(records):
    ev = by_id(records)["L3.3-PiP-display"].evidence[0]
    g = GroupElement.from_json(ev["g"])
    start = AlgebraElement.from_json(ev["conjugated_from"])
    elem = AlgebraElement.from_json(ev["element"])
    assert adjoint(g, start) == elem
    assert not ro.displayed_set_contains("PiP", elem)
    assert ro.classify(elem) == ro.classify(start)


def test_replay_a2_evidence(records):
    ev = by_id(records)["T3.6-completeness"].evidence[0]
    elem = AlgebraElement.from_json(ev["element"])
    lab = Label.from_json(ev["label"])
    assert ro.classify(elem) == lab
    assert lab.family == "PiT_R"
    assert not ro.in_listed_nilpotent_family(lab)
    rep = ev["representative"]
    assert rep["exact"]
    rep_elem = AlgebraElement.from_json({k: rep[k] for k in "xyzpqr"})
    w = ev["witness"]
    assert w["exact"]
    g = GroupElement.from_json({k: w[k] for k in
                                ("a", "b", "c", "d", "lambda", "mu", "kappa")})
    assert adjoint(g, rep_elem) == elem


def test_replay_a3_evidence(records):
    ev = by_id(records)["L3.3-PiZ-sheet"].evidence[0]
    plus = AlgebraElement.from_json(ev["element_sheet_plus"])
    minus = AlgebraElement.from_json(ev["element_sheet_minus"])
    from jacobi_orbits.scalars import rat
    alpha = rat(ev["alpha"])
    assert ro.displayed_set_contains("PiZ", plus, alpha=alpha)
    assert ro.displayed_set_contains("PiZ", minus, alpha=alpha)
    assert ro.classify(plus) != ro.classify(minus)
    assert ro.classify(plus).param("sheet") == 1
    assert ro.classify(minus).param("sheet") == -1


def test_replay_b1_evidence(records):
    ev = by_id(records)["B1-orbit-vs-display"].evidence[0]
    h1 = co.PcElem.from_json(ev["h1"])
    h2 = co.PcElem.from_json(ev["h2"])
    from jacobi_orbits.scalars import GaussRational
    delta = GaussRational.from_json(ev["delta"])
    assert co.displayed_set_contains("NJplus_x_delta", h1, delta=delta)
    assert co.displayed_set_contains("NJplus_x_delta", h2, delta=delta)
    assert not co.same_kc_orbit(h1, h2).same
    assert co.classify_kc(h1) != co.classify_kc(h2)


def test_replay_b2_evidence(records):
    ev = by_id(records)["B2-isotropic-coverage"].evidence[0]
    h = co.PcElem.from_json(ev["element"])
    assert co.is_nilpotent_pc(h)
    assert not co.in_listed_nilpotent_family(h)
    assert Label.from_json(ev["label"]) == co.classify_kc(h)


def test_infinitely_many_counts(records):
    table = by_id(records)
    for claim_id in ("T3.6-infinitely-many", "TC-infinitely-many"):
        ev = table[claim_id].evidence[0]
        assert ev["count"] >= 100
