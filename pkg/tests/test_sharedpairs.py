import json

import pytest

from sharedorbits import linalg
from sharedorbits.characters import adjoint_character, branch_character, peel_decompose, weyl_dim
from sharedorbits.chevalley import chevalley_algebra
from sharedorbits.modules import realize_module
from sharedorbits.nilorbits import OrbitSpec
from sharedorbits.rootsys import SimpleType, build_root_system
from sharedorbits.sharedpairs import (
    CoverSpec,
    VerificationReport,
    catalog,
    dominant_weights_up_to,
    find_record,
    invariant_grading,
    normality_obstruction,
    normality_verdict,
    orbit_data,
    r2_decomposition,
    rank_rule_check,
    v2_dimension,
    verify_chain,
)


def test_catalog_shape():
    recs = catalog()
    assert sorted({r.row for r in recs}) == list(range(1, 10))
    assert len(recs) == 12
    assert {(r.row, r.n) for r in recs if r.n} == {(2, 2), (2, 3), (3, 2), (3, 3), (6, 3), (6, 4)}


@pytest.mark.parametrize("rec", catalog(), ids=lambda r: r.label)
def test_dimension_identity(rec):
    rs = build_root_system(rec.g)
    assert sum(k * weyl_dim(rs, hw) for hw, k in rec.V) == rec.g_prime.dimension - rec.g.dimension


@pytest.mark.parametrize("rec", catalog(), ids=lambda r: r.label)
def test_adjoint_appears_once(rec):
    rs = build_root_system(rec.g)
    parts = dict(peel_decompose(branch_character(adjoint_character(build_root_system(rec.g_prime)), rec.embedding)))
    assert parts[rs.labels(rs.highest_root)] == 1


def test_r2_independent_of_scan_order():
    rec = find_record(8)
    data = orbit_data(rec.orbit.orbit)
    L = data.L
    adj = L.rs.labels(L.rs.highest_root)
    weights = [w for w in dominant_weights_up_to(L.rs, 60) if any(w) and w != adj]
    found = set()
    for hw in reversed(weights):
        d = v2_dimension(L, data.triple, realize_module(L, hw), 2, data.centralizer)
        if d:
            found.add((hw, d))
    assert found == set(r2_decomposition(L, rec.orbit, 60))


@pytest.mark.parametrize("t, spec, hw", [
    ("G2", OrbitSpec.short_root("G2"), (1, 0)),
    ("G2", OrbitSpec.by_dimension("G2", 10), (1, 0)),
    ("B3", OrbitSpec.minimal("B3"), (0, 0, 1)),
    ("D4", OrbitSpec.jordan("D4", (3, 2, 2, 1)), (1, 0, 0, 0)),
])
def test_invariant_grading_totals(t, spec, hw):
    data = orbit_data(spec)
    V = realize_module(data.L, hw)
    grading = invariant_grading(data.L, data.triple, V, data.centralizer)
    blocks = [V.act(x).transpose() for x in data.centralizer]
    assert sum(grading.values()) == len(linalg.nullspace(linalg.vstack(blocks)))
    for k, d in grading.items():
        assert v2_dimension(data.L, data.triple, V, k, data.centralizer) == d


def test_scan_bound_ordering():
    rs = build_root_system(SimpleType.parse("G2"))
    ws = dominant_weights_up_to(rs, 80)
    assert ws[:4] == [(0, 0), (1, 0), (0, 1), (2, 0)]
    assert all(weyl_dim(rs, w) <= 80 for w in ws)


def test_algebra_mismatch_rejected():
    with pytest.raises(ValueError):
        r2_decomposition(chevalley_algebra("B3"), find_record(1).orbit)


def test_normality():
    g2 = normality_obstruction(None, OrbitSpec.short_root("G2"))
    assert g2 == [((1, 0), 1)]
    assert normality_verdict(g2) == "closure not normal"
    assert normality_obstruction(None, OrbitSpec.minimal("B3")) == []
    assert normality_verdict([]) == "inconclusive"


def test_cover_spec_validation():
    with pytest.raises(ValueError):
        CoverSpec(OrbitSpec.minimal("A2"), 0)


def test_rank_rule():
    rep = rank_rule_check(catalog())
    assert rep.passed


def test_chain_bad_link_reported():
    rep = verify_chain([SimpleType.parse("A2"), SimpleType.parse("E6")], find_record(5).orbit)
    assert not rep.passed
    assert "error" in rep.checks[0]


def test_report_json_round_trip():
    rep = VerificationReport("demo", {"row": 1})
    rep.add("a", [1, 2], [1, 2])
    rep.add("b", 3, 4)
    sub = rep.child(VerificationReport("sub"))
    sub.run("boom", lambda: 1 / 0)
    assert not rep.passed
    text = rep.to_json()
    d = json.loads(text)
    assert d["schema"] == "sharedorbits.report/1"
    again = VerificationReport.from_dict(d).to_json()
    assert again == text
    assert "FAIL" in rep.to_text()


def test_record_json():
    d = find_record(9).to_json()
    json.dumps(d)
    assert d["row"] == 9


def test_v2_examples():
    from sharedorbits.modules import trivial_module

    data = orbit_data(OrbitSpec.short_root("G2"))
    assert v2_dimension(data.L, data.triple, realize_module(data.L, (1, 0)), 2) == 1
    data = orbit_data(OrbitSpec.by_dimension("G2", 10))
    assert v2_dimension(data.L, data.triple, realize_module(data.L, (1, 0)), 2) == 2
    assert v2_dimension(data.L, data.triple, trivial_module(data.L), 2) == 0


def test_r2_examples():
    assert r2_decomposition(None, find_record(5).orbit) == [((1, 0), 1), ((0, 1), 1)]
    assert r2_decomposition(None, find_record(7).orbit) == [((0, 0, 0, 1), 1)]
    assert normality_obstruction(None, OrbitSpec.minimal("A1")) == []
