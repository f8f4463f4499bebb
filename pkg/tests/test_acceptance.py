"""End-to-end acceptance checks, one per criterion, all exact.

Run under pytest (a summary line per criterion is printed at the end) or
directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import sys
import time

import pytest

from sharedorbits import chevalley_algebra
from sharedorbits.characters import freudenthal_character, weyl_dim
from sharedorbits.cli import GRADING_TYPES
from sharedorbits.poisson import (
    DEFAULT_SEED,
    grading_check,
    standard_semidirect,
    symplectic_model,
    symplectic_model_report,
    semidirect_trials,
)
from sharedorbits.rootsys import SimpleType, build_root_system
from sharedorbits.sharedpairs import (
    DEFAULT_SCAN_BOUND,
    OrbitSpec,
    catalog,
    chain_report,
    dominant_weights_up_to,
    find_record,
    normality_obstruction,
    r1_detect,
    rank_rule_check,
    verify_pair,
)

RESULTS: dict[int, tuple[bool, str]] = {}

ORBIT_DIMS = {(1, None): 8, (2, 2): 6, (2, 3): 10, (3, 2): 6, (3, 3): 10, (4, None): 22, (5, None): 6,
              (6, 3): 8, (6, 4): 12, (7, None): 16, (8, None): 16, (9, None): 10}
R2_ROWS = [(1, None), (2, 2), (3, 2), (5, None), (6, 3), (7, None), (8, None), (9, None)]
JACOBI_TYPES = ("A1", "A2", "A3", "B2", "B3", "B4", "C2", "C3", "D4", "G2", "F4", "E6")


def _check(report, name: str) -> dict:
    hits = [c for c in report.checks if c["check"] == name]
    assert len(hits) == 1, f"{name!r} not in {report.name}"
    return hits[0]


_pair_cache: dict = {}


def _pair_report(rec):
    key = (rec.row, rec.n)
    if key not in _pair_cache:
        _pair_cache[key] = verify_pair(rec)
    return _pair_cache[key]


def criterion_1():
    bad = []
    for rec in catalog():
        rs, rsp = build_root_system(rec.g), build_root_system(rec.g_prime)
        lhs = rsp.rank + len(rsp.all_roots)
        rhs = rs.rank + len(rs.all_roots) + sum(k * weyl_dim(rs, hw) for hw, k in rec.V)
        if lhs != rhs:
            bad.append(f"{rec.label}: {lhs} != {rhs}")
    return not bad, f"{len(catalog())} records" + (f"; {bad}" if bad else "")


def criterion_2():
    bad = [r.label for r in catalog() if not _check(_pair_report(r), "branching ad(g') = ad(g) + V")["passed"]]
    kinds = sorted({type(r.embedding).__name__ for r in catalog()})
    return not bad, f"embeddings {kinds}" + (f"; failed {bad}" if bad else "")


def criterion_3():
    bad = []
    for rec in catalog():
        rep = _pair_report(rec)
        c = _check(rep, "orbit dimension shared")
        want = ORBIT_DIMS[(rec.row, rec.n)]
        if not c["passed"] or c["computed"]["g"] != want:
            bad.append(rec.label)
        oracle = [x for x in rep.checks if x["check"] == "orbit dimension by partition formula"]
        if oracle and not oracle[0]["passed"]:
            bad.append(rec.label + " (partition formula)")
    n_oracle = sum(1 for r in catalog() if any(x["check"] == "orbit dimension by partition formula"
                                               for x in _pair_report(r).checks))
    return not bad, f"ad-rank oracle on 12 records, partition oracle on {n_oracle}" + (f"; {bad}" if bad else "")


def criterion_4():
    bad, mult9 = [], None
    for row, n in R2_ROWS:
        c = _check(_pair_report(find_record(row, n)), "R[2] decomposition")
        if not c["passed"]:
            bad.append((row, n))
        if row == 9:
            mult9 = c["computed"]
    ok = not bad and mult9 == [[[1, 0], 2]]
    return ok, f"row 9 R[2] = {mult9}" + (f"; failed {bad}" if bad else "")


def criterion_5():
    reps = {n: symplectic_model_report(n) for n in (2, 3)}
    want = {2: 10, 3: 21}
    ok = all(r.passed for r in reps.values())
    ok &= all(_check(reps[n], "dim span of quadratics = dim sp(2n)")["computed"] == want[n] for n in reps)
    nonempty = [r.label for r in catalog() if r1_detect(None, r.orbit)]
    return ok and not nonempty, f"sp(4), sp(6) models {'pass' if ok else 'fail'}; r1 nonempty on {nonempty}"


def criterion_6():
    out = []
    ok = True
    for name in ("sl2", "sl3", "sp4"):
        res = semidirect_trials(standard_semidirect(name), 100, DEFAULT_SEED)
        ok &= res["agree"] == 100
        out.append(f"{name} {res['agree']}/100")
    return ok, ", ".join(out)


def criterion_7():
    t = SimpleType.parse("G2")
    obs = normality_obstruction(None, OrbitSpec.short_root(t))
    dims = [(list(hw), k, weyl_dim(build_root_system(t), hw)) for hw, k in obs]
    return obs == [((1, 0), 1)], f"obstruction {dims}"


def criterion_8():
    jac = {t: chevalley_algebra(t).jacobi_violations() for t in JACOBI_TYPES}
    labels = set()
    for rec in catalog():
        rs = build_root_system(rec.g)
        labels |= {(str(rec.g), tuple(hw)) for hw, _ in rec.V}
        labels.add((str(rec.g), rs.labels(rs.highest_root)))
        labels |= {(str(rec.g), tuple(w)) for w in dominant_weights_up_to(rs, DEFAULT_SCAN_BOUND)}
    fr_bad = [x for x in labels
              if freudenthal_character(build_root_system(SimpleType.parse(x[0])), x[1]).dim
              != weyl_dim(build_root_system(SimpleType.parse(x[0])), x[1])]
    grading = [grading_check(chevalley_algebra(t), 50, DEFAULT_SEED) for t in GRADING_TYPES]
    grading += [grading_check(symplectic_model(n).algebra, 50, DEFAULT_SEED) for n in (2, 3)]
    gr_bad = [g.name for g in grading if not g.passed]
    ok = not any(jac.values()) and not fr_bad and not gr_bad
    return ok, (f"Jacobi violations {sum(jac.values())} over {len(jac)} algebras; "
                f"Freudenthal {len(labels) - len(fr_bad)}/{len(labels)} labels; "
                f"grading {len(grading) - len(gr_bad)}/{len(grading)} algebras x 50 pairs")


def criterion_9():
    out, ok = [], True
    for name, d in (("a", 16), ("b", 10)):
        rep = chain_report(name)
        dims = _check(rep, "orbit dimensions along the chain")["computed"]
        ok &= rep.passed and dims == [d] * len(dims)
        out.append(f"({name}) {dims}")
    return ok, ", ".join(out)


def criterion_10():
    rep = rank_rule_check(catalog())
    return rep.passed, f"{len(rep.checks)} rank checks"


CRITERIA = {
    1: ("dimension identities", criterion_1),
    2: ("branching ad(g') = ad(g) + V", criterion_2),
    3: ("shared orbit dimensions", criterion_3),
    4: ("R[2] reproduces V", criterion_4),
    5: ("symplectic model and R[1]", criterion_5),
    6: ("semidirect sum orbit dimensions", criterion_6),
    7: ("normality flag for the G2 8-dimensional orbit", criterion_7),
    8: ("structural property suites", criterion_8),
    9: ("chains", criterion_9),
    10: ("rank rule", criterion_10),
}


def evaluate(k: int) -> tuple[bool, str]:
    title, fn = CRITERIA[k]
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    detail = f"{detail} [{time.perf_counter() - t0:.1f}s]"
    RESULTS[k] = (bool(ok), detail)
    print(format_line(k))
    return RESULTS[k]


def format_line(k: int) -> str:
    ok, detail = RESULTS[k]
    return f"criterion {k:>2} {'PASS' if ok else 'FAIL'}: {CRITERIA[k][0]} -- {detail}"


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    ok, detail = evaluate(k)
    assert ok, detail


if __name__ == "__main__":
    results = [evaluate(k)[0] for k in sorted(CRITERIA)]
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
