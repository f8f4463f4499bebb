import itertools

import pytest

from sharedorbits import linalg
from sharedorbits.chevalley import chevalley_algebra
from sharedorbits.modules import defining_module
from sharedorbits.nilorbits import (
    OrbitError,
    OrbitSpec,
    centralizer,
    check_partition,
    h_grading,
    is_nilpotent,
    jacobson_morozov,
    jordan_type,
    orbit_dim,
    orbit_element,
    partition_label,
    partition_orbit_dim,
    positive_subsets,
)
from sharedorbits.rootsys import SimpleType


def _partitions(n):
    if n == 0:
        yield ()
        return
    def rec(n, m):
        if n == 0:
            yield ()
        for k in range(min(n, m), 0, -1):
            for rest in rec(n - k, k):
                yield (k,) + rest
    yield from rec(n, n)


def _valid(t, p):
    try:
        check_partition(t, p)
        return True
    except OrbitError:
        return False


CLASSICAL = ["A2", "A3", "B2", "B3", "C2", "C3", "D4"]


@pytest.mark.parametrize("t", CLASSICAL)
def test_partition_formula_agrees_with_ad_rank(t):
    t = SimpleType.parse(t)
    L = chevalley_algebra(t)
    V = defining_module(L)
    for p in _partitions(t.defining_dimension):
        if not _valid(t, p):
            continue
        if t.family == "D" and all(x % 2 == 0 for x in p):
            continue  # very even: two orbits, the search finds one of them
        e = orbit_element(L, OrbitSpec.jordan(t, p))
        d = orbit_dim(L, e)
        assert d % 2 == 0
        assert d == partition_orbit_dim(t, p), p
        assert jordan_type(L, e) == p
        # one Jordan block per part
        assert linalg.rank(V.act(e)) == sum(p) - len(p)


@pytest.mark.parametrize("t", ["G2", "B3", "F4", "A2", "C3"])
def test_triples_and_centralizers(t):
    L = chevalley_algebra(t)
    for spec in (OrbitSpec.minimal(t), OrbitSpec.short_root(t), OrbitSpec.principal(t)):
        e = orbit_element(L, spec)
        assert is_nilpotent(L, e)
        tr = jacobson_morozov(L, e)
        assert tr.is_valid, tr.violations()
        cent = centralizer(L, e)
        assert len(cent) == L.dim - orbit_dim(L, e)
        grading = h_grading(L, tr.h)
        # sl2-summands of g are counted by the eigenvalues 0 and 1 of ad h
        assert grading.dims.get(0, 0) + grading.dims.get(1, 0) == len(cent)
        if all(k % 2 == 0 for k in grading.dims):
            assert len(linalg.nullspace(L.ad_matrix(tr.h))) == len(cent)
        assert grading.total == L.dim


def test_known_dimensions():
    cases = [("G2", OrbitSpec.short_root("G2"), 8), ("G2", OrbitSpec.by_dimension("G2", 10), 10),
             ("G2", OrbitSpec.principal("G2"), 12), ("F4", OrbitSpec.minimal("F4"), 16),
             ("F4", OrbitSpec.short_root("F4"), 22), ("E6", OrbitSpec.minimal("E6"), 22),
             ("B4", OrbitSpec.jordan("B4", (2, 2, 2, 2, 1)), 16), ("D4", OrbitSpec.jordan("D4", (3, 2, 2, 1)), 16)]
    for t, spec, d in cases:
        L = chevalley_algebra(t)
        assert orbit_dim(L, orbit_element(L, spec)) == d, spec.label


def test_by_dimension_is_deterministic():
    L = chevalley_algebra("G2")
    spec = OrbitSpec.by_dimension("G2", 10)
    assert orbit_element(L, spec) == orbit_element(L, spec)
    subsets = list(itertools.islice(positive_subsets(L), 20))
    assert subsets == list(itertools.islice(positive_subsets(L), 20))
    assert [len(s) for s in subsets] == sorted(len(s) for s in subsets)


def test_partition_validation():
    assert check_partition("C2", (2, 2)) == (2, 2)
    with pytest.raises(OrbitError):
        check_partition("C3", (3, 2, 1))
    with pytest.raises(OrbitError):
        check_partition("B3", (2, 1, 1, 1, 1, 1))
    with pytest.raises(OrbitError):
        check_partition("G2", (1,))
    with pytest.raises(OrbitError):
        OrbitSpec.jordan("A2", (2, 2))
    assert partition_label((3, 2, 2, 1)) == "(3,2^2,1)"


def test_odd_dimension_rejected():
    with pytest.raises(OrbitError):
        orbit_element(chevalley_algebra("G2"), OrbitSpec.by_dimension("G2", 9))


def test_spec_json():
    d = OrbitSpec.jordan("B4", (2, 2, 2, 2, 1)).to_json()
    assert d == {"algebra": "B4", "kind": "jordan_type", "data": [2, 2, 2, 2, 1], "label": "Jordan type (2^4,1)"}


def test_grading_respects_brackets():
    import random

    L = chevalley_algebra("B3")
    tr = jacobson_morozov(L, orbit_element(L, OrbitSpec.short_root("B3")))
    assert h_grading(L, tr.h).bracket_violations(L, random.Random(3), 20) == 0
