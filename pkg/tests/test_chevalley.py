import random

import pytest

from sharedorbits import linalg
from sharedorbits.chevalley import (
    chevalley_algebra,
    read_structure_file,
    structure_constants_N,
    with_abelian_summand,
    write_structure_file,
)
from sharedorbits.rootsys import SimpleType, build_root_system

EXHAUSTIVE = ["A1", "A2", "A3", "B2", "B3", "B4", "C2", "C3", "D4", "G2", "F4", "E6"]


@pytest.mark.parametrize("t", EXHAUSTIVE)
def test_jacobi_exhaustive(t):
    L = chevalley_algebra(t)
    assert L.dim == SimpleType.parse(t).dimension
    assert L.antisymmetric()
    assert L.jacobi_violations() == 0


def test_jacobi_detects_corruption():
    L = chevalley_algebra("B2")
    from sharedorbits.chevalley import LieAlgebraData

    st = {k: dict(v) for k, v in L.structure.items()}
    (i, j), val = next((k, v) for k, v in sorted(st.items()) if k[0] >= L.rs.rank and k[1] >= L.rs.rank)
    k = next(iter(val))
    st[(i, j)][k] = 2 * val[k]
    st[(j, i)][k] = -2 * val[k]
    assert LieAlgebraData(L.labels, st, L.rs).jacobi_violations() > 0


@pytest.mark.parametrize("t", ["A3", "B3", "C3", "G2", "F4"])
def test_N_is_p_plus_one(t):
    rs = build_root_system(SimpleType.parse(t))
    for (a, b), n in structure_constants_N(rs).items():
        p = 0
        while rs.is_root(tuple(y - (p + 1) * x for x, y in zip(a, b))):
            p += 1
        assert abs(n) == p + 1, (a, b, n)


@pytest.mark.parametrize("t", ["A2", "B3", "G2", "F4"])
def test_root_vectors_ad_nilpotent(t):
    L = chevalley_algebra(t)
    for b in L.rs.all_roots:
        m = L.ad_matrix(L.e(b))
        p = m
        for _ in range(4):
            p = p * m
        assert linalg.is_zero(p), b


@pytest.mark.parametrize("t", ["A2", "B2", "G2", "D4"])
def test_killing_invariance(t):
    L = chevalley_algebra(t)
    K = L.killing_matrix
    rng = random.Random(7)
    for _ in range(30):
        x, y, z = (L.basis_element(rng.randrange(L.dim)) for _ in range(3))
        assert L.killing(L.bracket(x, y), z) + L.killing(y, L.bracket(x, z)) == 0
    assert linalg.rank(K) == L.dim
    assert L.killing_nondegenerate()


def test_cartan_relations():
    L = chevalley_algebra("G2")
    rs = L.rs
    for i in range(rs.rank):
        for b in rs.all_roots:
            assert L.bracket(L.h(i), L.e(b)) == tuple(rs.labels(b)[i] * c for c in L.e(b))
    a = rs.simple_roots[0]
    assert L.bracket(L.e(a), L.e(tuple(-x for x in a))) == L.h(0)


def test_structure_file_round_trip(tmp_path):
    L = chevalley_algebra("B3")
    path = tmp_path / "b3.txt"
    write_structure_file(L, path)
    M = read_structure_file(path)
    assert M.labels == L.labels
    assert {k: v for k, v in M.structure.items() if v} == {k: v for k, v in L.structure.items() if v}


def test_cache_directory(tmp_path, monkeypatch):
    from sharedorbits.chevalley import CACHE_ENV, cache_path, chevalley_basis

    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    rs = build_root_system(SimpleType.parse("C2"))
    chevalley_basis.cache_clear()
    try:
        L = chevalley_basis(rs)
        assert cache_path(rs, tmp_path).exists()
        chevalley_basis.cache_clear()
        M = chevalley_basis(rs)
        assert M.jacobi_violations() == 0 and M.dim == L.dim
    finally:
        chevalley_basis.cache_clear()


def test_abelian_summand():
    L = with_abelian_summand(chevalley_algebra("A1"))
    assert L.dim == 4
    assert L.jacobi_violations() == 0
    assert not L.killing_nondegenerate()
