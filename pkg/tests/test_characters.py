import pytest
from hypothesis import given
from hypothesis import strategies as st

from sharedorbits.characters import (
    adjoint_character,
    branch_character,
    character_of,
    freudenthal_character,
    peel_decompose,
    tensor_character,
    trivial_character,
    weyl_dim,
)
from sharedorbits.rootsys import SimpleType, build_root_system, fold

KNOWN = [("G2", (1, 0), 7), ("G2", (0, 1), 14), ("G2", (2, 0), 27), ("F4", (0, 0, 0, 1), 26),
         ("F4", (1, 0, 0, 0), 52), ("E6", (1, 0, 0, 0, 0, 0), 27), ("E6", (0, 1, 0, 0, 0, 0), 78),
         ("B4", (0, 0, 0, 1), 16), ("D4", (1, 0, 1, 1), 350), ("C3", (0, 0, 1), 14), ("E8", (0,) * 7 + (1,), 248),
         ("A3", (0, 1, 0), 6), ("B3", (1, 0, 1), 48)]


@pytest.mark.parametrize("t, hw, d", KNOWN)
def test_weyl_dim_and_freudenthal(t, hw, d):
    rs = build_root_system(SimpleType.parse(t))
    assert weyl_dim(rs, hw) == d
    if t != "E8":
        c = freudenthal_character(rs, hw)
        assert c.dim == d
        assert c.is_weyl_invariant()


def test_adjoint_is_highest_root_module():
    for t in ["A2", "B3", "G2", "F4"]:
        rs = build_root_system(SimpleType.parse(t))
        assert freudenthal_character(rs, rs.labels(rs.highest_root)) == adjoint_character(rs)


def test_tensor_decomposition_a2():
    rs = build_root_system(SimpleType.parse("A2"))
    c = tensor_character(freudenthal_character(rs, (1, 0)), freudenthal_character(rs, (0, 1)))
    assert sorted(peel_decompose(c)) == [((0, 0), 1), ((1, 1), 1)]


weights = st.tuples(st.integers(0, 2), st.integers(0, 2))


@given(st.lists(st.tuples(weights, st.integers(1, 2)), min_size=1, max_size=3, unique_by=lambda x: x[0]))
def test_peel_round_trip_b2(items):
    rs = build_root_system(SimpleType.parse("B2"))
    c = character_of(rs, items)
    assert sorted(peel_decompose(c)) == sorted(items)


@given(st.lists(st.tuples(weights, st.integers(1, 2)), min_size=1, max_size=2, unique_by=lambda x: x[0]))
def test_peel_round_trip_g2(items):
    items = [(hw, k) for hw, k in items if sum(hw) <= 2]
    rs = build_root_system(SimpleType.parse("G2"))
    c = character_of(rs, items)
    assert sorted(peel_decompose(c)) == sorted(items)


def test_peel_rejects_non_characters():
    rs = build_root_system(SimpleType.parse("A1"))
    c = freudenthal_character(rs, (2,)) - trivial_character(rs) - trivial_character(rs)
    with pytest.raises(ValueError):
        peel_decompose(c)


@pytest.mark.parametrize("source, aut, target, hw", [
    ("D4", (2, 1, 3, 0), "G2", (0, 1, 0, 0)),
    ("E6", (5, 1, 4, 3, 2, 0), "F4", (0, 1, 0, 0, 0, 0)),
    ("E6", (5, 1, 4, 3, 2, 0), "F4", (1, 0, 0, 0, 0, 0)),
    ("A3", (2, 1, 0), "C2", (1, 0, 0)),
])
def test_branching_preserves_dimension(source, aut, target, hw):
    src = build_root_system(SimpleType.parse(source))
    f = fold(src, aut, [SimpleType.parse(target)])
    c = freudenthal_character(src, hw)
    b = branch_character(c, f)
    assert b.dim == c.dim
    assert sum(k * weyl_dim(f.target, w) for w, k in peel_decompose(b)) == c.dim


def test_known_branchings():
    d4 = build_root_system(SimpleType.parse("D4"))
    f = fold(d4, (2, 1, 3, 0), [SimpleType.parse("G2")])
    assert sorted(peel_decompose(branch_character(adjoint_character(d4), f))) == [((0, 1), 1), ((1, 0), 2)]
    e6 = build_root_system(SimpleType.parse("E6"))
    f = fold(e6, (5, 1, 4, 3, 2, 0), [SimpleType.parse("F4")])
    assert sorted(peel_decompose(branch_character(adjoint_character(e6), f))) == [((0, 0, 0, 1), 1), ((1, 0, 0, 0), 1)]


def test_equal_rank_branching_sp4():
    from sharedorbits.rootsys import closed_subsystem

    c2 = build_root_system(SimpleType.parse("C2"))
    s = closed_subsystem(c2, [b for b in c2.all_roots if c2.is_long(b)])
    assert [str(t) for t in s.types] == ["A1", "A1"]
    # ad(sp2) + ad(sp2) + C^2 (x) C^2
    assert sorted(peel_decompose(branch_character(adjoint_character(c2), s.embedding))) == [
        ((0, 2), 1), ((1, 1), 1), ((2, 0), 1)]
