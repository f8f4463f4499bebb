import pytest

from sharedorbits import linalg
from sharedorbits.characters import freudenthal_character, weyl_dim
from sharedorbits.chevalley import chevalley_algebra
from sharedorbits.modules import (
    ModuleError,
    adjoint_module,
    defining_form,
    defining_generators,
    defining_module,
    dual_module,
    minuscule_module,
    module_from_generators,
    realize_module,
    spin_module,
    trivial_module,
)
from sharedorbits.rootsys import SimpleType


def _same_weights(m, hw):
    return m.character == freudenthal_character(m.L.rs, hw)


@pytest.mark.parametrize("t", ["A1", "A3", "B2", "B3", "C2", "C3", "D4", "D5"])
def test_defining_modules(t):
    L = chevalley_algebra(t)
    V = defining_module(L)
    assert V.dim == SimpleType.parse(t).defining_dimension
    assert V.homomorphism_violations() == 0
    assert _same_weights(V, (1,) + (0,) * (L.rs.rank - 1))


@pytest.mark.parametrize("t", ["B2", "B3", "C2", "C3", "D4"])
def test_defining_form_is_invariant(t):
    L = chevalley_algebra(t)
    V = defining_module(L)
    J = defining_form(L.rs.type)
    for a in range(L.dim):
        x = V.action[a]
        assert linalg.is_zero(x.transpose() * J + J * x)


@pytest.mark.parametrize("t, half", [("B3", None), ("B4", None), ("D4", 2), ("D4", 3), ("D5", 4)])
def test_spin_modules(t, half):
    L = chevalley_algebra(t)
    S = spin_module(L, half)
    assert S.homomorphism_violations() == 0
    r = L.rs.rank
    hw = tuple(int(i == (r - 1 if half is None else half)) for i in range(r))
    assert _same_weights(S, hw)
    assert S.dim == weyl_dim(L.rs, hw)


@pytest.mark.parametrize("t, hw", [("E6", (1, 0, 0, 0, 0, 0)), ("A3", (0, 1, 0)), ("D4", (0, 0, 1, 0))])
def test_minuscule(t, hw):
    L = chevalley_algebra(t)
    m = minuscule_module(L, hw)
    assert m.homomorphism_violations() == 0
    assert _same_weights(m, hw)


@pytest.mark.parametrize("t, hw", [
    ("G2", (1, 0)),
    ("G2", (2, 0)),
    ("F4", (0, 0, 0, 1)),
    ("B3", (1, 0, 1)),
    ("C3", (0, 0, 1)),
    ("A2", (2, 1)),
    ("B2", (1, 1)),
])
def test_realize_module_matches_freudenthal(t, hw):
    L = chevalley_algebra(t)
    m = realize_module(L, hw)
    assert m.dim == weyl_dim(L.rs, hw)
    assert _same_weights(m, hw)
    assert m.homomorphism_violations() == 0


def test_realize_module_is_cached():
    L = chevalley_algebra("G2")
    assert realize_module(L, (1, 0)) is realize_module(L, (1, 0))


def test_trivial_adjoint_dual():
    L = chevalley_algebra("B2")
    assert trivial_module(L).dim == 1
    ad = adjoint_module(L)
    assert ad.homomorphism_violations() == 0
    assert _same_weights(ad, L.rs.labels(L.rs.highest_root))
    d = dual_module(defining_module(chevalley_algebra("A2")))
    assert d.homomorphism_violations() == 0
    assert _same_weights(d, (0, 1))


def test_bad_generators_rejected():
    e, f = defining_generators(SimpleType.parse("A2"))
    with pytest.raises(ModuleError):
        module_from_generators(chevalley_algebra("A2"), [e[0], e[0]], f)
