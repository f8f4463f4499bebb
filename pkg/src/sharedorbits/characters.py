"""Weight multiplicities, dimensions, branching and decomposition of characters.

Weights are tuples of Dynkin labels.  A :class:`Character` is a finite map
weight -> multiplicity; all arithmetic on it is exact.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .rootsys import Embedding, RootSystem, Vec


class Character:
    """A formal character: nonnegative integer multiplicities on weights."""

    __slots__ = ("rs", "mults")

    def __init__(self, rs: RootSystem, mults: Mapping[Vec, int]):
        self.rs = rs
        self.mults = {tuple(w): int(m) for w, m in mults.items() if m}

    def __repr__(self):
        return f"Character({self.rs!r}, dim={self.dim})"

    def __eq__(self, other):
        return isinstance(other, Character) and self.rs.cartan_matrix == other.rs.cartan_matrix and self.mults == other.mults

    def __hash__(self):
        return hash(frozenset(self.mults.items()))

    @property
    def dim(self) -> int:
        return sum(self.mults.values())

    def __getitem__(self, w) -> int:
        return self.mults.get(tuple(w), 0)

    def __add__(self, other: "Character") -> "Character":
        out = Counter(self.mults)
        out.update(other.mults)
        return Character(self.rs, out)

    def __sub__(self, other: "Character") -> "Character":
        out = dict(self.mults)
        for w, m in other.mults.items():
            out[w] = out.get(w, 0) - m
        return Character(self.rs, out)

    def scale(self, k: int) -> "Character":
        return Character(self.rs, {w: k * m for w, m in self.mults.items()})

    def dual(self) -> "Character":
        return Character(self.rs, {tuple(-x for x in w): m for w, m in self.mults.items()})

    def is_nonnegative(self) -> bool:
        return all(m > 0 for m in self.mults.values())

    def dominant_weights(self) -> list[Vec]:
        return sorted((w for w in self.mults if self.rs.is_dominant(w)), key=self._order)

    def is_weyl_invariant(self) -> bool:
        rs = self.rs
        return all(self[rs.reflect(w, i)] == m for w, m in self.mults.items() for i in range(rs.rank))

    def _order(self, w):
        return (-self.rs.weight_height(w), tuple(-x for x in w))


def _check_dominant(rs: RootSystem, hw) -> Vec:
    hw = tuple(int(x) for x in hw)
    if len(hw) != rs.rank:
        raise ValueError(f"highest weight {hw} has the wrong length for {rs!r}")
    if not rs.is_dominant(hw):
        raise ValueError(f"highest weight {hw} is not dominant")
    return hw


def _root_dot(rs: RootSystem, lam, beta) -> Fraction:
    # (lam, beta) for a weight lam in labels and a root beta in root coordinates
    return sum((Fraction(b * rs.gram[i][i], 2) * lam[i] for i, b in enumerate(beta) if b), Fraction(0))


def weyl_dim(rs: RootSystem, hw) -> int:
    """Weyl dimension formula: product over positive roots of (lam+rho, b)/(rho, b)."""
    hw = _check_dominant(rs, hw)
    lr = tuple(x + 1 for x in hw)
    num = Fraction(1)
    for b in rs.positive_roots:
        num *= _root_dot(rs, lr, b) / _root_dot(rs, rs.rho, b)
    if num.denominator != 1:
        raise AssertionError("Weyl dimension is not an integer")
    return int(num)


def dominant_weights_below(rs: RootSystem, hw) -> list[Vec]:
    """Dominant weights mu <= hw, found by subtracting positive roots."""
    hw = _check_dominant(rs, hw)
    labels = [rs.labels(b) for b in rs.positive_roots]
    seen = {hw}
    frontier = [hw]
    while frontier:
        new = []
        for mu in frontier:
            for lab in labels:
                nu = tuple(x - y for x, y in zip(mu, lab))
                if nu not in seen and rs.is_dominant(nu):
                    seen.add(nu)
                    new.append(nu)
        frontier = new
    return sorted(seen, key=lambda m: (-rs.weight_height(m), tuple(-x for x in m)))


@lru_cache(maxsize=None)
def _dominant_multiplicities(rs: RootSystem, hw: Vec) -> dict:
    doms = dominant_weights_below(rs, hw)
    dom_set = set(doms)
    pos = [(b, rs.labels(b)) for b in rs.positive_roots]
    rho = rs.rho
    lr = tuple(x + y for x, y in zip(hw, rho))
    norm_top = rs.weight_inner(lr, lr)
    mult = {hw: 1}
    conj_cache: dict = {}

    def m_of(w):
        d = conj_cache.get(w)
        if d is None:
            d = conj_cache[w] = rs.dominant_conjugate(w)
        return mult.get(d, 0) if d in dom_set else 0

    for mu in doms[1:]:
        total = Fraction(0)
        for b, lab in pos:
            k = 1
            while True:
                w = tuple(x + k * y for x, y in zip(mu, lab))
                if rs.dominant_conjugate(w) not in dom_set:
                    break
                m = m_of(w)
                if m:
                    total += m * _root_dot(rs, w, b)
                k += 1
        mr = tuple(x + y for x, y in zip(mu, rho))
        denom = norm_top - rs.weight_inner(mr, mr)
        val = 2 * total / denom
        if val.denominator != 1:
            raise AssertionError("Freudenthal recursion produced a non-integer")
        mult[mu] = int(val)
    return {w: m for w, m in mult.items() if m}


def freudenthal_character(rs: RootSystem, hw) -> Character:
    """Character of the irreducible module with highest weight ``hw``.

    Dominant multiplicities come from Freudenthal's recursion; the rest of the
    character is filled in by Weyl-group orbits.
    """
    hw = _check_dominant(rs, hw)
    out = {}
    for mu, m in _dominant_multiplicities(rs, hw).items():
        for w in rs.weyl_orbit(mu):
            out[w] = m
    return Character(rs, out)


def adjoint_character(rs: RootSystem) -> Character:
    mults = Counter(rs.labels(b) for b in rs.all_roots)
    mults[(0,) * rs.rank] += rs.rank
    return Character(rs, mults)


def trivial_character(rs: RootSystem) -> Character:
    return Character(rs, {(0,) * rs.rank: 1})


def peel_decompose(c: Character) -> list[tuple[Vec, int]]:
    """Split a character into irreducibles by repeatedly removing the module
    generated by a highest dominant weight.  Raises ``ValueError`` if a
    multiplicity goes negative."""
    rs = c.rs
    rest = dict(c.mults)
    out: Counter = Counter()
    while rest:
        if any(m < 0 for m in rest.values()):
            raise ValueError("not a genuine character")
        doms = [w for w in rest if rs.is_dominant(w)]
        if not doms:
            raise ValueError("not a genuine character")
        top = max(doms, key=lambda w: (rs.weight_height(w), w))
        k = rest[top]
        for w, m in freudenthal_character(rs, top).mults.items():
            r = rest.get(w, 0) - k * m
            if r:
                rest[w] = r
            else:
                rest.pop(w, None)
        out[top] += k
    return sorted(out.items(), key=lambda t: (-rs.weight_height(t[0]), tuple(-x for x in t[0])))


def character_of(rs: RootSystem, decomposition: Iterable[tuple[Vec, int]]) -> Character:
    total = Character(rs, {})
    for hw, k in decomposition:
        total = total + freudenthal_character(rs, hw).scale(k)
    return total


def branch_character(c: Character, embedding: Embedding) -> Character:
    """Restrict a character of ``embedding.source`` to ``embedding.target``."""
    if c.rs.cartan_matrix != embedding.source.cartan_matrix:
        raise ValueError("character does not live on the embedding's source")
    out: Counter = Counter()
    for w, m in c.mults.items():
        out[embedding.restrict(w)] += m
    return Character(embedding.target, out)


def tensor_character(a: Character, b: Character) -> Character:
    out: Counter = Counter()
    for w, m in a.mults.items():
        for v, n in b.mults.items():
            out[tuple(x + y for x, y in zip(w, v))] += m * n
    return Character(a.rs, out)


def dual_weight(rs: RootSystem, hw) -> Vec:
    """Highest weight of the dual module, -w0(hw)."""
    return rs.dominant_conjugate(tuple(-x for x in hw))
