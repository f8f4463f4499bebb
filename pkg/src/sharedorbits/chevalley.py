"""Chevalley bases with integer structure constants.

Basis order: ``h_1 .. h_r`` (simple coroots), then ``e_beta`` for the positive
roots in the order of :class:`RootSystem`, then ``e_{-beta}`` in the same order.

Normalisation: ``[e_beta, e_{-beta}] = h_beta`` (the coroot), ``[h_i, e_beta] =
<beta, alpha_i^vee> e_beta`` and ``[e_a, e_b] = N_{a,b} e_{a+b}`` with
``N_{-a,-b} = -N_{a,b}``.  Signs come from the extraspecial-pair algorithm:
for every non-simple positive root xi, the extraspecial pair (a, b) is the one
whose first root a comes earliest in the positive-root order, and N_{a,b} is
taken to be +(p + 1).  All other constants follow from the standard identities
(antisymmetry, the cyclic rule for a + b + c = 0, and the four-term rule for
a + b + c + d = 0).
"""

from __future__ import annotations

import itertools
import os
from fractions import Fraction
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Mapping, Sequence

import flint

from . import linalg
from .rootsys import RootSystem, SimpleType, build_root_system

CACHE_ENV = "SHAREDORBITS_CACHE"

Element = tuple  # rational coefficient vector over the basis


class LieAlgebraData:
    """A finite-dimensional Lie algebra given by a structure-constant table.

    ``structure[(i, j)]`` maps k to c^k_{ij}, for every ordered pair with a
    nonzero bracket.  Algebras built by :func:`chevalley_basis` also carry the
    root system and the root-vector indexing.
    """

    def __init__(self, labels: Sequence[str], structure: Mapping, rs: RootSystem | None = None, name: str = ""):
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.structure = {k: dict(v) for k, v in structure.items() if any(v.values())}
        self.rs = rs
        self.name = name or (str(rs.types[0]) if rs is not None and rs.is_simple else "")
        if rs is not None:
            self.rank = rs.rank
            self.root_index = {b: rs.rank + i for i, b in enumerate(rs.all_roots)}

    def __repr__(self):
        return f"LieAlgebraData({self.name or '?'}, dim={self.dim})"

    # -- elements -----------------------------------------------------------
    def zero(self) -> Element:
        return (Fraction(0),) * self.dim

    def basis_element(self, i: int) -> Element:
        return tuple(Fraction(int(k == i)) for k in range(self.dim))

    def vector(self, coeffs: Mapping[int, object]) -> Element:
        v = [Fraction(0)] * self.dim
        for k, c in coeffs.items():
            v[k] += linalg.to_fraction(c)
        return tuple(v)

    def e(self, root) -> Element:
        return self.basis_element(self.root_index[tuple(root)])

    def h(self, i: int) -> Element:
        return self.basis_element(i)

    def coroot(self, root) -> Element:
        """h_beta = [e_beta, e_{-beta}] expressed in the basis."""
        neg = tuple(-x for x in root)
        return self.bracket(self.e(root), self.e(neg))

    # -- brackets -----------------------------------------------------------
    def bracket_basis(self, i: int, j: int) -> dict:
        return self.structure.get((i, j), {})

    def bracket(self, x: Element, y: Element) -> Element:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("dimension mismatch")
        out = [Fraction(0)] * self.dim
        xs = [(i, c) for i, c in enumerate(x) if c]
        ys = [(j, c) for j, c in enumerate(y) if c]
        for i, a in xs:
            for j, b in ys:
                for k, c in self.structure.get((i, j), {}).items():
                    out[k] += a * b * c
        return tuple(out)

    @cached_property
    def ad_basis(self) -> tuple:
        mats = []
        for i in range(self.dim):
            m = flint.fmpq_mat(self.dim, self.dim)
            for j in range(self.dim):
                for k, c in self.structure.get((i, j), {}).items():
                    m[k, j] = linalg.q(c)
            mats.append(m)
        return tuple(mats)

    def ad_matrix(self, x: Element) -> flint.fmpq_mat:
        if len(x) != self.dim:
            raise ValueError("dimension mismatch")
        m = flint.fmpq_mat(self.dim, self.dim)
        for i, c in enumerate(x):
            if c:
                m += self.ad_basis[i] * linalg.q(c)
        return m

    # -- invariants ---------------------------------------------------------
    @cached_property
    def killing_matrix(self) -> flint.fmpq_mat:
        # K_ab = tr(ad_a ad_b) = <vec(ad_a), vec(ad_b^T)>
        n = self.dim
        flat = flint.fmpq_mat(n, n * n)
        flat_t = flint.fmpq_mat(n, n * n)
        for (a, j), out in self.structure.items():
            for k, c in out.items():
                flat[a, k * n + j] = linalg.q(c)
                flat_t[a, j * n + k] = linalg.q(c)
        return flat * flat_t.transpose()

    def killing(self, x: Element, y: Element) -> Fraction:
        ky = linalg.mat_vec(self.killing_matrix, y)
        return linalg.to_fraction(sum((linalg.q(a) * b for a, b in zip(x, ky)), linalg.ZERO))

    def killing_nondegenerate(self) -> bool:
        return linalg.rank(self.killing_matrix) == self.dim

    def jacobi_violations(self, triples=None) -> int:
        """Count basis triples (i < j < k) violating the Jacobi identity."""
        st = self.structure

        def br(i, vec):
            out = {}
            for j, a in vec.items():
                for k, c in st.get((i, j), {}).items():
                    out[k] = out.get(k, 0) + a * c
            return out

        bad = 0
        it = triples if triples is not None else itertools.combinations(range(self.dim), 3)
        for i, j, k in it:
            tot = {}
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                # [[a, b], c] = -[c, [a, b]]
                for m, v in br(c, dict(st.get((a, b), {}))).items():
                    tot[m] = tot.get(m, 0) - v
            if any(tot.values()):
                bad += 1
        return bad

    def antisymmetric(self) -> bool:
        for (i, j), v in self.structure.items():
            w = self.structure.get((j, i), {})
            keys = set(v) | set(w)
            if any(v.get(k, 0) + w.get(k, 0) for k in keys):
                return False
        return True


def with_abelian_summand(L: LieAlgebraData, k: int = 1) -> LieAlgebraData:
    """L plus a k-dimensional abelian ideal (a radical); used as a degenerate example."""
    labels = list(L.labels) + [f"z{i + 1}" for i in range(k)]
    return LieAlgebraData(labels, L.structure, None, name=f"{L.name}+C^{k}")


# -- Chevalley construction -------------------------------------------------

def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _neg(a):
    return tuple(-x for x in a)


def structure_constants_N(rs: RootSystem) -> dict:
    """All N_{a,b} for roots a, b with a + b a root."""
    is_root, is_pos = rs.is_root, rs.is_positive
    pos = rs.positive_roots

    def p_of(a, b):
        p = 0
        while is_root(tuple(y - (p + 1) * x for x, y in zip(a, b))):
            p += 1
        return p

    extra = {}
    for xi in pos:
        if sum(xi) == 1:
            continue
        for a in pos:
            b = tuple(x - y for x, y in zip(xi, a))
            if is_pos(b):
                extra[xi] = (a, b)
                break

    memo: dict = {}
    l2 = rs.length2

    def N(a, b):
        s = _add(a, b)
        if not is_root(s):
            return 0
        key = (a, b)
        if key in memo:
            return memo[key]
        if is_pos(a) and is_pos(b):
            if rs.positive_order(b) < rs.positive_order(a):
                val = -N(b, a)
            else:
                g, d = extra[s]
                if (a, b) == (g, d):
                    val = p_of(a, b) + 1
                else:
                    t = Fraction(0)
                    bg = tuple(x - y for x, y in zip(b, g))
                    if is_root(bg):
                        t += Fraction(N(b, _neg(g)) * N(a, _neg(d)), l2(bg))
                    ag = tuple(x - y for x, y in zip(a, g))
                    if is_root(ag):
                        t += Fraction(N(_neg(g), a) * N(b, _neg(d)), l2(ag))
                    val = Fraction(l2(s)) * t / N(g, d)
        elif not is_pos(a) and not is_pos(b):
            val = -N(_neg(a), _neg(b))
        else:
            c = _neg(s)
            if is_pos(a):
                val = Fraction(l2(c), l2(a)) * N(b, c) if not is_pos(c) else Fraction(l2(c), l2(b)) * N(c, a)
            else:
                val = Fraction(l2(c), l2(b)) * N(c, a) if not is_pos(c) else Fraction(l2(c), l2(a)) * N(b, c)
        val = Fraction(val)
        if val.denominator != 1:
            raise AssertionError(f"non-integral structure constant N{a},{b} = {val}")
        memo[key] = int(val)
        return memo[key]

    table = {}
    for a in rs.all_roots:
        for b in rs.all_roots:
            if is_root(_add(a, b)):
                table[(a, b)] = N(a, b)
    return table


def _root_label(b) -> str:
    return "e[" + ",".join(str(x) for x in b) + "]"


def _build(rs: RootSystem) -> LieAlgebraData:
    r = rs.rank
    roots = rs.all_roots
    idx = {b: r + i for i, b in enumerate(roots)}
    labels = [f"h{i + 1}" for i in range(r)] + [_root_label(b) for b in roots]
    st: dict = {}

    def put(i, j, k, c):
        if c:
            st.setdefault((i, j), {})[k] = c
            st.setdefault((j, i), {})[k] = -c

    for b in roots:
        lab = rs.labels(b)
        for i in range(r):
            put(i, idx[b], idx[b], lab[i])
    for b in rs.positive_roots:
        l2 = rs.length2(b)
        for i in range(r):
            c = Fraction(b[i] * rs.gram[i][i], l2)
            put(idx[b], idx[_neg(b)], i, int(c))
    for (a, b), n in structure_constants_N(rs).items():
        if idx[a] < idx[b]:
            put(idx[a], idx[b], idx[_add(a, b)], n)
    return LieAlgebraData(labels, st, rs)


def cache_path(rs: RootSystem, directory: str | os.PathLike) -> Path:
    return Path(directory) / f"chevalley_{rs.type}.txt"


def write_structure_file(L: LieAlgebraData, path) -> None:
    """Plain-text table: header lines, then ``i j k c`` for every i < j."""
    lines = [
        "# sharedorbits structure constants",
        f"# type {L.name}",
        "# basis " + " ".join(L.labels),
        "# lines: i j k c meaning [b_i, b_j] has coefficient c on b_k (i < j; antisymmetric)",
    ]
    for (i, j) in sorted(L.structure):
        if i < j:
            for k, c in sorted(L.structure[(i, j)].items()):
                lines.append(f"{i} {j} {k} {c}")
    Path(path).write_text("\n".join(lines) + "\n")


def read_structure_file(path, rs: RootSystem | None = None) -> LieAlgebraData:
    labels, name, st = None, "", {}
    for line in Path(path).read_text().splitlines():
        if line.startswith("# type "):
            name = line[7:].strip()
        elif line.startswith("# basis "):
            labels = line[8:].split()
        elif line and not line.startswith("#"):
            i, j, k, c = (int(x) for x in line.split())
            st.setdefault((i, j), {})[k] = c
            st.setdefault((j, i), {})[k] = -c
    if labels is None:
        raise ValueError(f"{path}: missing basis header")
    if rs is None and name:
        rs = build_root_system(SimpleType.parse(name))
    return LieAlgebraData(labels, st, rs, name=name)


@lru_cache(maxsize=None)
def chevalley_basis(rs: RootSystem) -> LieAlgebraData:
    cache = os.environ.get(CACHE_ENV)
    if cache and rs.is_simple:
        path = cache_path(rs, cache)
        if path.exists():
            return read_structure_file(path, rs)
        L = _build(rs)
        path.parent.mkdir(parents=True, exist_ok=True)
        write_structure_file(L, path)
        return L
    return _build(rs)


def chevalley_algebra(t: SimpleType | str) -> LieAlgebraData:
    if isinstance(t, str):
        t = SimpleType.parse(t)
    return chevalley_basis(build_root_system(t))


def bracket(L: LieAlgebraData, x: Element, y: Element) -> Element:
    return L.bracket(x, y)


def ad_matrix(L: LieAlgebraData, x: Element) -> flint.fmpq_mat:
    return L.ad_matrix(x)


def killing_nondegenerate(L: LieAlgebraData) -> bool:
    return L.killing_nondegenerate()
