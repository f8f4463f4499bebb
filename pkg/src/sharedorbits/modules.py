"""Explicit matrix realizations of irreducible modules.

A module is specified by the matrices of the Chevalley generators e_i, f_i;
every other basis element of the algebra then acts through the recursion
``rho(e_beta) = [rho(e_i), rho(e_{beta - alpha_i})] / N``.  The generator
relations are checked on construction.

Sources of irreducible modules, tried in this order:

* the adjoint module;
* the defining module of a classical algebra, written for the bilinear form
  with ones on the anti-diagonal (alternating for type C);
* spin modules of types B and D from the Clifford algebra on the exterior
  algebra of ``span(u_0, .., u_{n-1})``, basis vectors indexed by subsets S
  with ``a_i^+ u_S = (-1)^{#{j in S, j < i}} u_{S + i}``;
* minuscule modules, with e_i and f_i moving along the Weyl orbit with
  coefficient 1;
* for G2 and F4, a submodule of a minuscule module of D4 or E6 restricted
  through the diagram folding;
* otherwise a submodule of a tensor product or exterior square of smaller
  modules, generated by a highest weight vector.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from functools import cached_property
from typing import Callable, Mapping, Sequence

import flint

from . import linalg
from .characters import (
    Character,
    freudenthal_character,
    peel_decompose,
    tensor_character,
    weyl_dim,
)
from .chevalley import Element, LieAlgebraData, chevalley_basis
from .rootsys import RootSystem, SimpleType, Vec, build_root_system, fold

fmpq = flint.fmpq
fmpq_mat = flint.fmpq_mat

DEFAULT_BOUND = 3000


class ModuleError(ValueError):
    pass


# -- generator relations -----------------------------------------------------

def _comm(a, b):
    return a * b - b * a


def serre_violations(e: Sequence, f: Sequence, cartan) -> list[str]:
    """Failures of the Chevalley-Serre relations for given generator matrices."""
    r = len(e)
    h = [_comm(e[i], f[i]) for i in range(r)]
    bad = []
    for i in range(r):
        for j in range(r):
            if not linalg.is_zero(_comm(h[i], h[j])):
                bad.append(f"[h{i},h{j}]")
            if _comm(h[i], e[j]) != e[j] * cartan[i][j]:
                bad.append(f"[h{i},e{j}]")
            if _comm(h[i], f[j]) != f[j] * (-cartan[i][j]):
                bad.append(f"[h{i},f{j}]")
            if i != j:
                if not linalg.is_zero(_comm(e[i], f[j])):
                    bad.append(f"[e{i},f{j}]")
                x, y = e[j], f[j]
                for _ in range(1 - cartan[i][j]):
                    x = _comm(e[i], x)
                    y = _comm(f[i], y)
                if not linalg.is_zero(x):
                    bad.append(f"serre e{i},e{j}")
                if not linalg.is_zero(y):
                    bad.append(f"serre f{i},f{j}")
    return bad


# -- the module class --------------------------------------------------------

class ModuleRealization:
    """Matrices of every basis element of ``L`` on a finite-dimensional module.

    ``weights[k]`` is the weight of the k-th basis vector (all bases used here
    consist of weight vectors).
    """

    def __init__(self, L: LieAlgebraData, e: Sequence, f: Sequence, weights: Sequence[Vec] | None = None,
                 name: str = "", highest_weight: Vec | None = None, check: bool = True):
        self.L = L
        self.e = tuple(e)
        self.f = tuple(f)
        self.dim = self.e[0].nrows() if self.e else 0
        self.name = name
        self.highest_weight = highest_weight
        rs = L.rs
        if check:
            bad = serre_violations(self.e, self.f, rs.cartan_matrix)
            if bad:
                raise ModuleError(f"generator relations fail: {bad[:5]}")
        h = [_comm(self.e[i], self.f[i]) for i in range(rs.rank)]
        if weights is None:
            if any(h[i][a, b] for i in range(rs.rank) for a in range(self.dim) for b in range(self.dim) if a != b):
                raise ModuleError("Cartan generators are not diagonal; pass weights")
            weights = [tuple(int(h[i][k, k]) for i in range(rs.rank)) for k in range(self.dim)]
        self.weights = tuple(tuple(w) for w in weights)
        self.action = self._all_root_vectors(h)

    def __repr__(self):
        return f"ModuleRealization({self.L.name}, {self.name or self.highest_weight}, dim={self.dim})"

    def _all_root_vectors(self, h) -> tuple:
        L = self.L
        rs = L.rs
        r = rs.rank
        mats: dict = {}
        for i in range(r):
            mats[i] = h[i]
            mats[L.root_index[rs.simple_roots[i]]] = self.e[i]
            mats[L.root_index[tuple(-x for x in rs.simple_roots[i])]] = self.f[i]
        for sign in (1, -1):
            for b in rs.positive_roots:
                beta = tuple(sign * x for x in b)
                k = L.root_index[beta]
                if k in mats:
                    continue
                for i in range(r):
                    g = tuple(x - sign * (j == i) for j, x in enumerate(beta))
                    if rs.is_root(g):
                        a = L.root_index[tuple(sign * (j == i) for j in range(r))]
                        c = L.root_index[g]
                        n = L.structure[(a, c)][k]
                        mats[k] = _comm(mats[a], mats[c]) * fmpq(1, 1) / n
                        break
                else:
                    raise AssertionError(f"no simple decomposition for {beta}")
        return tuple(mats[k] for k in range(L.dim))

    @cached_property
    def character(self) -> Character:
        mults: dict = defaultdict(int)
        for w in self.weights:
            mults[w] += 1
        return Character(self.L.rs, mults)

    def act(self, x: Element) -> flint.fmpq_mat:
        m = fmpq_mat(self.dim, self.dim)
        for a, c in enumerate(x):
            if c:
                m += self.action[a] * linalg.q(c)
        return m

    def homomorphism_violations(self, pairs=None) -> int:
        """Pairs of basis elements where rho([x,y]) != [rho(x), rho(y)]."""
        L = self.L
        if pairs is None:
            pairs = itertools.combinations(range(L.dim), 2)
        bad = 0
        for a, b in pairs:
            lhs = fmpq_mat(self.dim, self.dim)
            for k, c in L.bracket_basis(a, b).items():
                lhs += self.action[k] * c
            if lhs != _comm(self.action[a], self.action[b]):
                bad += 1
        return bad

    def sparse_columns(self, kind: str, i: int) -> list[dict]:
        return _sparse_cols(self.e[i] if kind == "e" else self.f[i])

    def dual(self) -> "ModuleRealization":
        return dual_module(self)


def _sparse_cols(m) -> list[dict]:
    cols = [dict() for _ in range(m.ncols())]
    for a in range(m.nrows()):
        for b in range(m.ncols()):
            x = m[a, b]
            if x:
                cols[b][a] = x
    return cols


def _from_sparse(cols: Sequence[Mapping[int, object]], n: int) -> flint.fmpq_mat:
    m = fmpq_mat(n, len(cols))
    for b, col in enumerate(cols):
        for a, x in col.items():
            m[a, b] = x
    return m


def module_from_generators(L: LieAlgebraData, e: Sequence, f: Sequence, **kw) -> ModuleRealization:
    """Build a module from generator matrices (fmpq_mat or nested lists)."""
    conv = [m if isinstance(m, fmpq_mat) else linalg.matrix(m) for m in e]
    convf = [m if isinstance(m, fmpq_mat) else linalg.matrix(m) for m in f]
    return ModuleRealization(L, conv, convf, **kw)


def dual_module(m: ModuleRealization) -> ModuleRealization:
    """The contragredient module: every element acts by minus the transpose."""
    e = [-x.transpose() for x in m.e]
    f = [-x.transpose() for x in m.f]
    hw = None
    if m.highest_weight is not None:
        hw = m.L.rs.dominant_conjugate(tuple(-x for x in m.highest_weight))
    name = f"({m.name})*" if m.name else ""
    return ModuleRealization(m.L, e, f, [tuple(-x for x in w) for w in m.weights], name, hw, check=False)


def trivial_module(L: LieAlgebraData) -> ModuleRealization:
    z = [fmpq_mat(1, 1) for _ in range(L.rs.rank)]
    return ModuleRealization(L, z, z, [(0,) * L.rs.rank], "trivial", (0,) * L.rs.rank)


def adjoint_module(L: LieAlgebraData) -> ModuleRealization:
    rs = L.rs
    r = rs.rank
    e = [L.ad_basis[L.root_index[rs.simple_roots[i]]] for i in range(r)]
    f = [L.ad_basis[L.root_index[tuple(-x for x in rs.simple_roots[i])]] for i in range(r)]
    weights = [(0,) * r] * r + [rs.labels(b) for b in rs.all_roots]
    hw = rs.labels(rs.highest_root) if rs.is_simple else None
    return ModuleRealization(L, e, f, weights, "adjoint", hw, check=False)


# -- seeds -------------------------------------------------------------------

def _mat(n, entries: Mapping) -> flint.fmpq_mat:
    m = fmpq_mat(n, n)
    for (a, b), c in entries.items():
        m[a, b] = c
    return m


def defining_generators(t: SimpleType) -> tuple[list, list]:
    """Generator matrices of the defining module (0-based matrix indices).

    B, C, D preserve ``sum x_i y_{N-1-i}`` (with signs ``+`` on the first half
    and ``-`` on the second half for C).
    """
    n = t.rank
    fam = t.family
    N = t.defining_dimension
    e, f = [], []
    if fam == "A":
        for i in range(n):
            e.append(_mat(N, {(i, i + 1): 1}))
            f.append(_mat(N, {(i + 1, i): 1}))
        return e, f
    if fam not in "BCD":
        raise ModuleError(f"{t} has no classical defining module")
    for i in range(n - 1):
        e.append(_mat(N, {(i, i + 1): 1, (N - 2 - i, N - 1 - i): -1}))
        f.append(_mat(N, {(i + 1, i): 1, (N - 1 - i, N - 2 - i): -1}))
    k = n - 1
    if fam == "B":
        e.append(_mat(N, {(k, k + 1): 1, (k + 1, k + 2): -1}))
        f.append(_mat(N, {(k + 1, k): 2, (k + 2, k + 1): -2}))
    elif fam == "C":
        e.append(_mat(N, {(k, k + 1): 1}))
        f.append(_mat(N, {(k + 1, k): 1}))
    else:
        e.append(_mat(N, {(k - 1, k + 1): 1, (k, k + 2): -1}))
        f.append(_mat(N, {(k + 1, k - 1): 1, (k + 2, k): -1}))
    return e, f


def defining_module(L: LieAlgebraData) -> ModuleRealization:
    t = L.rs.type
    e, f = defining_generators(t)
    hw = tuple(int(i == 0) for i in range(t.rank))
    return ModuleRealization(L, e, f, name=f"C^{t.defining_dimension}", highest_weight=hw)


def defining_form(t: SimpleType) -> flint.fmpq_mat:
    """Gram matrix J of the invariant form on the defining module of B, C, D."""
    N = t.defining_dimension
    if t.family == "C":
        return _mat(N, {(i, N - 1 - i): (1 if i < N // 2 else -1) for i in range(N)})
    return _mat(N, {(i, N - 1 - i): 1 for i in range(N)})


def spin_module(L: LieAlgebraData, half: int | None = None) -> ModuleRealization:
    """Spin module of B_n, or a half-spin module of D_n.

    For D_n, ``half`` is the node (n-2 or n-1, 0-based) whose fundamental
    weight is the highest weight; it selects subsets S of one parity.
    """
    t = L.rs.type
    n = t.rank
    subsets = [frozenset(c) for k in range(n + 1) for c in itertools.combinations(range(n), k)]
    if t.family == "D":
        if half not in (n - 2, n - 1):
            raise ModuleError("half-spin node must be one of the last two")
        parity = n % 2 if half == n - 1 else (n - 1) % 2
        subsets = [S for S in subsets if len(S) % 2 == parity]
    elif t.family != "B":
        raise ModuleError(f"{t} has no spin module")
    subsets.sort(key=lambda S: (-len(S), sorted(S)))
    index = {S: k for k, S in enumerate(subsets)}
    dim = len(subsets)

    def create(i, S):
        if i in S:
            return None
        return (-1) ** sum(1 for j in S if j < i), S | {i}

    def annihilate(i, S):
        if i not in S:
            return None
        return (-1) ** sum(1 for j in S if j < i), S - {i}

    def op(word) -> flint.fmpq_mat:
        # word: sequence of ("c"|"a", i), rightmost applied first
        m = fmpq_mat(dim, dim)
        for S in subsets:
            c, T = 1, S
            for kind, i in reversed(word):
                r = (create if kind == "c" else annihilate)(i, T)
                if r is None:
                    break
                s, T = r
                c *= s
            else:
                m[index[T], index[S]] = c
        return m

    e, f = [], []
    for i in range(n - 1):
        e.append(op([("c", i), ("a", i + 1)]))
        f.append(op([("c", i + 1), ("a", i)]))
    if t.family == "B":
        e.append(op([("c", n - 1)]))
        f.append(op([("a", n - 1)]))
        hw = tuple(int(i == n - 1) for i in range(n))
        name = f"spin C^{dim}"
    else:
        e.append(op([("c", n - 2), ("c", n - 1)]))
        f.append(op([("a", n - 1), ("a", n - 2)]))
        hw = tuple(int(i == half) for i in range(n))
        name = f"half-spin C^{dim}"
    return ModuleRealization(L, e, f, name=name, highest_weight=hw)


def is_minuscule(rs: RootSystem, hw) -> bool:
    """All weights of V(hw) are Weyl conjugate to hw."""
    return all(x in (-1, 0, 1) for w in rs.weyl_orbit(hw) for x in w) and len(rs.weyl_orbit(hw)) == weyl_dim(rs, hw)


def minuscule_module(L: LieAlgebraData, hw) -> ModuleRealization:
    rs = L.rs
    hw = tuple(hw)
    if not is_minuscule(rs, hw):
        raise ModuleError(f"{hw} is not minuscule")
    orbit = rs.weyl_orbit(hw)
    index = {w: k for k, w in enumerate(orbit)}
    dim = len(orbit)
    e, f = [], []
    for i in range(rs.rank):
        lab = [rs.cartan_matrix[k][i] for k in range(rs.rank)]
        me, mf = fmpq_mat(dim, dim), fmpq_mat(dim, dim)
        for w, k in index.items():
            if w[i] == -1:
                me[index[tuple(x + y for x, y in zip(w, lab))], k] = 1
            elif w[i] == 1:
                mf[index[tuple(x - y for x, y in zip(w, lab))], k] = 1
        e.append(me)
        f.append(mf)
    return ModuleRealization(L, e, f, orbit, name=f"minuscule C^{dim}", highest_weight=hw)


# -- sparse ambients for highest weight submodules ----------------------------

class _Ambient:
    """A module given by sparse generator actions on hashable, ordered keys."""

    rank: int

    def weight(self, key) -> Vec:
        raise NotImplementedError

    def apply(self, kind: str, i: int, key) -> dict:
        raise NotImplementedError

    def weight_space(self, mu) -> list:
        raise NotImplementedError

    def apply_vec(self, kind: str, i: int, vec: Mapping) -> dict:
        out: dict = {}
        for key, c in vec.items():
            for k2, d in self.apply(kind, i, key).items():
                v = out.get(k2, 0) + c * d
                if v:
                    out[k2] = v
                else:
                    out.pop(k2, None)
        return out


class _ModuleAmbient(_Ambient):
    def __init__(self, m: ModuleRealization):
        self.m = m
        self.rank = m.L.rs.rank
        self.cols = {("e", i): m.sparse_columns("e", i) for i in range(self.rank)}
        self.cols.update({("f", i): m.sparse_columns("f", i) for i in range(self.rank)})
        self.by_weight: dict = defaultdict(list)
        for k, w in enumerate(m.weights):
            self.by_weight[w].append(k)

    def weight(self, key):
        return self.m.weights[key]

    def apply(self, kind, i, key):
        return self.cols[(kind, i)][key]

    def weight_space(self, mu):
        return self.by_weight.get(tuple(mu), [])


class _TensorAmbient(_Ambient):
    def __init__(self, a: ModuleRealization, b: ModuleRealization):
        self.A, self.B = _ModuleAmbient(a), _ModuleAmbient(b)
        self.rank = self.A.rank
        self._cache: dict = {}

    def weight(self, key):
        return tuple(x + y for x, y in zip(self.A.weight(key[0]), self.B.weight(key[1])))

    def apply(self, kind, i, key):
        ck = (kind, i, key)
        out = self._cache.get(ck)
        if out is None:
            a, b = key
            out = {}
            for a2, c in self.A.apply(kind, i, a).items():
                out[(a2, b)] = out.get((a2, b), 0) + c
            for b2, c in self.B.apply(kind, i, b).items():
                out[(a, b2)] = out.get((a, b2), 0) + c
            out = {k: v for k, v in out.items() if v}
            self._cache[ck] = out
        return out

    def weight_space(self, mu):
        keys = []
        for wa, ka in self.A.by_weight.items():
            wb = tuple(x - y for x, y in zip(mu, wa))
            for a in ka:
                for b in self.B.weight_space(wb):
                    keys.append((a, b))
        return sorted(keys)


class _Wedge2Ambient(_Ambient):
    def __init__(self, a: ModuleRealization):
        self.A = _ModuleAmbient(a)
        self.rank = self.A.rank

    def weight(self, key):
        return tuple(x + y for x, y in zip(self.A.weight(key[0]), self.A.weight(key[1])))

    def apply(self, kind, i, key):
        a, b = key
        out: dict = {}

        def add(x, y, c):
            if x == y:
                return
            k, s = ((x, y), 1) if x < y else ((y, x), -1)
            out[k] = out.get(k, 0) + s * c

        for a2, c in self.A.apply(kind, i, a).items():
            add(a2, b, c)
        for b2, c in self.A.apply(kind, i, b).items():
            add(a, b2, c)
        return {k: v for k, v in out.items() if v}

    def weight_space(self, mu):
        keys = []
        for wa, ka in self.A.by_weight.items():
            wb = tuple(x - y for x, y in zip(mu, wa))
            for a in ka:
                for b in self.A.weight_space(wb):
                    if a < b:
                        keys.append((a, b))
        return sorted(keys)


class _RestrictedAmbient(_Ambient):
    """A module of g' viewed as a module of g through generator images."""

    def __init__(self, m: ModuleRealization, embedding):
        self.m = m
        L1 = m.L
        self.emb = embedding
        self.rank = embedding.target.rank
        self.cols = {}
        for j, gens in enumerate(embedding.generators):
            for kind, sign in (("e", 1), ("f", -1)):
                mat = fmpq_mat(m.dim, m.dim)
                for root, c in gens:
                    mat += m.action[L1.root_index[tuple(sign * x for x in root)]] * c
                self.cols[(kind, j)] = _sparse_cols(mat)
        self.by_weight: dict = defaultdict(list)
        for k, w in enumerate(m.weights):
            self.by_weight[embedding.restrict(w)].append(k)

    def weight(self, key):
        return self.emb.restrict(self.m.weights[key])

    def apply(self, kind, i, key):
        return self.cols[(kind, i)][key]

    def weight_space(self, mu):
        return self.by_weight.get(tuple(mu), [])


class _Echelon:
    """Reduced row echelon basis of a subspace of sparse vectors."""

    def __init__(self):
        self.rows: dict = {}  # pivot -> vector with 1 at pivot, 0 at other pivots

    def reduce(self, w: Mapping) -> dict:
        w = dict(w)
        for p in [p for p in w if p in self.rows]:
            c = w.get(p)
            if c:
                for k, x in self.rows[p].items():
                    v = w.get(k, 0) - c * x
                    if v:
                        w[k] = v
                    else:
                        w.pop(k, None)
        return w

    def insert(self, w: Mapping) -> dict | None:
        w = self.reduce(w)
        if not w:
            return None
        p = min(w)
        c = w[p]
        w = {k: x / c for k, x in w.items()}
        for q, row in self.rows.items():
            d = row.get(p)
            if d:
                for k, x in w.items():
                    v = row.get(k, 0) - d * x
                    if v:
                        row[k] = v
                    else:
                        row.pop(k, None)
        self.rows[p] = w
        return w

    def coordinates(self, w: Mapping, pivots: Sequence) -> list:
        if self.reduce(w):
            raise ModuleError("vector leaves the generated submodule")
        return [w.get(p, 0) for p in pivots]


def highest_weight_vectors(amb: _Ambient, mu) -> list[dict]:
    """Kernel of all raising operators on the mu-weight space of an ambient."""
    keys = amb.weight_space(mu)
    if not keys:
        return []
    rows: dict = {}
    for n, key in enumerate(keys):
        for i in range(amb.rank):
            for k2, c in amb.apply("e", i, key).items():
                rows.setdefault((i, k2), {})[n] = c
    if not rows:
        return [{k: fmpq(1)} for k in keys]
    m = fmpq_mat(len(rows), len(keys))
    for r, (_, row) in enumerate(sorted(rows.items(), key=lambda t: (t[0][0], repr(t[0][1])))):
        for n, c in row.items():
            m[r, n] = c
    return [{keys[n]: c for n, c in enumerate(v) if c} for v in linalg.nullspace(m)]


def submodule(L: LieAlgebraData, amb: _Ambient, v: Mapping, mu: Vec, name: str = "",
              bound: int = DEFAULT_BOUND) -> ModuleRealization:
    """Submodule generated by a highest weight vector ``v`` of weight ``mu``."""
    rs = L.rs
    r = rs.rank
    simple_labels = [tuple(rs.cartan_matrix[k][i] for k in range(r)) for i in range(r)]
    spaces: dict = defaultdict(_Echelon)
    first = spaces[mu].insert(v)
    queue = [(first, mu)]
    count = 1
    head = 0
    while head < len(queue):
        vec, w = queue[head]
        head += 1
        for i in range(r):
            img = amb.apply_vec("f", i, vec)
            if not img:
                continue
            nu = tuple(x - y for x, y in zip(w, simple_labels[i]))
            new = spaces[nu].insert(img)
            if new is not None:
                queue.append((new, nu))
                count += 1
                if count > bound:
                    raise ModuleError(f"submodule exceeds the dimension bound {bound}")
    order = sorted(spaces, key=lambda w: (-rs.weight_height(w), tuple(-x for x in w)))
    basis, weights, pivots = [], [], {}
    for w in order:
        ps = sorted(spaces[w].rows)
        pivots[w] = (len(basis), ps)
        for p in ps:
            basis.append(spaces[w].rows[p])
            weights.append(w)
    dim = len(basis)
    e, f = [], []
    for i in range(r):
        for kind, sign, out in (("e", 1, e), ("f", -1, f)):
            cols = []
            for vec, w in zip(basis, weights):
                img = amb.apply_vec(kind, i, vec)
                col = {}
                if img:
                    nu = tuple(x + sign * y for x, y in zip(w, simple_labels[i]))
                    if nu not in pivots:
                        raise ModuleError("vector leaves the generated submodule")
                    start, ps = pivots[nu]
                    for n, c in enumerate(spaces[nu].coordinates(img, ps)):
                        if c:
                            col[start + n] = c
                cols.append(col)
            out.append(_from_sparse(cols, dim))
    return ModuleRealization(L, e, f, weights, name, tuple(mu))


# -- realize_module ----------------------------------------------------------

_FOLD_PARENTS = {
    SimpleType("G", 2): (SimpleType("D", 4), (2, 1, 3, 0)),
    SimpleType("F", 4): (SimpleType("E", 6), (5, 1, 4, 3, 2, 0)),
}


def _cache(L: LieAlgebraData) -> dict:
    c = L.__dict__.get("_module_cache")
    if c is None:
        c = L.__dict__["_module_cache"] = {}
    return c


def _fundamental(rs: RootSystem, i: int) -> Vec:
    return tuple(int(j == i) for j in range(rs.rank))


def _seed(L: LieAlgebraData, hw: Vec) -> ModuleRealization | None:
    rs = L.rs
    t = rs.type
    r = rs.rank
    if not any(hw):
        return trivial_module(L)
    if hw == rs.labels(rs.highest_root):
        return adjoint_module(L)
    if t.family in "ABCD" and hw == _fundamental(rs, 0):
        return defining_module(L)
    if t.family == "B" and hw == _fundamental(rs, r - 1):
        return spin_module(L)
    if t.family == "D" and hw in (_fundamental(rs, r - 2), _fundamental(rs, r - 1)):
        return spin_module(L, hw.index(1))
    if is_minuscule(rs, hw):
        return minuscule_module(L, hw)
    return None


def _candidate_ambients(L: LieAlgebraData, hw: Vec, busy: set, bound: int):
    """(cost, builder) pairs for ambients containing V(hw), cheapest first."""
    rs = L.rs
    t = rs.type
    r = rs.rank
    target = weyl_dim(rs, hw)
    fund = [_fundamental(rs, i) for i in range(r)]
    dims = {w: weyl_dim(rs, w) for w in fund}
    small = [w for w in fund if w != hw and w not in busy and dims[w] <= max(target, 1)]
    out = []
    parent = _FOLD_PARENTS.get(t)
    if parent is not None:
        pt, aut = parent
        prs = build_root_system(pt)
        F = fold(prs, aut)
        if F.target.cartan_matrix == rs.cartan_matrix:
            for i in range(pt.rank):
                mu = _fundamental(prs, i)
                if is_minuscule(prs, mu) or (pt.family == "D" and i == 0):
                    from .characters import branch_character

                    ch = branch_character(freudenthal_character(prs, mu), F)
                    if any(w == hw for w, _ in peel_decompose(ch)):
                        out.append((weyl_dim(prs, mu), "restrict", (prs, mu, F)))
    for a in small:
        ch = freudenthal_character(rs, a)
        wedge = _wedge2_character(ch)
        if any(w == hw for w, _ in peel_decompose(wedge)):
            out.append((wedge.dim, "wedge", (a,)))
    for a, b in itertools.combinations_with_replacement(small, 2):
        ch = tensor_character(freudenthal_character(rs, a), freudenthal_character(rs, b))
        if any(w == hw for w, _ in peel_decompose(ch)):
            out.append((ch.dim, "tensor", (a, b)))
    out.sort(key=lambda t: (t[0], t[1], t[2] if t[1] != "restrict" else ()))
    return out


def _wedge2_character(c: Character) -> Character:
    out: dict = defaultdict(int)
    items = sorted(c.mults.items())
    for n, (w, m) in enumerate(items):
        two = tuple(2 * x for x in w)
        out[two] += m * (m - 1) // 2
        for v, k in items[n + 1:]:
            out[tuple(x + y for x, y in zip(w, v))] += m * k
    return Character(c.rs, out)


def realize_module(L: LieAlgebraData, hw, bound: int = DEFAULT_BOUND, _busy: frozenset = frozenset()) -> ModuleRealization:
    """Irreducible module of highest weight ``hw`` as explicit matrices.

    Memoized per algebra.  Raises ``ModuleError`` when the dimension exceeds
    ``bound`` or no construction applies.
    """
    rs = L.rs
    if rs is None or not rs.is_simple:
        raise ModuleError("realize_module needs a simple algebra")
    hw = tuple(int(x) for x in hw)
    if len(hw) != rs.rank or not rs.is_dominant(hw):
        raise ModuleError(f"{hw} is not a dominant weight of {rs!r}")
    cache = _cache(L)
    if hw in cache:
        return cache[hw]
    d = weyl_dim(rs, hw)
    if d > bound:
        raise ModuleError(f"dim V{hw} = {d} exceeds the bound {bound}")
    m = _seed(L, hw)
    if m is None:
        m = _build(L, hw, bound, _busy | {hw})
    if m.dim != d:
        raise AssertionError(f"realized dimension {m.dim} != Weyl dimension {d}")
    cache[hw] = m
    return m


def _build(L, hw, bound, busy) -> ModuleRealization:
    rs = L.rs
    support = [i for i, x in enumerate(hw) if x]
    if sum(hw) > 1:
        i = min(support, key=lambda i: (weyl_dim(rs, _fundamental(rs, i)), i))
        a = _fundamental(rs, i)
        b = tuple(x - y for x, y in zip(hw, a))
        A = realize_module(L, a, bound, busy)
        B = realize_module(L, b, bound, busy)
        amb = _TensorAmbient(A, B)
        # the highest weight spaces are one-dimensional
        v = {(A.weights.index(a), B.weights.index(b)): fmpq(1)}
        return submodule(L, amb, v, hw, f"V{hw}", bound)
    errors = []
    for _, kind, args in _candidate_ambients(L, hw, busy, bound):
        try:
            if kind == "restrict":
                prs, mu, F = args
                M = realize_module(chevalley_basis(prs), mu, bound)
                amb = _RestrictedAmbient(M, F)
            elif kind == "wedge":
                amb = _Wedge2Ambient(realize_module(L, args[0], bound, busy))
            else:
                amb = _TensorAmbient(realize_module(L, args[0], bound, busy), realize_module(L, args[1], bound, busy))
        except ModuleError as exc:
            errors.append(str(exc))
            continue
        vecs = highest_weight_vectors(amb, hw)
        if vecs:
            return submodule(L, amb, vecs[0], hw, f"V{hw}", bound)
    raise ModuleError(f"no construction found for V{hw}: {errors}")


def restricted_module(m: ModuleRealization, embedding, L: LieAlgebraData) -> ModuleRealization:
    """The whole module ``m`` of g' as a module of the subalgebra g = ``L``."""
    amb = _RestrictedAmbient(m, embedding)
    e = [_from_sparse(amb.cols[("e", j)], m.dim) for j in range(amb.rank)]
    f = [_from_sparse(amb.cols[("f", j)], m.dim) for j in range(amb.rank)]
    return ModuleRealization(L, e, f, [embedding.restrict(w) for w in m.weights], f"{m.name}|", None)
