"""Root systems of the finite simple types, subsystems and diagram foldings.

Conventions
-----------
* Roots are integer tuples in the simple-root basis; weights are integer
  tuples of Dynkin labels (coordinates in the fundamental-weight basis).
* Simple roots are numbered as in Bourbaki (0-based in code).  For E the
  branch node is node 2 (Bourbaki), attached to node 4.
* ``cartan[i][j] = <alpha_j, alpha_i^vee> = alpha_j(h_i)``, so that
  ``[h_i, e_j] = cartan[i][j] e_j``.
* Short roots have squared length 2; long roots then have 4 (B, C, F) or 6 (G).
  Subsystems keep the lengths of their ambient system.
* The positive roots are ordered by height, ties broken so that lower-numbered
  simple roots come first.  This order fixes the extraspecial pairs and hence
  every sign in the Chevalley basis.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

Vec = tuple  # integer tuple


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        valid = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 3,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }
        if f not in valid:
            raise ValueError(f"unknown family {f!r}")
        if not valid[f]:
            raise ValueError(f"invalid rank {n} for family {f}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        """Parse ``"G2"``, ``"so(7)"``, ``"sp(4)"``, ``"sl(3)"``, ``"f4"`` ..."""
        s = text.strip().lower().replace(" ", "")
        m = re.fullmatch(r"([a-g])(\d+)", s)
        if m:
            return cls(m.group(1).upper(), int(m.group(2)))
        m = re.fullmatch(r"(sl|so|sp)\((\d+)\)", s)
        if not m:
            raise ValueError(f"cannot parse algebra name {text!r}")
        kind, n = m.group(1), int(m.group(2))
        if kind == "sl":
            return cls("A", n - 1)
        if kind == "sp":
            if n % 2:
                raise ValueError("sp(n) needs even n")
            return cls("C", n // 2)
        if n % 2:
            return cls("B", (n - 1) // 2)
        return cls("D", n // 2)

    @property
    def dimension(self) -> int:
        n = self.rank
        return {
            "A": n * (n + 2),
            "B": n * (2 * n + 1),
            "C": n * (2 * n + 1),
            "D": n * (2 * n - 1),
            "E": {6: 78, 7: 133, 8: 248}.get(n, 0),
            "F": 52,
            "G": 14,
        }[self.family]

    @property
    def is_classical(self) -> bool:
        return self.family in "ABCD"

    @property
    def defining_dimension(self) -> int:
        n = self.rank
        try:
            return {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[self.family]
        except KeyError:
            raise ValueError(f"{self} has no classical defining representation") from None

    @property
    def matrix_name(self) -> str:
        if self.family == "A":
            return f"sl({self.rank + 1})"
        if self.family == "B":
            return f"so({2 * self.rank + 1})"
        if self.family == "C":
            return f"sp({2 * self.rank})"
        if self.family == "D":
            return f"so({2 * self.rank})"
        return str(self)

    @property
    def root_count(self) -> int:
        return self.dimension - self.rank


def _gram(t: SimpleType) -> list[list[int]]:
    n = t.rank
    g = [[0] * n for _ in range(n)]

    def edge(i, j, v):
        g[i][j] = g[j][i] = v

    f = t.family
    if f in "ADE":
        for i in range(n):
            g[i][i] = 2
        if f == "A":
            for i in range(n - 1):
                edge(i, i + 1, -1)
        elif f == "D":
            for i in range(n - 2):
                edge(i, i + 1, -1)
            edge(n - 3, n - 1, -1)
        else:
            edge(0, 2, -1)
            edge(1, 3, -1)
            for i in range(2, n - 1):
                edge(i, i + 1, -1)
    elif f == "B":
        for i in range(n - 1):
            g[i][i] = 4
            edge(i, i + 1, -2)
        g[n - 1][n - 1] = 2
    elif f == "C":
        for i in range(n - 1):
            g[i][i] = 2
        for i in range(n - 2):
            edge(i, i + 1, -1)
        g[n - 1][n - 1] = 4
        edge(n - 2, n - 1, -2)
    elif f == "F":
        for i, d in enumerate((4, 4, 2, 2)):
            g[i][i] = d
        edge(0, 1, -2)
        edge(1, 2, -2)
        edge(2, 3, -1)
    else:
        g = [[2, -3], [-3, 6]]
    return g


def _cartan_from_gram(g) -> tuple:
    n = len(g)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            v = Fraction(2 * g[i][j], g[i][i])
            if v.denominator != 1:
                raise ValueError("Gram matrix is not crystallographic")
            row.append(int(v))
        rows.append(tuple(row))
    return tuple(rows)


def _reflection_closure(cartan) -> list[Vec]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for b in frontier:
            for i in range(n):
                c = sum(cartan[i][j] * b[j] for j in range(n))
                if c:
                    r = tuple(b[k] - (c if k == i else 0) for k in range(n))
                    if r not in seen:
                        seen.add(r)
                        new.append(r)
        frontier = new
    return list(seen)


def _root_key(b):
    return (sum(b), tuple(-x for x in b))


def _components(cartan) -> list[list[int]]:
    n = len(cartan)
    left = set(range(n))
    comps = []
    while left:
        start = min(left)
        comp, stack = {start}, [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j not in comp and cartan[i][j]:
                    comp.add(j)
                    stack.append(j)
        left -= comp
        comps.append(sorted(comp))
    return comps


class RootSystem:
    """A (possibly reducible) crystallographic root system.

    Built from the Gram matrix of its simple roots.  ``types`` lists the simple
    components in order; their simple roots are consecutive and Bourbaki
    numbered within each component.
    """

    def __init__(self, gram: Sequence[Sequence[int]], types: Sequence[SimpleType]):
        self.gram = tuple(tuple(int(x) for x in r) for r in gram)
        self.types = tuple(types)
        self.cartan_matrix = _cartan_from_gram(self.gram)
        self.rank = len(self.gram)
        roots = _reflection_closure(self.cartan_matrix)
        pos = sorted((b for b in roots if all(x >= 0 for x in b)), key=_root_key)
        self.positive_roots = tuple(pos)
        self.all_roots = self.positive_roots + tuple(tuple(-x for x in b) for b in pos)
        self._root_set = frozenset(self.all_roots)
        self._pos_index = {b: i for i, b in enumerate(pos)}

    def __repr__(self):
        return f"RootSystem({'x'.join(map(str, self.types)) or '0'})"

    @property
    def type(self) -> SimpleType:
        if len(self.types) != 1:
            raise ValueError(f"{self!r} is not simple")
        return self.types[0]

    @property
    def is_simple(self) -> bool:
        return len(self.types) == 1

    @property
    def simple_roots(self) -> tuple:
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    def is_root(self, b) -> bool:
        return tuple(b) in self._root_set

    def is_positive(self, b) -> bool:
        return tuple(b) in self._pos_index

    def positive_order(self, b) -> int:
        return self._pos_index[tuple(b)]

    def height(self, b) -> int:
        return sum(b)

    def inner(self, a, b) -> int:
        g = self.gram
        return sum(a[i] * g[i][j] * b[j] for i in range(self.rank) for j in range(self.rank) if a[i] and b[j])

    def length2(self, b) -> int:
        return self.inner(b, b)

    @cached_property
    def root_lengths(self) -> tuple:
        return tuple(sorted({self.length2(b) for b in self.positive_roots}))

    @property
    def is_doubly_laced(self) -> bool:
        return len(self.root_lengths) == 2

    def is_long(self, b) -> bool:
        return self.length2(b) == self.root_lengths[-1]

    def is_short(self, b) -> bool:
        return self.is_doubly_laced and self.length2(b) == self.root_lengths[0]

    # -- weights ------------------------------------------------------------
    def labels(self, b) -> Vec:
        """Dynkin labels of an element of the root lattice given in root coordinates."""
        a = self.cartan_matrix
        return tuple(sum(a[i][j] * b[j] for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def _cartan_inverse(self) -> tuple:
        import sympy

        inv = sympy.Matrix(self.cartan_matrix).inv()
        return tuple(tuple(Fraction(int(x.p), int(x.q)) for x in inv.row(i)) for i in range(self.rank))

    def root_coords(self, weight) -> tuple:
        """Rational simple-root coordinates of a weight given by Dynkin labels."""
        inv = self._cartan_inverse
        return tuple(sum(inv[i][j] * weight[j] for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def fundamental_weights(self) -> tuple:
        """Row i: fundamental weight omega_i in simple-root coordinates."""
        return tuple(self.root_coords(tuple(int(i == j) for j in range(self.rank))) for i in range(self.rank))

    @cached_property
    def _weight_form(self) -> tuple:
        # (lambda, mu) = lambda^T A^{-T} D mu with D = diag((alpha_i, alpha_i) / 2)
        inv = self._cartan_inverse
        n = self.rank
        return tuple(
            tuple(inv[j][i] * Fraction(self.gram[j][j], 2) for j in range(n)) for i in range(n)
        )

    def weight_inner(self, lam, mu) -> Fraction:
        w = self._weight_form
        return sum(
            (lam[i] * w[i][j] * mu[j] for i in range(self.rank) for j in range(self.rank) if lam[i] and mu[j]),
            Fraction(0),
        )

    def weight_height(self, lam) -> Fraction:
        return sum(self.root_coords(lam), Fraction(0))

    @cached_property
    def rho(self) -> Vec:
        return (1,) * self.rank

    def reflect(self, lam, i) -> Vec:
        c = lam[i]
        if not c:
            return tuple(lam)
        a = self.cartan_matrix
        return tuple(lam[k] - c * a[k][i] for k in range(self.rank))

    def is_dominant(self, lam) -> bool:
        return all(x >= 0 for x in lam)

    def dominant_conjugate(self, lam) -> Vec:
        lam = tuple(lam)
        while True:
            for i, x in enumerate(lam):
                if x < 0:
                    lam = self.reflect(lam, i)
                    break
            else:
                return lam

    def weyl_orbit(self, lam) -> list[Vec]:
        start = self.dominant_conjugate(lam)
        seen = {start}
        frontier = [start]
        while frontier:
            new = []
            for mu in frontier:
                for i in range(self.rank):
                    if mu[i] > 0:
                        nu = self.reflect(mu, i)
                        if nu not in seen:
                            seen.add(nu)
                            new.append(nu)
            frontier = new
        return sorted(seen, key=lambda m: (-self.weight_height(m), tuple(-x for x in m)))

    @cached_property
    def highest_root(self) -> Vec:
        if not self.is_simple:
            raise ValueError("highest root needs a simple system")
        return self.positive_roots[-1]

    def check_closure(self) -> bool:
        for b in self.all_roots:
            for i in range(self.rank):
                c = sum(self.cartan_matrix[i][j] * b[j] for j in range(self.rank))
                r = tuple(b[k] - (c if k == i else 0) for k in range(self.rank))
                if r not in self._root_set:
                    return False
        return True


@lru_cache(maxsize=None)
def build_root_system(t: SimpleType) -> RootSystem:
    return RootSystem(_gram(t), [t])


@lru_cache(maxsize=None)
def product_root_system(types: tuple) -> RootSystem:
    """Orthogonal sum of simple systems, each Bourbaki numbered."""
    if len(types) == 1:
        return build_root_system(types[0])
    n = sum(t.rank for t in types)
    g = [[0] * n for _ in range(n)]
    off = 0
    for t in types:
        sub = _gram(t)
        for i in range(t.rank):
            for j in range(t.rank):
                g[off + i][off + j] = sub[i][j]
        off += t.rank
    return RootSystem(g, types)


def highest_roots(rs: RootSystem) -> tuple[Vec, Vec]:
    """(highest root, highest short root); equal for simply laced systems."""
    long_ = rs.highest_root
    if not rs.is_doubly_laced:
        return long_, long_
    short = [b for b in rs.positive_roots if rs.is_short(b) and rs.is_dominant(rs.labels(b))]
    if len(short) != 1:
        raise AssertionError("dominant short root is not unique")
    return long_, short[0]


# -- type identification ----------------------------------------------------

def _candidate_types(rank: int, nroots: int, lengths: list[int], nlong: int) -> list[SimpleType]:
    if len(lengths) == 1:
        out = []
        if nroots == rank * (rank + 1):
            out.append(SimpleType("A", rank))
        if rank >= 3 and nroots == 2 * rank * (rank - 1):
            out.append(SimpleType("D", rank))
        if rank in (6, 7, 8) and nroots == {6: 72, 7: 126, 8: 240}[rank]:
            out.append(SimpleType("E", rank))
        return out
    ratio = Fraction(lengths[1], lengths[0])
    if ratio == 3:
        return [SimpleType("G", 2)]
    if rank == 4 and nroots == 48:
        return [SimpleType("F", 4)]
    out = []
    if nlong == 2 * rank * (rank - 1):
        out.append(SimpleType("B", rank))
    if nlong == 2 * rank:
        out.append(SimpleType("C", rank))
    return out


def _match_nodes(sub, std) -> tuple | None:
    n = len(std)
    perm = [None] * n

    def ok(k):
        for i in range(k + 1):
            if sub[perm[i]][perm[k]] != std[i][k] or sub[perm[k]][perm[i]] != std[k][i]:
                return False
        return True

    def search(k, used):
        if k == n:
            return True
        for c in range(n):
            if c in used:
                continue
            perm[k] = c
            if ok(k) and search(k + 1, used | {c}):
                return True
        return False

    return tuple(perm) if search(0, frozenset()) else None


def identify(gram, prefer: Iterable[SimpleType] = ()) -> list[tuple[SimpleType, tuple]]:
    """Split a Gram matrix into simple components with Bourbaki node orders.

    Returns ``[(type, nodes), ...]`` where ``nodes[i]`` is the index in ``gram``
    of Bourbaki node ``i`` of that component.  ``prefer`` resolves the
    coincidences B2 = C2 and A3 = D3 (defaults B2, A3).
    """
    prefer = list(prefer)
    cartan = _cartan_from_gram(gram)
    out = []
    for comp in _components(cartan):
        sub_gram = [[gram[i][j] for j in comp] for i in comp]
        sub_cartan = _cartan_from_gram(sub_gram)
        roots = _reflection_closure(sub_cartan)

        def l2(b):
            return sum(b[i] * sub_gram[i][j] * b[j] for i in range(len(comp)) for j in range(len(comp)))

        lengths = sorted({l2(b) for b in roots})
        nlong = sum(1 for b in roots if l2(b) == lengths[-1])
        cands = _candidate_types(len(comp), len(roots), lengths, nlong)
        if not cands:
            raise ValueError("unrecognised root system component")
        chosen = next((t for t in prefer if t in cands), cands[0])
        std = build_root_system(chosen).cartan_matrix
        perm = _match_nodes(sub_cartan, std)
        if perm is None:
            raise AssertionError("node matching failed")
        out.append((chosen, tuple(comp[p] for p in perm)))
    return out


# -- embeddings -------------------------------------------------------------

@dataclass(frozen=True)
class Embedding:
    """Inclusion of the Cartan data of a subalgebra g (target) in g' (source).

    ``coroots[j]`` expresses the j-th simple coroot of g in the simple coroots
    of g'; restricting a g'-weight is then ``lambda -> coroots @ lambda``.
    ``generators[j]`` gives the image of the Chevalley generator e_j of g as a
    list of ``(root of g', coefficient)``; f_j is the same combination of the
    opposite root vectors.  It is ``None`` for embeddings known only through
    their Cartan data.
    """

    source: RootSystem
    target: RootSystem
    coroots: tuple
    generators: tuple | None = None
    kind: str = "subsystem"

    def restrict(self, lam) -> Vec:
        return tuple(sum(c * x for c, x in zip(row, lam)) for row in self.coroots)

    def compose(self, inner: "Embedding") -> "Embedding":
        """``inner`` embeds h in self.target; return the embedding of h in self.source."""
        if inner.source is not self.target and inner.source.cartan_matrix != self.target.cartan_matrix:
            raise ValueError("embeddings do not compose")
        rows = []
        for r in inner.coroots:
            rows.append(
                tuple(sum(r[k] * self.coroots[k][i] for k in range(len(r))) for i in range(self.source.rank))
            )
        return Embedding(self.source, inner.target, tuple(rows), None, f"{self.kind}*{inner.kind}")


def factor_through(outer: Embedding, inner_total: Embedding) -> Embedding:
    """Given h in g' (``outer``) and g in g' (``inner_total``) with g inside h,
    return the embedding of g in h by solving ``X @ outer.coroots = inner.coroots``."""
    import sympy

    if outer.source.cartan_matrix != inner_total.source.cartan_matrix:
        raise ValueError("embeddings must share the ambient system")
    big = sympy.Matrix(outer.coroots)
    rows = []
    for r in inner_total.coroots:
        sol, params = big.T.gauss_jordan_solve(sympy.Matrix(r))
        if params.shape[0]:
            sol = sol.subs({p: 0 for p in params})
        vals = [sympy.nsimplify(x) for x in sol]
        if any(not x.is_integer for x in vals):
            raise ValueError("coroots do not factor integrally")
        rows.append(tuple(int(x) for x in vals))
    return Embedding(outer.target, inner_total.target, tuple(rows), None, "factored")


@dataclass(frozen=True)
class FoldingMap(Embedding):
    automorphism: tuple = ()
    orbits: tuple = ()


@dataclass(frozen=True)
class Subsystem:
    """A closed subsystem, seen both inside the ambient system and abstractly."""

    ambient: RootSystem
    simple_roots: tuple  # ambient coordinates, Bourbaki order per component
    roots: tuple  # ambient coordinates
    root_system: RootSystem  # canonical (Bourbaki normalised) abstract system
    embedding: Embedding = field(repr=False)

    @property
    def types(self):
        return self.root_system.types


def _subsystem_from_simple(rs: RootSystem, simple: list, roots: list, prefer=()) -> Subsystem:
    gram = [[rs.inner(a, b) for b in simple] for a in simple]
    comps = identify(gram, prefer)
    order = [i for _, nodes in comps for i in nodes]
    simple = [simple[i] for i in order]
    target = product_root_system(tuple(t for t, _ in comps))
    coroots = []
    for b in simple:
        l2 = rs.length2(b)
        row = []
        for i in range(rs.rank):
            v = Fraction(b[i] * rs.gram[i][i], l2)
            if v.denominator != 1:
                raise AssertionError("non-integral coroot")
            row.append(int(v))
        coroots.append(tuple(row))
    gens = tuple(((b, 1),) for b in simple)
    emb = Embedding(rs, target, tuple(coroots), gens, "subsystem")
    pos = sorted((b for b in roots if rs.is_positive(b)), key=rs.positive_order)
    allr = tuple(pos) + tuple(tuple(-x for x in b) for b in pos)
    return Subsystem(rs, tuple(simple), allr, target, emb)


def closed_subsystem(rs: RootSystem, generators: Sequence[Vec], prefer: Iterable[SimpleType] = ()) -> Subsystem:
    """Smallest symmetric, addition-closed set of roots containing ``generators``."""
    gens = [tuple(g) for g in generators]
    for g in gens:
        if not rs.is_root(g):
            raise ValueError(f"{g} is not a root")
    s = set(gens) | {tuple(-x for x in g) for g in gens}
    changed = True
    while changed:
        changed = False
        cur = list(s)
        for a, b in itertools.combinations(cur, 2):
            c = tuple(x + y for x, y in zip(a, b))
            if rs.is_root(c) and c not in s:
                s.add(c)
                s.add(tuple(-x for x in c))
                changed = True
    pos = sorted((b for b in s if rs.is_positive(b)), key=rs.positive_order)
    decomposable = {tuple(x + y for x, y in zip(a, b)) for a, b in itertools.combinations_with_replacement(pos, 2)}
    simple = [b for b in pos if b not in decomposable]
    return _subsystem_from_simple(rs, simple, sorted(s, key=_root_key), prefer)


def long_root_subsystem(rs: RootSystem, prefer: Iterable[SimpleType] = ()) -> Subsystem:
    """The long roots of a doubly laced system (equal rank, one root length).

    For simply laced input the whole system is returned and ``Subsystem.roots``
    covers every root; callers can test ``rs.is_doubly_laced`` first.
    """
    longs = [b for b in rs.positive_roots if rs.is_long(b)]
    return closed_subsystem(rs, longs, prefer)


def short_root_orbit(rs: RootSystem, seed: Vec, within: Sequence[Vec]) -> list[Vec]:
    """Orbit of ``seed`` under the reflections in the roots ``within``."""
    seen = {tuple(seed)}
    frontier = [tuple(seed)]
    while frontier:
        new = []
        for b in frontier:
            for a in within:
                c = Fraction(2 * rs.inner(b, a), rs.length2(a))
                r = tuple(int(x - c * y) for x, y in zip(b, a))
                if r not in seen:
                    seen.add(r)
                    new.append(r)
        frontier = new
    return sorted(seen, key=_root_key)


def fold(rs_prime: RootSystem, automorphism: Sequence[int], prefer: Iterable[SimpleType] = ()) -> FoldingMap:
    """Fixed-point subalgebra of a diagram automorphism of a simply laced system.

    ``automorphism[i]`` is the image of node i.  Orbits of the automorphism must
    consist of pairwise non-adjacent nodes (this excludes A_{2n}).  The folded
    simple coroot of an orbit is the sum of the coroots in it, so a weight
    restricts by summing its labels over each orbit.
    """
    p = tuple(automorphism)
    n = rs_prime.rank
    a = rs_prime.cartan_matrix
    if sorted(p) != list(range(n)):
        raise ValueError("automorphism must be a permutation of the nodes")
    if any(a[p[i]][p[j]] != a[i][j] for i in range(n) for j in range(n)):
        raise ValueError("permutation is not a diagram symmetry")
    orbits = []
    seen = set()
    for i in range(n):
        if i in seen:
            continue
        orb = [i]
        j = p[i]
        while j != i:
            orb.append(j)
            j = p[j]
        seen.update(orb)
        orbits.append(tuple(sorted(orb)))
    for orb in orbits:
        if any(a[i][j] for i in orb for j in orb if i != j):
            raise ValueError("orbit contains adjacent nodes; folding unsupported")
    m = len(orbits)
    folded = [[sum(a[i][P[0]] for i in O) for P in orbits] for O in orbits]
    # a symmetrisation with short roots of squared length 2
    sizes = [len(O) for O in orbits]
    big = max(sizes)
    d = [2 * big // s for s in sizes]
    gram = [[d[i] * folded[i][j] // 2 for j in range(m)] for i in range(m)]
    comps = identify(gram, prefer)
    if len(comps) != 1:
        raise AssertionError("folding of a simple system must be simple")
    t, nodes = comps[0]
    target = build_root_system(t)
    if target.cartan_matrix != tuple(tuple(folded[i][j] for j in nodes) for i in nodes):
        raise AssertionError("folded Cartan matrix mismatch")
    coroots = tuple(tuple(int(k in orbits[i]) for k in range(n)) for i in nodes)
    gens = tuple(tuple((rs_prime.simple_roots[k], 1) for k in orbits[i]) for i in nodes)
    return FoldingMap(
        rs_prime, target, coroots, gens, "folding", automorphism=p, orbits=tuple(orbits[i] for i in nodes)
    )
