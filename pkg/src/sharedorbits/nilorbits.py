"""Nilpotent orbit representatives, sl2-triples, centralizers and gradings."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import flint

from . import linalg
from .chevalley import Element, LieAlgebraData, chevalley_algebra
from .modules import ModuleRealization, defining_module
from .rootsys import SimpleType, Vec, highest_roots

KINDS = ("root_vector", "jordan_type", "principal", "by_dimension")


class OrbitError(ValueError):
    pass


def _parse_type(t) -> SimpleType:
    return t if isinstance(t, SimpleType) else SimpleType.parse(str(t))


def normalize_partition(p: Sequence[int]) -> tuple:
    return tuple(sorted((int(x) for x in p if int(x) > 0), reverse=True))


def partition_label(p: Sequence[int]) -> str:
    parts = []
    for k, grp in itertools.groupby(normalize_partition(p)):
        m = len(list(grp))
        parts.append(f"{k}^{m}" if m > 1 else str(k))
    return "(" + ",".join(parts) + ")"


def check_partition(t: SimpleType, p: Sequence[int]) -> tuple:
    """Validate a Jordan type for the defining module of a classical type."""
    p = normalize_partition(p)
    t = _parse_type(t)
    if not t.is_classical:
        raise OrbitError(f"Jordan types are only defined for classical types, not {t}")
    if sum(p) != t.defining_dimension:
        raise OrbitError(f"partition {p} does not sum to {t.defining_dimension}")
    counts = {k: p.count(k) for k in set(p)}
    if t.family in "BD":
        bad = [k for k, m in counts.items() if k % 2 == 0 and m % 2]
        if bad:
            raise OrbitError(f"orthogonal Jordan type needs even parts with even multiplicity: {p}")
    if t.family == "C":
        bad = [k for k, m in counts.items() if k % 2 == 1 and m % 2]
        if bad:
            raise OrbitError(f"symplectic Jordan type needs odd parts with even multiplicity: {p}")
    return p


@dataclass(frozen=True)
class OrbitSpec:
    """How to pick a nilpotent element: a root vector, a Jordan type in the
    defining module, the principal element, or a 0/1 search by dimension."""

    algebra: SimpleType
    kind: str
    data: object = None
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "algebra", _parse_type(self.algebra))
        if self.kind not in KINDS:
            raise OrbitError(f"unknown orbit kind {self.kind!r}")
        if self.kind == "jordan_type":
            object.__setattr__(self, "data", check_partition(self.algebra, self.data))
        if self.kind == "root_vector":
            object.__setattr__(self, "data", tuple(self.data))
        if self.kind == "by_dimension":
            object.__setattr__(self, "data", int(self.data))
        if not self.label:
            object.__setattr__(self, "label", self._default_label())

    def _default_label(self) -> str:
        if self.kind == "jordan_type":
            return f"Jordan type {partition_label(self.data)}"
        if self.kind == "root_vector":
            return f"root vector e{list(self.data)}"
        if self.kind == "principal":
            return "principal"
        return f"{self.data}-dimensional"

    @classmethod
    def root_vector(cls, t, root, label: str = "") -> "OrbitSpec":
        return cls(t, "root_vector", tuple(root), label)

    @classmethod
    def jordan(cls, t, partition, label: str = "") -> "OrbitSpec":
        return cls(t, "jordan_type", tuple(partition), label)

    @classmethod
    def principal(cls, t) -> "OrbitSpec":
        return cls(t, "principal")

    @classmethod
    def by_dimension(cls, t, d: int) -> "OrbitSpec":
        return cls(t, "by_dimension", d)

    @classmethod
    def minimal(cls, t) -> "OrbitSpec":
        from .rootsys import build_root_system

        t = _parse_type(t)
        return cls(t, "root_vector", build_root_system(t).highest_root, "minimal (highest root vector)")

    @classmethod
    def short_root(cls, t) -> "OrbitSpec":
        from .rootsys import build_root_system

        t = _parse_type(t)
        return cls(t, "root_vector", highest_roots(build_root_system(t))[1], "highest short root vector")

    def to_json(self) -> dict:
        data = self.data
        if isinstance(data, tuple):
            data = list(data)
        return {"algebra": str(self.algebra), "kind": self.kind, "data": data, "label": self.label}


# -- elements ----------------------------------------------------------------

def root_vector_sum(L: LieAlgebraData, roots: Sequence[Vec]) -> Element:
    return L.vector({L.root_index[tuple(b)]: 1 for b in roots})


def orbit_dim(L: LieAlgebraData, e: Element) -> int:
    return linalg.rank(L.ad_matrix(e))


def is_nilpotent(L: LieAlgebraData, e: Element) -> bool:
    a = L.ad_matrix(e)
    return linalg.is_zero(a ** L.dim) if L.dim else True


def positive_subsets(L: LieAlgebraData):
    """All subsets of the positive roots, by size and then lexicographically
    in the positive-root order; the search order for representatives."""
    pos = L.rs.positive_roots
    for k in range(1, len(pos) + 1):
        for combo in itertools.combinations(pos, k):
            yield combo


def jordan_type_of_matrix(x: flint.fmpq_mat) -> tuple:
    n = x.nrows()
    ranks = [n]
    p = linalg.identity(n)
    while ranks[-1]:
        p = p * x
        r = linalg.rank(p)
        if r == ranks[-1]:
            raise OrbitError("matrix is not nilpotent")
        ranks.append(r)
    # blocks of size >= k: ranks[k-1] - ranks[k]
    ge = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))] + [0]
    parts = []
    for k in range(1, len(ge)):
        parts += [k] * (ge[k - 1] - ge[k])
    return normalize_partition(parts)


def jordan_type(L: LieAlgebraData, e: Element) -> tuple:
    """Jordan block sizes of e in the defining module of a classical algebra."""
    return jordan_type_of_matrix(defining_module(L).act(e))


def orbit_element(L: LieAlgebraData, spec: OrbitSpec, search_limit: int = 1 << 20) -> Element:
    """A representative of the orbit described by ``spec``.

    ``jordan_type`` and ``by_dimension`` search sums of positive root vectors
    in the order of :func:`positive_subsets` and return the first hit.
    """
    rs = L.rs
    if spec.algebra.rank != rs.rank or rs.cartan_matrix != _cartan_of(spec.algebra):
        raise OrbitError(f"orbit spec for {spec.algebra} does not match {L!r}")
    if spec.kind == "root_vector":
        if not rs.is_root(spec.data):
            raise OrbitError(f"{spec.data} is not a root")
        return L.e(spec.data)
    if spec.kind == "principal":
        return root_vector_sum(L, rs.simple_roots)
    if spec.kind == "by_dimension":
        d = spec.data
        if d % 2 or d < 0:
            raise OrbitError("nilpotent orbits have even dimension")
        if d == 0:
            return L.zero()
        for n, combo in enumerate(positive_subsets(L)):
            if n >= search_limit:
                break
            e = root_vector_sum(L, combo)
            if orbit_dim(L, e) == d:
                return e
        raise OrbitError(f"no {d}-dimensional orbit found among sums of positive root vectors")
    target = spec.data
    if all(x == 1 for x in target):
        return L.zero()
    V = defining_module(L)
    for n, combo in enumerate(positive_subsets(L)):
        if n >= search_limit:
            break
        x = linalg.zeros(V.dim, V.dim)
        for b in combo:
            x += V.action[L.root_index[b]]
        if jordan_type_of_matrix(x) == target:
            return root_vector_sum(L, combo)
    raise OrbitError(f"no representative of Jordan type {target} found")


def _cartan_of(t: SimpleType):
    from .rootsys import build_root_system

    return build_root_system(t).cartan_matrix


def partition_orbit_dim(t, partition: Sequence[int]) -> int:
    """Orbit dimension from the dual partition s of the Jordan type:
    sl_n: n^2 - sum s^2; so_N: N(N-1)/2 - (sum s^2 - #odd parts)/2;
    sp_2n: n(2n+1) - (sum s^2 + #odd parts)/2."""
    t = _parse_type(t)
    p = check_partition(t, partition)
    dual = [sum(1 for x in p if x > k) for k in range(p[0])] if p else []
    ss = sum(s * s for s in dual)
    odd = sum(1 for x in p if x % 2)
    N = t.defining_dimension
    if t.family == "A":
        return N * N - ss
    if t.family in "BD":
        return N * (N - 1) // 2 - (ss - odd) // 2
    return t.dimension - (ss + odd) // 2


# -- sl2 triples ---------------------------------------------------------------

@dataclass(frozen=True)
class Sl2Triple:
    L: LieAlgebraData = field(repr=False)
    h: Element
    e: Element
    f: Element

    def violations(self) -> list[str]:
        L = self.L
        two = Fraction(2)
        bad = []
        if L.bracket(self.h, self.e) != tuple(two * x for x in self.e):
            bad.append("[h,e]=2e")
        if L.bracket(self.h, self.f) != tuple(-two * x for x in self.f):
            bad.append("[h,f]=-2f")
        if L.bracket(self.e, self.f) != self.h:
            bad.append("[e,f]=h")
        return bad

    @property
    def is_valid(self) -> bool:
        return not self.violations()


def jacobson_morozov(L: LieAlgebraData, e: Element) -> Sl2Triple:
    """Complete a nonzero nilpotent e to an sl2-triple by two linear solves.

    h = [e, y] with ad(e)^2 y = -2e, then f from [e,f] = h, [h,f] = -2f.
    Free variables in both solves are set to zero, so the result depends only
    on e and the basis order.
    """
    if not any(e):
        raise OrbitError("e = 0 has no sl2-triple")
    if not is_nilpotent(L, e):
        raise OrbitError("e is not nilpotent")
    A = L.ad_matrix(e)
    y = linalg.solve(A * A, [-2 * x for x in e])
    if y is None:
        raise OrbitError("no h in the image of ad(e)")
    h = tuple(linalg.to_fraction(x) for x in linalg.mat_vec(A, y))
    H = L.ad_matrix(h)
    n = L.dim
    sys = linalg.vstack([A, H + 2 * linalg.identity(n)])
    f = linalg.solve(sys, list(h) + [0] * n)
    if f is None:
        raise OrbitError("no f completes the triple")
    t = Sl2Triple(L, h, tuple(e), tuple(linalg.to_fraction(x) for x in f))
    bad = t.violations()
    if bad:
        raise AssertionError(f"triple relations fail: {bad}")
    return t


def centralizer(L: LieAlgebraData, e: Element) -> list[Element]:
    return [tuple(linalg.to_fraction(x) for x in v) for v in linalg.nullspace(L.ad_matrix(e))]


@dataclass
class GradingDecomposition:
    """Eigenspaces of a semisimple operator with integer eigenvalues."""

    spaces: dict  # eigenvalue -> list of vectors

    @property
    def dims(self) -> dict:
        return {k: len(v) for k, v in sorted(self.spaces.items())}

    @property
    def eigenvalues(self) -> list[int]:
        return sorted(self.spaces)

    @property
    def total(self) -> int:
        return sum(len(v) for v in self.spaces.values())

    def bracket_violations(self, L: LieAlgebraData, rng, samples: int = 20) -> int:
        """Random pairs x in g_i, y in g_j with [x,y] outside g_{i+j}."""
        keys = self.eigenvalues
        bad = 0
        for _ in range(samples):
            i, j = rng.choice(keys), rng.choice(keys)
            x = _random_comb(self.spaces[i], rng)
            y = _random_comb(self.spaces[j], rng)
            z = L.bracket(x, y)
            target = self.spaces.get(i + j, [])
            if any(z) and linalg.span_rank(target + [z]) != len(target):
                bad += 1
        return bad


def _random_comb(vectors, rng):
    n = len(vectors[0])
    out = [Fraction(0)] * n
    for v in vectors:
        c = Fraction(rng.randint(-3, 3))
        for k in range(n):
            out[k] += c * v[k]
    return tuple(out)


def grading_of_matrix(m: flint.fmpq_mat) -> GradingDecomposition:
    n = m.nrows()
    bound = 0
    for a in range(n):
        s = sum(abs(linalg.to_fraction(m[a, b])) for b in range(n))
        bound = max(bound, int(s) + 1)
    spaces = {}
    found = 0
    for k in range(-bound, bound + 1):
        ker = linalg.nullspace(m - k * linalg.identity(n))
        if ker:
            spaces[k] = [tuple(linalg.to_fraction(x) for x in v) for v in ker]
            found += len(ker)
    if found != n:
        raise OrbitError("operator is not diagonalizable with integer eigenvalues")
    return GradingDecomposition(spaces)


def h_grading(space: LieAlgebraData | ModuleRealization, h: Element) -> GradingDecomposition:
    """Eigenspace decomposition of ad(h) on g, or of h on a module."""
    m = space.ad_matrix(h) if isinstance(space, LieAlgebraData) else space.act(h)
    return grading_of_matrix(m)


def triple_for(spec: OrbitSpec, L: LieAlgebraData | None = None) -> tuple[LieAlgebraData, Element, Sl2Triple | None]:
    L = L or chevalley_algebra(spec.algebra)
    e = orbit_element(L, spec)
    return L, e, (jacobson_morozov(L, e) if any(e) else None)
