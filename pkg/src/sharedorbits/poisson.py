"""Graded Poisson algebras: the Lie-Poisson bracket on polynomials on g*, the
symplectic model on C^{2n} whose quadratics form sp(2n), and the coadjoint
orbit comparison for semidirect sums r + u with u abelian."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import flint
from sympy import QQ
from sympy.polys.rings import PolyElement, ring

from . import linalg
from .chevalley import LieAlgebraData, chevalley_algebra
from .modules import ModuleRealization, defining_form, defining_module
from .rootsys import SimpleType

DEFAULT_SEED = 20240601


# -- graded polynomials ------------------------------------------------------------

@dataclass(frozen=True)
class GradedPolynomial:
    """A polynomial with a grade attached to each coordinate."""

    poly: PolyElement
    weights: tuple

    def grade_of(self, monom) -> int:
        return sum(a * w for a, w in zip(monom, self.weights))

    def components(self) -> dict:
        out: dict = {}
        R = self.poly.ring
        for monom, c in self.poly.terms():
            out.setdefault(self.grade_of(monom), R.zero)
            out[self.grade_of(monom)] += R({monom: c})
        return out

    @property
    def is_zero(self) -> bool:
        return not self.poly

    @property
    def grades(self) -> set:
        return {self.grade_of(m) for m in self.poly.monoms()} if self.poly else set()

    def is_homogeneous(self) -> bool:
        return len(self.grades) <= 1

    @property
    def grade(self) -> int | None:
        g = self.grades
        return next(iter(g)) if len(g) == 1 else None

    def _wrap(self, p) -> "GradedPolynomial":
        return GradedPolynomial(p, self.weights)

    def __add__(self, other):
        return self._wrap(self.poly + (other.poly if isinstance(other, GradedPolynomial) else other))

    def __sub__(self, other):
        return self._wrap(self.poly - (other.poly if isinstance(other, GradedPolynomial) else other))

    def __mul__(self, other):
        return self._wrap(self.poly * (other.poly if isinstance(other, GradedPolynomial) else other))

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(-self.poly)

    def __eq__(self, other):
        if isinstance(other, GradedPolynomial):
            return self.poly == other.poly
        return self.poly == other

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        return f"GradedPolynomial({self.poly.as_expr()})"


class PoissonAlgebra:
    """Polynomials in named coordinates with a bracket fixed on coordinates:
    ``{x_i, x_j} = bracket_table[(i, j)]`` (a polynomial)."""

    def __init__(self, names: Sequence[str], weights: Sequence[int], table):
        self.names = tuple(names)
        self.R, *gens = ring(",".join(self.names), QQ)
        self.gens = tuple(gens)
        self.weights = tuple(int(w) for w in weights)
        self.table = table

    def coordinate(self, i: int) -> GradedPolynomial:
        return GradedPolynomial(self.gens[i], self.weights)

    def constant(self, c) -> GradedPolynomial:
        c = linalg.to_fraction(c)
        return GradedPolynomial(self.R(QQ(c.numerator, c.denominator)), self.weights)

    def wrap(self, p) -> GradedPolynomial:
        return GradedPolynomial(p, self.weights)

    def bracket(self, f: GradedPolynomial, g: GradedPolynomial) -> GradedPolynomial:
        if f.poly.ring != self.R or g.poly.ring != self.R:
            raise ValueError("coordinate mismatch")
        df = [(i, f.poly.diff(x)) for i, x in enumerate(self.gens)]
        dg = [(j, g.poly.diff(x)) for j, x in enumerate(self.gens)]
        df = [(i, p) for i, p in df if p]
        dg = [(j, p) for j, p in dg if p]
        out = self.R.zero
        for i, p in df:
            for j, q in dg:
                c = self.table(i, j)
                if c:
                    out += p * q * c
        return self.wrap(out)

    def random_homogeneous(self, rng: random.Random, grade: int, terms: int = 3) -> GradedPolynomial:
        """A random polynomial all of whose monomials have the given grade."""
        p = self.R.zero
        if not _achievable(grade, self.weights):
            return self.wrap(p)
        for _ in range(terms):
            c = rng.choice([x for x in range(-5, 6) if x])
            p += self.R({_random_monomial(rng, grade, self.weights): QQ(c)})
        return self.wrap(p)


def _achievable(grade: int, weights) -> bool:
    ok = {0}
    for g in range(1, grade + 1):
        if any(g - w in ok for w in set(weights) if w <= g):
            ok.add(g)
    return grade in ok


def _random_monomial(rng: random.Random, grade: int, weights) -> tuple:
    exps = [0] * len(weights)
    rest = grade
    while rest:
        choices = [i for i, w in enumerate(weights) if w <= rest and _achievable(rest - w, weights)]
        i = rng.choice(choices)
        exps[i] += 1
        rest -= weights[i]
    return tuple(exps)


def lie_poisson_algebra(L: LieAlgebraData) -> PoissonAlgebra:
    """Polynomial functions on g*: coordinate x_i is the basis element b_i,
    of grade 2, with ``{x_i, x_j} = sum_k c^k_ij x_k``."""
    names = [f"x{i}" for i in range(L.dim)]
    alg = PoissonAlgebra(names, [2] * L.dim, None)
    cache: dict = {}

    def table(i, j):
        key = (i, j)
        if key not in cache:
            p = alg.R.zero
            for k, c in L.bracket_basis(i, j).items():
                p += alg.gens[k] * QQ(int(c))
            cache[key] = p
        return cache[key]

    alg.table = table
    L.__dict__["_poisson"] = alg
    return alg


def _poisson_of(L: LieAlgebraData) -> PoissonAlgebra:
    return L.__dict__.get("_poisson") or lie_poisson_algebra(L)


def lie_poisson_bracket(L: LieAlgebraData, f: GradedPolynomial, g: GradedPolynomial) -> GradedPolynomial:
    return _poisson_of(L).bracket(f, g)


def grade_rule_holds(alg: PoissonAlgebra, f: GradedPolynomial, g: GradedPolynomial) -> bool:
    """{R[k], R[l]} lands in R[k+l-2] (zero allowed)."""
    b = alg.bracket(f, g)
    if b.is_zero:
        return True
    return f.grade is not None and g.grade is not None and b.grades == {f.grade + g.grade - 2}


def grading_check(L: LieAlgebraData | PoissonAlgebra, samples: int = 50, seed: int = DEFAULT_SEED,
                  max_grade: int = 8):
    """Random homogeneous pairs of grade up to ``max_grade``; returns a report."""
    from .sharedpairs import VerificationReport

    alg = L if isinstance(L, PoissonAlgebra) else _poisson_of(L)
    name = getattr(L, "name", "") or "Poisson algebra"
    rng = random.Random(seed)
    grades = [g for g in range(0, max_grade + 1) if _achievable(g, alg.weights)]
    bad = 0
    for _ in range(samples):
        f = alg.random_homogeneous(rng, rng.choice(grades))
        g = alg.random_homogeneous(rng, rng.choice(grades))
        if not grade_rule_holds(alg, f, g):
            bad += 1
    rep = VerificationReport(f"grading rule on {name}", {"samples": samples, "seed": seed})
    rep.add("violations of {R[k],R[l]} in R[k+l-2]", 0, bad)
    return rep


# -- the symplectic model ----------------------------------------------------------

def block_form(n: int) -> flint.fmpq_mat:
    """beta = [[0, I], [-I, 0]]: pairs z_i with z_{n+i}."""
    m = flint.fmpq_mat(2 * n, 2 * n)
    for i in range(n):
        m[i, n + i] = 1
        m[n + i, i] = -1
    return m


def _to_block_basis(n: int) -> flint.fmpq_mat:
    # basis v_0..v_{2n-1} of the defining module (anti-diagonal form) to the
    # block basis: v_i -> e_{n+i}, v_{2n-1-i} -> e_i for i < n
    T = flint.fmpq_mat(2 * n, 2 * n)
    for i in range(n):
        T[n + i, i] = 1
        T[i, 2 * n - 1 - i] = 1
    return T


@dataclass
class SymplecticModel:
    """Polynomials on C^{2n} with {z_i, z_j} = beta_ij; z_i has grade 1."""

    n: int
    beta: flint.fmpq_mat
    algebra: PoissonAlgebra = field(repr=False)
    L: LieAlgebraData | None = field(default=None, repr=False)
    matrices: tuple = field(default=(), repr=False)  # sp(2n) basis in the block basis
    moment_quadratics: dict = field(default_factory=dict, repr=False)

    @property
    def z(self) -> tuple:
        return tuple(self.algebra.coordinate(i) for i in range(2 * self.n))


def symplectic_model(n: int, beta: flint.fmpq_mat | None = None) -> SymplecticModel:
    beta = block_form(n) if beta is None else beta
    names = [f"z{i + 1}" for i in range(2 * n)]
    alg = PoissonAlgebra(names, [1] * (2 * n), None)
    consts = {}
    for i in range(2 * n):
        for j in range(2 * n):
            c = linalg.to_fraction(beta[i, j])
            if c:
                consts[(i, j)] = alg.R(QQ(c.numerator, c.denominator))
    alg.table = lambda i, j: consts.get((i, j))
    return SymplecticModel(n, beta, alg)


def sp_min_cover_model(n: int) -> SymplecticModel:
    """The degree-1 and degree-2 parts of C[z_1..z_2n] with the standard form.

    sp(2n) acts through its Chevalley basis: a basis element with defining
    matrix X (block basis) goes to q_X = 1/2 z^T Omega X z with Omega = beta^{-1}.
    """
    if n < 1:
        raise ValueError("n must be positive")
    t = SimpleType("A", 1) if n == 1 else SimpleType("C", n)
    L = chevalley_algebra(t)
    model = symplectic_model(n)
    V = defining_module(L)
    T = _to_block_basis(n)
    omega = model.beta.inv()
    J = defining_form(SimpleType("C", n)) if n > 1 else linalg.matrix([[0, 1], [-1, 0]])
    if T.transpose() * omega * T != J:
        raise AssertionError("basis change does not carry the forms onto each other")
    mats = []
    quads = {}
    zs = model.algebra.gens
    for a in range(L.dim):
        X = T * V.action[a] * T.transpose()
        S = omega * X
        if S != S.transpose():
            raise AssertionError("defining matrix is not symplectic")
        p = model.algebra.R.zero
        for i in range(2 * n):
            for j in range(2 * n):
                c = linalg.to_fraction(S[i, j])
                if c:
                    p += zs[i] * zs[j] * QQ(c.numerator, 2 * c.denominator)
        mats.append(X)
        quads[a] = model.algebra.wrap(p)
    model.L = L
    model.matrices = tuple(mats)
    model.moment_quadratics = quads
    return model


def _span_dim(polys) -> int:
    monoms = sorted({m for p in polys for m in p.poly.monoms()})
    if not monoms:
        return 0
    idx = {m: k for k, m in enumerate(monoms)}
    rows = []
    for p in polys:
        r = [0] * len(monoms)
        for m, c in p.poly.terms():
            r[idx[m]] = Fraction(int(c.numerator), int(c.denominator))
        rows.append(r)
    return linalg.span_rank(rows)


def quadratic_span_dim(model: SymplecticModel) -> int:
    return _span_dim(list(model.moment_quadratics.values()))


def moment_homomorphism_violations(model: SymplecticModel) -> int:
    """Pairs (a, b) with {q_a, q_b} != sum_k c^k_ab q_k."""
    L = model.L
    alg = model.algebra
    bad = 0
    for a, b in itertools.combinations(range(L.dim), 2):
        lhs = alg.bracket(model.moment_quadratics[a], model.moment_quadratics[b])
        rhs = alg.R.zero
        for k, c in L.bracket_basis(a, b).items():
            rhs += model.moment_quadratics[k].poly * QQ(int(c))
        if lhs.poly != rhs:
            bad += 1
    return bad


def moment_equivariance_violations(model: SymplecticModel) -> int:
    """{q_X, z_j} must be the linear function -(X z)_j."""
    alg = model.algebra
    zs = alg.gens
    bad = 0
    for a, X in enumerate(model.matrices):
        for j in range(2 * model.n):
            lhs = alg.bracket(model.moment_quadratics[a], alg.coordinate(j)).poly
            rhs = alg.R.zero
            for k in range(2 * model.n):
                c = linalg.to_fraction(X[j, k])
                if c:
                    rhs -= zs[k] * QQ(c.numerator, c.denominator)
            if lhs != rhs:
                bad += 1
    return bad


def heisenberg_check(model: SymplecticModel) -> bool:
    """R[1] + R[0] is a Heisenberg algebra: brackets of linears are the
    constants beta_ij, and only constants are central (beta nondegenerate)."""
    alg = model.algebra
    N = 2 * model.n
    B = flint.fmpq_mat(N, N)
    for i in range(N):
        for j in range(N):
            b = alg.bracket(alg.coordinate(i), alg.coordinate(j))
            if b.is_zero:
                continue
            if b.grades != {0}:
                return False
            c = b.poly.coeff(1)
            B[i, j] = flint.fmpq(int(c.numerator), int(c.denominator))
    if B != model.beta:
        return False
    return linalg.rank(B) == N


def moment_matrix(model: SymplecticModel):
    """The moment map z -> M(z) in sp(2n), dual to the quadratics under the
    trace form, as a matrix of polynomials."""
    mats = model.matrices
    d = len(mats)
    G = flint.fmpq_mat(d, d)
    for a in range(d):
        for b in range(d):
            G[a, b] = _trace(mats[a] * mats[b])
    Gi = G.inv()
    R = model.algebra.R
    N = 2 * model.n
    M = [[R.zero] * N for _ in range(N)]
    for a in range(d):
        coef = R.zero
        for b in range(d):
            c = linalg.to_fraction(Gi[a, b])
            if c:
                coef += model.moment_quadratics[b].poly * QQ(c.numerator, c.denominator)
        if not coef:
            continue
        for i in range(N):
            for j in range(N):
                x = linalg.to_fraction(mats[a][i, j])
                if x:
                    M[i][j] += coef * QQ(x.numerator, x.denominator)
    return M


def _trace(m) -> flint.fmpq:
    return sum((m[i, i] for i in range(m.nrows())), flint.fmpq(0))


def moment_image_rank_one(model: SymplecticModel) -> bool:
    """Every 2x2 minor of M(z) vanishes identically and M is not zero."""
    M = moment_matrix(model)
    N = len(M)
    if not any(M[i][j] for i in range(N) for j in range(N)):
        return False
    for (i, k), (j, l) in itertools.product(itertools.combinations(range(N), 2), repeat=2):
        if M[i][j] * M[k][l] - M[i][l] * M[k][j]:
            return False
    return True


def symplectic_model_report(n: int):
    from .sharedpairs import VerificationReport, r1_detect, r2_decomposition, sp_minimal_cover

    model = sp_min_cover_model(n)
    rep = VerificationReport(f"symplectic model n={n}")
    rep.add("dim span of quadratics = dim sp(2n)", n * (2 * n + 1), quadratic_span_dim(model))
    rep.add("quadratics close to sp(2n) (structure constants)", 0, moment_homomorphism_violations(model))
    rep.add("moment map equivariance on linears", 0, moment_equivariance_violations(model))
    rep.add("R[1] + R[0] is Heisenberg", True, heisenberg_check(model))
    rep.add("moment image has rank 1", True, moment_image_rank_one(model))
    rep.add("grades of z_i", [1] * (2 * n), list(model.algebra.weights))
    cover = sp_minimal_cover(n)
    rep.run("R[2] has no summand beyond sp(2n)", lambda: ([], [list(map(list, t)) for t in r2_decomposition(None, cover)]))
    rep.run("R[1] = C^{2n}", lambda: ([[[1] + [0] * (max(n, 1) - 1), 1]],
                                       [[list(hw), k] for hw, k in r1_detect(None, cover)]))
    return rep


# -- semidirect sums ----------------------------------------------------------

class SemidirectSum:
    """s = r + u with u abelian, [x, u] = x.u for x in r.

    Basis: the basis of r followed by the basis of u.
    """

    def __init__(self, r: LieAlgebraData, u: ModuleRealization, check: bool = True):
        if u.L is not r:
            raise ValueError("module does not live on r")
        self.r = r
        self.u = u
        if check and self.u_invariants():
            raise ValueError("u has nonzero r-invariant vectors; the criterion does not apply")
        self.algebra = self._build()

    def u_invariants(self) -> int:
        blocks = [self.u.action[a] for a in range(self.r.dim)]
        k = linalg.nullspace(linalg.vstack(blocks))
        return len(k)

    def _build(self) -> LieAlgebraData:
        r, u = self.r, self.u
        d = r.dim
        st: dict = {}
        for key, val in r.structure.items():
            st[key] = dict(val)
        for a in range(d):
            m = u.action[a]
            for j in range(u.dim):
                col = {d + i: linalg.to_fraction(m[i, j]) for i in range(u.dim) if m[i, j]}
                if col:
                    st[(a, d + j)] = col
                    st[(d + j, a)] = {k: -c for k, c in col.items()}
        labels = list(r.labels) + [f"u{j}" for j in range(u.dim)]
        return LieAlgebraData(labels, st, None, name=f"{r.name} + {u.name or 'u'}")

    @property
    def dim(self) -> int:
        return self.algebra.dim


def _form_matrix(s: LieAlgebraData, gamma: Sequence) -> flint.fmpq_mat:
    """B[x, y] = gamma([x, y]) on basis elements."""
    n = s.dim
    B = flint.fmpq_mat(n, n)
    g = [linalg.q(c) for c in gamma]
    for (i, j), val in s.structure.items():
        v = sum((g[k] * linalg.q(c) for k, c in val.items()), flint.fmpq(0))
        if v:
            B[i, j] = v
    return B


def theorem7_transitivity(s: SemidirectSum, mu: Sequence, lam: Sequence) -> tuple[int, int, bool]:
    """(dim s.gamma, dim r.gamma, equal) for gamma = (mu, lambda) in r* + u*."""
    if len(mu) != s.r.dim or len(lam) != s.u.dim:
        raise ValueError("covector has the wrong shape")
    gamma = list(mu) + list(lam)
    B = _form_matrix(s.algebra, gamma)
    ds = linalg.rank(B)
    rows = flint.fmpq_mat(s.r.dim, s.dim)
    for i in range(s.r.dim):
        for j in range(s.dim):
            rows[i, j] = B[i, j]
    dr = linalg.rank(rows)
    return ds, dr, ds == dr


def standard_semidirect(name: str) -> SemidirectSum:
    """sl2 + C^2, sl3 + C^3 and sp4 + C^4 from the defining modules."""
    t = {"sl2": "A1", "sl3": "A2", "sp4": "C2"}[name]
    L = chevalley_algebra(t)
    return SemidirectSum(L, defining_module(L))


def random_rational(rng: random.Random, k: int, zero: bool = False) -> list:
    if zero:
        return [Fraction(0)] * k
    while True:
        v = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(k)]
        if any(v):
            return v


def semidirect_trials(s: SemidirectSum, trials: int = 100, seed: int = DEFAULT_SEED) -> dict:
    """Random gamma, alternating lambda = 0 and lambda != 0 (mu random, zero on
    every fourth trial); counts agreements with 'equal iff lambda = 0'."""
    rng = random.Random(seed)
    agree = 0
    zero_lam = nonzero_lam = 0
    for t in range(trials):
        lam_zero = t % 2 == 0
        mu = random_rational(rng, s.r.dim, zero=(t % 4 == 1))
        lam = random_rational(rng, s.u.dim, zero=lam_zero)
        ds, dr, eq = theorem7_transitivity(s, mu, lam)
        if dr > ds:
            raise AssertionError("r-orbit larger than s-orbit")
        agree += eq == lam_zero
        zero_lam += lam_zero
        nonzero_lam += not lam_zero
    return {"trials": trials, "agree": agree, "lambda_zero": zero_lam, "lambda_nonzero": nonzero_lam}
