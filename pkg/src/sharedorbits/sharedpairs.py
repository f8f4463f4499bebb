"""Shared orbit pairs: the degree-2 symmetry algebra of an orbit cover and the
catalog of pairs g inside g' that share an orbit.

For a nilpotent e with sl2-triple (h, e, f) and a g-module V, let V[k] be the
k-eigenspace of h on the g^e-invariants of V*.  For the universal cover of
the orbit, the degree-2 part of the function ring is g plus n_V copies of
each non-adjoint irreducible V with n_V = dim V[2] > 0; :func:`r2_decomposition`
scans for those V.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Sequence

import flint

from . import linalg
from .characters import (
    adjoint_character,
    branch_character,
    peel_decompose,
    weyl_dim,
)
from .chevalley import LieAlgebraData, chevalley_algebra, chevalley_basis
from .modules import ModuleRealization, realize_module, trivial_module
from .nilorbits import (
    OrbitSpec,
    Sl2Triple,
    centralizer,
    jacobson_morozov,
    jordan_type,
    orbit_dim,
    orbit_element,
    partition_orbit_dim,
)
from .rootsys import (
    Embedding,
    SimpleType,
    Vec,
    build_root_system,
    closed_subsystem,
    factor_through,
    fold,
    long_root_subsystem,
)

SCHEMA = "sharedorbits.report/1"
DEFAULT_SCAN_BOUND = 120


# -- records -----------------------------------------------------------------

@dataclass(frozen=True)
class CoverSpec:
    """A cover of a nilpotent orbit.  Only the universal (simply connected)
    cover is implemented; its degree is carried as metadata."""

    orbit: OrbitSpec
    cover_degree: int = 1
    cover: str = "simply_connected"

    def __post_init__(self):
        if self.cover != "simply_connected":
            raise ValueError("only simply connected covers are implemented")
        if int(self.cover_degree) < 1:
            raise ValueError("cover degree must be positive")

    def to_json(self) -> dict:
        return {"orbit": self.orbit.to_json(), "cover": self.cover, "cover_degree": self.cover_degree}


@dataclass(frozen=True)
class PairRecord:
    row: int
    g: SimpleType
    g_prime: SimpleType
    orbit: CoverSpec
    V: tuple  # ((highest weight, multiplicity), ...)
    mechanism: str
    build_embedding: Callable[[], Embedding] = field(repr=False, compare=False)
    n: int | None = None

    @property
    def label(self) -> str:
        return f"row {self.row}" + (f" n={self.n}" if self.n is not None else "")

    @property
    def embedding(self) -> Embedding:
        return _embedding(self)

    @property
    def V_dim(self) -> int:
        rs = build_root_system(self.g)
        return sum(k * weyl_dim(rs, hw) for hw, k in self.V)

    def to_json(self) -> dict:
        return {
            "row": self.row,
            "n": self.n,
            "g": str(self.g),
            "g_prime": str(self.g_prime),
            "orbit": self.orbit.to_json(),
            "V": _decomp_json(build_root_system(self.g), self.V),
            "mechanism": self.mechanism,
        }


_EMB_CACHE: dict = {}


def _embedding(rec: PairRecord) -> Embedding:
    key = (rec.row, rec.n)
    if key not in _EMB_CACHE:
        emb = rec.build_embedding()
        if emb.source.cartan_matrix != build_root_system(rec.g_prime).cartan_matrix:
            raise AssertionError(f"{rec.label}: embedding source is not {rec.g_prime}")
        if emb.target.cartan_matrix != build_root_system(rec.g).cartan_matrix:
            raise AssertionError(f"{rec.label}: embedding target is not {rec.g}")
        _EMB_CACHE[key] = emb
    return _EMB_CACHE[key]


def _T(s: str) -> SimpleType:
    return SimpleType.parse(s)


def _w(rank: int, *nodes: int) -> Vec:
    return tuple(int(i in nodes) for i in range(rank))


def _row1_embedding() -> Embedding:
    d4 = build_root_system(_T("D4"))
    b3_in_d4 = fold(d4, (0, 1, 3, 2))
    g2_in_d4 = fold(d4, (2, 1, 3, 0))
    return factor_through(b3_in_d4, g2_in_d4)


def _flip_D(n1: int) -> tuple:
    p = list(range(n1))
    p[-2], p[-1] = p[-1], p[-2]
    return tuple(p)


def _b4_in_f4():
    f4 = build_root_system(_T("F4"))
    longs = [b for b in f4.positive_roots if f4.is_long(b)]
    return closed_subsystem(f4, longs + [f4.simple_roots[2]])


def catalog() -> list[PairRecord]:
    """All nine rows, with the infinite families at their two smallest ranks."""
    recs = [
        PairRecord(1, _T("G2"), _T("B3"), CoverSpec(OrbitSpec.short_root("G2"), 1), ((_w(2, 0), 1),),
                   "Cartan data of the triality folding of D4 factored through the folding onto B3",
                   _row1_embedding),
    ]
    for n in (2, 3):
        recs.append(PairRecord(
            2, SimpleType("B", n), SimpleType("D", n + 1), CoverSpec(OrbitSpec.short_root(SimpleType("B", n)), 2),
            ((_w(n, 0), 1),), "folding of D_{n+1} by the flip of its last two nodes",
            (lambda n=n: fold(build_root_system(SimpleType("D", n + 1)), _flip_D(n + 1), [SimpleType("B", n)])), n))
    for n in (2, 3):
        recs.append(PairRecord(
            3, SimpleType("C", n), SimpleType("A", 2 * n - 1), CoverSpec(OrbitSpec.short_root(SimpleType("C", n)), 2),
            ((_w(n, 1), 1),), "folding of A_{2n-1} by the diagram reversal",
            (lambda n=n: fold(build_root_system(SimpleType("A", 2 * n - 1)), tuple(range(2 * n - 2, -1, -1)),
                              [SimpleType("C", n)])), n))
    recs.append(PairRecord(
        4, _T("F4"), _T("E6"), CoverSpec(OrbitSpec.short_root("F4"), 2), ((_w(4, 3), 1),),
        "folding of E6 by its diagram involution",
        lambda: fold(build_root_system(_T("E6")), (5, 1, 4, 3, 2, 0))))
    recs.append(PairRecord(
        5, _T("A2"), _T("G2"), CoverSpec(OrbitSpec.principal("A2"), 3), ((_w(2, 0), 1), (_w(2, 1), 1)),
        "long roots of G2", lambda: long_root_subsystem(build_root_system(_T("G2"))).embedding))
    for n in (3, 4):
        recs.append(PairRecord(
            6, SimpleType("D", n), SimpleType("B", n),
            CoverSpec(OrbitSpec.jordan(SimpleType("D", n), (3,) + (1,) * (2 * n - 3)), 2),
            ((_w(n, 0), 1),), "long roots of B_n",
            (lambda n=n: long_root_subsystem(build_root_system(SimpleType("B", n)), [SimpleType("D", n)]).embedding),
            n))
    recs.append(PairRecord(
        7, _T("B4"), _T("F4"), CoverSpec(OrbitSpec.jordan("B4", (2, 2, 2, 2, 1)), 2), ((_w(4, 3), 1),),
        "closure of the long roots of F4 and one short root", lambda: _b4_in_f4().embedding))
    recs.append(PairRecord(
        8, _T("D4"), _T("F4"), CoverSpec(OrbitSpec.jordan("D4", (3, 2, 2, 1)), 4),
        ((_w(4, 0), 1), (_w(4, 2), 1), (_w(4, 3), 1)),
        "long roots of F4", lambda: long_root_subsystem(build_root_system(_T("F4"))).embedding))
    recs.append(PairRecord(
        9, _T("G2"), _T("D4"), CoverSpec(OrbitSpec.by_dimension("G2", 10), 6), ((_w(2, 0), 2),),
        "triality folding of D4", lambda: fold(build_root_system(_T("D4")), (2, 1, 3, 0))))
    return recs


def find_record(row: int, n: int | None = None) -> PairRecord:
    hits = [r for r in catalog() if r.row == row and (n is None or r.n == n)]
    if not hits:
        raise KeyError(f"no catalog entry for row {row}" + (f" n={n}" if n is not None else ""))
    return hits[0]


def sp_minimal_cover(n: int) -> CoverSpec:
    """The double cover of the minimal orbit of sp(2n)."""
    return CoverSpec(OrbitSpec.minimal(SimpleType("C", n) if n > 1 else SimpleType("A", 1)), 2)


# -- the eigenspace formula ---------------------------------------------------

@dataclass(frozen=True)
class OrbitData:
    L: LieAlgebraData
    e: tuple
    triple: Sl2Triple | None
    centralizer: tuple


@lru_cache(maxsize=None)
def orbit_data(spec: OrbitSpec) -> OrbitData:
    L = chevalley_algebra(spec.algebra)
    e = orbit_element(L, spec)
    triple = jacobson_morozov(L, e) if any(e) else None
    return OrbitData(L, e, triple, tuple(centralizer(L, e)))


def invariant_grading(L: LieAlgebraData, triple: Sl2Triple, V: ModuleRealization,
                      cent: Sequence | None = None) -> dict:
    """k -> dim of the h-eigenvalue-k part of (V*)^{g^e}."""
    if V.L is not L:
        raise ValueError("module and triple live on different algebras")
    n = V.dim
    cent = centralizer(L, triple.e) if cent is None else cent
    blocks = [V.act(x).transpose() for x in cent]
    if blocks:
        W = linalg.nullspace(linalg.vstack(blocks))
    else:
        W = linalg.nullspace(linalg.zeros(0, n))
    if not W:
        return {}
    B = linalg.matrix(W).transpose()  # columns span the invariants in V*
    Ht = V.act(triple.h).transpose()
    m = len(W)
    bound = _h_bound(V, triple)
    out = {}
    for k in range(-bound, bound + 1):
        # dual action of h is -H^T; eigenvalue k means (H^T + k) v = 0
        d = m - linalg.rank((Ht + k * linalg.identity(n)) * B)
        if d:
            out[k] = d
    if sum(out.values()) != m:
        raise AssertionError("h does not act semisimply on the invariants")
    return out


def _h_bound(V: ModuleRealization, triple: Sl2Triple) -> int:
    H = V.act(triple.h)
    return max((int(sum(abs(linalg.to_fraction(H[a, b])) for b in range(V.dim))) + 1 for a in range(V.dim)),
               default=1)


def v2_dimension(L: LieAlgebraData, triple: Sl2Triple, V: ModuleRealization, k: int = 2,
                 cent: Sequence | None = None) -> int:
    """dim of {v in V* : g^e v = 0, h v = k v}."""
    if V.dim == 0:
        raise ValueError("empty module")
    n = V.dim
    cent = centralizer(L, triple.e) if cent is None else cent
    blocks = [V.act(x).transpose() for x in cent]
    blocks.append(V.act(triple.h).transpose() + k * linalg.identity(n))
    return n - linalg.rank(linalg.vstack(blocks))


def dominant_weights_up_to(rs, bound: int) -> list[Vec]:
    """Dominant weights with Weyl dimension at most ``bound``, by dimension."""
    zero = (0,) * rs.rank
    seen = {zero}
    frontier = [zero]
    while frontier:
        new = []
        for lam in frontier:
            for i in range(rs.rank):
                mu = tuple(x + (j == i) for j, x in enumerate(lam))
                if mu not in seen and weyl_dim(rs, mu) <= bound:
                    seen.add(mu)
                    new.append(mu)
        frontier = new
    return sorted(seen, key=lambda w: (weyl_dim(rs, w), tuple(-x for x in w)))


def scan(cover: CoverSpec, k: int, scan_bound: int = DEFAULT_SCAN_BOUND) -> list[tuple[Vec, int]]:
    data = orbit_data(cover.orbit)
    L = data.L
    rs = L.rs
    adj = rs.labels(rs.highest_root)
    out = []
    if data.triple is None:
        return out
    for hw in dominant_weights_up_to(rs, scan_bound):
        if hw == adj or not any(hw):
            continue
        V = realize_module(L, hw)
        d = v2_dimension(L, data.triple, V, k, data.centralizer)
        if d:
            out.append((hw, d))
    return out


def r2_decomposition(L: LieAlgebraData | None, cover: CoverSpec, scan_bound: int = DEFAULT_SCAN_BOUND
                     ) -> list[tuple[Vec, int]]:
    """Non-adjoint irreducibles V with dim V[2] > 0, and those dimensions."""
    _check_algebra(L, cover)
    return scan(cover, 2, scan_bound)


def r1_detect(L: LieAlgebraData | None, cover: CoverSpec, scan_bound: int = DEFAULT_SCAN_BOUND
              ) -> list[tuple[Vec, int]]:
    """The same scan at eigenvalue 1 (the adjoint is not excluded)."""
    _check_algebra(L, cover)
    data = orbit_data(cover.orbit)
    out = scan(cover, 1, scan_bound)
    rs = data.L.rs
    adj = rs.labels(rs.highest_root)
    if data.triple is not None and weyl_dim(rs, adj) <= scan_bound:
        d = v2_dimension(data.L, data.triple, realize_module(data.L, adj), 1, data.centralizer)
        if d:
            out.append((adj, d))
            out.sort(key=lambda t: (weyl_dim(rs, t[0]), tuple(-x for x in t[0])))
    return out


def _check_algebra(L, cover):
    if L is not None and L.rs.cartan_matrix != build_root_system(cover.orbit.algebra).cartan_matrix:
        raise ValueError(f"cover of {cover.orbit.algebra} does not live on {L!r}")


# -- reports -----------------------------------------------------------------

def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    f = linalg.to_fraction(x) if isinstance(x, flint.fmpq) else x
    if hasattr(f, "denominator"):
        return int(f) if f.denominator == 1 else str(f)
    return str(x)


def _decomp_json(rs, decomposition) -> list:
    return [{"highest_weight": list(hw), "multiplicity": int(k), "dim": weyl_dim(rs, hw)} for hw, k in decomposition]


class VerificationReport:
    """Named checks, each with expected and computed values and a verdict."""

    def __init__(self, name: str, meta: dict | None = None):
        self.name = name
        self.meta = dict(meta or {})
        self.checks: list[dict] = []
        self.children: list[VerificationReport] = []

    def add(self, check: str, expected, computed, passed: bool | None = None, note: str = "") -> bool:
        expected, computed = _jsonable(expected), _jsonable(computed)
        ok = (expected == computed) if passed is None else bool(passed)
        entry = {"check": check, "expected": expected, "computed": computed, "passed": ok}
        if note:
            entry["note"] = note
        self.checks.append(entry)
        return ok

    def fail(self, check: str, error: Exception | str) -> None:
        self.checks.append({"check": check, "expected": None, "computed": None, "passed": False,
                            "error": f"{type(error).__name__}: {error}" if isinstance(error, Exception) else error})

    def run(self, check: str, fn: Callable[[], tuple]) -> bool:
        """Run ``fn() -> (expected, computed[, passed])``, recording exceptions."""
        try:
            res = fn()
        except Exception as exc:  # recorded, not raised
            self.fail(check, exc)
            return False
        return self.add(check, *res)

    def child(self, report: "VerificationReport") -> "VerificationReport":
        self.children.append(report)
        return report

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks) and all(r.passed for r in self.children)

    def to_dict(self) -> dict:
        d = {"name": self.name, "passed": self.passed}
        if self.meta:
            d["meta"] = _jsonable(self.meta)
        d["checks"] = self.checks
        if self.children:
            d["children"] = [r.to_dict() for r in self.children]
        return d

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps({"schema": SCHEMA, **self.to_dict()}, indent=indent, sort_keys=False)

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        r = cls(d["name"], d.get("meta"))
        r.checks = [dict(c) for c in d.get("checks", [])]
        r.children = [cls.from_dict(c) for c in d.get("children", [])]
        return r

    def to_text(self, indent: int = 0) -> str:
        pad = "  " * indent
        lines = [f"{pad}{'PASS' if self.passed else 'FAIL'} {self.name}"]
        for c in self.checks:
            mark = "ok  " if c["passed"] else "FAIL"
            if "error" in c:
                lines.append(f"{pad}  {mark} {c['check']}: {c['error']}")
            else:
                lines.append(f"{pad}  {mark} {c['check']}: expected {_short(c['expected'])}, computed {_short(c['computed'])}")
        for r in self.children:
            lines.append(r.to_text(indent + 1))
        return "\n".join(lines)


def _short(x) -> str:
    return json.dumps(x, separators=(",", ":"))


# -- verification ----------------------------------------------------------------

def _decomp(rs, items) -> list:
    return sorted(([list(hw), int(k)] for hw, k in items), key=lambda t: (weyl_dim(rs, t[0]), [-x for x in t[0]]))


def expected_branching(rec: PairRecord) -> list:
    rs = build_root_system(rec.g)
    return _decomp(rs, [(rs.labels(rs.highest_root), 1)] + list(rec.V))


def minimal_orbit_dim(t: SimpleType) -> int:
    L = chevalley_algebra(t)
    return orbit_dim(L, L.e(L.rs.highest_root))


def verify_pair(rec: PairRecord, scan_bound: int = DEFAULT_SCAN_BOUND, with_r2: bool = True,
                with_r1: bool = True) -> VerificationReport:
    rep = VerificationReport(f"{rec.label}: {rec.g} in {rec.g_prime}",
                             {"row": rec.row, "n": rec.n, "orbit": rec.orbit.orbit.label,
                              "cover_degree": rec.orbit.cover_degree})
    rs = build_root_system(rec.g)
    rsp = build_root_system(rec.g_prime)

    def dims():
        lhs = rsp.rank + len(rsp.all_roots)
        return [lhs], [rs.rank + len(rs.all_roots) + rec.V_dim]

    rep.run("dim g' = dim g + dim V", lambda: (*dims(), dims()[0] == dims()[1]))
    rep.add("dims", {"g'": rsp.rank + len(rsp.all_roots), "g": rs.rank + len(rs.all_roots), "V": rec.V_dim},
            {"g'": rec.g_prime.dimension, "g": rec.g.dimension, "V": rec.V_dim},
            rec.g_prime.dimension == rec.g.dimension + rec.V_dim)
    rep.run("branching ad(g') = ad(g) + V",
            lambda: (expected_branching(rec),
                     _decomp(rs, peel_decompose(branch_character(adjoint_character(rsp), rec.embedding)))))
    rep.run("orbit dimension shared", lambda: _orbit_dims(rec))
    if rec.orbit.orbit.kind == "jordan_type" or rec.g.is_classical:
        rep.run("orbit dimension by partition formula", lambda: _partition_oracle(rec))
    if with_r2:
        rep.run("R[2] decomposition", lambda: (_decomp(rs, rec.V), _decomp(rs, r2_decomposition(None, rec.orbit, scan_bound))))
    if with_r1:
        rep.run("R[1] = 0", lambda: ([], _decomp(rs, r1_detect(None, rec.orbit, scan_bound))))
    rep.run("Killing form of g' nondegenerate", lambda: (True, chevalley_algebra(rec.g_prime).killing_nondegenerate()))
    return rep


def _orbit_dims(rec: PairRecord):
    data = orbit_data(rec.orbit.orbit)
    d = orbit_dim(data.L, data.e)
    dp = minimal_orbit_dim(rec.g_prime)
    return {"g'": dp}, {"g": d}, d == dp


def _partition_oracle(rec: PairRecord):
    data = orbit_data(rec.orbit.orbit)
    jt = jordan_type(data.L, data.e)
    if rec.orbit.orbit.kind == "jordan_type" and jt != rec.orbit.orbit.data:
        return list(rec.orbit.orbit.data), list(jt)
    return [orbit_dim(data.L, data.e)], [partition_orbit_dim(rec.g, jt)]


CHAINS = {
    "a": ((SimpleType("D", 4), SimpleType("B", 4), SimpleType("F", 4)), 8),
    "b": ((SimpleType("G", 2), SimpleType("B", 3), SimpleType("D", 4)), 9),
}


def _record_between(g: SimpleType, gp: SimpleType) -> PairRecord:
    for r in catalog():
        if r.g == g and r.g_prime == gp:
            return r
    raise KeyError(f"no catalog embedding of {g} in {gp}")


def verify_chain(chain: Sequence[SimpleType], orbit: CoverSpec, scan_bound: int = DEFAULT_SCAN_BOUND
                 ) -> VerificationReport:
    """Check g_0 in g_1 in ... in g_m step by step and as a whole.

    The orbit of g_0 is ``orbit``; the orbit of an intermediate g_i is the one
    used by the catalog entry for g_i in g_{i+1}; the top carries its minimal
    orbit.  The top must be g_0 plus the computed R[2] of ``orbit``.
    """
    chain = [c if isinstance(c, SimpleType) else SimpleType.parse(str(c)) for c in chain]
    rep = VerificationReport("chain " + " < ".join(map(str, chain)), {"orbit": orbit.orbit.label})
    if len(chain) == 1:
        rep.add("trivial chain", True, True)
        return rep
    specs = [orbit.orbit]
    recs = []
    for a, b in zip(chain, chain[1:]):
        try:
            recs.append(_record_between(a, b))
        except KeyError as exc:
            rep.fail(f"embedding {a} < {b}", exc)
            return rep
    for r in recs[1:]:
        specs.append(r.orbit.orbit)
    specs.append(OrbitSpec.minimal(chain[-1]))
    dims = []
    for s in specs:
        d = orbit_data(s)
        dims.append(orbit_dim(d.L, d.e))
    rep.add("orbit dimensions along the chain", [dims[0]] * len(dims), dims)
    for r in recs:
        sub = VerificationReport(f"{r.g} < {r.g_prime} (embedding of {r.label})")
        rs, rsp = build_root_system(r.g), build_root_system(r.g_prime)
        sub.add("dim g' = dim g + dim V", [r.g_prime.dimension], [r.g.dimension + r.V_dim])
        sub.run("branching ad(g') = ad(g) + V",
                lambda r=r, rs=rs, rsp=rsp: (expected_branching(r),
                                             _decomp(rs, peel_decompose(branch_character(adjoint_character(rsp), r.embedding)))))
        rep.child(sub)
    emb = recs[0].embedding
    for r in recs[1:]:
        emb = r.embedding.compose(emb)
    bottom = build_root_system(chain[0])
    top = build_root_system(chain[-1])

    def whole():
        r2 = r2_decomposition(None, orbit, scan_bound)
        expect = _decomp(bottom, [(bottom.labels(bottom.highest_root), 1)] + r2)
        got = _decomp(bottom, peel_decompose(branch_character(adjoint_character(top), emb)))
        return expect, got

    rep.run("top = bottom + R[2] as modules", whole)

    def dim_whole():
        r2 = r2_decomposition(None, orbit, scan_bound)
        return [chain[-1].dimension], [chain[0].dimension + sum(k * weyl_dim(bottom, hw) for hw, k in r2)]

    rep.run("dim top = dim bottom + dim R[2]/g", dim_whole)
    return rep


def chain_report(name: str, scan_bound: int = DEFAULT_SCAN_BOUND) -> VerificationReport:
    chain, row = CHAINS[name]
    rep = verify_chain(chain, find_record(row).orbit, scan_bound)
    rep.name = f"chain ({name}) " + rep.name[len("chain "):]
    return rep


def normality_obstruction(L: LieAlgebraData | None, orbit: OrbitSpec, scan_bound: int = DEFAULT_SCAN_BOUND
                          ) -> list[tuple[Vec, int]]:
    """Extra summands of R[2] beyond g for the orbit itself (trivial cover).

    A nonempty answer shows that the closure of the orbit is not normal; an
    empty one is inconclusive.
    """
    return r2_decomposition(L, CoverSpec(orbit, 1), scan_bound)


def normality_verdict(obstruction: Sequence) -> str:
    return "closure not normal" if obstruction else "inconclusive"


def rank_rule_check(records: Iterable[PairRecord]) -> VerificationReport:
    rep = VerificationReport("rank rule")
    for r in records:
        rk, rkp, deg = r.g.rank, r.g_prime.rank, r.orbit.cover_degree
        if deg == 1 and r.g != r.g_prime:
            rep.add(f"{r.label}: M = O forces rank g' > rank g", True, rkp > rk, rkp > rk,
                    note=f"rank {rk} < {rkp}")
        if rk == rkp:
            rep.add(f"{r.label}: equal rank needs a nontrivial cover", True, deg > 1, deg > 1,
                    note=f"rank {rk} = {rkp}, cover degree {deg}")
        else:
            rep.add(f"{r.label}: rank {rk} < {rkp}", True, rkp > rk, rkp > rk, note=f"cover degree {deg}")
    return rep
