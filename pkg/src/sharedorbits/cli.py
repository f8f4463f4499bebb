"""Command-line entry point: ``sharedorbits <subcommand> [options]``.

Exit codes: 0 when every check passes, 1 on a failed check, 2 on a usage error.
Set ``SHAREDORBITS_CACHE`` to a directory to cache structure constants.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import random
import sys
from collections.abc import Sequence

from .chevalley import chevalley_algebra, write_structure_file
from .nilorbits import (
    OrbitError,
    OrbitSpec,
    centralizer,
    check_partition,
    h_grading,
    jacobson_morozov,
    jordan_type,
    orbit_dim,
    orbit_element,
    partition_label,
    partition_orbit_dim,
)
from .poisson import (
    DEFAULT_SEED,
    grading_check,
    standard_semidirect,
    symplectic_model,
    symplectic_model_report,
    theorem7_transitivity,
    semidirect_trials,
)
from .rootsys import SimpleType, build_root_system
from .sharedpairs import (
    CHAINS,
    DEFAULT_SCAN_BOUND,
    VerificationReport,
    catalog,
    chain_report,
    normality_obstruction,
    normality_verdict,
    verify_pair,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

GRADING_TYPES = ("A1", "A2", "A3", "B2", "B3", "B4", "C2", "C3", "D4", "G2", "F4", "E6")
SEMIDIRECT_EXAMPLES = ("sl2", "sl3", "sp4")
NORMALITY_FLAG = {"type": "G2", "orbit": "short_root", "expected": [[[1, 0], 1]]}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


# -- option parsing --------------------------------------------------------------

def _algebra_type(args) -> SimpleType:
    if args.type is None:
        raise UsageError("--type is required")
    text = args.type
    if args.rank is not None:
        if not (len(text) == 1 and text.isalpha()):
            raise UsageError("--rank needs --type to be a bare family letter such as B")
        text = f"{text}{args.rank}"
    try:
        return SimpleType.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _int_list(text: str, what: str) -> tuple:
    try:
        vals = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}") from None
    if not vals:
        raise UsageError(f"empty {what}")
    return vals


def _orbit_spec(args, t: SimpleType) -> OrbitSpec:
    chosen = [k for k in ("partition", "dim", "root") if getattr(args, k) is not None]
    chosen += [k for k in ("principal", "minimal", "short_root") if getattr(args, k)]
    if len(chosen) != 1:
        raise UsageError("choose exactly one of --partition, --dim, --root, --principal, --minimal, --short-root")
    try:
        if args.partition is not None:
            return OrbitSpec.jordan(t, check_partition(t, _int_list(args.partition, "partition")))
        if args.dim is not None:
            if args.dim < 0 or args.dim % 2:
                raise UsageError("--dim must be a non-negative even integer")
            return OrbitSpec.by_dimension(t, args.dim)
        if args.root is not None:
            root = _int_list(args.root, "root")
            if len(root) != t.rank or not build_root_system(t).is_root(root):
                raise UsageError(f"{list(root)} is not a root of {t} in the simple-root basis")
            return OrbitSpec.root_vector(t, root)
        if args.principal:
            return OrbitSpec.principal(t)
        if args.minimal:
            return OrbitSpec.minimal(t)
        return OrbitSpec.short_root(t)
    except OrbitError as exc:
        raise UsageError(str(exc)) from exc


# -- subcommands -------------------------------------------------------------------

def cmd_algebra(args) -> VerificationReport:
    t = _algebra_type(args)
    L = chevalley_algebra(t)
    rs = L.rs
    rep = VerificationReport(f"algebra {t}", {"rank": rs.rank, "positive_roots": len(rs.positive_roots),
                                              "highest_root": list(rs.highest_root)})
    rep.add("dimension = rank + number of roots", t.dimension, L.dim)
    rep.add("bracket is antisymmetric", True, L.antisymmetric())
    rep.add("Jacobi identity on all basis triples", 0, L.jacobi_violations())
    rep.add("Killing form nondegenerate", True, L.killing_nondegenerate())
    if args.structure:
        write_structure_file(L, args.structure)
        rep.meta["structure_file"] = str(args.structure)
    return rep


def orbit_report(t: SimpleType, spec: OrbitSpec) -> VerificationReport:
    L = chevalley_algebra(t)
    e = orbit_element(L, spec)
    d = orbit_dim(L, e)
    support = [L.labels[i] for i, c in enumerate(e) if c]
    rep = VerificationReport(f"orbit {spec.label} in {t}", {"representative": support})
    rep.add("orbit dimension", d, d, True)
    rep.add("centralizer dimension = dim g - orbit dimension", L.dim - d, len(centralizer(L, e)))
    if spec.kind == "by_dimension":
        rep.add("requested dimension", spec.data, d)
    if t.is_classical:
        jt = jordan_type(L, e)
        rep.meta["jordan_type"] = partition_label(jt)
        rep.add("partition formula for the Jordan type", d, partition_orbit_dim(t, jt))
        if spec.kind == "jordan_type":
            rep.add("Jordan type in the defining module", list(spec.data), list(jt))
    if d:
        tr = jacobson_morozov(L, e)
        rep.add("sl2-triple relations", [], tr.violations())
        rep.meta["h_grading"] = {str(k): v for k, v in sorted(h_grading(L, tr.h).dims.items())}
    return rep


def cmd_orbit(args) -> VerificationReport:
    t = _algebra_type(args)
    return orbit_report(t, _orbit_spec(args, t))


def _records(row: int, n: int | None):
    recs = [r for r in catalog() if r.row == row and (n is None or r.n == n)]
    if not recs:
        known = sorted({(r.row, r.n) for r in catalog()}, key=lambda x: (x[0], x[1] or 0))
        raise UsageError(f"no catalog entry for row {row}" + (f", n={n}" if n is not None else "")
                         + f"; known: {known}")
    return recs


def _pair_job(row: int, n: int | None, scan_bound: int) -> dict:
    rec = next(r for r in catalog() if r.row == row and r.n == n)
    return verify_pair(rec, scan_bound).to_dict()


def _run_jobs(jobs: int, fn, arglist: list) -> list:
    if jobs <= 1:
        return [fn(*a) for a in arglist]
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        futs = [pool.submit(fn, *a) for a in arglist]
        return [f.result() for f in futs]


def row_reports(rows: Sequence[int], n: int | None, scan_bound: int, jobs: int = 1) -> list[VerificationReport]:
    keys = [(r.row, r.n) for row in rows for r in _records(row, n)]
    done = _run_jobs(jobs, _pair_job, [(row, k, scan_bound) for row, k in keys])
    out = []
    for row in rows:
        rep = VerificationReport(f"row ({row})", {"row": row})
        for (r, _), d in zip(keys, done):
            if r == row:
                rep.child(VerificationReport.from_dict(d))
        out.append(rep)
    return out


def cmd_verify_row(args) -> VerificationReport:
    if args.row is None:
        raise UsageError("--row is required")
    _records(args.row, args.n)
    (rep,) = row_reports([args.row], args.n, args.scan_bound, args.jobs)
    return rep if len(rep.children) != 1 else rep.children[0]


def cmd_chains(args) -> VerificationReport:
    names = [args.chain] if args.chain else sorted(CHAINS)
    rep = VerificationReport("chains")
    for name in names:
        rep.child(chain_report(name, args.scan_bound))
    return rep if len(names) != 1 else rep.children[0]


def cmd_symplectic(args) -> VerificationReport:
    if args.n is None or args.n < 1:
        raise UsageError("--n must be a positive integer")
    return symplectic_model_report(args.n)


def semidirect_report(name: str, trials: int, seed: int) -> VerificationReport:
    s = standard_semidirect(name)
    res = semidirect_trials(s, trials, seed)
    rep = VerificationReport(f"semidirect {name} + C^{s.u.dim}", {"seed": seed, **res})
    rep.add("trials with 'equal iff lambda = 0'", trials, res["agree"])
    rng = random.Random(seed)
    mu = [rng.randint(-5, 5) for _ in range(s.r.dim)]
    lam = [0] * (s.u.dim - 1) + [1]
    rep.add("lambda = 0 gives equal orbit dimensions", True, theorem7_transitivity(s, mu, [0] * s.u.dim)[2])
    rep.add("mu = 0, lambda != 0 gives different dimensions", False,
            theorem7_transitivity(s, [0] * s.r.dim, lam)[2])
    return rep


def cmd_semidirect(args) -> VerificationReport:
    if args.trials < 1:
        raise UsageError("--trials must be positive")
    names = [args.example] if args.example else list(SEMIDIRECT_EXAMPLES)
    rep = VerificationReport("orbit dimensions in semidirect sums")
    for name in names:
        rep.child(semidirect_report(name, args.trials, args.seed))
    return rep if len(names) != 1 else rep.children[0]


def normality_report(t: SimpleType, spec: OrbitSpec, scan_bound: int,
                     expected: list | None = None) -> VerificationReport:
    L = chevalley_algebra(t)
    obs = normality_obstruction(L, spec, scan_bound)
    computed = [[list(hw), k] for hw, k in obs]
    rep = VerificationReport(f"normality of the {spec.label} orbit in {t}",
                             {"verdict": normality_verdict(obs), "scan_bound": scan_bound})
    if expected is None:
        rep.add("extra summands of R[2]", computed, computed, True)
    else:
        rep.add("extra summands of R[2]", expected, computed)
    return rep


def cmd_normality(args) -> VerificationReport:
    t = _algebra_type(args)
    return normality_report(t, _orbit_spec(args, t), args.scan_bound)


def cmd_verify_all(args) -> VerificationReport:
    rep = VerificationReport("verify-all", {"scan_bound": args.scan_bound, "seed": args.seed})
    rows = sorted({r.row for r in catalog()})
    rows_rep = rep.child(VerificationReport("catalog rows"))
    for r in row_reports(rows, None, args.scan_bound, args.jobs):
        rows_rep.child(r)
    chains = rep.child(VerificationReport("chains"))
    for name in sorted(CHAINS):
        chains.child(chain_report(name, args.scan_bound))
    t3 = rep.child(VerificationReport("symplectic model"))
    for n in (2, 3):
        t3.child(symplectic_model_report(n))
    t7 = rep.child(VerificationReport("orbit dimensions in semidirect sums"))
    for name in SEMIDIRECT_EXAMPLES:
        t7.child(semidirect_report(name, args.trials, args.seed))
    gr = rep.child(VerificationReport("grading rule"))
    for t in GRADING_TYPES:
        gr.child(grading_check(chevalley_algebra(t), 50, args.seed))
    for n in (2, 3):
        gr.child(grading_check(symplectic_model(n).algebra, 50, args.seed))
    t = SimpleType.parse(NORMALITY_FLAG["type"])
    rep.child(normality_report(t, OrbitSpec.short_root(t), args.scan_bound, NORMALITY_FLAG["expected"]))
    return rep


# -- parser ------------------------------------------------------------------------

def _add_type(p, required=True):
    p.add_argument("--type", required=required, help="G2, F4, B3, so(7), sp(4), ... or a family letter with --rank")
    p.add_argument("--rank", type=int)


def _add_orbit(p):
    p.add_argument("--partition", help="Jordan type, e.g. 3,2,2,1")
    p.add_argument("--dim", type=int, help="orbit dimension")
    p.add_argument("--root", help="root in the simple-root basis, e.g. 1,1")
    p.add_argument("--principal", action="store_true")
    p.add_argument("--minimal", action="store_true")
    p.add_argument("--short-root", action="store_true", help="highest short root vector")


def _add_common(p):
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sharedorbits", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("algebra", help="build a Chevalley basis and check it")
    _add_type(p)
    p.add_argument("--structure", help="also write the structure constants to this file")
    _add_common(p)
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("orbit", help="find an orbit representative and its invariants")
    _add_type(p)
    _add_orbit(p)
    _add_common(p)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("verify-row", help="verify one row of the catalog")
    p.add_argument("--row", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--scan-bound", type=int, default=DEFAULT_SCAN_BOUND)
    p.add_argument("--jobs", type=int, default=1)
    _add_common(p)
    p.set_defaults(func=cmd_verify_row)

    p = sub.add_parser("verify-all", help="run every verification")
    p.add_argument("--scan-bound", type=int, default=DEFAULT_SCAN_BOUND)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    _add_common(p)
    p.set_defaults(func=cmd_verify_all)

    p = sub.add_parser("chains", help="verify the chains of inclusions")
    p.add_argument("--chain", choices=sorted(CHAINS))
    p.add_argument("--scan-bound", type=int, default=DEFAULT_SCAN_BOUND)
    _add_common(p)
    p.set_defaults(func=cmd_chains)

    p = sub.add_parser("theorem3", help="check the symplectic model of the minimal orbit cover of sp(2n)")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_symplectic)

    p = sub.add_parser("theorem7", help="compare orbit dimensions in semidirect sums")
    p.add_argument("--example", choices=SEMIDIRECT_EXAMPLES)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    _add_common(p)
    p.set_defaults(func=cmd_semidirect)

    p = sub.add_parser("normality", help="look for degree-2 functions beyond g on an orbit")
    _add_type(p)
    _add_orbit(p)
    p.add_argument("--scan-bound", type=int, default=DEFAULT_SCAN_BOUND)
    _add_common(p)
    p.set_defaults(func=cmd_normality)
    return parser


def _emit(rep: VerificationReport, fmt: str, output: str | None, out) -> None:
    text = rep.to_json() if fmt == "json" else rep.to_text()
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=out)


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_usage() + "sharedorbits: error: a subcommand is required")
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be positive")
        if getattr(args, "scan_bound", 1) < 1:
            raise UsageError("--scan-bound must be positive")
        rep = args.func(args)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except UsageError as exc:
        msg = str(exc)
        if "usage:" not in msg:
            msg = parser.format_usage() + f"sharedorbits: error: {msg}"
        print(msg, file=err)
        return EXIT_USAGE
    _emit(rep, args.format, args.output, out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
