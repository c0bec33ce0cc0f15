"""iterstab command line: JSON-lines records on stdout (or --out).

Exit status: 0 ok, 1 a prediction was refuted or an anomaly/survivor was
found, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from typing import Optional

from . import __version__
from .errors import IterstabError
from .factorcheck import is_irreducible, rabin_irreducible, trial_division_irreducible
from .gfcore import DEFAULT_DEGREE_CAP, format_field, parse_field, parse_poly
from .iterlab import iterate, stability_scan

SCHEMA = 1
EXIT_OK, EXIT_FOUND, EXIT_USAGE = 0, 1, 2


@dataclass
class RunConfig:
    degree_cap: int = DEFAULT_DEGREE_CAP
    oracle_cap: int = 24
    time_budget: Optional[float] = 300.0
    workers: int = 1
    seed: int = 0
    output: str = "-"
    timing: bool = False

    def __post_init__(self):
        if self.degree_cap < 1 or self.oracle_cap < 1 or self.workers < 1:
            raise ValueError("caps and worker count must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time budget must be positive")

    @classmethod
    def from_args(cls, ns):
        return cls(
            degree_cap=ns.degree_cap,
            time_budget=ns.time_budget,
            workers=ns.workers,
            seed=ns.seed,
            output=ns.out,
            timing=ns.timing,
        )


def _env_int(name, default):
    v = os.environ.get(name)
    if v is None or v == "":
        return default
    try:
        return int(v)
    except ValueError:
        raise SystemExit(f"{name} must be an integer, got {v!r}")


def write_record(stream, rec):
    stream.write(json.dumps(rec, separators=(",", ":")) + "\n")


def _rec(cmd, **kw):
    out = {"schema": SCHEMA, "cmd": cmd}
    out.update((k, v) for k, v in kw.items() if v is not None)
    return out


def _verdict_fields(v):
    return {
        "verdict": "irreducible" if v.irreducible else "reducible",
        "method": v.method.value,
        "witness": None if v.witness is None else str(v.witness),
    }


# commands -----------------------------------------------------------------------


def cmd_irred(ns, cfg, emit):
    F = parse_field(ns.field)
    f = parse_poly(ns.poly, F)
    t0 = time.perf_counter()
    if ns.method == "rabin":
        v = rabin_irreducible(f)
    elif ns.method == "trial":
        v = trial_division_irreducible(f)
    else:
        v = is_irreducible(f)
    rec = _rec("irred", field=format_field(F), poly=str(f), degree=f.degree, **_verdict_fields(v))
    if cfg.timing:
        rec["elapsed_ms"] = round(1000 * (time.perf_counter() - t0), 3)
    emit(rec)
    return EXIT_OK


def cmd_iterate(ns, cfg, emit):
    F = parse_field(ns.field)
    f = parse_poly(ns.poly, F)
    g = iterate(f, ns.n, cap=cfg.degree_cap)
    emit(_rec("iterate", field=format_field(F), poly=str(f), level=ns.n, degree=g.degree, result=str(g)))
    return EXIT_OK


def cmd_stability(ns, cfg, emit):
    F = parse_field(ns.field)
    f = parse_poly(ns.poly, F)
    rep = stability_scan(f, ns.max_iter, cap=cfg.degree_cap, time_budget=cfg.time_budget)
    base = dict(field=format_field(F), poly=str(f))
    for lv in rep.levels:
        rec = _rec("stability", **base, level=lv.n, degree=lv.degree, **_verdict_fields(lv.verdict))
        if cfg.timing:
            rec["elapsed_ms"] = round(1000 * lv.elapsed, 3)
        emit(rec)
    emit(
        _rec(
            "stability",
            **base,
            stable_depth=rep.stable_depth,
            exhausted=rep.exhausted,
            stop_reason=rep.stop_reason,
        )
    )
    return EXIT_OK


def cmd_disc(ns, cfg, emit):
    from .zdisc import classify, compose_mod, discriminant, lift
    from .zdisc import compose as zcompose
    from .zdisc.modular import disc_mod_2k

    F = parse_field(ns.field)
    if not F.is_prime_field:
        raise IterstabError("disc works on integer lifts; the field must be prime")
    f = parse_poly(ns.poly, F)
    Z = lift(f, ns.lift)
    base = dict(field=format_field(F), poly=str(f), lift=ns.lift)
    cur_exact = Z
    cur_mod = Z
    for k in range(1, ns.iterates + 1):
        if k > 1:
            if ns.strategy == "exact":
                cur_exact = zcompose(Z, cur_exact)
            else:
                cur_mod = compose_mod(Z, cur_mod, 32)
        deg = Z.degree**k
        t0 = time.perf_counter()
        if ns.strategy == "exact":
            d = discriminant(cur_exact, cap=cfg.degree_cap)
            rec = _rec("disc", **base, level=k, degree=deg, strategy="exact")
            rec["residue" if ns.mod8 else "disc"] = d % 8 if ns.mod8 else d
        else:
            r = disc_mod_2k(cur_mod, 32, form=ns.form) % 8
            rec = _rec("disc", **base, level=k, degree=deg, strategy="det2k", form=ns.form, residue=r)
        if ns.parity and k == 1:
            c = classify(f)
            rec["parity"] = c.parity_conclusion.value
        if cfg.timing:
            rec["elapsed_ms"] = round(1000 * (time.perf_counter() - t0), 3)
        emit(rec)
    return EXIT_OK


def _outcome_exit(oc):
    return EXIT_FOUND if oc.status.value in ("disagrees", "anomaly") else EXIT_OK


def cmd_theorem(ns, cfg, emit):
    from . import theorembench as tb

    kw = dict(cap=cfg.degree_cap, time_budget=cfg.time_budget)
    tid = ns.theorem_id
    if tid == "trim-even":
        oc = tb.check_trim_even(ns.n, ns.s, depth=ns.depth, **kw)
    elif tid == "odd-trinomial":
        F = parse_field(f"{ns.p}^{ns.t}") if ns.t > 1 else parse_field(str(ns.p))
        g = parse_poly(ns.g, F) if ns.g else None
        oc = tb.check_odd_even_trinomial(ns.p, ns.t, ns.n, ns.s, ns.a, ns.b, g, field=F)
    elif tid == "xp-ax2-b":
        oc = tb.check_xp_ax2_b(ns.p, ns.a, ns.b, depth=ns.depth, **kw)
    elif tid == "higher-weight":
        f = parse_poly(ns.poly, 2)
        oc = tb.check_higher_weight(ns.kind, f, depth=ns.depth, **kw)
    elif tid == "odoni":
        oc = tb.check_odoni(ns.p, depth=ns.depth, **kw)
    elif tid == "capelli":
        F = parse_field(ns.field)
        oc = tb.capelli_check(parse_poly(ns.f, F), parse_poly(ns.g, F), parse_poly(ns.h, F))
    else:  # pragma: no cover - argparse restricts choices
        raise IterstabError(f"unknown theorem {tid}")
    emit(_rec("theorem", **oc.to_record()))
    return _outcome_exit(oc)


def search_records(p, degrees, shape, depth, workers=1, cursor=0, cap=None, time_budget=None, limit=None,
                   conjecture=True, timing=False):
    """JSON-ready records of a conjecture search, in enumeration order."""
    from .theorembench import conjecture_search

    F = format_field(parse_field(str(p)))
    for r in conjecture_search(p, degrees, shape, depth, workers=workers, cursor=cursor, cap=cap,
                               time_budget=time_budget, limit=limit, conjecture=conjecture):
        rep = r.report
        red = rep.reducible_level
        rec = _rec(
            "search",
            index=r.index,
            field=F,
            poly=str(r.poly),
            degree=r.poly.degree,
            depth=depth,
            outcome=r.outcome,
            level=None if red is None else red.n,
            method=None if red is None else red.verdict.method.value,
            witness=None if red is None or red.verdict.witness is None else str(red.verdict.witness),
            stop_reason=rep.stop_reason,
        )
        if timing:
            rec["elapsed_ms"] = round(1000 * sum(lv.elapsed for lv in rep.levels), 3)
        yield rec


def cmd_search(ns, cfg, emit):
    F = parse_field(ns.field)
    if not F.is_prime_field:
        raise IterstabError("search runs over prime fields")
    survivors = 0
    degrees = range(ns.min_degree, ns.max_degree + 1)
    for rec in search_records(F.p, degrees, ns.shape, ns.depth, workers=cfg.workers, cursor=ns.cursor,
                              cap=cfg.degree_cap, time_budget=cfg.time_budget, limit=ns.limit,
                              conjecture=not ns.all_degrees, timing=cfg.timing):
        survivors += rec["outcome"] == "survivor_at_budget"
        emit(rec)
    return EXIT_FOUND if survivors else EXIT_OK


def cmd_verify(ns, cfg, emit):
    from .theorembench.suites import SUITES

    fn = SUITES[ns.suite]
    results = fn(ns.trials, cfg.seed)
    failures = [d for ok, d in results if not ok]
    for d in failures:
        emit(_rec("verify", suite=ns.suite, ok=False, instance=d))
    emit(_rec("verify", suite=ns.suite, trials=len(results), seed=cfg.seed, failures=len(failures)))
    return EXIT_FOUND if failures else EXIT_OK


def cmd_repro(ns, cfg, emit):
    from . import repro

    all_ok = True
    for num, name, fn in repro.CRITERIA:
        if ns.only and num not in ns.only:
            continue
        if name == "deg20-example":
            ok, det = fn(long=ns.long)
        elif name == "cubic-depth":
            ok, det = fn(depth=ns.cubic_depth or (8 if ns.long else 5))
        else:
            ok, det = fn()
        all_ok = all_ok and ok
        emit(_rec("repro", criterion=num, example=name, ok=ok, details=det))
    return EXIT_OK if all_ok else EXIT_FOUND


# parser ---------------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="2", help="p, p^t, p^t/modulus, or <field>//modulus")
    common.add_argument("--poly", help="sparse x^3+x+1 or dense [1,1,0,1]")
    common.add_argument("--degree-cap", type=int, default=_env_int("ITERSTAB_DEGREE_CAP", DEFAULT_DEGREE_CAP))
    common.add_argument("--workers", type=int, default=_env_int("ITERSTAB_WORKERS", 1))
    common.add_argument("--time-budget", type=float, default=300.0, help="seconds per candidate")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default="-", help="output path, - for stdout")
    common.add_argument("--timing", action="store_true", help="add elapsed_ms (output is then not reproducible)")

    ap = argparse.ArgumentParser(prog="iterstab", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("irred", parents=[common], help="irreducibility verdict")
    p.add_argument("--method", choices=("auto", "rabin", "trial"), default="auto")

    p = sub.add_parser("iterate", parents=[common], help="n-th iterate")
    p.add_argument("-n", type=int, required=True)

    p = sub.add_parser("stability", parents=[common], help="scan iterates for irreducibility")
    p.add_argument("--max-iter", type=int, required=True)

    p = sub.add_parser("disc", parents=[common], help="discriminants of integer lifts and their iterates")
    p.add_argument("--mod8", action="store_true")
    p.add_argument("--lift", choices=("nonneg", "symmetric"), default="nonneg")
    p.add_argument("--iterates", type=int, default=1)
    p.add_argument("--strategy", choices=("exact", "det2k"), default="exact")
    p.add_argument("--form", choices=("sylvester", "companion"), default="sylvester")
    p.add_argument("--parity", action="store_true", help="add the factor-count parity of f")

    p = sub.add_parser("theorem", parents=[common], help="run one theorem checker")
    tsub = p.add_subparsers(dest="theorem_id", required=True)
    t = tsub.add_parser("trim-even", parents=[common])
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--s", type=int, required=True)
    t.add_argument("--depth", type=int, default=3)
    t = tsub.add_parser("odd-trinomial", parents=[common])
    for name in ("p", "t", "n", "s", "a", "b"):
        t.add_argument(f"--{name}", type=int, required=name != "t", default=1 if name == "t" else None)
    t.add_argument("--g", help="monic even-degree g; defaults to f")
    t = tsub.add_parser("xp-ax2-b", parents=[common])
    for name in ("p", "a", "b"):
        t.add_argument(f"--{name}", type=int, required=True)
    t.add_argument("--depth", type=int, default=3)
    t = tsub.add_parser("higher-weight", parents=[common])
    t.add_argument("--kind", choices=("g_of_x8", "g_of_x4"), required=True)
    t.add_argument("--depth", type=int, default=3)
    t = tsub.add_parser("odoni", parents=[common])
    t.add_argument("--p", type=int, required=True)
    t.add_argument("--depth", type=int, default=3)
    t = tsub.add_parser("capelli", parents=[common])
    for name in ("f", "g", "h"):
        t.add_argument(f"--{name}", required=name != "h", default="1" if name == "h" else None)

    p = sub.add_parser("search", parents=[common], help="enumerate candidates and scan each")
    p.add_argument("--shape", default="trinomial", help="trinomial, any, or weight:W")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--min-degree", type=int, default=1)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--cursor", type=int, default=0, help="skip this many candidates")
    p.add_argument("--limit", type=int)
    p.add_argument("--all-degrees", action="store_true", help="do not require p | degree")

    p = sub.add_parser("verify", parents=[common], help="seeded property suites")
    p.add_argument("--suite", choices=("newton", "capelli", "resdisc", "comp-trinomial", "disc-compose", "parity"),
                   required=True)
    p.add_argument("--trials", type=int, default=100)

    p = sub.add_parser("repro", parents=[common], help="run the acceptance examples")
    p.add_argument("--long", action="store_true", help="include Disc(FFF) mod 8 and deeper levels for x^3+x^2+1")
    p.add_argument("--cubic-depth", type=int)
    p.add_argument("--only", type=int, nargs="*", help="criterion numbers to run")
    return ap


COMMANDS = {
    "irred": cmd_irred,
    "iterate": cmd_iterate,
    "stability": cmd_stability,
    "disc": cmd_disc,
    "theorem": cmd_theorem,
    "search": cmd_search,
    "verify": cmd_verify,
    "repro": cmd_repro,
}

NEEDS_POLY = {"irred", "iterate", "stability", "disc"}


def main(argv=None):
    ap = build_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    out = sys.stdout if ns.out == "-" else open(ns.out, "w", encoding="utf-8")

    def emit(rec):
        write_record(out, rec)
        out.flush()

    try:
        cfg = RunConfig.from_args(ns)
        if ns.cmd in NEEDS_POLY or (ns.cmd == "theorem" and ns.theorem_id == "higher-weight"):
            if not ns.poly:
                raise IterstabError("--poly is required")
        return COMMANDS[ns.cmd](ns, cfg, emit)
    except (IterstabError, ValueError) as exc:
        emit(_rec(ns.cmd, error=type(exc).__name__, message=str(exc)))
        return EXIT_USAGE
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
