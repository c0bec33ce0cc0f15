"""Iterates f^(n) and stability scans."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import List, Optional

from .errors import BudgetExceeded, DegreeCapError
from .factorcheck import PROBE_DMAX, PROBE_THRESHOLD, IrredVerdict, is_irreducible
from .gfcore import DEFAULT_DEGREE_CAP, GFPoly, compose


def iterate(f, n, cap=None):
    """f composed with itself n times; iterate(f, 0) = x."""
    if n < 0:
        raise ValueError("iterate index must be >= 0")
    cap = DEFAULT_DEGREE_CAP if cap is None else cap
    if n == 0:
        return GFPoly.x(f.field)
    d = max(f.degree, 0)
    if d**n > cap:
        raise DegreeCapError(f"deg f^({n}) = {d**n} exceeds cap {cap}")
    cur = f
    for _ in range(n - 1):
        cur = compose(f, cur, cap=cap)
    return cur


@dataclass(frozen=True)
class Level:
    n: int
    degree: int
    verdict: IrredVerdict
    elapsed: float  # seconds


@dataclass
class StabilityReport:
    base: GFPoly
    levels: List[Level] = field(default_factory=list)
    exhausted: bool = False
    # "reducible", "max_n", "degree_cap" or "time_budget"
    stop_reason: str = ""

    @property
    def stable_depth(self):
        k = 0
        for lv in self.levels:
            if not lv.verdict.irreducible:
                break
            k = lv.n
        return k

    @property
    def first_reducible(self) -> Optional[int]:
        for lv in self.levels:
            if not lv.verdict.irreducible:
                return lv.n
        return None

    @property
    def reducible_level(self):
        for lv in self.levels:
            if not lv.verdict.irreducible:
                return lv
        return None


def stability_scan(
    f,
    max_n,
    cap=None,
    time_budget=None,
    probe_threshold=PROBE_THRESHOLD,
    probe_dmax=PROBE_DMAX,
):
    """Irreducibility of f^(1), f^(2), ... up to max_n.

    Stops at the first reducible level: if f^(k) = A*B then
    f^(k+1) = A(f)*B(f). Caps and the time budget end the scan with
    exhausted=True, which never means "stable".
    """
    if f.is_zero or f.degree < 1:
        raise ValueError("stability needs a nonconstant polynomial")
    if max_n < 1:
        raise ValueError("max_n must be positive")
    cap = DEFAULT_DEGREE_CAP if cap is None else cap
    deadline = None if time_budget is None else time.monotonic() + time_budget
    rep = StabilityReport(base=f)
    d = f.degree
    cur = None
    for n in range(1, max_n + 1):
        if d**n > cap:
            rep.exhausted, rep.stop_reason = True, "degree_cap"
            return rep
        t0 = time.perf_counter()
        try:
            cur = f if cur is None else compose(f, cur, cap=cap)
            verdict = is_irreducible(cur, probe_threshold, probe_dmax, deadline=deadline)
        except BudgetExceeded:
            rep.exhausted, rep.stop_reason = True, "time_budget"
            return rep
        rep.levels.append(Level(n, cur.degree, verdict, time.perf_counter() - t0))
        if not verdict.irreducible:
            rep.stop_reason = "reducible"
            return rep
    rep.exhausted, rep.stop_reason = True, "max_n"
    return rep
