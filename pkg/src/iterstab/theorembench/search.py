"""Enumeration harness for the conjecture that p | deg f forces instability over F_p.

Candidates come in a fixed order (degree, then exponent tuple, then
coefficients, all lexicographic), are scanned by a worker pool, and are
re-sequenced to enumeration order so the output does not depend on the
number of workers. A candidate that stays irreducible up to the budget is
a survivor; nothing is ever reported as stable.
"""
from __future__ import annotations

import itertools
import multiprocessing as mp
from dataclasses import dataclass
from typing import Iterator, Optional

from ..gfcore import FieldDesc, GFPoly
from ..iterlab import StabilityReport, stability_scan


def parse_shape(shape):
    """'trinomial' -> 3, 'any' -> None, 'weight:W' -> W."""
    if isinstance(shape, int):
        return shape
    if shape == "trinomial":
        return 3
    if shape == "any":
        return None
    if isinstance(shape, str) and shape.startswith("weight:"):
        w = int(shape.split(":", 1)[1])
        if w < 1:
            raise ValueError("weight must be positive")
        return w
    raise ValueError(f"unknown shape {shape!r}")


def _supports(d, weight):
    """Exponent tuples (d, e_2, ..., e_w), strictly descending, in lexicographic order."""

    def rec(prefix, below):
        if weight is None or len(prefix) == weight:
            yield prefix
            if weight is not None:
                return
        for e in range(below):
            yield from rec(prefix + (e,), e)

    yield from rec((d,), d)


def candidates(p, degrees, shape="trinomial", conjecture=True):
    """Monic candidates over F_p in enumeration order."""
    F = FieldDesc.prime(p)
    weight = parse_shape(shape)
    for d in degrees:
        if d < 1 or (conjecture and d % p):
            continue
        for sup in _supports(d, weight):
            for cs in itertools.product(range(1, p), repeat=len(sup) - 1):
                coeffs = [0] * (d + 1)
                coeffs[d] = 1
                for e, c in zip(sup[1:], cs):
                    coeffs[e] = c
                yield GFPoly(F, coeffs)


@dataclass(frozen=True)
class SearchRecord:
    index: int
    report: StabilityReport
    depth: int

    @property
    def poly(self):
        return self.report.base

    @property
    def survivor(self):
        return self.report.first_reducible is None

    @property
    def outcome(self):
        lv = self.report.first_reducible
        return "survivor_at_budget" if lv is None else f"fell_at_level_{lv}"


def _scan_one(job):
    index, f, depth, cap, budget = job
    return index, stability_scan(f, depth, cap=cap, time_budget=budget)


def conjecture_search(
    p,
    degrees,
    shape="trinomial",
    depth=3,
    workers=1,
    cursor=0,
    cap=None,
    time_budget=None,
    conjecture=True,
    limit: Optional[int] = None,
) -> Iterator[SearchRecord]:
    """Scan every candidate from position ``cursor`` on; yields SearchRecords
    in enumeration order."""
    gen = enumerate(candidates(p, degrees, shape, conjecture))
    gen = itertools.islice(gen, cursor, None if limit is None else cursor + limit)
    jobs = ((i, f, depth, cap, time_budget) for i, f in gen)
    if workers <= 1:
        for job in jobs:
            i, rep = _scan_one(job)
            yield SearchRecord(i, rep, depth)
        return
    ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() else mp.get_context()
    with ctx.Pool(workers) as pool:
        for i, rep in pool.imap(_scan_one, jobs, chunksize=1):
            yield SearchRecord(i, rep, depth)
