"""Invariant checks behind ``ghcodes verify``.

Each check returns a :class:`Check`; the CLI prints one line per check and
fails if any of them does.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator

from .codes import curve_for, duality_sweep, generator_matrix, length
from .curve import genus, pole_orders
from .distance import example39_table, record_code_check, section5_table
from .field import FieldContext
from .linalg import rank
from .semigroup import (
    NumericalSemigroup,
    feng_rao_telescopic_low,
    feng_rao_telescopic_window,
    feng_rao_window_range,
    gh_generators,
    is_telescopic,
    telescopic_conductor_genus,
)

DEFAULT_SEED = 20240601


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def _field_axioms(rng: random.Random, cases: int = 1000) -> Check:
    for r in range(2, 9):
        F = FieldContext.default(r)
        for _ in range(cases):
            a, b, c = (rng.randrange(F.order) for _ in range(3))
            if F.mul(a, F.mul(b, c)) != F.mul(F.mul(a, b), c):
                return Check("field axioms", False, f"associativity r={r} {a},{b},{c}")
            if F.mul(a, b ^ c) != F.mul(a, b) ^ F.mul(a, c):
                return Check("field axioms", False, f"distributivity r={r} {a},{b},{c}")
            if F.mul(a, b) != F.mul_slow(a, b):
                return Check("field axioms", False, f"table product r={r} {a},{b}")
    return Check("field axioms", True, f"{cases} random triples per r=2..8")


def _trace_kernel() -> Check:
    for r in range(2, 9):
        F = FieldContext.default(r)
        zeros = sum(1 for a in F if F.trace(a) == 0)
        if zeros != F.order // 2:
            return Check("trace kernel size", False, f"r={r}: {zeros}")
    return Check("trace kernel size", True, "2^(r-1) for r=2..8")


def _points(r: int) -> Check:
    C = curve_for(r)
    per_alpha = {}
    for p in C.points:
        per_alpha[p.alpha] = per_alpha.get(p.alpha, 0) + 1
    ok = len(C.points) == 1 << (2 * r - 1) and set(per_alpha.values()) == {1 << (r - 1)}
    return Check("point count", ok, f"{len(C.points)} affine points, 2^(r-1) per alpha")


def _semigroup(r: int) -> Check:
    if r < 3:
        S = NumericalSemigroup((2, 3))
        return Check("semigroup identification", S.genus == genus(2), f"<2,3>, genus {S.genus}")
    seq = gh_generators(r)
    S = NumericalSemigroup(seq)
    c, g = telescopic_conductor_genus(seq)
    ok = (
        is_telescopic(seq)
        and (c, g) == (S.conductor, S.genus)
        and c == (1 << (2 * r - 2)) - (1 << (r - 1))
        and g == genus(r)
        and seq == pole_orders(r)
    )
    return Check("semigroup identification", ok, f"{seq}: conductor {c}, genus {g}")


def _dimension(r: int) -> Check:
    n = length(r)
    S = curve_for(r).semigroup
    svals = range(1, n) if r <= 3 else sorted({curve_for(r).genus, 2 * curve_for(r).genus - 1, n - 1})
    bad = [s for s in svals if rank(generator_matrix(r, s)) != S.count_upto(s)]
    return Check("dimension identity", not bad, f"s in {list(svals)[:3]}..{list(svals)[-1]}" + (f"; bad {bad}" if bad else ""))


def _duality(r: int) -> Check:
    res = duality_sweep(r)
    bad = [c.l for c in res if not c.ok]
    return Check(f"duality sweep r={r}", not bad, f"{len(res)} pairs l + l' = {res[0].dual_l}" + (f"; bad {bad}" if bad else ""))


def _feng_rao(r: int) -> Check:
    seq = gh_generators(r)
    S = NumericalSemigroup(seq)
    bad = [s for s in feng_rao_window_range(seq) if S.feng_rao(s) != feng_rao_telescopic_window(seq, s)]
    low_top = ((1 << (r - 2)) - 1) * seq[-1]
    s = 1
    while S.rho(s + 1) <= low_top:
        if S.feng_rao(s) != feng_rao_telescopic_low(seq, s):
            bad.append(s)
        s += 1
    return Check("Feng-Rao closed forms", not bad, "window and low-range formulas vs brute force" + (f"; bad {bad}" if bad else ""))


def _example39() -> Check:
    rows = example39_table()
    ok = all(row.window_value == row.delta_fr for row in rows)
    ok = ok and all(row.delta_gamma == row.reference_gamma for row in rows)
    ok = ok and all(row.delta_fr == row.reference_fr for row in rows if row.s not in (12, 13))
    flagged = [row.s for row in rows if row.annotation]
    return Check("delta table r=3", ok, f"flagged rows {flagged}")


def _section5(threads: int | None) -> Check:
    rows = section5_table(max_exact_k=8, early_exit=False, threads=threads)
    exact = [(row.k, row.d) for row in rows if row.d is not None]
    ok = all(row.d == row.d_reference for row in rows if row.d is not None)
    ok = ok and all(row.result.lower_bound <= (row.d or row.result.singleton) <= row.result.singleton for row in rows)
    return Check("distance table r=3", ok, f"exact (k, d): {exact}")


def _record() -> Check:
    rep = record_code_check()
    return Check("record code", rep.ok, f"[{rep.n},{rep.k},>={rep.feng_rao}] self-dual={rep.self_dual}")


def run_checks(r: int, seed: int = DEFAULT_SEED, threads: int | None = None) -> Iterator[Check]:
    rng = random.Random(seed)
    steps: list[Callable[[], Check]] = [
        lambda: _field_axioms(rng),
        _trace_kernel,
        lambda: _points(r),
        lambda: _semigroup(r),
        lambda: _dimension(r),
        lambda: _duality(r),
    ]
    if r != 2:
        steps.append(lambda: _duality(2))
    if r >= 3:
        steps.append(lambda: _feng_rao(r))
    if r == 3:
        steps += [_example39, lambda: _section5(threads), _record]
    for step in steps:
        yield step()
