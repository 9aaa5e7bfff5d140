"""Numerical semigroups, telescopic sequences and Feng-Rao distances.

A numerical semigroup is the set of non-negative integer combinations of a
finite generator set with gcd 1.  Its elements are the *non-gaps*; the
missing positive integers are the *gaps*.  The non-gap sequence is indexed
from 1, so ``rho(1) == 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd
from typing import Sequence


class SemigroupError(ValueError):
    pass


class NumericalSemigroup:
    """Semigroup generated by ``generators``.

    Membership is tabulated up to the conductor at construction; anything at
    or past the conductor is a member.
    """

    def __init__(self, generators: Sequence[int]):
        gens = sorted(set(int(g) for g in generators))
        if not gens or gens[0] <= 0:
            raise SemigroupError("generators must be positive integers")
        if reduce(gcd, gens) != 1:
            raise SemigroupError(f"gcd{tuple(gens)} != 1; the semigroup has infinitely many gaps")
        self.generators: tuple[int, ...] = tuple(gens)
        # A run of min(generators) consecutive members means every larger
        # integer is a member too.
        table = [True]
        run = 1
        while run < gens[0]:
            n = len(table)
            member = any(n >= g and table[n - g] for g in gens)
            table.append(member)
            run = run + 1 if member else 0
        c = len(table) - run
        self.conductor: int = c
        self._table: tuple[bool, ...] = tuple(table[:c])

    def __repr__(self) -> str:
        return f"NumericalSemigroup({list(self.generators)})"

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        return n >= self.conductor or self._table[n]

    def contains(self, n: int) -> bool:
        return n in self

    @cached_property
    def gaps(self) -> tuple[int, ...]:
        return tuple(n for n in range(self.conductor) if not self._table[n])

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def is_symmetric(self) -> bool:
        return self.conductor == 2 * self.genus

    def count_upto(self, s: int) -> int:
        """Number of non-gaps in [0, s]."""
        if s < 0:
            return 0
        if s >= self.conductor:
            return s + 1 - self.genus
        return sum(self._table[: s + 1])

    def elements_upto(self, s: int) -> list[int]:
        return [n for n in range(s + 1) if n in self]

    def nongaps(self, count: int) -> list[int]:
        """First ``count`` non-gaps, starting with 0."""
        if count < 1:
            raise SemigroupError("count must be >= 1")
        out: list[int] = []
        n = 0
        while len(out) < count:
            if n in self:
                out.append(n)
            n += 1
        return out

    def rho(self, index: int) -> int:
        """The ``index``-th non-gap (1-based)."""
        if index < 1:
            raise SemigroupError("non-gap indices start at 1")
        # Past the conductor the sequence advances by one per index.
        tail = self.conductor - self.genus  # number of non-gaps below the conductor
        if index > tail:
            return self.conductor + (index - tail - 1)
        return self.nongaps(index)[-1]

    def index_of(self, nongap: int) -> int:
        """Inverse of :meth:`rho`."""
        if nongap not in self:
            raise SemigroupError(f"{nongap} is a gap")
        return self.count_upto(nongap)

    # Feng-Rao machinery

    def nu(self, l: int) -> int:
        """Ordered non-gap pairs summing to ``rho(l + 1)``."""
        if l < 1:
            raise SemigroupError("nu is defined for l >= 1")
        target = self.rho(l + 1)
        return sum(1 for a in range(target + 1) if a in self and (target - a) in self)

    def feng_rao(self, s: int) -> int:
        """Order bound min{nu(m) : m >= s} by direct scan.

        Once rho(m+1) >= 2*conductor every integer in play is a non-gap and
        nu grows by one per step, so the scan stops there.
        """
        if s < 1:
            raise SemigroupError("s must be >= 1")
        best = self.nu(s)
        m = s
        while self.rho(m + 1) < 2 * self.conductor:
            m += 1
            best = min(best, self.nu(m))
        return best

    def goppa_omega(self, s: int) -> int:
        """Designed distance rho(s) - 2g + 2 of the dual code C_Omega(D, rho(s) P)."""
        if s < 1:
            raise SemigroupError("s must be >= 1")
        return self.rho(s) - 2 * self.genus + 2


def contains(S: NumericalSemigroup, n: int) -> bool:
    return n in S


def gaps(S: NumericalSemigroup) -> list[int]:
    return list(S.gaps)


def conductor(S: NumericalSemigroup) -> int:
    return S.conductor


def nongap_sequence(S: NumericalSemigroup, count: int) -> list[int]:
    return S.nongaps(count)


def nu_sequence(S: NumericalSemigroup, l: int) -> int:
    return S.nu(l)


def feng_rao_bruteforce(S: NumericalSemigroup, s: int) -> int:
    return S.feng_rao(s)


def goppa_designed_distance_omega(S: NumericalSemigroup, s: int) -> int:
    return S.goppa_omega(s)


# telescopic sequences


@dataclass(frozen=True)
class TelescopicStage:
    """Stage i of the telescopic check: d_i = gcd(a_1..a_i), A_i = {a_j / d_i}."""

    index: int
    d: int
    scaled: tuple[int, ...]
    ok: bool


def telescopic_trace(seq: Sequence[int]) -> tuple[bool, list[TelescopicStage]]:
    """Check whether ``seq`` is telescopic; return the verdict and stage data.

    The sequence is telescopic when a_i / d_i lies in the semigroup generated
    by A_{i-1} = {a_1/d_{i-1}, ..., a_{i-1}/d_{i-1}} for every i >= 2.
    """
    seq = tuple(int(a) for a in seq)
    if not seq or min(seq) <= 0:
        raise SemigroupError("sequence must be non-empty and positive")
    if reduce(gcd, seq) != 1:
        raise SemigroupError(f"gcd{seq} != 1")
    stages = []
    verdict = True
    for i in range(1, len(seq) + 1):
        d = reduce(gcd, seq[:i])
        scaled = tuple(a // d for a in seq[:i])
        if i == 1:
            ok = True
        else:
            ok = scaled[-1] in NumericalSemigroup(stages[-1].scaled)
        verdict = verdict and ok
        stages.append(TelescopicStage(i, d, scaled, ok))
    return verdict, stages


def is_telescopic(seq: Sequence[int]) -> bool:
    return telescopic_trace(seq)[0]


def telescopic_conductor_genus(seq: Sequence[int]) -> tuple[int, int]:
    """Closed-form (conductor, genus) of a telescopic semigroup.

    c - 1 = sum_i (d_{i-1}/d_i - 1) a_i with d_0 = 0, and g = c / 2.
    """
    ok, stages = telescopic_trace(seq)
    if not ok:
        raise SemigroupError(f"{tuple(seq)} is not telescopic")
    ds = [0] + [st.d for st in stages]
    c = 1 + sum((ds[i - 1] // ds[i] - 1) * a for i, a in enumerate(seq, start=1))
    return c, c // 2


def gh_generators(r: int) -> tuple[int, int, int]:
    """Pole orders of x, y and theta at infinity on the degree-r curve."""
    if r < 3:
        raise SemigroupError("the three-generator semigroup needs r >= 3 (r=2 is Hermitian, <2,3>)")
    return (1 << (r - 1), (1 << (r - 1)) + (1 << (r - 2)), (1 << r) + 1)


def gh_semigroup(r: int) -> NumericalSemigroup:
    if r == 2:
        return NumericalSemigroup((2, 3))
    return NumericalSemigroup(gh_generators(r))


def _last_stage(seq: Sequence[int]) -> tuple[int, int]:
    """(d_{k-1}, a_k) for a telescopic sequence whose last entry is its max."""
    ok, stages = telescopic_trace(seq)
    if not ok:
        raise SemigroupError(f"{tuple(seq)} is not telescopic")
    if len(seq) < 2:
        raise SemigroupError("need at least two generators")
    a_k = seq[-1]
    if a_k != max(seq):
        raise SemigroupError("last generator must be the largest")
    return stages[-2].d, a_k


def feng_rao_window_range(seq: Sequence[int]) -> range:
    """Indices s for which :func:`feng_rao_telescopic_window` applies."""
    S = NumericalSemigroup(seq)
    d, a_k = _last_stage(seq)
    g = S.genus
    lo = max(3 * g - 2 - (d - 1) * a_k + 1, g, 1)
    return range(lo, 3 * g - 1)


def feng_rao_telescopic_window(seq: Sequence[int], s: int) -> int:
    """Smallest non-gap >= s + 1 - g, valid on the upper window of indices."""
    d, a_k = _last_stage(seq)
    if d <= 1:
        raise SemigroupError("need d_{k-1} > 1")
    if s not in feng_rao_window_range(seq):
        raise SemigroupError(f"s={s} is outside the validity window")
    S = NumericalSemigroup(seq)
    t = s + 1 - S.genus
    while t not in S:
        t += 1
    return t


def feng_rao_telescopic_low(seq: Sequence[int], s: int) -> int:
    """j + 1 where (j-1) a_k < rho(s+1) <= j a_k <= (d_{k-1}-1) a_k."""
    d, a_k = _last_stage(seq)
    S = NumericalSemigroup(seq)
    x = S.rho(s + 1)
    j = -(-x // a_k)  # ceil
    if j < 1 or j > d - 1:
        raise SemigroupError(f"rho({s + 1})={x} is outside the low range (needs <= {(d - 1) * a_k})")
    return j + 1
