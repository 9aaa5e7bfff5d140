"""The generalized Hermitian curve over GF(2^r).

    y^(2^(r-1)) + ... + y^2 + y  =  sum_{0 <= j < i <= r-1} x^(2^i + 2^j)

The left side is the absolute trace of y.  For r = 2 this is the Hermitian
curve y^2 + y = x^3 over GF(4).  Besides the point at infinity the curve has
2^(2r-1) rational points, enumerated here in (alpha, beta) order.

Functions with poles only at infinity are spanned by the monomials
x^i y^j theta^k with theta = x^3 + y^2 + xy, whose pole orders 2^(r-1),
2^(r-1) + 2^(r-2) and 2^r + 1 generate the Weierstrass semigroup.  With
j in {0, 1} and 0 <= k < 2^(r-2) every semigroup element is the order of
exactly one monomial; without the bound on k orders repeat (for r = 3,
theta^2 and x^3 y both have order 18).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .field import FieldContext
from .semigroup import NumericalSemigroup, gh_semigroup


class CurveError(ValueError):
    pass


class AffinePoint(NamedTuple):
    alpha: int
    beta: int


@dataclass(frozen=True, order=True)
class MonomialExponent:
    """x^i y^j theta^k with its pole order at infinity."""

    order: int
    i: int
    j: int
    k: int

    @property
    def exponents(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.k)


def genus(r: int) -> int:
    return (1 << (2 * r - 3)) - (1 << (r - 2))


def max_theta_power(r: int) -> int:
    """Largest k in the normal form; the coefficient of theta stays below 2^(r-2)."""
    return (1 << (r - 2)) - 1


def pole_orders(r: int) -> tuple[int, int, int]:
    return (1 << (r - 1), (1 << (r - 1)) + (1 << (r - 2)), (1 << r) + 1)


class CurveContext:
    """The degree-r curve over a fixed field.

    Parameters
    ----------
    r : int
        Extension degree, r >= 2.
    field : FieldContext, optional
        Defaults to the pinned modulus for r.
    """

    def __init__(self, r: int, field: FieldContext | None = None):
        if r < 2:
            raise CurveError("r must be >= 2")
        field = field or FieldContext.default(r)
        if field.r != r:
            raise CurveError(f"field has degree {field.r}, expected {r}")
        self.r = r
        self.field = field
        self.genus = genus(r)
        self.n = 1 << (2 * r - 1)

    def __repr__(self) -> str:
        return f"CurveContext(r={self.r}, modulus={self.field.modulus:#x})"

    @cached_property
    def semigroup(self) -> NumericalSemigroup:
        return gh_semigroup(self.r)

    def rhs(self, alpha: int) -> int:
        """Second elementary symmetric polynomial of the conjugates of alpha."""
        F = self.field
        acc = 0
        for i in range(1, self.r):
            for j in range(i):
                acc ^= F.pow(alpha, (1 << i) + (1 << j))
        return acc

    def on_curve(self, alpha: int, beta: int) -> bool:
        return self.field.trace(beta) == self.rhs(alpha)

    @cached_property
    def points(self) -> tuple[AffinePoint, ...]:
        F = self.field
        traces = [F.trace(b) for b in F]
        pts = []
        for a in F:
            ra = self.rhs(a)
            pts.extend(AffinePoint(a, b) for b in F if traces[b] == ra)
        return tuple(pts)

    def enumerate_points(self) -> list[AffinePoint]:
        return list(self.points)

    def theta(self, p: AffinePoint) -> int:
        F = self.field
        a, b = p
        return F.pow(a, 3) ^ F.mul(b, b) ^ F.mul(a, b)

    def evaluate_monomial(self, m: MonomialExponent, p: AffinePoint) -> int:
        F = self.field
        a, b = p
        return F.mul(F.mul(F.pow(a, m.i), F.pow(b, m.j)), F.pow(self.theta(p), m.k))

    def lbasis(self, s: int) -> list[MonomialExponent]:
        """Monomials with pole order <= s, ascending by order.

        Exponents satisfy j <= 1 and k <= 2^(r-2) - 1, so orders are distinct
        and cover the semigroup up to s.

        For r = 2 theta is redundant and the basis is the Hermitian one,
        x^i y^j with 2i + 3j <= s.
        """
        if s < 0:
            return []
        if self.r == 2:
            return [MonomialExponent(o, i, j, 0) for o, i, j in hermitian_basis(s)]
        ox, oy, ot = pole_orders(self.r)
        out = []
        for k in range(min(s // ot, max_theta_power(self.r)) + 1):
            for j in (0, 1):
                rest = s - k * ot - j * oy
                if rest < 0:
                    continue
                out.extend(MonomialExponent(i * ox + j * oy + k * ot, i, j, k) for i in range(rest // ox + 1))
        out.sort()
        return out

    def evaluation_vectors(self, basis: list[MonomialExponent]) -> np.ndarray:
        """Row l holds monomial l evaluated at every point (the u_l vectors)."""
        F = self.field
        pts = self.points
        alpha = np.array([p.alpha for p in pts], dtype=np.int64)
        beta = np.array([p.beta for p in pts], dtype=np.int64)
        theta = np.array([self.theta(p) for p in pts], dtype=np.int64)

        def powers(v: np.ndarray, top: int) -> list[np.ndarray]:
            out = [np.ones_like(v)]
            for _ in range(top):
                out.append(F.mul_array(out[-1], v))
            return out

        max_i = max((m.i for m in basis), default=0)
        max_k = max((m.k for m in basis), default=0)
        ap, tp = powers(alpha, max_i), powers(theta, max_k)
        rows = np.empty((len(basis), len(pts)), dtype=np.int64)
        for row, m in enumerate(basis):
            v = F.mul_array(ap[m.i], tp[m.k])
            if m.j:
                v = F.mul_array(v, beta)
            rows[row] = v
        return rows


def hermitian_basis(s: int) -> list[tuple[int, int, int]]:
    """(order, i, j) for x^i y^j on y^2 + y = x^3, 2i + 3j <= s, ascending."""
    return sorted((2 * i + 3 * j, i, j) for j in (0, 1) for i in range(s // 2 + 1) if 2 * i + 3 * j <= s)


def rhs(ctx: CurveContext, alpha: int) -> int:
    return ctx.rhs(alpha)


def enumerate_points(ctx: CurveContext) -> list[AffinePoint]:
    return ctx.enumerate_points()


def theta(ctx: CurveContext, p: AffinePoint) -> int:
    return ctx.theta(p)


def lbasis(ctx: CurveContext, s: int) -> list[MonomialExponent]:
    return ctx.lbasis(s)


def evaluate_monomial(ctx: CurveContext, m: MonomialExponent, p: AffinePoint) -> int:
    return ctx.evaluate_monomial(m, p)
