"""One-point evaluation codes GH_s on the generalized Hermitian curve.

GH_s is the image of the evaluation map on functions with a pole of order at
most s at infinity, evaluated at all affine rational points.  Its dual is
again such a code: GH_s^perp = GH_{n + 2g - 2 - s}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .curve import CurveContext
from .field import FieldContext
from .linalg import CodeMatrix, kernel_basis, matmul, rank, same_row_space


class CodeError(ValueError):
    pass


@lru_cache(maxsize=None)
def _curve(r: int, modulus: int | None) -> CurveContext:
    F = FieldContext.default(r) if modulus is None else FieldContext(r, modulus)
    return CurveContext(r, F)


def curve_for(r: int, field: FieldContext | None = None) -> CurveContext:
    return _curve(r, None if field is None else field.modulus)


def length(r: int) -> int:
    return 1 << (2 * r - 1)


def dual_sum(r: int) -> int:
    """n + 2g - 2; GH_s and GH_{dual_sum - s} are duals."""
    return curve_for(r).n + 2 * curve_for(r).genus - 2


@dataclass(frozen=True)
class CodeReport:
    n: int
    k: int
    s: int
    goppa_distance_lower_bound: int | None
    dual_s: int | None
    self_orthogonal: bool
    self_dual: bool

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "s": self.s,
            "goppa_distance_lower_bound": self.goppa_distance_lower_bound,
            "dual_s": self.dual_s,
            "self_orthogonal": self.self_orthogonal,
            "self_dual": self.self_dual,
        }


@dataclass(frozen=True)
class GHCode:
    r: int
    s: int
    generator: CodeMatrix = field(repr=False)

    @property
    def field(self) -> FieldContext:
        return self.generator.field

    @property
    def n(self) -> int:
        return self.generator.cols

    @property
    def dimension(self) -> int:
        return rank(self.generator)

    def report(self) -> CodeReport:
        n = self.n
        total = dual_sum(self.r)
        ortho, dual = self_flags(self.r, self.s, field=self.field)
        return CodeReport(
            n=n,
            k=self.dimension,
            s=self.s,
            goppa_distance_lower_bound=n - self.s if 0 < self.s < n else None,
            dual_s=total - self.s if 0 <= self.s <= total else None,
            self_orthogonal=ortho,
            self_dual=dual,
        )


def generator_matrix(r: int, s: int, field: FieldContext | None = None) -> CodeMatrix:
    """Monomials of pole order <= s (ascending) evaluated at every point.

    Row count is the number of monomials, which exceeds the dimension once
    s >= n.
    """
    if s < 0:
        raise CodeError("s must be non-negative")
    C = curve_for(r, field)
    rows = C.evaluation_vectors(C.lbasis(s))
    return CodeMatrix(rows.reshape(-1, C.n), C.field)


def gh_code(r: int, s: int, field: FieldContext | None = None) -> GHCode:
    return GHCode(r, s, generator_matrix(r, s, field))


def hermitian_code(s: int) -> GHCode:
    """The length-8 Hermitian code over GF(4)."""
    return gh_code(2, s)


def dimension(r: int, s: int, field: FieldContext | None = None) -> int:
    """Semigroup count for 0 < s < n; matrix rank otherwise."""
    n = length(r)
    if 0 < s < n:
        return curve_for(r, field).semigroup.count_upto(s)
    return rank(generator_matrix(r, s, field))


def goppa_bound(r: int, s: int) -> int:
    n = length(r)
    if not 0 < s < n:
        raise CodeError(f"Goppa bound n - s needs 0 < s < {n}")
    return n - s


def dual_parameter(r: int, s: int) -> int:
    total = dual_sum(r)
    if not 0 <= s <= total:
        raise CodeError(f"s must be in [0, {total}]")
    return total - s


def self_flags(r: int, s: int, field: FieldContext | None = None, verify: bool = True) -> tuple[bool, bool]:
    """(self-orthogonal, self-dual) from 2s <= n + 2g - 2.

    With ``verify`` the orthogonality claim is checked as G G^T = 0.
    """
    total = dual_sum(r)
    ortho = 2 * s <= total
    dual = 2 * s == total
    if verify and ortho:
        G = generator_matrix(r, s, field)
        if not matmul(G, G.T).is_zero():
            raise CodeError(f"GH_{s} claimed self-orthogonal but G G^T != 0")
    return ortho, dual


def omega_code_as_gh(r: int, index: int, field: FieldContext | None = None) -> GHCode:
    """The dual of the evaluation code at the ``index``-th non-gap, as a GH code."""
    if index < 1:
        raise CodeError("non-gap indices start at 1")
    S = curve_for(r, field).semigroup
    rho = S.rho(index)
    total = dual_sum(r)
    if rho > total:
        raise CodeError(f"rho({index})={rho} exceeds n + 2g - 2 = {total}")
    return gh_code(r, total - rho, field)


@dataclass(frozen=True)
class DualityCheck:
    l: int
    dual_l: int
    n: int
    orthogonal: bool
    rank_sum: int
    kernel_matches: bool | None

    @property
    def ok(self) -> bool:
        return self.orthogonal and self.rank_sum == self.n and self.kernel_matches is not False


def duality_sweep(r: int, field: FieldContext | None = None, kernel_oracle: bool = True) -> list[DualityCheck]:
    """Check G_l G_{m-l}^T = 0 and rank(G_l) + rank(G_{m-l}) = n for all 0 <= l <= m."""
    total = dual_sum(r)
    n = length(r)
    gens = [generator_matrix(r, l, field) for l in range(total + 1)]
    ranks = [rank(G) for G in gens]
    out = []
    for l in range(total + 1):
        A, B = gens[l], gens[total - l]
        ortho = matmul(A, B.T).is_zero()
        km = None
        if kernel_oracle:
            K = kernel_basis(A)
            km = same_row_space(K, B) if K.rows else ranks[total - l] == 0
        out.append(DualityCheck(l, total - l, n, ortho, ranks[l] + ranks[total - l], km))
    return out
