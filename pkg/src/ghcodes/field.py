"""Arithmetic in GF(2^r).

Elements are integers whose bits are the coefficients of a polynomial over
GF(2) in the variable z (bit i is the coefficient of z^i).  Products are
reduced modulo a fixed irreducible polynomial of degree r.

Default moduli (one per degree)::

    r=2 : z^2 + z + 1             0b111        = 7
    r=3 : z^3 + z + 1             0b1011       = 11
    r=4 : z^4 + z + 1             0b10011      = 19
    r=5 : z^5 + z^2 + 1           0b100101     = 37
    r=6 : z^6 + z + 1             0b1000011    = 67
    r=7 : z^7 + z + 1             0b10000011   = 131
    r=8 : z^8 + z^4 + z^3 + z + 1 0b100011011  = 283
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

DEFAULT_MODULI: dict[int, int] = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
}

MIN_DEGREE = 2
MAX_DEGREE = 16


class FieldError(ValueError):
    """Raised for invalid field parameters or mismatched operands."""


def poly_mod(a: int, m: int) -> int:
    """Remainder of a modulo m in GF(2)[z]."""
    dm = m.bit_length() - 1
    while a and a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def is_irreducible(m: int) -> bool:
    """Trial division by every polynomial of degree 1..deg(m)//2."""
    deg = m.bit_length() - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for p in range(1 << d, 1 << (d + 1)):
            if poly_mod(m, p) == 0:
                return False
    return True


def find_irreducible(r: int) -> int:
    """Smallest irreducible polynomial of degree r (as a bitmask)."""
    for m in range((1 << r) | 1, 1 << (r + 1), 2):
        if is_irreducible(m):
            return m
    raise FieldError(f"no irreducible polynomial of degree {r}")  # pragma: no cover


def _clmul_mod(a: int, b: int, r: int, m: int) -> int:
    p = 0
    top = 1 << r
    while b:
        if b & 1:
            p ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= m
    return p


@dataclass(frozen=True, eq=False)
class FieldContext:
    """GF(2^r) built on a given irreducible modulus.

    Integer-level operations (``add``, ``mul``, ...) take and return plain
    ints in ``[0, 2^r)``; they are what the rest of the package uses.  Use
    :meth:`element` to get a :class:`FieldElement` with operator syntax.

    Log/antilog tables are built at construction so that ``mul`` and the
    vectorized ``mul_array`` are table lookups.
    """

    r: int
    modulus: int
    _exp: np.ndarray = field(init=False, repr=False)
    _log: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if not MIN_DEGREE <= self.r <= MAX_DEGREE:
            raise FieldError(f"extension degree must be in [{MIN_DEGREE}, {MAX_DEGREE}], got {self.r}")
        if self.modulus.bit_length() - 1 != self.r:
            raise FieldError(f"modulus {self.modulus:#x} does not have degree {self.r}")
        if not is_irreducible(self.modulus):
            raise FieldError(f"modulus {self.modulus:#x} is reducible over GF(2)")
        order = 1 << self.r
        # The modulus need not be primitive, so search for a generator.
        for g in range(2, order):
            exp = np.zeros(2 * order, dtype=np.int64)
            log = np.full(order, -1, dtype=np.int64)
            x = 1
            for i in range(order - 1):
                if log[x] >= 0:
                    break
                exp[i] = x
                log[x] = i
                x = _clmul_mod(x, g, self.r, self.modulus)
            else:
                break
        else:  # r=1 only; excluded above
            raise FieldError("no generator found")  # pragma: no cover
        exp[order - 1 : 2 * (order - 1)] = exp[: order - 1]
        object.__setattr__(self, "_exp", exp)
        object.__setattr__(self, "_log", log)

    @classmethod
    def default(cls, r: int) -> "FieldContext":
        return cls(r, DEFAULT_MODULI.get(r) or find_irreducible(r))

    @property
    def order(self) -> int:
        return 1 << self.r

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldContext) and (self.r, self.modulus) == (other.r, other.modulus)

    def __hash__(self) -> int:
        return hash((self.r, self.modulus))

    def _check(self, *values: int) -> None:
        for v in values:
            if not 0 <= v < self.order:
                raise FieldError(f"{v} is not an element of GF(2^{self.r})")

    # integer-level arithmetic

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp[self._log[a] + self._log[b]])

    def mul_slow(self, a: int, b: int) -> int:
        """Shift-and-xor product, independent of the log tables."""
        return _clmul_mod(a, b, self.r, self.modulus)

    def pow(self, a: int, e: int) -> int:
        """Square-and-multiply; ``pow(0, 0) == 1``."""
        if e < 0:
            raise FieldError("negative exponent")
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in a field")
        return self.pow(a, self.order - 2)

    def trace(self, a: int) -> int:
        """Absolute trace a + a^2 + ... + a^(2^(r-1)); always 0 or 1."""
        t, x = 0, a
        for _ in range(self.r):
            t ^= x
            x = self.mul(x, x)
        return t

    def elements(self) -> range:
        return range(self.order)

    # vectorized helpers for matrix code

    def mul_array(self, a, b) -> np.ndarray:
        """Elementwise product of integer arrays (broadcasting)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def scale_array(self, c: int, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if c == 0:
            return np.zeros_like(a)
        out = self._exp[self._log[a] + self._log[c]]
        return np.where(a == 0, 0, out)

    # element wrappers

    def element(self, value: int) -> "FieldElement":
        return FieldElement(value, self)

    def enumerate(self) -> list["FieldElement"]:
        """All 2^r elements in ascending value order."""
        return [FieldElement(v, self) for v in range(self.order)]

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.order))


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: FieldContext

    def __post_init__(self) -> None:
        self.field._check(self.value)

    def _other(self, other: "FieldElement") -> int:
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldError("operands belong to different fields")
        return other.value

    def __add__(self, other: "FieldElement") -> "FieldElement":
        v = self._other(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.value ^ v, self.field)

    __sub__ = __add__

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        v = self._other(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field.mul(self.value, v), self.field)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.field.pow(self.value, e), self.field)

    def __neg__(self) -> "FieldElement":
        return self

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field.inv(self.value), self.field)

    def trace(self) -> "FieldElement":
        return FieldElement(self.field.trace(self.value), self.field)

    def __repr__(self) -> str:
        return f"GF(2^{self.field.r})({self.value})"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, e: int) -> FieldElement:
    return a**e


def trace(a: FieldElement) -> FieldElement:
    return a.trace()
