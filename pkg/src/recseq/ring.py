"""Exact arithmetic over the integers, the rationals, and integers mod m.

Every value is immutable after construction.  Elements of different rings
never mix: binary operations on mismatched rings raise :class:`RingMismatch`
instead of coercing.  Rationals are kept in lowest terms with a positive
denominator (``fractions.Fraction`` guarantees this), residues are kept
reduced into ``[0, m)``, so equality is structural everywhere.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import gcd


class RingMismatch(ValueError):
    """Operands belong to different rings."""


class NotAUnit(ArithmeticError):
    """Multiplicative inverse requested for a non-invertible element."""


class RingSpec:
    """One of the supported coefficient rings: Z, Q, or Z/m for m >= 2.

    Instances are compared structurally; ``Zmod(7) == Zmod(7)`` holds even
    for separately constructed specs.  ``str()`` produces the text syntax
    used by the CLI (``Z``, ``Q``, ``Zmod:<m>``).
    """

    INTEGERS = "Z"
    RATIONALS = "Q"
    INTEGERS_MOD = "Zmod"

    __slots__ = ("kind", "modulus")

    def __init__(self, kind: str, modulus: int | None = None):
        if kind not in (self.INTEGERS, self.RATIONALS, self.INTEGERS_MOD):
            raise ValueError(f"unknown ring kind {kind!r}")
        if kind == self.INTEGERS_MOD:
            if not isinstance(modulus, int) or isinstance(modulus, bool) or modulus < 2:
                raise ValueError("modulus must be an integer >= 2")
        elif modulus is not None:
            raise ValueError(f"ring {kind} takes no modulus")
        self.kind = kind
        self.modulus = modulus

    def __eq__(self, other):
        if not isinstance(other, RingSpec):
            return NotImplemented
        return self.kind == other.kind and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.kind, self.modulus))

    def __str__(self):
        if self.kind == self.INTEGERS_MOD:
            return f"Zmod:{self.modulus}"
        return self.kind

    def __repr__(self):
        return f"RingSpec({self})"

    @property
    def zero(self) -> "RingElem":
        return self.from_int(0)

    @property
    def one(self) -> "RingElem":
        return self.from_int(1)

    def from_int(self, n: int) -> "RingElem":
        """Image of an arbitrary-precision integer in this ring."""
        if not isinstance(n, int):
            raise TypeError(f"expected int, got {type(n).__name__}")
        if self.kind == self.RATIONALS:
            return RingElem(self, Fraction(n))
        return RingElem(self, n)

    def element(self, value) -> "RingElem":
        """Wrap a raw value (int, or Fraction for Q) as an element."""
        return RingElem(self, value)


ZZ = RingSpec(RingSpec.INTEGERS)
QQ = RingSpec(RingSpec.RATIONALS)


def Zmod(m: int) -> RingSpec:
    """The ring of integers modulo ``m`` (any m >= 2, prime or not)."""
    return RingSpec(RingSpec.INTEGERS_MOD, m)


class RingElem:
    """An exact element of a :class:`RingSpec`.

    Supports ``+``, ``-``, ``*`` and unary ``-`` against elements of the
    same ring.  Arbitrary precision throughout; no floats ever.
    """

    __slots__ = ("ring", "value")

    def __init__(self, ring: RingSpec, value):
        kind = ring.kind
        if kind == RingSpec.RATIONALS:
            if isinstance(value, Fraction):
                pass
            elif isinstance(value, int) and not isinstance(value, bool):
                value = Fraction(value)
            else:
                raise TypeError(f"rational value must be int or Fraction, got {type(value).__name__}")
        elif not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"ring value must be int, got {type(value).__name__}")
        elif kind == RingSpec.INTEGERS_MOD:
            value %= ring.modulus
        self.ring = ring
        self.value = value

    def _require_same_ring(self, other) -> None:
        if self.ring != other.ring:
            raise RingMismatch(f"cannot combine elements of {self.ring} and {other.ring}")

    def __add__(self, other):
        if not isinstance(other, RingElem):
            return NotImplemented
        self._require_same_ring(other)
        return RingElem(self.ring, self.value + other.value)

    def __sub__(self, other):
        if not isinstance(other, RingElem):
            return NotImplemented
        self._require_same_ring(other)
        return RingElem(self.ring, self.value - other.value)

    def __mul__(self, other):
        if not isinstance(other, RingElem):
            return NotImplemented
        self._require_same_ring(other)
        return RingElem(self.ring, self.value * other.value)

    def __neg__(self):
        return RingElem(self.ring, -self.value)

    def __eq__(self, other):
        if not isinstance(other, RingElem):
            return NotImplemented
        return self.ring == other.ring and self.value == other.value

    def __hash__(self):
        return hash((self.ring, self.value))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"{self.value} (in {self.ring})"

    def is_zero(self) -> bool:
        return self.value == 0

    def is_unit(self) -> bool:
        """True iff the element has a multiplicative inverse in its ring."""
        kind = self.ring.kind
        if kind == RingSpec.INTEGERS:
            return self.value in (1, -1)
        if kind == RingSpec.RATIONALS:
            return self.value != 0
        return gcd(self.value, self.ring.modulus) == 1

    def inv(self) -> "RingElem":
        """Multiplicative inverse; raises :class:`NotAUnit` if none exists."""
        kind = self.ring.kind
        if kind == RingSpec.INTEGERS:
            if self.value in (1, -1):
                return self
            raise NotAUnit(f"{self.value} is not a unit of Z")
        if kind == RingSpec.RATIONALS:
            if self.value == 0:
                raise NotAUnit("0 has no inverse")
            return RingElem(self.ring, 1 / self.value)
        try:
            return RingElem(self.ring, pow(self.value, -1, self.ring.modulus))
        except ValueError:
            raise NotAUnit(f"{self.value} is not a unit of {self.ring}") from None


def int_scale(n: int, x: RingElem) -> RingElem:
    """``n . x``: the action of an integer scalar on a ring element.

    Computed as (image of n in the ring) * x, so it stays correct in
    positive characteristic where n itself may not live in the ring.
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError("scalar must be an int")
    return x.ring.from_int(n) * x


class BinomialTable:
    """Grow-on-demand Pascal triangle of exact integer binomial coefficients.

    Rows are appended under a lock and never mutated afterwards, so the
    table can be shared between threads.
    """

    def __init__(self):
        self._rows = [[1]]
        self._lock = threading.Lock()

    def value(self, n: int, k: int) -> int:
        """C(n, k); zero when k > n, error on negative arguments."""
        if n < 0 or k < 0:
            raise ValueError("binomial arguments must be nonnegative")
        if k > n:
            return 0
        if n >= len(self._rows):
            self._grow(n)
        return self._rows[n][k]

    def _grow(self, n: int) -> None:
        with self._lock:
            rows = self._rows
            while len(rows) <= n:
                prev = rows[-1]
                row = [1]
                row.extend(prev[i - 1] + prev[i] for i in range(1, len(prev)))
                row.append(1)
                rows.append(row)

    def row(self, n: int) -> list[int]:
        """The full row [C(n,0), ..., C(n,n)]."""
        self.value(n, 0)
        return list(self._rows[n])


_SHARED_TABLE = BinomialTable()


def binom(n: int, k: int) -> int:
    """Exact binomial coefficient C(n, k) from a shared Pascal table."""
    return _SHARED_TABLE.value(n, k)
