"""Arithmetic in the finite rings Z_{p^r}, including the prime fields (r = 1).

Elements are stored as canonical integers in ``[0, p^r)``.  The hot paths of the
synthesis engine work on plain ints through :class:`Modulus`; :class:`Residue`
wraps an int together with its modulus for callers who want operator syntax.

Moduli are limited to ``p^r < 2**31`` so that every product of two residues is
an exact Python int of modest size and numpy ``int64`` arithmetic never
overflows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Union

from .errors import NonInvertibleError, ZeroDecompositionError

MAX_MODULUS = 2**31


def is_prime(n: int) -> bool:
    """Trial division; adequate for the desk-scale moduli used here."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Modulus:
    """The ring Z_{p^r}."""

    p: int
    r: int = 1
    q: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"p must be a prime integer, got {self.p!r}")
        if not isinstance(self.r, int) or self.r < 1:
            raise ValueError(f"r must be a positive integer, got {self.r!r}")
        q = self.p**self.r
        if q >= MAX_MODULUS:
            raise ValueError(f"modulus {self.p}^{self.r} exceeds the supported bound 2^31")
        object.__setattr__(self, "q", q)

    def __str__(self) -> str:
        return f"Z_{self.q}"

    @property
    def is_field(self) -> bool:
        return self.r == 1

    @cached_property
    def unit_group_order(self) -> int:
        return self.p ** (self.r - 1) * (self.p - 1)

    def __call__(self, value: int) -> Residue:
        return Residue(value, self)

    def reduce(self, a: int) -> int:
        return a % self.q

    def valuation(self, a: int) -> int:
        """p-adic valuation of ``a`` in ``[0, r]``; zero has valuation r."""
        a %= self.q
        if a == 0:
            return self.r
        v = 0
        while a % self.p == 0:
            a //= self.p
            v += 1
        return v

    def order(self, a: int) -> int:
        """k such that the additive subgroup generated by ``a`` has p^k elements."""
        return self.r - self.valuation(a)

    def is_unit(self, a: int) -> bool:
        return a % self.p != 0

    def inverse(self, a: int) -> int:
        a %= self.q
        if not self.is_unit(a):
            raise NonInvertibleError(f"{a} is not a unit in {self}")
        return pow(a, -1, self.q)

    def p_adic_expansion(self, a: int) -> tuple[int, ...]:
        """Digits (d_0, ..., d_{r-1}) with a = d_0 + p d_1 + ... + p^{r-1} d_{r-1}."""
        a %= self.q
        digits = []
        for _ in range(self.r):
            a, d = divmod(a, self.p)
            digits.append(d)
        return tuple(digits)

    def from_digits(self, digits) -> int:
        value = 0
        for d in reversed(tuple(digits)):
            if not 0 <= d < self.p:
                raise ValueError(f"digit {d} outside [0, {self.p})")
            value = value * self.p + d
        return value % self.q

    def unit_decompose(self, a: int) -> tuple[int, int]:
        """Write ``a = theta * p**(level - 1)`` with theta a unit, level in [1, r].

        theta is the integer quotient ``a // p**(level - 1)``, the smallest of the
        unit representatives that satisfy the identity.
        """
        a %= self.q
        if a == 0:
            raise ZeroDecompositionError(f"cannot decompose 0 in {self}")
        v = self.valuation(a)
        return a // self.p**v, v + 1

    def units(self) -> tuple[int, ...]:
        return tuple(a for a in range(1, self.q) if self.is_unit(a))

    def digits(self) -> tuple[int, ...]:
        return tuple(range(self.p))

    def signed(self, a: int) -> int:
        """Representative of ``a`` in the symmetric range around zero (display only)."""
        a %= self.q
        return a - self.q if 2 * a > self.q else a


@dataclass(frozen=True)
class Residue:
    """An element of Z_{p^r} with operator arithmetic."""

    value: int
    modulus: Modulus

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % self.modulus.q)

    def _coerce(self, other: Union[Residue, int]) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError(f"mixed moduli {self.modulus} and {other.modulus}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Residue(self.value + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Residue(self.value - o, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Residue(o - self.value, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Residue(self.value * o, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> Residue:
        return Residue(-self.value, self.modulus)

    def __pow__(self, n: int) -> Residue:
        if n < 0:
            return self.inverse() ** (-n)
        return Residue(pow(self.value, n, self.modulus.q), self.modulus)

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Residue):
            return self.value == other.value and self.modulus == other.modulus
        if isinstance(other, int):
            return self.value == other % self.modulus.q
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.modulus))

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.modulus.q})"

    def order(self) -> int:
        return self.modulus.order(self.value)

    def is_unit(self) -> bool:
        return self.modulus.is_unit(self.value)

    def inverse(self) -> Residue:
        return Residue(self.modulus.inverse(self.value), self.modulus)

    def p_adic_expansion(self) -> tuple[int, ...]:
        return self.modulus.p_adic_expansion(self.value)

    def unit_decompose(self) -> tuple[Residue, int]:
        theta, level = self.modulus.unit_decompose(self.value)
        return Residue(theta, self.modulus), level


def order(a: Residue) -> int:
    return a.order()


def p_adic_expansion(a: Residue) -> tuple[int, ...]:
    return a.p_adic_expansion()


def is_unit(a: Residue) -> bool:
    return a.is_unit()


def inverse(a: Residue) -> Residue:
    return a.inverse()


def unit_decompose(a: Residue) -> tuple[Residue, int]:
    return a.unit_decompose()
