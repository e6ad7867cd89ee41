"""Polynomials over Z_{p^r}, two-component row vectors, and monomial orders.

A row vector ``[g1, g2]`` is an element of Z_{p^r}[x]^2.  Its monomials are
``x^alpha e_pos`` with ``pos`` in {1, 2}.  Both term-over-position (TOP) and
position-over-term (POT) orders are supported; every leading-monomial decision
in the package goes through :func:`monomial_key`.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import ZeroVectorError
from .ring import Modulus

#: Degree of the zero polynomial; compares below every integer.
NEG_INF = float("-inf")


def _strip(coeffs: Iterable[int], q: int) -> tuple[int, ...]:
    c = [int(a) % q for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Poly:
    """Dense polynomial; ``coeffs[i]`` is the coefficient of x^i."""

    coeffs: tuple[int, ...]
    modulus: Modulus

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip(self.coeffs, self.modulus.q))

    @classmethod
    def zero(cls, modulus: Modulus) -> Poly:
        return cls((), modulus)

    @classmethod
    def const(cls, c: int, modulus: Modulus) -> Poly:
        return cls((c,), modulus)

    @classmethod
    def monomial(cls, c: int, n: int, modulus: Modulus) -> Poly:
        return cls((0,) * n + (c,), modulus)

    @classmethod
    def parse(cls, text: str, modulus: Modulus) -> Poly:
        return parse_poly(text, modulus)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant_term(self) -> int:
        return self[0]

    def _check(self, other: Poly) -> None:
        if other.modulus != self.modulus:
            raise ValueError(f"mixed moduli {self.modulus} and {other.modulus}")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        n = max(len(self), len(other))
        return Poly(tuple(self[i] + other[i] for i in range(n)), self.modulus)

    def __sub__(self, other: Poly) -> Poly:
        self._check(other)
        n = max(len(self), len(other))
        return Poly(tuple(self[i] - other[i] for i in range(n)), self.modulus)

    def __neg__(self) -> Poly:
        return Poly(tuple(-a for a in self.coeffs), self.modulus)

    def __mul__(self, other) -> Poly:
        if isinstance(other, int):
            return Poly(tuple(a * other for a in self.coeffs), self.modulus)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.modulus)
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out, self.modulus)

    __rmul__ = __mul__

    def shift(self, n: int = 1) -> Poly:
        """Multiply by x^n."""
        if not self.coeffs:
            return self
        return Poly((0,) * n + self.coeffs, self.modulus)

    def __call__(self, x: int) -> int:
        y = 0
        for c in reversed(self.coeffs):
            y = (y * x + c) % self.modulus.q
        return y

    def sort_key(self):
        """Canonical order: degree first, then the ascending coefficient tuple."""
        return (len(self.coeffs), self.coeffs)

    def __str__(self) -> str:
        return render_poly(self)

    def __repr__(self) -> str:
        return f"Poly({render_poly(self)!r} over {self.modulus})"


def render_poly(f: Poly) -> str:
    """Descending powers with canonical coefficients, e.g. ``7x^2+x+1``."""
    terms = []
    for e in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[e]
        if c == 0:
            continue
        if e == 0:
            terms.append(str(c))
            continue
        head = "" if c == 1 else str(c)
        terms.append(head + ("x" if e == 1 else f"x^{e}"))
    return "+".join(terms) if terms else "0"


_TERM = re.compile(r"([+-])?(\d+)?\*?(x(?:\^(\d+))?)?")


def parse_poly(text: str, modulus: Modulus) -> Poly:
    """Inverse of :func:`render_poly`; also accepts signs, spaces and ``*``."""
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ValueError("empty polynomial string")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        sign = -1 if m.group(1) == "-" else 1
        c = int(m.group(2)) if m.group(2) is not None else 1
        if m.group(3) is None:
            e = 0
        else:
            e = int(m.group(4)) if m.group(4) is not None else 1
        coeffs[e] = coeffs.get(e, 0) + sign * c
        pos = m.end()
        if pos < len(s) and s[pos] not in "+-":
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
    n = max(coeffs) + 1
    return Poly(tuple(coeffs.get(i, 0) for i in range(n)), modulus)


class MonomialOrder(enum.Enum):
    TOP = "top"
    POT = "pot"


TOP = MonomialOrder.TOP
POT = MonomialOrder.POT


class Monomial(NamedTuple):
    """The monomial x^alpha e_pos of Z_{p^r}[x]^2."""

    alpha: int
    pos: int


def monomial_key(m: Monomial, order: MonomialOrder = TOP) -> tuple[int, int]:
    """Sort key realising the chosen monomial order."""
    if order is TOP:
        return (m.alpha, m.pos)
    return (m.pos, m.alpha)


def compare_monomials(m1: Monomial, m2: Monomial, order: MonomialOrder = TOP) -> int:
    """-1, 0 or 1 as ``m1`` is less than, equal to or greater than ``m2``."""
    k1, k2 = monomial_key(m1, order), monomial_key(m2, order)
    return (k1 > k2) - (k1 < k2)


class LeadingData(NamedTuple):
    lm: Monomial
    lc: int
    lpos: int
    deg: int
    ord: int


@dataclass(frozen=True)
class PolyRowVec:
    """Row vector ``[g1, g2]`` over a common modulus."""

    g1: Poly
    g2: Poly

    def __post_init__(self) -> None:
        if self.g1.modulus != self.g2.modulus:
            raise ValueError("components of a row vector must share the modulus")

    @classmethod
    def from_coeffs(cls, c1: Sequence[int], c2: Sequence[int], modulus: Modulus) -> PolyRowVec:
        return cls(Poly(tuple(c1), modulus), Poly(tuple(c2), modulus))

    @classmethod
    def parse(cls, t1: str, t2: str, modulus: Modulus) -> PolyRowVec:
        return cls(parse_poly(t1, modulus), parse_poly(t2, modulus))

    @property
    def modulus(self) -> Modulus:
        return self.g1.modulus

    def __iter__(self):
        yield self.g1
        yield self.g2

    def __getitem__(self, i: int) -> Poly:
        return (self.g1, self.g2)[i]

    def is_zero(self) -> bool:
        return not self.g1 and not self.g2

    def __add__(self, other: PolyRowVec) -> PolyRowVec:
        return PolyRowVec(self.g1 + other.g1, self.g2 + other.g2)

    def __sub__(self, other: PolyRowVec) -> PolyRowVec:
        return PolyRowVec(self.g1 - other.g1, self.g2 - other.g2)

    def __neg__(self) -> PolyRowVec:
        return PolyRowVec(-self.g1, -self.g2)

    def __mul__(self, c) -> PolyRowVec:
        """Scalar (int) or polynomial multiple."""
        return PolyRowVec(self.g1 * c, self.g2 * c)

    __rmul__ = __mul__

    def shift(self, n: int = 1) -> PolyRowVec:
        return PolyRowVec(self.g1.shift(n), self.g2.shift(n))

    @property
    def degree(self):
        """TOP degree: the larger component degree."""
        return max(self.g1.degree, self.g2.degree)

    def at_zero(self) -> tuple[int, int]:
        return (self.g1.constant_term, self.g2.constant_term)

    def leading(self, order: MonomialOrder = TOP) -> LeadingData:
        return leading_data(self, order)

    def __str__(self) -> str:
        return f"[{self.g1}, {self.g2}]"

    def __repr__(self) -> str:
        return f"PolyRowVec({self.g1}, {self.g2} over {self.modulus})"


def leading_data(f: PolyRowVec, order: MonomialOrder = TOP) -> LeadingData:
    """Leading monomial, coefficient, position, degree and order of ``f``."""
    if f.is_zero():
        raise ZeroVectorError("zero vector has no leading monomial")
    # within one position the top coefficient dominates under both orders
    candidates = [Monomial(len(g.coeffs) - 1, pos) for pos, g in ((1, f.g1), (2, f.g2)) if g]
    lm = max(candidates, key=lambda m: monomial_key(m, order))
    lc = f[lm.pos - 1].coeffs[lm.alpha]
    return LeadingData(lm, lc, lm.pos, lm.alpha, f.modulus.order(lc))


def discrepancy(g: PolyRowVec, S: Sequence[int], k: int) -> int:
    """Coefficient of x^k in g1(x) + g2(x) * (S_1 x + ... + S_k x^k).

    This is the step-k error of the row ``g`` against the prefix S_1..S_k.
    """
    q = g.modulus.q
    total = g.g1[k]
    c2 = g.g2.coeffs
    for i in range(1, k + 1):
        j = k - i
        if j < len(c2):
            total += c2[j] * int(S[i - 1])
    return total % q


@dataclass(frozen=True)
class ModuleSpec:
    """The module generated by [x^{k+1}, 0] and [-S(x), 1] for a prefix S_1..S_k.

    With ``reciprocal=True`` the sequence is read backwards, giving M^rec.
    """

    sequence: tuple[int, ...]
    modulus: Modulus
    reciprocal: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "sequence", tuple(int(s) % self.modulus.q for s in self.sequence))

    @property
    def series(self) -> tuple[int, ...]:
        """Coefficients (s_0, ..., s_k) of the polynomial S(x); s_0 = 0."""
        seq = self.sequence[::-1] if self.reciprocal else self.sequence
        return (0,) + seq

    def generators(self) -> tuple[PolyRowVec, PolyRowVec]:
        k = len(self.sequence)
        m = self.modulus
        top = PolyRowVec(Poly.monomial(1, k + 1, m), Poly.zero(m))
        return top, PolyRowVec(-Poly(self.series, m), Poly.const(1, m))


def membership(g: PolyRowVec, module: ModuleSpec) -> bool:
    """True iff g1 + g2 * S(x) vanishes modulo x^{k+1}."""
    if g.modulus != module.modulus:
        raise ValueError("row and module use different moduli")
    q = module.modulus.q
    s = module.series
    c1, c2 = g.g1.coeffs, g.g2.coeffs
    for n in range(len(s)):
        total = c1[n] if n < len(c1) else 0
        for i in range(1, n + 1):
            if n - i < len(c2):
                total += c2[n - i] * s[i]
        if total % q:
            return False
    return True
