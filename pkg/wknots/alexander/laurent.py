# wknots/alexander/laurent.py
from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from sympy import Poly, Symbol, ZZ

from wknots.errors import WKnotsError

from .series import PowerSeries

X = Symbol("X")

_TERM_RE = re.compile(r"([+-]?)(\d*)(\*?X(?:\^(-?\d+))?)?")


class AlexanderError(WKnotsError):
    """Base exception for Alexander-polynomial computations."""


class LaurentPoly:
    """Integer Laurent polynomial in X, stored as exponent -> nonzero coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[int, int]] = None):
        self.terms: Dict[int, int] = {int(e): int(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coef: int = 1) -> "LaurentPoly":
        return cls({exp: coef})

    @classmethod
    def from_poly(cls, p: Poly, shift: int = 0) -> "LaurentPoly":
        """Poly in X divided by X^shift."""
        return cls({m[0] - shift: int(c) for m, c in p.terms()})

    def to_poly(self) -> Tuple[Poly, int]:
        """(P, shift) with self = P / X^shift and P an honest polynomial."""
        shift = -min(self.terms, default=0) if self.terms else 0
        shift = max(shift, 0)
        return Poly({(e + shift,): c for e, c in self.terms.items()} or {(0,): 0}, X, domain=ZZ), shift

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.terms.items()})
        out: Dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.terms.items())))

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        return sum((Fraction(c) * x ** e for e, c in self.terms.items()), Fraction(0))

    def mirror(self) -> "LaurentPoly":
        """X -> X^-1"""
        return LaurentPoly({-e: c for e, c in self.terms.items()})

    def is_symmetric(self) -> bool:
        return self == self.mirror()

    def normalized(self) -> "LaurentPoly":
        """The unit multiple +-X^k that is symmetric (when one exists) with value 1 at X = 1."""
        if not self.terms:
            return self
        lo, hi = min(self.terms), max(self.terms)
        if (lo + hi) % 2:
            raise AlexanderError(f"{self} has no symmetric unit multiple")
        shifted = LaurentPoly({e - (lo + hi) // 2: c for e, c in self.terms.items()})
        return -shifted if shifted.evaluate(1) < 0 else shifted

    def substitute_exp(self, n: int):
        """A(e^x) as a power series truncated at x^n."""
        total = PowerSeries.zero(n)
        for e, c in self.terms.items():
            total = total + PowerSeries.exp_linear(e, n).scale(c)
        return total

    def to_terms(self) -> List[str]:
        """Sorted 'coef*X^exp' strings, highest exponent first."""
        return [f"{c}*X^{e}" for e, c in sorted(self.terms.items(), reverse=True)]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e, c in sorted(self.terms.items(), reverse=True):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "X" if e == 1 else f"X^{e}"
                body = power if mag == 1 else f"{mag}{power}"
            out.append(sign + body)
        text = "".join(out)
        return text[1:] if text.startswith("+") else text

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def parse_laurent(text: str) -> LaurentPoly:
    """Parse strings like '-X^3+4X^2-8X+11-8X^-1' or '2*X^1 - 3'."""
    s = text.replace(" ", "").replace("−", "-").replace("⁻", "-")
    if not s:
        raise AlexanderError("empty polynomial")
    terms: Dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise AlexanderError(f"cannot parse polynomial at {s[pos:]!r}")
        sign, digits, xpart, exp = m.groups()
        if not digits and not xpart:
            raise AlexanderError(f"cannot parse polynomial at {s[pos:]!r}")
        coef = int(digits) if digits else 1
        if sign == "-":
            coef = -coef
        e = 0
        if xpart:
            e = int(exp) if exp is not None else 1
        terms[e] = terms.get(e, 0) + coef
        pos = m.end()
        if pos < len(s) and s[pos] not in "+-":
            raise AlexanderError(f"unexpected {s[pos]!r} in polynomial")
    return LaurentPoly(terms)


def bareiss_det(rows: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """
    Fraction-free determinant over Z[X]: rows are first multiplied by X^k to
    clear negative exponents and the accumulated power is divided out.
    """
    n = len(rows)
    if n == 0:
        return LaurentPoly.one()
    total_shift = 0
    mat: List[List[Poly]] = []
    for row in rows:
        low = min((min(p.terms) for p in row if p.terms), default=0)
        shift = max(-low, 0)
        total_shift += shift
        mat.append([LaurentPoly({e + shift: c for e, c in p.terms.items()}).to_poly()[0] for p in row])

    sign = 1
    prev = Poly(1, X, domain=ZZ)
    for k in range(n - 1):
        if mat[k][k].is_zero:
            swap = next((r for r in range(k + 1, n) if not mat[r][k].is_zero), None)
            if swap is None:
                return LaurentPoly()
            mat[k], mat[swap] = mat[swap], mat[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]
                mat[i][j] = num.exquo(prev)
        prev = mat[k][k]
    det = mat[n - 1][n - 1]
    return LaurentPoly.from_poly(det, total_shift) * sign
