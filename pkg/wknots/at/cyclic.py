# wknots/at/cyclic.py
"""Cyclic words tr_n = Ass_n^+ / (ab = ba), keyed by their minimal rotation."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Mapping, Optional

from .lie import LieElement, bch
from .words import AssocElement, ATSpaceError, Word, check_generators, format_word, parse_word, shared_shape


def min_rotation(w: Word) -> Word:
    if not w:
        return w
    return min(w[i:] + w[:i] for i in range(len(w)))


class TrElement:
    __slots__ = ("n", "degree", "terms")

    def __init__(self, n: int, degree: int, terms: Optional[Mapping[Word, object]] = None):
        self.n = n
        self.degree = degree
        self.terms: Dict[Word, Fraction] = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if not w:
                raise ATSpaceError("cyclic words have positive degree")
            if len(w) > degree:
                continue
            check_generators(n, w)
            key = min_rotation(w)
            total = self.terms.get(key, Fraction(0)) + Fraction(c)
            if total:
                self.terms[key] = total
            else:
                self.terms.pop(key, None)

    @classmethod
    def zero(cls, n: int, degree: int) -> "TrElement":
        return cls(n, degree)

    @classmethod
    def trace(cls, a: AssocElement) -> "TrElement":
        """tr: Ass_n -> tr_n, dropping the constant term."""
        return cls(a.n, a.degree, {w: c for w, c in a.terms.items() if w})

    @classmethod
    def power(cls, n: int, degree: int, i: int, k: int, coef=1) -> "TrElement":
        """coef * tr(x_i^k)"""
        return cls(n, degree, {(i,) * k: coef})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TrElement):
            return NotImplemented
        d = min(self.degree, other.degree)
        return self.n == other.n and self.truncate(d).terms == other.truncate(d).terms

    def __add__(self, other: "TrElement") -> "TrElement":
        n, d = shared_shape(self, other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return TrElement(n, d, out)

    def __neg__(self) -> "TrElement":
        return self.scale(-1)

    def __sub__(self, other: "TrElement") -> "TrElement":
        return self + (-other)

    def scale(self, c) -> "TrElement":
        c = Fraction(c)
        return TrElement(self.n, self.degree, {w: v * c for w, v in self.terms.items()})

    def __mul__(self, c) -> "TrElement":
        return self.scale(c)

    __rmul__ = __mul__

    def truncate(self, degree: int) -> "TrElement":
        return TrElement(self.n, min(degree, self.degree), self.terms)

    def with_degree(self, degree: int) -> "TrElement":
        return TrElement(self.n, degree, self.terms)

    def graded_part(self, k: int) -> "TrElement":
        return TrElement(self.n, self.degree, {w: c for w, c in self.terms.items() if len(w) == k})

    def min_degree(self) -> Optional[int]:
        return min((len(w) for w in self.terms), default=None)

    def coefficient(self, w: Word) -> Fraction:
        return self.terms.get(min_rotation(tuple(w)), Fraction(0))

    def relabel(self, images: Mapping[int, int], n: Optional[int] = None) -> "TrElement":
        out: Dict[Word, Fraction] = {}
        for w, c in self.terms.items():
            w2 = tuple(images.get(g, g) for g in w)
            out[w2] = out.get(w2, Fraction(0)) + c
        return TrElement(self.n if n is None else n, self.degree, out)

    def power_coefficients(self) -> Dict[int, Fraction]:
        """For n = 1: k -> coefficient of tr(x^k)."""
        if self.n != 1:
            raise ATSpaceError("power coefficients are defined on tr_1")
        return {len(w): c for w, c in self.terms.items()}

    def to_dict(self) -> Dict[str, str]:
        return {format_word(w): str(c) for w, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))}

    @classmethod
    def from_dict(cls, n: int, degree: int, data: Mapping[str, object]) -> "TrElement":
        return cls(n, degree, {parse_word(k): Fraction(str(v)) for k, v in data.items()})

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*tr({format_word(w)})" for w, c in sorted(self.terms.items())) or "0"
        return f"TrElement(n={self.n}, N={self.degree}: {body})"


def tr_of_powers(a: TrElement, z: AssocElement) -> TrElement:
    """Evaluate a = sum a_k tr(x^k) in tr_1 at z: sum a_k tr(z^k)."""
    total = TrElement.zero(z.n, min(a.degree, z.degree))
    power = AssocElement.one(z.n, z.degree)
    coeffs = a.power_coefficients()
    for k in range(1, max(coeffs, default=0) + 1):
        power = power * z
        c = coeffs.get(k)
        if c:
            total = total + TrElement.trace(power).scale(c)
    return total


def delta_tilde(a: TrElement, degree: Optional[int] = None) -> TrElement:
    """(d~a)(x, y) = a(x) + a(y) - a(log(e^x e^y)), valued in tr_2."""
    if a.n != 1:
        raise ATSpaceError("delta_tilde takes an element of tr_1")
    d = a.degree if degree is None else degree
    coeffs = a.power_coefficients()
    ax = TrElement(2, d, {(1,) * k: c for k, c in coeffs.items()})
    ay = TrElement(2, d, {(2,) * k: c for k, c in coeffs.items()})
    z = bch(LieElement.generator(2, d, 1), LieElement.generator(2, d, 2)).to_assoc()
    return ax + ay - tr_of_powers(a.with_degree(d), z)
