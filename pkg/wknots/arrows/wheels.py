# wknots/arrows/wheels.py
from __future__ import annotations

import logging
import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from wknots.config import settings

from .diagrams import (
    CIRCLE,
    LONG_LINE,
    ArrowCombination,
    EnumerationCapError,
    SkeletonMismatchError,
    SpaceKind,
    close_to_circle,
    d_l,
)
from .jacobi import stu_eliminate, wheel_jacobi
from .quotient import get_quotient

logger = logging.getLogger("wknots.arrows.wheels")

# A monomial D_A^a * prod w_k^{m_k} is stored as a partition: a ones, m_k copies of k.
Monomial = Tuple[int, ...]


@lru_cache(maxsize=None)
def _wheel(k: int) -> ArrowCombination:
    return stu_eliminate(wheel_jacobi(k))


def wheel_element(k: int, circle: bool = False) -> ArrowCombination:
    """The k-wheel with adjacent spokes, reduced to arrow diagrams on the line (or closed up)."""
    if not 1 <= k <= settings.max_degree_w_line:
        raise EnumerationCapError(f"wheel size {k} outside 1..{settings.max_degree_w_line}")
    w = _wheel(k)
    return close_to_circle(w) if circle else w.copy()


def d_a_element() -> ArrowCombination:
    """D_A, represented by D_L (equal to D_R modulo RI)."""
    return d_l()


def partitions(m: int, largest: Optional[int] = None) -> Iterator[Monomial]:
    """Partitions of m in non-increasing order."""
    largest = m if largest is None else largest
    if m == 0:
        yield ()
        return
    for part in range(min(m, largest), 0, -1):
        for rest in partitions(m - part, part):
            yield (part,) + rest


def monomial_basis(m: int) -> List[Monomial]:
    """Monomials D_A^a * prod_{k>=2} w_k^{m_k} of degree m."""
    return list(partitions(m))


def format_monomial(mono: Monomial) -> str:
    if not mono:
        return "1"
    parts = []
    a = mono.count(1)
    if a:
        parts.append("DA" if a == 1 else f"DA^{a}")
    for k in sorted(set(mono) - {1}):
        e = mono.count(k)
        parts.append(f"w{k}" if e == 1 else f"w{k}^{e}")
    return " ".join(parts)


_MONOMIAL_TOKEN = re.compile(r"(DA|w\d+)(?:\^(\d+))?")


def parse_monomial(text: str) -> Monomial:
    parts: List[int] = []
    for tok in text.split():
        if tok == "1":
            continue
        m = _MONOMIAL_TOKEN.fullmatch(tok)
        if m is None:
            raise ValueError(f"bad wheels factor {tok!r}")
        k = 1 if m.group(1) == "DA" else int(m.group(1)[1:])
        e = int(m.group(2) or 1)
        if k < 1 or e < 1:
            raise ValueError(f"bad wheels factor {tok!r}")
        parts.extend([k] * e)
    return tuple(sorted(parts, reverse=True))


def realize_monomial(mono: Monomial) -> ArrowCombination:
    """Concatenate the factors along the line."""
    out = ArrowCombination.unit(LONG_LINE)
    for k in mono:
        out = out * (d_a_element() if k == 1 else wheel_element(k))
    return out


class WheelsPolynomial:
    """Rational polynomial in D_A and the wheels w_k (k >= 2), truncated at degree."""

    def __init__(self, terms: Optional[Mapping[Monomial, object]] = None, degree: Optional[int] = None):
        self.degree = degree
        self.terms: Dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(sorted(mono, reverse=True))
            if degree is not None and sum(mono) > degree:
                continue
            c = self.terms.get(mono, 0) + Fraction(c)
            if c:
                self.terms[mono] = c
            else:
                self.terms.pop(mono, None)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(sorted(mono, reverse=True)), Fraction(0))

    def __add__(self, other: "WheelsPolynomial") -> "WheelsPolynomial":
        merged: Dict[Monomial, Fraction] = dict(self.terms)
        for k, v in other.terms.items():
            merged[k] = merged.get(k, 0) + v
        return WheelsPolynomial(merged, _min(self.degree, other.degree))

    def __sub__(self, other: "WheelsPolynomial") -> "WheelsPolynomial":
        return self + other.scale(-1)

    def scale(self, c) -> "WheelsPolynomial":
        return WheelsPolynomial({k: v * Fraction(c) for k, v in self.terms.items()}, self.degree)

    def __mul__(self, other: "WheelsPolynomial") -> "WheelsPolynomial":
        deg = _min(self.degree, other.degree)
        out: Dict[Monomial, Fraction] = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                if deg is not None and sum(a) + sum(b) > deg:
                    continue
                mono = tuple(sorted(a + b, reverse=True))
                out[mono] = out.get(mono, 0) + x * y
        return WheelsPolynomial(out, deg)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WheelsPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def to_dict(self) -> Dict[str, str]:
        return {
            format_monomial(k): str(v)
            for k, v in sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        }

    def __repr__(self) -> str:
        return f"WheelsPolynomial({self.to_dict()})"


def _min(a: Optional[int], b: Optional[int]) -> Optional[int]:
    vals = [x for x in (a, b) if x is not None]
    return min(vals) if vals else None


def wheels_coordinates(e: ArrowCombination, m: int, space=SpaceKind.SW) -> WheelsPolynomial:
    """Express e, up to degree m, in the D_A / wheels monomial basis of the sw quotient."""
    if e.skeleton != LONG_LINE:
        raise SkeletonMismatchError("wheels coordinates are taken on the long line")
    space = SpaceKind.parse(space)
    out: Dict[Monomial, Fraction] = {}
    for d in range(m + 1):
        monos = monomial_basis(d)
        q = get_quotient(LONG_LINE, space, d)
        coeffs = q.coordinates(e, [realize_monomial(mono) for mono in monos])
        for mono, c in zip(monos, coeffs):
            if c:
                out[mono] = c
        logger.debug("wheels coordinates: degree %d solved over %d monomials", d, len(monos))
    return WheelsPolynomial(out, m)


def wheel_vanishes_on_circle(k: int) -> bool:
    q = get_quotient(CIRCLE, SpaceKind.W, k)
    return q.contains(wheel_element(k, circle=True))
