# wknots/expansions/knot_z.py
"""
The expansion Z of a long w-knot given by a Gauss diagram: every crossing
becomes a reservoir exp(s * a) of parallel arrows from its Over site to its
Under site, expanded multinomially up to the truncation degree.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from wknots.arrows import LONG_LINE, ArrowCombination, SpaceKind, WheelsPolynomial, wheels_coordinates
from wknots.arrows.coproduct import coproduct
from wknots.arrows.diagrams import LineKey, renumber
from wknots.config import settings
from wknots.errors import WKnotsError
from wknots.knots import GaussDiagram, self_linking

logger = logging.getLogger("wknots.expansions.knots")


class ExpansionError(WKnotsError):
    """Base exception for the expansions."""


@dataclass(frozen=True)
class TruncatedKnotInvariant:
    degree: int
    value: ArrowCombination
    self_linking: int
    semivirtual: Tuple[int, ...] = ()

    def graded_part(self, m: int) -> ArrowCombination:
        return self.value.graded_part(m)


def resolve_degree(n: Optional[int], default: int, cap: int, what: str) -> int:
    n = default if n is None else n
    if n < 0:
        raise ExpansionError(f"{what} degree must be >= 0, got {n}")
    if n > cap:
        raise ExpansionError(f"{what} degree {n} exceeds the cap {cap}")
    return n


def _assignments(n_crossings: int, budget: int, minimum: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    """Copy counts per crossing with total <= budget."""
    if n_crossings == 0:
        yield ()
        return
    lo = minimum[0]
    for k in range(lo, budget + 1):
        for rest in _assignments(n_crossings - 1, budget - k, minimum[1:]):
            yield (k,) + rest


def reservoir_key(k: GaussDiagram, counts: Tuple[int, ...]) -> LineKey:
    """
    The diagram with counts[c-1] parallel copies of the arrow of crossing c.
    Tails sit in copy order at the Over site, heads in reverse order at the
    Under site, so the copies are nested head-side innermost.
    """
    ids: Dict[int, List[int]] = {}
    next_id = 1
    for c, m in enumerate(counts, start=1):
        ids[c] = list(range(next_id, next_id + m))
        next_id += m
    tokens: List[int] = []
    for e in k.endpoints:
        arrows = ids[e.crossing]
        if e.role == "O":
            tokens.extend(arrows)
        else:
            tokens.extend(-a for a in reversed(arrows))
    return renumber(tokens)


def knot_z(k: GaussDiagram, degree: Optional[int] = None, semivirtual: Iterable[int] = ()) -> TruncatedKnotInvariant:
    """
    Z(k) truncated at degree. Crossings listed in semivirtual are replaced by
    the formal difference crossing minus no crossing, i.e. exp(s a) - 1.
    """
    n = resolve_degree(degree, settings.default_knot_degree, settings.max_knot_degree, "knot")
    marked = tuple(sorted(set(semivirtual)))
    for c in marked:
        if not 1 <= c <= k.n_crossings:
            raise ExpansionError(f"semi-virtual crossing {c} outside 1..{k.n_crossings}")
    minimum = tuple(1 if c in marked else 0 for c in range(1, k.n_crossings + 1))
    signs = k.signs()
    terms: Dict[LineKey, Fraction] = {}
    for counts in _assignments(k.n_crossings, n, minimum):
        coef = Fraction(1)
        for s, m in zip(signs, counts):
            coef *= Fraction(s ** m, factorial(m))
        key = reservoir_key(k, counts)
        terms[key] = terms.get(key, Fraction(0)) + coef
    value = ArrowCombination(LONG_LINE, terms, degree=n, canonical=True)
    logger.info("Z of a %d-crossing diagram through degree %d: %d terms", k.n_crossings, n, len(value.terms))
    return TruncatedKnotInvariant(n, value, self_linking(k), marked)


def knot_z_wheels(k: GaussDiagram, degree: Optional[int] = None) -> WheelsPolynomial:
    z = knot_z(k, degree)
    return wheels_coordinates(z.value, z.degree, SpaceKind.SW)


def is_group_like(z: TruncatedKnotInvariant) -> bool:
    """Delta(Z) = Z (x) Z through the truncation degree, on diagram keys."""
    n = z.degree
    delta: Dict[Tuple[LineKey, LineKey], Fraction] = {}
    for key, c in z.value.terms.items():
        for pair, mult in coproduct(LONG_LINE, key).items():
            delta[pair] = delta.get(pair, Fraction(0)) + c * mult
    square: Dict[Tuple[LineKey, LineKey], Fraction] = {}
    for k1, c1 in z.value.terms.items():
        for k2, c2 in z.value.terms.items():
            if (len(k1) + len(k2)) // 2 > n:
                continue
            square[(k1, k2)] = square.get((k1, k2), Fraction(0)) + c1 * c2
    return _nonzero(delta) == _nonzero(square)


def _nonzero(d: Dict) -> Dict:
    return {k: v for k, v in d.items() if v}
