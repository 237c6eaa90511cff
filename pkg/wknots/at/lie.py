# wknots/at/lie.py
"""
Truncated free Lie algebra lie_n. Elements are stored on the Lyndon basis:
a Lyndon word w stands for its standard bracketing P(w) = [P(u), P(v)],
where v is the longest proper Lyndon suffix of w = uv.

Conversion from a Lie polynomial in Ass_n uses that P(w) expands to w plus
words of the same length that are lexicographically larger.
"""

from __future__ import annotations

import heapq
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple, TypeVar

from .words import (
    AssocElement,
    ATSpaceError,
    Word,
    assoc_exp,
    assoc_log,
    check_generators,
    shared_shape,
)

logger = logging.getLogger("wknots.at.lie")

T = TypeVar("T")


# -------------------------------
# Lyndon words
# -------------------------------


def is_lyndon(w: Word) -> bool:
    return bool(w) and all(w < w[i:] for i in range(1, len(w)))


@lru_cache(maxsize=None)
def lyndon_words(n: int, max_len: int) -> Tuple[Word, ...]:
    """All Lyndon words over x1..xn of length <= max_len, in lexicographic order."""
    out: List[Word] = []
    if n < 1 or max_len < 1:
        return ()
    w = [-1]
    while w:
        w[-1] += 1
        out.append(tuple(g + 1 for g in w))
        m = len(w)
        while len(w) < max_len:
            w.append(w[-m])
        while w and w[-1] == n - 1:
            w.pop()
    return tuple(out)


def lyndon_basis(n: int, d: int) -> Tuple[Word, ...]:
    """Lyndon words of length exactly d."""
    return tuple(w for w in lyndon_words(n, d) if len(w) == d)


def standard_factorization(w: Word) -> Tuple[Word, Word]:
    if len(w) < 2:
        raise ATSpaceError(f"{w} has no standard factorization")
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise ATSpaceError(f"{w} is not a Lyndon word")


def _word_product(a: Mapping[Word, int], b: Mapping[Word, int]) -> Dict[Word, int]:
    out: Dict[Word, int] = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            w = w1 + w2
            out[w] = out.get(w, 0) + c1 * c2
    return out


@lru_cache(maxsize=None)
def _bracketing(w: Word) -> Tuple[Tuple[Word, int], ...]:
    """Associative expansion of P(w) as (word, integer coefficient) pairs."""
    if len(w) == 1:
        return ((w, 1),)
    u, v = standard_factorization(w)
    pu, pv = dict(_bracketing(u)), dict(_bracketing(v))
    out = _word_product(pu, pv)
    for k, c in _word_product(pv, pu).items():
        out[k] = out.get(k, 0) - c
    return tuple(sorted((k, c) for k, c in out.items() if c))


def bracketing_string(w: Word) -> str:
    if len(w) == 1:
        return f"x{w[0]}"
    u, v = standard_factorization(w)
    return f"[{bracketing_string(u)},{bracketing_string(v)}]"


# -------------------------------
# Lie elements
# -------------------------------


class LieElement:
    """Rational combination of Lyndon words of length <= degree, each meaning its bracketing."""

    __slots__ = ("n", "degree", "coeffs", "_assoc")

    def __init__(self, n: int, degree: int, coeffs: Optional[Mapping[Word, object]] = None):
        self.n = n
        self.degree = degree
        self.coeffs: Dict[Word, Fraction] = {}
        self._assoc: Optional[AssocElement] = None
        for w, c in (coeffs or {}).items():
            w = tuple(w)
            if len(w) > degree:
                continue
            if not is_lyndon(w):
                raise ATSpaceError(f"{w} is not a Lyndon word")
            check_generators(n, w)
            c = Fraction(c)
            if c:
                total = self.coeffs.get(w, Fraction(0)) + c
                if total:
                    self.coeffs[w] = total
                else:
                    del self.coeffs[w]

    @classmethod
    def zero(cls, n: int, degree: int) -> "LieElement":
        return cls(n, degree)

    @classmethod
    def generator(cls, n: int, degree: int, i: int) -> "LieElement":
        return cls(n, degree, {(i,): 1})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        d = min(self.degree, other.degree)
        return self.n == other.n and self.truncate(d).coeffs == other.truncate(d).coeffs

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted(self.coeffs.items()))))

    def __add__(self, other: "LieElement") -> "LieElement":
        n, d = shared_shape(self, other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, Fraction(0)) + c
        return LieElement(n, d, out)

    def __neg__(self) -> "LieElement":
        return self.scale(-1)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def scale(self, c) -> "LieElement":
        c = Fraction(c)
        return LieElement(self.n, self.degree, {w: v * c for w, v in self.coeffs.items()})

    def __mul__(self, c) -> "LieElement":
        return self.scale(c)

    __rmul__ = __mul__

    def truncate(self, degree: int) -> "LieElement":
        return LieElement(self.n, min(degree, self.degree), self.coeffs)

    def with_degree(self, degree: int) -> "LieElement":
        """Same coefficients under a new truncation (dropping what exceeds it)."""
        return LieElement(self.n, degree, self.coeffs)

    def graded_part(self, k: int) -> "LieElement":
        return LieElement(self.n, self.degree, {w: c for w, c in self.coeffs.items() if len(w) == k})

    def min_degree(self) -> Optional[int]:
        return min((len(w) for w in self.coeffs), default=None)

    def to_assoc(self) -> AssocElement:
        if self._assoc is None:
            out: Dict[Word, Fraction] = {}
            for w, c in self.coeffs.items():
                for u, k in _bracketing(w):
                    out[u] = out.get(u, Fraction(0)) + c * k
            self._assoc = AssocElement(self.n, self.degree, out)
        return self._assoc

    def bracket(self, other: "LieElement") -> "LieElement":
        return lie_bracket(self, other)

    def relabel(self, images: Mapping[int, int], n: Optional[int] = None) -> "LieElement":
        return from_assoc(self.to_assoc().relabel(images, n))

    def to_dict(self) -> Dict[str, str]:
        return {bracketing_string(w): str(c) for w, c in sorted(self.coeffs.items(), key=lambda t: (len(t[0]), t[0]))}

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{bracketing_string(w)}" for w, c in sorted(self.coeffs.items())) or "0"
        return f"LieElement(n={self.n}, N={self.degree}: {body})"


def from_assoc(a: AssocElement) -> LieElement:
    """Lyndon coordinates of a Lie polynomial; raises when a is not one."""
    work: Dict[Word, Fraction] = dict(a.terms)
    if () in work:
        raise ATSpaceError("a Lie polynomial has no constant term")
    heap = list(work)
    heapq.heapify(heap)
    out: Dict[Word, Fraction] = {}
    while heap:
        w = heapq.heappop(heap)
        c = work.pop(w, None)
        if not c:
            continue
        if not is_lyndon(w):
            raise ATSpaceError(f"not a Lie polynomial: leading word {w} is not Lyndon")
        out[w] = c
        for u, k in _bracketing(w):
            if u == w:
                continue
            new = work.get(u, Fraction(0)) - c * k
            if new:
                if u not in work:
                    heapq.heappush(heap, u)
                work[u] = new
            else:
                work.pop(u, None)
    result = LieElement(a.n, a.degree, out)
    result._assoc = a
    return result


def assoc_embed(a: LieElement) -> AssocElement:
    return a.to_assoc()


def lie_bracket(a: LieElement, b: LieElement) -> LieElement:
    n, d = shared_shape(a, b)
    lo_a, lo_b = a.min_degree(), b.min_degree()
    if lo_a is None or lo_b is None or lo_a + lo_b > d:
        return LieElement.zero(n, d)
    return from_assoc(a.to_assoc().truncate(d).commutator(b.to_assoc().truncate(d)))


def left_normed(word: Word, n: int, degree: int) -> AssocElement:
    """[..[[x_w1, x_w2], x_w3].., x_wk] in Ass_n."""
    acc = AssocElement.word(n, degree, word[:1])
    for g in word[1:]:
        acc = acc.commutator(AssocElement.generator(n, degree, g))
    return acc


def dynkin_projection(a: AssocElement) -> LieElement:
    """
    Lie part of a Lie polynomial by the Dynkin-Specht-Wever map: each degree-k
    word is replaced by its left-normed bracket divided by k.
    """
    if a.constant():
        raise ATSpaceError("a Lie polynomial has no constant term")
    total = AssocElement.zero(a.n, a.degree)
    for w, c in a.terms.items():
        total = total + left_normed(w, a.n, a.degree).scale(c / len(w))
    return from_assoc(total)


def lie_exp(a: LieElement) -> AssocElement:
    return assoc_exp(a.to_assoc())


def lie_log(g: AssocElement) -> LieElement:
    """log of a group-like element; the result is checked to be a Lie polynomial."""
    return from_assoc(assoc_log(g))


def bch(a: LieElement, b: LieElement, degree: Optional[int] = None) -> LieElement:
    """log(e^a e^b) truncated at degree (default: the operands' truncation)."""
    n, d = shared_shape(a, b)
    if degree is not None:
        d = min(d, degree)
    if not a:
        return b.truncate(d)
    if not b:
        return a.truncate(d)
    return lie_log(lie_exp(a.truncate(d)) * lie_exp(b.truncate(d)))


# -------------------------------
# Evaluation in other Lie algebras
# -------------------------------


@lru_cache(maxsize=None)
def bch_series(degree: int) -> LieElement:
    """BCH(x1, x2) in lie_2 through the given degree."""
    return bch(LieElement.generator(2, degree, 1), LieElement.generator(2, degree, 2))


def lie_evaluate(
    a: LieElement,
    values: Sequence[T],
    bracket: Callable[[T, T], T],
    zero: T,
) -> T:
    """
    Substitute values[i-1] for x_i in a and evaluate with the given bracket.
    Values must support + and .scale(c).
    """
    if len(values) != a.n:
        raise ATSpaceError(f"need {a.n} values, got {len(values)}")
    memo: Dict[Word, T] = {}

    def evaluate_word(w: Word) -> T:
        if w not in memo:
            if len(w) == 1:
                memo[w] = values[w[0] - 1]
            else:
                u, v = standard_factorization(w)
                memo[w] = bracket(evaluate_word(u), evaluate_word(v))
        return memo[w]

    total = zero
    for w, c in sorted(a.coeffs.items(), key=lambda t: (len(t[0]), t[0])):
        total = total + evaluate_word(w).scale(c)
    return total


def bch_in(
    x: T,
    y: T,
    degree: int,
    bracket: Callable[[T, T], T],
    zero: T,
) -> T:
    """BCH of two elements of any graded Lie algebra whose elements have positive degree."""
    return lie_evaluate(bch_series(degree), [x, y], bracket, zero)
