# wknots/at/words.py
"""
Truncated free associative algebra Ass_n on x_1..x_n. A word is a tuple of
generator indices (1-based); the empty word is the unit.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, Iterable, Mapping, Optional, Tuple

from wknots.errors import WKnotsError

logger = logging.getLogger("wknots.at")

Word = Tuple[int, ...]


class ATSpaceError(WKnotsError):
    """Base exception for the free Lie / associative / cyclic word layer."""


class TruncationMismatchError(ATSpaceError):
    """Raised when operands live over different generator sets."""


def check_generators(n: int, word: Iterable[int]) -> None:
    for g in word:
        if not 1 <= g <= n:
            raise ATSpaceError(f"generator x{g} outside x1..x{n}")


def shared_shape(a, b) -> Tuple[int, int]:
    """(n, degree) for a binary operation; degrees meet at the minimum."""
    if a.n != b.n:
        raise TruncationMismatchError(f"operands over {a.n} and {b.n} generators")
    if a.degree != b.degree:
        logger.debug("Mixed truncation %d / %d, keeping %d", a.degree, b.degree, min(a.degree, b.degree))
    return a.n, min(a.degree, b.degree)


class AssocElement:
    """Rational combination of words of length <= degree."""

    __slots__ = ("n", "degree", "terms")

    def __init__(self, n: int, degree: int, terms: Optional[Mapping[Word, object]] = None):
        self.n = n
        self.degree = degree
        self.terms: Dict[Word, Fraction] = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if len(w) > degree:
                continue
            c = Fraction(c)
            if c:
                self.terms[w] = self.terms.get(w, Fraction(0)) + c
                if not self.terms[w]:
                    del self.terms[w]

    @classmethod
    def zero(cls, n: int, degree: int) -> "AssocElement":
        return cls(n, degree)

    @classmethod
    def one(cls, n: int, degree: int) -> "AssocElement":
        return cls(n, degree, {(): 1})

    @classmethod
    def generator(cls, n: int, degree: int, i: int) -> "AssocElement":
        check_generators(n, (i,))
        return cls(n, degree, {(i,): 1})

    @classmethod
    def word(cls, n: int, degree: int, w: Iterable[int], coef=1) -> "AssocElement":
        w = tuple(w)
        check_generators(n, w)
        return cls(n, degree, {w: coef})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AssocElement):
            return NotImplemented
        d = min(self.degree, other.degree)
        return self.truncate(d).terms == other.truncate(d).terms

    def __add__(self, other: "AssocElement") -> "AssocElement":
        n, d = shared_shape(self, other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return AssocElement(n, d, out)

    def __neg__(self) -> "AssocElement":
        return self.scale(-1)

    def __sub__(self, other: "AssocElement") -> "AssocElement":
        return self + (-other)

    def scale(self, c) -> "AssocElement":
        c = Fraction(c)
        return AssocElement(self.n, self.degree, {w: v * c for w, v in self.terms.items()})

    def __mul__(self, other) -> "AssocElement":
        if not isinstance(other, AssocElement):
            return self.scale(other)
        n, d = shared_shape(self, other)
        out: Dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            room = d - len(w1)
            if room < 0:
                continue
            for w2, c2 in other.terms.items():
                if len(w2) > room:
                    continue
                w = w1 + w2
                out[w] = out.get(w, Fraction(0)) + c1 * c2
        return AssocElement(n, d, out)

    def __rmul__(self, c) -> "AssocElement":
        return self.scale(c)

    def commutator(self, other: "AssocElement") -> "AssocElement":
        return self * other - other * self

    def truncate(self, degree: int) -> "AssocElement":
        return AssocElement(self.n, min(degree, self.degree), self.terms)

    def graded_part(self, k: int) -> "AssocElement":
        return AssocElement(self.n, self.degree, {w: c for w, c in self.terms.items() if len(w) == k})

    def constant(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def min_degree(self) -> Optional[int]:
        return min((len(w) for w in self.terms), default=None)

    def map_words(self, fn: Callable[[Word], Word]) -> "AssocElement":
        out: Dict[Word, Fraction] = {}
        for w, c in self.terms.items():
            w2 = fn(w)
            out[w2] = out.get(w2, Fraction(0)) + c
        return AssocElement(self.n, self.degree, out)

    def relabel(self, images: Mapping[int, int], n: Optional[int] = None) -> "AssocElement":
        """Rename generators letter by letter (x_i -> x_images[i])."""
        out = self.map_words(lambda w: tuple(images.get(g, g) for g in w))
        out.n = self.n if n is None else n
        return out

    def to_dict(self) -> Dict[str, str]:
        return {format_word(w): str(c) for w, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))}

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{format_word(w)}" for w, c in sorted(self.terms.items())) or "0"
        return f"AssocElement(n={self.n}, N={self.degree}: {body})"


def format_word(w: Word) -> str:
    return " ".join(f"x{g}" for g in w) or "1"


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "1"):
        return ()
    out = []
    for tok in text.split():
        if not tok.startswith("x") or not tok[1:].isdigit():
            raise ATSpaceError(f"bad generator token {tok!r}")
        out.append(int(tok[1:]))
    return tuple(out)


# -------------------------------
# Truncated exp / log
# -------------------------------


def assoc_exp(a: AssocElement) -> AssocElement:
    if a.constant():
        raise ATSpaceError("exp needs an element without constant term")
    total = AssocElement.one(a.n, a.degree)
    power = AssocElement.one(a.n, a.degree)
    for k in range(1, a.degree + 1):
        power = power * a
        if not power:
            break
        total = total + power.scale(Fraction(1, factorial(k)))
    return total


def assoc_log(g: AssocElement) -> AssocElement:
    if g.constant() != 1:
        raise ATSpaceError("log needs an element with constant term 1")
    u = g - AssocElement.one(g.n, g.degree)
    total = AssocElement.zero(g.n, g.degree)
    power = AssocElement.one(g.n, g.degree)
    for k in range(1, g.degree + 1):
        power = power * u
        if not power:
            break
        total = total + power.scale(Fraction((-1) ** (k + 1), k))
    return total
