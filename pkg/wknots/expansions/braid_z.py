# wknots/expansions/braid_z.py
"""
Z of a w-braid as (pure part, permutation): a combination of words in the
arrows a_ij on Strands(n) followed by the skeleton permutation.

  Z(s_i) = s_i,  Z(sigma_i) = exp(a_{i,i+1}) s_i,  Z(sigma_i^-1) = exp(-a_{i+1,i}) s_i

Arrows are slid below permutations with pi . a_ij = a_{pi^-1 i, pi^-1 j} . pi,
so arrow labels are bottom positions of strands.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from wknots.arrows import ArrowCombination, Skeleton, SpaceKind, get_quotient
from wknots.arrows.diagrams import StrandKey, trace_normal_form
from wknots.config import settings
from wknots.knots import BraidWord, compose_perms, identity_perm, invert_perm
from wknots.knots.braids import Permutation, transposition

from .knot_z import ExpansionError, resolve_degree

logger = logging.getLogger("wknots.expansions.braids")

Factor = Tuple[int, int, int]  # (sign, tail strand, head strand)


class StrandIndexError(ExpansionError):
    """Raised when a strand index is outside the braid."""


@dataclass(frozen=True)
class BraidInvariantDiagrammatic:
    n_strands: int
    degree: int
    pure: ArrowCombination
    perm: Permutation

    def __mul__(self, other: "BraidInvariantDiagrammatic") -> "BraidInvariantDiagrammatic":
        return braid_product(self, other)

    def to_dict(self) -> Dict[str, object]:
        return {"perm": list(self.perm), "degree": self.degree, "pure": self.pure.to_dict()}


def _strands(n: int) -> Skeleton:
    return Skeleton.strands(n)


def _check_strand(n: int, k: int, upper: Optional[int] = None) -> None:
    upper = n if upper is None else upper
    if not 1 <= k <= upper:
        raise StrandIndexError(f"strand {k} outside 1..{upper}")


def _relabel_word(word: StrandKey, fn: Callable[[int], int]) -> StrandKey:
    return trace_normal_form((fn(i), fn(j)) for i, j in word)


def relabel(pure: ArrowCombination, fn: Callable[[int], int], n: Optional[int] = None) -> ArrowCombination:
    sk = _strands(pure.skeleton.n if n is None else n)
    return pure.map_keys(lambda w: _relabel_word(w, fn), sk)


def arrow_exponential(n: int, sign: int, tail: int, head: int, degree: int) -> ArrowCombination:
    """exp(sign * a_{tail,head}) truncated at degree."""
    terms = {((tail, head),) * k: Fraction(sign ** k, factorial(k)) for k in range(degree + 1)}
    return ArrowCombination(_strands(n), terms, degree, canonical=True)


def braid_factors(b: BraidWord) -> Tuple[List[Factor], Permutation]:
    """Arrow factors slid to the bottom, in order, and the skeleton permutation."""
    n = b.n_strands
    perm = identity_perm(n)
    factors: List[Factor] = []
    for kind, i in b.letters:
        if kind != "v":
            back = invert_perm(perm)
            if kind == "p":
                tail, head, sign = i, i + 1, 1
            else:
                tail, head, sign = i + 1, i, -1
            factors.append((sign, back[tail - 1], back[head - 1]))
        perm = compose_perms(perm, transposition(n, i))
    return factors, perm


def braid_z_diagrammatic(b: BraidWord, degree: Optional[int] = None) -> BraidInvariantDiagrammatic:
    n = resolve_degree(degree, settings.default_braid_degree, settings.max_braid_degree, "braid")
    factors, perm = braid_factors(b)
    pure = ArrowCombination.unit(_strands(b.n_strands), n)
    for sign, tail, head in factors:
        pure = pure * arrow_exponential(b.n_strands, sign, tail, head, n)
    logger.debug("Z of a %d-letter braid through degree %d: %d words", len(b), n, len(pure.terms))
    return BraidInvariantDiagrammatic(b.n_strands, n, pure, perm)


def braid_product(x: BraidInvariantDiagrammatic, y: BraidInvariantDiagrammatic) -> BraidInvariantDiagrammatic:
    """x below y; y's arrows slide down through x's permutation."""
    if x.n_strands != y.n_strands:
        raise StrandIndexError(f"cannot stack {x.n_strands} and {y.n_strands} strands")
    back = invert_perm(x.perm)
    slid = relabel(y.pure, lambda i: back[i - 1])
    return BraidInvariantDiagrammatic(
        x.n_strands, min(x.degree, y.degree), x.pure * slid, compose_perms(x.perm, y.perm)
    )


# -------------------------------
# Compatibility operations
# -------------------------------


def theta(x: BraidInvariantDiagrammatic) -> BraidInvariantDiagrammatic:
    """Antipode: reverse words, negate arrows, and pass the result through the inverse permutation."""
    reversed_pure = ArrowCombination(x.pure.skeleton, degree=x.degree)
    for word, c in x.pure.terms.items():
        reversed_pure._add(trace_normal_form(reversed(word)), c * (-1) ** len(word))
    pure = relabel(reversed_pure, lambda i: x.perm[i - 1])
    return BraidInvariantDiagrammatic(x.n_strands, x.degree, pure, invert_perm(x.perm))


def delete(x: BraidInvariantDiagrammatic, k: int) -> BraidInvariantDiagrammatic:
    """d_k: drop the strand starting at k; words touching it vanish."""
    n = x.n_strands
    _check_strand(n, k)
    if n == 1:
        raise StrandIndexError("cannot delete the only strand")
    down = lambda i: i - 1 if i > k else i  # noqa: E731
    pure = ArrowCombination(_strands(n - 1), degree=x.degree)
    for word, c in x.pure.terms.items():
        if any(k in letter for letter in word):
            continue
        pure._add(_relabel_word(word, down), c)
    top = x.perm[k - 1]
    perm = tuple(p - 1 if p > top else p for i, p in enumerate(x.perm, start=1) if i != k)
    return BraidInvariantDiagrammatic(n - 1, x.degree, pure, perm)


def insert(x: BraidInvariantDiagrammatic, k: int) -> BraidInvariantDiagrammatic:
    """Add an inert strand at position k, fixed by the permutation."""
    n = x.n_strands
    _check_strand(n, k, n + 1)
    up = lambda i: i + 1 if i >= k else i  # noqa: E731
    pure = relabel(x.pure, up, n + 1)
    perm = [0] * (n + 1)
    perm[k - 1] = k
    for i, p in enumerate(x.perm, start=1):
        perm[up(i) - 1] = up(p)
    return BraidInvariantDiagrammatic(n + 1, x.degree, pure, tuple(perm))


def _unzip_word(word: StrandKey, k: int) -> Iterator[StrandKey]:
    """Every endpoint on strand k goes to daughter k or k + 1; strands above k shift up."""
    choices: List[List[Tuple[int, int]]] = []
    for i, j in word:
        tails = [k, k + 1] if i == k else [i + 1 if i > k else i]
        heads = [k, k + 1] if j == k else [j + 1 if j > k else j]
        choices.append([(t, h) for t in tails for h in heads])

    def rec(pos: int, acc: Tuple[Tuple[int, int], ...]):
        if pos == len(choices):
            yield trace_normal_form(acc)
            return
        for letter in choices[pos]:
            yield from rec(pos + 1, acc + (letter,))

    yield from rec(0, ())


def unzip(x: BraidInvariantDiagrammatic, k: int) -> BraidInvariantDiagrammatic:
    """u_k: double the strand starting at k into two parallel daughters."""
    n = x.n_strands
    _check_strand(n, k)
    pure = ArrowCombination(_strands(n + 1), degree=x.degree)
    for word, c in x.pure.terms.items():
        for new in _unzip_word(word, k):
            pure._add(new, c)
    top = x.perm[k - 1]
    shift = lambda p: p + 1 if p > top else p  # noqa: E731
    perm = []
    for i, p in enumerate(x.perm, start=1):
        if i == k:
            perm += [top, top + 1]
        else:
            perm.append(shift(p))
    return BraidInvariantDiagrammatic(n + 1, x.degree, pure, tuple(perm))


def is_group_like(x: BraidInvariantDiagrammatic) -> bool:
    """Delta(Z) = Z (x) Z on words, where Delta splits a word into two subwords."""
    delta: Dict[Tuple[StrandKey, StrandKey], Fraction] = {}
    for word, c in x.pure.terms.items():
        positions = range(len(word))
        for r in range(len(word) + 1):
            for left in combinations(positions, r):
                chosen = set(left)
                pair = (
                    trace_normal_form(word[p] for p in positions if p in chosen),
                    trace_normal_form(word[p] for p in positions if p not in chosen),
                )
                delta[pair] = delta.get(pair, Fraction(0)) + c
    square: Dict[Tuple[StrandKey, StrandKey], Fraction] = {}
    for w1, c1 in x.pure.terms.items():
        for w2, c2 in x.pure.terms.items():
            if len(w1) + len(w2) <= x.degree:
                square[(w1, w2)] = square.get((w1, w2), Fraction(0)) + c1 * c2
    return {p: v for p, v in delta.items() if v} == {p: v for p, v in square.items() if v}


def equal_in_quotient(
    x: BraidInvariantDiagrammatic,
    y: BraidInvariantDiagrammatic,
    space: SpaceKind = SpaceKind.W,
    degree: Optional[int] = None,
) -> bool:
    """Same permutation, and pure parts equal in A^space(Strands(n)) through degree."""
    if x.n_strands != y.n_strands or x.perm != y.perm:
        return False
    top = min(x.degree, y.degree) if degree is None else degree
    diff = x.pure - y.pure
    sk = _strands(x.n_strands)
    return all(get_quotient(sk, space, m).contains(diff) for m in range(top + 1))
