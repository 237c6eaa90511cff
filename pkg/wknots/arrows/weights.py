# wknots/arrows/weights.py
"""
Lie-algebra weight systems for w-diagrams with values in U(I g), where
I g is g semidirect its dual. Normal form: sorted dual generators phi^i to
the left of a sorted word in the generators x_i (a PBW basis).
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, Mapping, Optional, Tuple, Union

from .diagrams import ArrowCalculusError, LineKey
from .jacobi import JacobiDiagram

logger = logging.getLogger("wknots.arrows.weights")

StructureConstants = Tuple[Tuple[Tuple[Fraction, ...], ...], ...]
PBWMonomial = Tuple[Tuple[int, ...], Tuple[int, ...]]  # (sorted phi indices, sorted x indices)


class LieAlgebraError(ArrowCalculusError):
    """Raised when structure constants do not define a Lie algebra."""


@dataclass(frozen=True)
class LieAlgebraData:
    """Structure constants b[i][j][k]: [x_i, x_j] = sum_k b[i][j][k] x_k (0-based)."""

    dim: int
    b: StructureConstants

    def __post_init__(self):
        d = self.dim
        if len(self.b) != d or any(len(r) != d or any(len(c) != d for c in r) for r in self.b):
            raise LieAlgebraError("structure constants must be dim x dim x dim")
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    if self.b[i][j][k] != -self.b[j][i][k]:
                        raise LieAlgebraError(f"bracket not antisymmetric at ({i + 1}, {j + 1})")
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    for m in range(d):
                        s = sum(
                            self.b[i][j][l] * self.b[l][k][m]
                            + self.b[j][k][l] * self.b[l][i][m]
                            + self.b[k][i][l] * self.b[l][j][m]
                            for l in range(d)
                        )
                        if s:
                            raise LieAlgebraError(
                                f"Jacobi identity fails for (x{i + 1}, x{j + 1}, x{k + 1})"
                            )

    @classmethod
    def from_brackets(cls, dim: int, brackets: Mapping[Tuple[int, int], Mapping[int, object]]) -> "LieAlgebraData":
        """Build from {(i, j): {k: c}} meaning [x_i, x_j] = sum c x_k, 1-based, i < j."""
        b = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), image in brackets.items():
            if not (1 <= i <= dim and 1 <= j <= dim) or i == j:
                raise LieAlgebraError(f"bad bracket pair ({i}, {j})")
            for k, c in image.items():
                b[i - 1][j - 1][k - 1] += Fraction(c)
                b[j - 1][i - 1][k - 1] -= Fraction(c)
        return cls(dim, tuple(tuple(tuple(c) for c in r) for r in b))


def two_dim_algebra() -> LieAlgebraData:
    """[x1, x2] = x2."""
    return LieAlgebraData.from_brackets(2, {(1, 2): {2: 1}})


def so3() -> LieAlgebraData:
    return LieAlgebraData.from_brackets(3, {(1, 2): {3: 1}, (2, 3): {1: 1}, (3, 1): {2: 1}})


def heisenberg() -> LieAlgebraData:
    return LieAlgebraData.from_brackets(3, {(1, 2): {3: 1}})


def abelian(d: int) -> LieAlgebraData:
    return LieAlgebraData.from_brackets(d, {})


def random_solvable_algebra(rng: random.Random, lo: int = -3, hi: int = 3) -> LieAlgebraData:
    """x1 acting on span(x2, x3) by a random integer matrix; x2, x3 commute."""
    a, b, c, d = (rng.randint(lo, hi) for _ in range(4))
    return LieAlgebraData.from_brackets(3, {(1, 2): {2: a, 3: b}, (1, 3): {2: c, 3: d}})


# -------------------------------
# U(I g)
# -------------------------------


class UIgElement:
    """Rational combination of PBW monomials phi^I x^J with I, J sorted."""

    __slots__ = ("g", "terms")

    def __init__(self, g: LieAlgebraData, terms: Optional[Mapping[PBWMonomial, object]] = None):
        self.g = g
        self.terms: Dict[PBWMonomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            self._add(mono, Fraction(c))

    def _add(self, mono: PBWMonomial, c: Fraction) -> None:
        if not c:
            return
        new = self.terms.get(mono, 0) + c
        if new:
            self.terms[mono] = new
        else:
            self.terms.pop(mono, None)

    @classmethod
    def one(cls, g: LieAlgebraData) -> "UIgElement":
        return cls(g, {((), ()): 1})

    @classmethod
    def phi(cls, g: LieAlgebraData, i: int) -> "UIgElement":
        return cls(g, {((i,), ()): 1})

    @classmethod
    def x(cls, g: LieAlgebraData, i: int) -> "UIgElement":
        return cls(g, {((), (i,)): 1})

    def __add__(self, other: "UIgElement") -> "UIgElement":
        out = UIgElement(self.g, self.terms)
        for k, v in other.terms.items():
            out._add(k, v)
        return out

    def __sub__(self, other: "UIgElement") -> "UIgElement":
        return self + other.scale(-1)

    def scale(self, c) -> "UIgElement":
        return UIgElement(self.g, {k: v * Fraction(c) for k, v in self.terms.items()})

    def __mul__(self, other: "UIgElement") -> "UIgElement":
        out = UIgElement(self.g)
        for (pa, xa), ca in self.terms.items():
            for (pb, xb), cb in other.terms.items():
                for (p_mid, x_mid), c in _move_x_past_phi(self.g, xa, pb).items():
                    phis = tuple(sorted(pa + p_mid))
                    for xs, c2 in _sort_x(self.g, x_mid + xb).items():
                        out._add((phis, xs), ca * cb * c * c2)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, UIgElement):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def to_dict(self) -> Dict[str, str]:
        return {format_pbw(k): str(v) for k, v in sorted(self.terms.items())}

    def __repr__(self) -> str:
        return f"UIgElement({self.to_dict()})"


def format_pbw(mono: PBWMonomial) -> str:
    phis, xs = mono
    parts = [f"phi{i + 1}" for i in phis] + [f"x{i + 1}" for i in xs]
    return " ".join(parts) or "1"


def _coadjoint(g: LieAlgebraData, j: int, i: int) -> Dict[int, Fraction]:
    """[x_j, phi^i] = -sum_k b[j][k][i] phi^k."""
    return {k: -g.b[j][k][i] for k in range(g.dim) if g.b[j][k][i]}


def _x_times_phis(g: LieAlgebraData, j: int, phis: Tuple[int, ...]) -> Dict[Tuple[Tuple[int, ...], bool], Fraction]:
    """x_j * phi^I = phi^I x_j + sum over factors of the coadjoint action."""
    out: Dict[Tuple[Tuple[int, ...], bool], Fraction] = {(phis, True): Fraction(1)}
    for pos, i in enumerate(phis):
        rest = phis[:pos] + phis[pos + 1:]
        for k, c in _coadjoint(g, j, i).items():
            key = (tuple(sorted(rest + (k,))), False)
            out[key] = out.get(key, 0) + c
    return out


def _move_x_past_phi(g: LieAlgebraData, xs: Tuple[int, ...], phis: Tuple[int, ...]) -> Dict[PBWMonomial, Fraction]:
    """x^J phi^I as a combination of phi^I' x^J' (x words not yet sorted)."""
    if not xs:
        return {(phis, ()): Fraction(1)}
    if not phis:
        return {((), xs): Fraction(1)}
    out: Dict[PBWMonomial, Fraction] = {}
    *prefix, last = xs
    for (new_phis, kept), c in _x_times_phis(g, last, phis).items():
        tail = (last,) if kept else ()
        for (p2, x2), c2 in _move_x_past_phi(g, tuple(prefix), new_phis).items():
            key = (p2, x2 + tail)
            out[key] = out.get(key, 0) + c * c2
    return {k: v for k, v in out.items() if v}


def _sort_x(g: LieAlgebraData, xs: Tuple[int, ...]) -> Dict[Tuple[int, ...], Fraction]:
    return _sort_x_cached(g, xs)


@lru_cache(maxsize=100_000)
def _sort_x_cached(g: LieAlgebraData, xs: Tuple[int, ...]) -> Dict[Tuple[int, ...], Fraction]:
    """PBW-sort a word: x_j x_i = x_i x_j + [x_j, x_i] for j > i."""
    for p in range(len(xs) - 1):
        j, i = xs[p], xs[p + 1]
        if j > i:
            out: Dict[Tuple[int, ...], Fraction] = {}
            for w, c in _sort_x_cached(g, xs[:p] + (i, j) + xs[p + 2:]).items():
                out[w] = out.get(w, 0) + c
            for k in range(g.dim):
                bk = g.b[j][i][k]
                if bk:
                    for w, c in _sort_x_cached(g, xs[:p] + (k,) + xs[p + 2:]).items():
                        out[w] = out.get(w, 0) + bk * c
            return {w: c for w, c in out.items() if c}
    return {xs: Fraction(1)}


# -------------------------------
# Weight system
# -------------------------------


def _as_jacobi(d: Union[LineKey, JacobiDiagram]) -> JacobiDiagram:
    if isinstance(d, JacobiDiagram):
        return d
    return JacobiDiagram(tuple((abs(t), "T" if t > 0 else "H") for t in d))


def weight_system(g: LieAlgebraData, d: Union[LineKey, JacobiDiagram]) -> UIgElement:
    """
    Contract one index per edge: a tail on the line contributes phi^i, a head
    x_i and an internal vertex b[left][right][out]; skeleton factors are
    multiplied in line order.
    """
    j = _as_jacobi(d)
    edges = sorted({e for e, _ in j.skeleton} | {e for v in j.vertices for e in v})
    pos = {e: n for n, e in enumerate(edges)}
    words: Dict[Tuple[Tuple[str, int], ...], Fraction] = {}
    for idx in product(range(g.dim), repeat=len(edges)):
        weight = Fraction(1)
        for left, right, out in j.vertices:
            weight *= g.b[idx[pos[left]]][idx[pos[right]]][idx[pos[out]]]
            if not weight:
                break
        if not weight:
            continue
        w = tuple((role, idx[pos[e]]) for e, role in j.skeleton)
        words[w] = words.get(w, 0) + weight
    total = UIgElement(g)
    for w, weight in words.items():
        elem = UIgElement.one(g)
        for role, i in w:
            elem = elem * (UIgElement.phi(g, i) if role == "T" else UIgElement.x(g, i))
        total = total + elem.scale(weight)
    return total


def weight_of_combination(g: LieAlgebraData, terms: Mapping[LineKey, object]) -> UIgElement:
    total = UIgElement(g)
    for key, c in terms.items():
        total = total + weight_system(g, key).scale(c)
    return total


def phi_power(g: LieAlgebraData, i: int, k: int) -> UIgElement:
    return UIgElement(g, {((i,) * k, ()): 1})

