# wknots/at/tder.py
"""
a_n + tder_n as raw tuples (a_1..a_n) of Lie elements; D acts on lie_n by the
derivation D(x_i) = [x_i, a_i]. The tuple is not reduced modulo a_i -> a_i + c x_i.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict, Mapping, Optional, Sequence, Tuple

from .cyclic import TrElement
from .lie import LieElement, from_assoc, lie_bracket
from .words import AssocElement, TruncationMismatchError, Word


class TDerElement:
    __slots__ = ("n", "degree", "components")

    def __init__(self, n: int, degree: int, components: Optional[Sequence[Optional[LieElement]]] = None):
        self.n = n
        self.degree = degree
        comps = list(components or [])
        if len(comps) > n:
            raise TruncationMismatchError(f"{len(comps)} components for {n} generators")
        comps += [None] * (n - len(comps))
        out = []
        for a in comps:
            if a is None:
                a = LieElement.zero(n, degree)
            elif a.n != n:
                raise TruncationMismatchError(f"component over {a.n} generators in tder_{n}")
            out.append(a.with_degree(degree))
        self.components: Tuple[LieElement, ...] = tuple(out)

    @classmethod
    def zero(cls, n: int, degree: int) -> "TDerElement":
        return cls(n, degree)

    @classmethod
    def single(cls, n: int, degree: int, i: int, a: LieElement) -> "TDerElement":
        """The derivation with a_i = a and every other component zero."""
        comps: list = [None] * n
        comps[i - 1] = a
        return cls(n, degree, comps)

    def __getitem__(self, i: int) -> LieElement:
        """1-based component."""
        return self.components[i - 1]

    def __bool__(self) -> bool:
        return any(self.components)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TDerElement):
            return NotImplemented
        return self.n == other.n and all(a == b for a, b in zip(self.components, other.components))

    def _shape(self, other: "TDerElement") -> Tuple[int, int]:
        if self.n != other.n:
            raise TruncationMismatchError(f"tder_{self.n} against tder_{other.n}")
        return self.n, min(self.degree, other.degree)

    def __add__(self, other: "TDerElement") -> "TDerElement":
        n, d = self._shape(other)
        return TDerElement(n, d, [a.truncate(d) + b.truncate(d) for a, b in zip(self.components, other.components)])

    def __neg__(self) -> "TDerElement":
        return self.scale(-1)

    def __sub__(self, other: "TDerElement") -> "TDerElement":
        return self + (-other)

    def scale(self, c) -> "TDerElement":
        return TDerElement(self.n, self.degree, [a.scale(c) for a in self.components])

    def __mul__(self, c) -> "TDerElement":
        return self.scale(c)

    __rmul__ = __mul__

    def truncate(self, degree: int) -> "TDerElement":
        return TDerElement(self.n, min(degree, self.degree), self.components)

    def with_degree(self, degree: int) -> "TDerElement":
        return TDerElement(self.n, degree, self.components)

    def graded_part(self, k: int) -> "TDerElement":
        return TDerElement(self.n, self.degree, [a.graded_part(k) for a in self.components])

    def min_degree(self) -> Optional[int]:
        return min((d for d in (a.min_degree() for a in self.components) if d is not None), default=None)

    def relabel_strands(self, perm: Mapping[int, int]) -> "TDerElement":
        """Rename strand i to perm[i] in every component and move component i to slot perm[i]."""
        comps: list = [None] * self.n
        for i, a in enumerate(self.components, start=1):
            comps[perm.get(i, i) - 1] = a.relabel(perm)
        return TDerElement(self.n, self.degree, comps)

    def to_dict(self) -> Dict[str, Dict[str, str]]:
        return {f"a{i}": a.to_dict() for i, a in enumerate(self.components, start=1) if a}

    def __repr__(self) -> str:
        return f"TDerElement(n={self.n}, N={self.degree}: {list(self.components)})"


def swap_strands(D: TDerElement) -> TDerElement:
    """D^21 for n = 2."""
    if D.n != 2:
        raise TruncationMismatchError("strand swap is defined on tder_2")
    return D.relabel_strands({1: 2, 2: 1})


# -------------------------------
# Actions
# -------------------------------


def _letter_images(D: TDerElement, degree: int) -> Dict[int, AssocElement]:
    images = {}
    for i, a in enumerate(D.components, start=1):
        if not a:
            continue
        xi = AssocElement.generator(D.n, degree, i)
        images[i] = xi.commutator(AssocElement(D.n, degree, a.to_assoc().terms))
    return images


def apply_assoc(D: TDerElement, A: AssocElement) -> AssocElement:
    """Extend D to Ass_n by the Leibniz rule; the result keeps A's truncation."""
    if D.n != A.n:
        raise TruncationMismatchError(f"tder_{D.n} acting on Ass_{A.n}")
    d = A.degree
    images = _letter_images(D, d)
    out: Dict[Word, Fraction] = {}
    for w, c in A.terms.items():
        for p, g in enumerate(w):
            img = images.get(g)
            if img is None:
                continue
            prefix, suffix = w[:p], w[p + 1:]
            room = d - len(w) + 1
            for u, k in img.terms.items():
                if len(u) > room:
                    continue
                new = prefix + u + suffix
                out[new] = out.get(new, Fraction(0)) + c * k
    return AssocElement(A.n, d, out)


def tder_apply(D: TDerElement, a: LieElement) -> LieElement:
    return from_assoc(apply_assoc(D, a.to_assoc()))


def tder_bracket(D: TDerElement, E: TDerElement) -> TDerElement:
    """[D, E]_i = D e_i - E d_i + [d_i, e_i]."""
    n, deg = D._shape(E)
    lo_d, lo_e = D.min_degree(), E.min_degree()
    if lo_d is None or lo_e is None or lo_d + lo_e > deg:
        return TDerElement.zero(n, deg)
    comps = []
    for a, b in zip(D.components, E.components):
        a, b = a.truncate(deg), b.truncate(deg)
        comps.append(tder_apply(D, b) - tder_apply(E, a) + lie_bracket(a, b))
    return TDerElement(n, deg, comps)


def beta(D: TDerElement) -> LieElement:
    """D(x_1 + ... + x_n) = sum_i [x_i, a_i], with truncation one above D's."""
    d = D.degree + 1
    total = LieElement.zero(D.n, d)
    for i, a in enumerate(D.components, start=1):
        if a:
            total = total + lie_bracket(LieElement.generator(D.n, d, i), a.with_degree(d))
    return total


def tder_act_tr(D: TDerElement, w: TrElement) -> TrElement:
    if D.n != w.n:
        raise TruncationMismatchError(f"tder_{D.n} acting on tr_{w.n}")
    return TrElement.trace(apply_assoc(D, AssocElement(w.n, w.degree, w.terms)))


def div(D: TDerElement) -> TrElement:
    """sum_k tr(x_k * d_k a_k): the words of a_k that end in x_k, traced."""
    out: Dict[Word, Fraction] = {}
    for k, a in enumerate(D.components, start=1):
        for w, c in a.to_assoc().terms.items():
            if w and w[-1] == k:
                out[w] = out.get(w, Fraction(0)) + c
    return TrElement(D.n, D.degree, out)


def exp_derivation_action(D: TDerElement, a: LieElement) -> LieElement:
    """e^D(a) = sum_k D^k(a) / k!, truncated at a's degree."""
    total, term = a, a
    for k in range(1, a.degree + 1):
        term = tder_apply(D, term)
        if not term:
            break
        total = total + term.scale(Fraction(1, factorial(k)))
    return total


def exp_act_tr(D: TDerElement, w: TrElement) -> TrElement:
    total, term = w, w
    for k in range(1, w.degree + 1):
        term = tder_act_tr(D, term)
        if not term:
            break
        total = total + term.scale(Fraction(1, factorial(k)))
    return total
