# wknots/at/semidirect.py
"""The Lie algebra tr_n semidirect (a_n + tder_n), its splittings, and j."""

from __future__ import annotations

import logging
from fractions import Fraction
from math import factorial
from typing import Dict, Optional

from .cyclic import TrElement
from .lie import bch_in
from .tder import TDerElement, div, tder_act_tr, tder_bracket
from .words import ATSpaceError, TruncationMismatchError

logger = logging.getLogger("wknots.at.semidirect")

J_METHODS = ("series", "semidirect")


class SemidirectElement:
    """(w, D) with [(w, D), (w', D')] = (D.w' - D'.w, [D, D'])."""

    __slots__ = ("w", "D")

    def __init__(self, w: TrElement, D: TDerElement):
        if w.n != D.n:
            raise TruncationMismatchError(f"tr_{w.n} paired with tder_{D.n}")
        d = min(w.degree, D.degree)
        self.w = w.truncate(d)
        self.D = D.truncate(d)

    @classmethod
    def zero(cls, n: int, degree: int) -> "SemidirectElement":
        return cls(TrElement.zero(n, degree), TDerElement.zero(n, degree))

    @property
    def n(self) -> int:
        return self.D.n

    @property
    def degree(self) -> int:
        return self.D.degree

    def __bool__(self) -> bool:
        return bool(self.w) or bool(self.D)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SemidirectElement):
            return NotImplemented
        return self.w == other.w and self.D == other.D

    def __add__(self, other: "SemidirectElement") -> "SemidirectElement":
        return SemidirectElement(self.w + other.w, self.D + other.D)

    def __neg__(self) -> "SemidirectElement":
        return self.scale(-1)

    def __sub__(self, other: "SemidirectElement") -> "SemidirectElement":
        return self + (-other)

    def scale(self, c) -> "SemidirectElement":
        return SemidirectElement(self.w.scale(c), self.D.scale(c))

    def truncate(self, degree: int) -> "SemidirectElement":
        return SemidirectElement(self.w.truncate(degree), self.D.truncate(degree))

    def graded_part(self, k: int) -> "SemidirectElement":
        return SemidirectElement(self.w.graded_part(k), self.D.graded_part(k))

    def to_dict(self) -> Dict[str, object]:
        return {"tr": self.w.to_dict(), "tder": self.D.to_dict()}

    def __repr__(self) -> str:
        return f"SemidirectElement({self.w!r}, {self.D!r})"


def semidirect_bracket(p: SemidirectElement, q: SemidirectElement) -> SemidirectElement:
    w = tder_act_tr(p.D, q.w) - tder_act_tr(q.D, p.w)
    return SemidirectElement(w, tder_bracket(p.D, q.D))


def u_split(D: TDerElement) -> SemidirectElement:
    """Head above all tails: (0, D)."""
    return SemidirectElement(TrElement.zero(D.n, D.degree), D)


def l_split(D: TDerElement) -> SemidirectElement:
    """Head below all tails: (div D, D)."""
    return SemidirectElement(div(D), D)


def semidirect_bch(p: SemidirectElement, q: SemidirectElement, degree: Optional[int] = None) -> SemidirectElement:
    d = min(p.degree, q.degree) if degree is None else degree
    return bch_in(p.truncate(d), q.truncate(d), d, semidirect_bracket, SemidirectElement.zero(p.n, d))


def tder_bch(D: TDerElement, E: TDerElement, degree: Optional[int] = None) -> TDerElement:
    """log(e^D e^E) in tder_n."""
    d = min(D.degree, E.degree) if degree is None else degree
    return bch_in(D.truncate(d), E.truncate(d), d, tder_bracket, TDerElement.zero(D.n, d))


def _j_series(D: TDerElement) -> TrElement:
    # sum_k D^k(div D) / (k+1)!
    term = div(D)
    total = term
    for k in range(1, D.degree + 1):
        term = tder_act_tr(D, term)
        if not term:
            break
        total = total + term.scale(Fraction(1, factorial(k + 1)))
    return total


def _j_semidirect(D: TDerElement) -> TrElement:
    # tr part of log(e^{l(D)} e^{-u(D)})
    out = semidirect_bch(l_split(D), u_split(-D))
    if out.D:
        raise ATSpaceError("tder part of l(D) * u(-D) should vanish")
    return out.w


def j_exp(D: TDerElement, degree: Optional[int] = None, method: str = "series") -> TrElement:
    """j(e^D), the tr-valued cocycle with derivative div at the identity."""
    if degree is not None:
        D = D.truncate(degree)
    if not D:
        return TrElement.zero(D.n, D.degree)
    if method == "series":
        return _j_series(D)
    if method == "semidirect":
        return _j_semidirect(D)
    raise ATSpaceError(f"unknown j method {method!r}; expected one of {J_METHODS}")
