# wknots/alexander/matrices.py
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from wknots.knots.gauss import GaussDiagram

from .laurent import LaurentPoly, bareiss_det
from .series import PowerSeries, PowerSeriesMatrix

logger = logging.getLogger("wknots.alexander")


@dataclass(frozen=True)
class CrossingMatrices:
    """
    T[i][j] = 1 when the under-visit of crossing j lies strictly inside the
    span of crossing i; d[i] = +1 when the over-visit of i comes first.
    """

    T: Tuple[Tuple[int, ...], ...]
    s: Tuple[int, ...]
    d: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.s)

    @property
    def S(self) -> Tuple[int, ...]:
        """Diagonal of S."""
        return tuple(si * di for si, di in zip(self.s, self.d))


def crossing_matrices(k: GaussDiagram) -> CrossingMatrices:
    pos = k.positions()
    n = k.n_crossings
    signs = k.signs()
    d = []
    spans = []
    for i in range(1, n + 1):
        over, under = pos[i]
        d.append(1 if over < under else -1)
        spans.append((min(over, under), max(over, under)))
    T = tuple(
        tuple(int(lo < pos[j][1] < hi) for j in range(1, n + 1))
        for lo, hi in spans
    )
    return CrossingMatrices(T, tuple(signs), tuple(d))


def alexander_from_matrix(T: Sequence[Sequence[int]], S: Sequence[int]) -> LaurentPoly:
    """det(I + T(I - X^-S)) for a 0/1 matrix T and diagonal S."""
    n = len(S)
    rows: List[List[LaurentPoly]] = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = LaurentPoly({0: int(i == j)})
            if T[i][j]:
                entry = entry + LaurentPoly({0: 1, -S[j]: -1})
            row.append(entry)
        rows.append(row)
    return bareiss_det(rows)


def alexander_poly(k: GaussDiagram) -> LaurentPoly:
    cm = crossing_matrices(k)
    poly = alexander_from_matrix(cm.T, cm.S)
    logger.debug("Alexander polynomial of a %d-crossing diagram: %s", k.n_crossings, poly)
    return poly


@dataclass
class AlexanderSeries:
    degree: int
    value: PowerSeries  # A(e^x)
    log: PowerSeries  # log A(e^x)
    dlog: PowerSeries  # d/dx log A(e^x)
    B: PowerSeriesMatrix  # T(exp(-xS) - I)
    euler_trace: PowerSeries  # tr((I - B)^-1 T S exp(-xS))


def alexander_series(k: GaussDiagram, n: int) -> AlexanderSeries:
    """Series forms of A(e^x) truncated at x^n, plus the matrix data of the Euler identity."""
    cm = crossing_matrices(k)
    value = alexander_poly(k).substitute_exp(n)
    log = value.log()
    size = cm.n
    exp_s = [PowerSeries.exp_linear(-si, n) for si in cm.S]
    T = PowerSeriesMatrix.constant(cm.T, n)
    B = T * PowerSeriesMatrix.diagonal([e - PowerSeries.one(n) for e in exp_s], n)
    TS_exp = T * PowerSeriesMatrix.diagonal([e.scale(si) for e, si in zip(exp_s, cm.S)], n)
    euler_trace = (B.neumann_inverse() * TS_exp).trace() if size else PowerSeries.zero(n)
    return AlexanderSeries(
        degree=n,
        value=value,
        log=log,
        dlog=log.derivative(),
        B=B,
        euler_trace=euler_trace,
    )
