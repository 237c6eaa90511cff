# wknots/kv/solver.py
"""
Degree-by-degree solution of the Kashiwara-Vergne equations in AT form:

    F(x + y) = log(e^x e^y)   with F = exp(G), G in tder_2
    j(F) = d~(a)               for some a in tr_1

The outputs are D = G^21, b = -j(F)^21 / 2 and c = -a / 2.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Optional, Tuple

from wknots.alexander.series import PowerSeries
from wknots.at import (
    LieElement,
    TDerElement,
    TrElement,
    beta,
    bch,
    delta_tilde,
    div,
    exp_derivation_action,
    j_exp,
    lyndon_basis,
    swap_strands,
)
from wknots.at.lie import bracketing_string
from wknots.config import settings
from wknots.errors import WKnotsError
from wknots.linalg import solve_linear_system, sparsest_point

logger = logging.getLogger("wknots.kv")

Unknown = Tuple[int, Tuple[int, ...]]  # (component, Lyndon word)

SWAP = {1: 2, 2: 1}


class KVError(WKnotsError):
    """Base exception for the KV solver."""


class KVInfeasibleError(KVError):
    """A degree at which no choice in the allowed directions solves the equations."""

    def __init__(self, degree: int, obstruction: Dict[str, str], equation: str):
        self.degree = degree
        self.obstruction = obstruction
        self.equation = equation
        super().__init__(f"{equation} has no solution at degree {degree}; obstruction {obstruction}")


@dataclass(frozen=True)
class KVSolution:
    degree: int
    D: TDerElement
    b: TrElement
    c: TrElement
    # diagnostics, not part of the serialized solution
    a: Optional[TrElement] = field(default=None, compare=False)


@dataclass
class KV1Result:
    degree: int
    G: TDerElement
    kernels: Dict[int, List[TDerElement]]


def check_kv_degree(n: int) -> None:
    if n < 0:
        raise KVError(f"degree must be >= 0, got {n}")
    if n > settings.max_kv_degree:
        raise KVError(f"degree {n} exceeds max_kv_degree={settings.max_kv_degree}")


# -------------------------------
# Hard equation, one degree at a time
# -------------------------------


@lru_cache(maxsize=None)
def _unknowns(d: int) -> Tuple[Unknown, ...]:
    return tuple((i, w) for i in (1, 2) for w in lyndon_basis(2, d))


def _unknown_tder(u: Unknown, degree: int) -> TDerElement:
    i, w = u
    return TDerElement.single(2, degree, i, LieElement(2, degree, {w: 1}))


def _combine(vec: List[Fraction], d: int, degree: int) -> TDerElement:
    comps = [{}, {}]
    for v, (i, w) in zip(vec, _unknowns(d)):
        if v:
            comps[i - 1][w] = v
    return TDerElement(2, degree, [LieElement(2, degree, c) for c in comps])


@lru_cache(maxsize=None)
def _beta_columns(d: int) -> Tuple[Dict[Tuple[int, ...], Fraction], ...]:
    return tuple(beta(_unknown_tder(u, d)).coeffs for u in _unknowns(d))


def kernel_dimension(d: int) -> int:
    """dim ker(beta) in degree d of a_2 + tder_2."""
    _, kernel = _solve_beta(d, {})
    return len(kernel)


def _solve_beta(d: int, target: Dict[Tuple[int, ...], Fraction]):
    cols = _beta_columns(d)
    rows = lyndon_basis(2, d + 1)
    equations = [{j: col[w] for j, col in enumerate(cols) if w in col} for w in rows]
    rhs = [target.get(w, Fraction(0)) for w in rows]
    return solve_linear_system(equations, rhs, len(cols))


def _x_plus_y(degree: int) -> LieElement:
    return LieElement(2, degree, {(1,): 1, (2,): 1})


def _hard_target(G: TDerElement, d: int) -> Dict[Tuple[int, ...], Fraction]:
    """bch_{d+1} minus the degree d+1 part of exp(G)(x + y) for G of degree < d."""
    top = d + 1
    z = bch(LieElement.generator(2, top, 1), LieElement.generator(2, top, 2))
    current = exp_derivation_action(G, _x_plus_y(top))
    return (z - current).graded_part(top).coeffs


def _solve_hard_degree(G: TDerElement, d: int) -> Tuple[List[Fraction], List[List[Fraction]]]:
    """
    Canonical solution of the degree-d hard equation in coordinates over
    _unknowns(d): the fewest nonzero Lyndon coefficients, ties broken
    lexicographically. Also returns a kernel basis.
    """
    target = _hard_target(G, d)
    basic, kernel = _solve_beta(d, target)
    if basic is None:
        obstruction = {bracketing_string(w): str(c) for w, c in target.items()}
        raise KVInfeasibleError(d, obstruction, "F(x+y) = log(e^x e^y)")
    canonical, _ = sparsest_point(basic, kernel)
    return canonical, kernel


def solve_kv1(n: int) -> KV1Result:
    """G in tder_2 with exp(G)(x + y) = bch(x, y) through degree n + 1."""
    check_kv_degree(n)
    G = TDerElement.zero(2, n)
    kernels: Dict[int, List[TDerElement]] = {}
    for d in range(1, n + 1):
        vec, kernel = _solve_hard_degree(G, d)
        G = G + _combine(vec, d, n)
        kernels[d] = [_combine(k, d, n) for k in kernel]
        logger.debug("Hard equation degree %d: kernel dimension %d", d, len(kernel))
    return KV1Result(degree=n, G=G, kernels=kernels)


# -------------------------------
# Full system
# -------------------------------


@lru_cache(maxsize=None)
def _delta_powers(n: int) -> Tuple[TrElement, ...]:
    """d~(tr x^k) for k = 1..n, truncated at n."""
    return tuple(delta_tilde(TrElement.power(1, n, 1, k), n) for k in range(1, n + 1))


def _tr_rows(parts: List[TrElement]) -> List[Tuple[int, ...]]:
    keys = set()
    for p in parts:
        keys.update(p.terms)
    return sorted(keys, key=lambda w: (len(w), w))


def _shift(vec: List[Fraction], kernel: List[List[Fraction]], t: List[Fraction]) -> List[Fraction]:
    return [v + sum(ti * k[c] for ti, k in zip(t, kernel)) for c, v in enumerate(vec)]


def solve_kv_full(n: int) -> KVSolution:
    """
    Greedy degree-by-degree solve: at degree d the kernel directions of the
    hard equation and the coefficient a_d are chosen jointly so that
    j(F)_d = d~(a)_d. Among the feasible G_d the sparsest one is kept.
    Earlier degrees are never revisited.
    """
    check_kv_degree(n)
    if n < 1:
        raise KVError("the full system needs degree >= 1")
    deltas = _delta_powers(n)
    a: Dict[int, Fraction] = {}
    G = TDerElement.zero(2, n)
    for d in range(1, n + 1):
        vec, kernel = _solve_hard_degree(G, d)
        j_d = j_exp(G + _combine(vec, d, n), d).graded_part(d)
        lower = TrElement.zero(2, n)
        for k, ak in a.items():
            lower = lower + deltas[k - 1].graded_part(d).scale(ak)
        rhs_el = lower - j_d

        cols = [div(_combine(K, d, n)).graded_part(d) for K in kernel] + [-deltas[d - 1].graded_part(d)]
        rows = _tr_rows(cols + [rhs_el])
        equations = [{j: col.terms[w] for j, col in enumerate(cols) if w in col.terms} for w in rows]
        rhs = [rhs_el.terms.get(w, Fraction(0)) for w in rows]
        sol, free = solve_linear_system(equations, rhs, len(cols))
        if sol is None:
            raise KVInfeasibleError(d, rhs_el.to_dict(), "j(F) in the image of d~")

        # moves that only change a_d leave G_d alone
        directions, a_moves = [], []
        for f in free:
            move = _shift([Fraction(0)] * len(vec), kernel, f[:-1])
            if any(move):
                directions.append(move)
                a_moves.append(f[-1])
        best, s = sparsest_point(_shift(vec, kernel, sol[:-1]), directions)
        G = G + _combine(best, d, n)
        a[d] = sol[-1] + sum(si * m for si, m in zip(s, a_moves))
        logger.debug("Degree %d: a_%d = %s, %d feasible directions", d, d, a[d], len(directions))

    jF = j_exp(G, n)
    a_el = TrElement(1, n, {(1,) * k: v for k, v in a.items()})
    solution = KVSolution(
        degree=n,
        D=swap_strands(G),
        b=jF.relabel(SWAP).scale(Fraction(-1, 2)),
        c=a_el.scale(Fraction(-1, 2)),
        a=a_el,
    )
    logger.info("Solved the KV equations through degree %d", n)
    return solution


def duflo_even_part(n: int) -> Dict[int, Fraction]:
    """Even coefficients of 1/2 * log(sinh(x/2) / (x/2)) through x^n."""
    # sinh(t)/t = sum t^(2k) / (2k+1)!, t = x/2
    sinhc = PowerSeries(
        [Fraction(1, 2 ** k) / factorial(k + 1) if k % 2 == 0 else 0 for k in range(n + 1)],
        n,
    )
    series = sinhc.log().scale(Fraction(1, 2))
    return {k: series[k] for k in range(2, n + 1, 2)}
