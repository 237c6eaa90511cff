# wknots/expansions/alexander_check.py
"""
Z against the Alexander polynomial, on wheels coordinates:

  (a) Z = exp(sl * D_A) * exp(-sum_k c_k w_k)  with  sum_k c_k x^k = log A(e^x)
  (b) modulo D_A = 0 and w_k w_l = w_{k+l}, Z becomes 1 / A(e^x)
  (c) E Z = Z * (sl * D_A - sum_k f_k w_{k+1}) with sum_k f_k x^k = tr((I - B)^-1 T S e^{-xS})

c_1 is always zero: A(1) = 1 and A'(1) = tr(TS), and T has a zero diagonal.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional

from wknots.alexander import PowerSeries, alexander_poly, alexander_series
from wknots.arrows import WheelsPolynomial
from wknots.arrows.wheels import format_monomial
from wknots.knots import GaussDiagram, self_linking

from .knot_z import ExpansionError, knot_z_wheels

logger = logging.getLogger("wknots.expansions.alexander")


@dataclass
class PartResult:
    name: str
    passed: bool
    first_failing_degree: Optional[int] = None
    expected: Dict[str, str] = field(default_factory=dict)
    actual: Dict[str, str] = field(default_factory=dict)


@dataclass
class AlexanderCheckReport:
    degree: int
    polynomial: str
    self_linking: int
    parts: List[PartResult]

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.parts)

    def part(self, name: str) -> PartResult:
        return next(p for p in self.parts if p.name == name)


# -------------------------------
# Wheels-polynomial helpers
# -------------------------------


def wheels_exp(p: WheelsPolynomial, degree: int) -> WheelsPolynomial:
    if p.coefficient(()):
        raise ExpansionError("exp needs a polynomial without constant term")
    total = WheelsPolynomial({(): 1}, degree)
    power = WheelsPolynomial({(): 1}, degree)
    for k in range(1, degree + 1):
        power = power * p
        if not power.terms:
            break
        total = total + power.scale(Fraction(1, factorial(k)))
    return total


def predicted_wheels(sl: int, log_a: PowerSeries, degree: int) -> WheelsPolynomial:
    """exp(sl * D_A) * exp(-sum_{k>=2} c_k w_k)."""
    exponent = {(1,): sl}
    for k in range(2, degree + 1):
        if log_a[k]:
            exponent[(k,)] = -log_a[k]
    return wheels_exp(WheelsPolynomial(exponent, degree), degree)


def reduce_wheels(p: WheelsPolynomial, degree: int) -> PowerSeries:
    """D_A -> 0 and w_{k1} ... w_{kr} -> x^{k1 + ... + kr}."""
    coeffs = [Fraction(0)] * (degree + 1)
    for mono, c in p.terms.items():
        if 1 in mono:
            continue
        d = sum(mono)
        if d <= degree:
            coeffs[d] += c
    return PowerSeries(coeffs, degree)


def euler_operator(p: WheelsPolynomial) -> WheelsPolynomial:
    return WheelsPolynomial({m: c * sum(m) for m, c in p.terms.items()}, p.degree)


def _wheels_part(p: WheelsPolynomial, d: int) -> Dict[str, str]:
    return {format_monomial(m): str(c) for m, c in sorted(p.terms.items()) if sum(m) == d}


def _series_part(s: PowerSeries, d: int) -> Dict[str, str]:
    return {f"x^{d}": str(s[d])} if s[d] else {}


def _compare_wheels(name: str, expected: WheelsPolynomial, actual: WheelsPolynomial, degree: int) -> PartResult:
    for d in range(degree + 1):
        e, a = _wheels_part(expected, d), _wheels_part(actual, d)
        if e != a:
            return PartResult(name, False, d, e, a)
    return PartResult(name, True)


def _compare_series(name: str, expected: PowerSeries, actual: PowerSeries, degree: int) -> PartResult:
    for d in range(degree + 1):
        if expected[d] != actual[d]:
            return PartResult(name, False, d, _series_part(expected, d), _series_part(actual, d))
    return PartResult(name, True)


def check_alexander_theorem(k: GaussDiagram, degree: int, euler: bool = False) -> AlexanderCheckReport:
    sl = self_linking(k)
    series = alexander_series(k, degree)
    z = knot_z_wheels(k, degree)

    parts = [_compare_wheels("wheels", predicted_wheels(sl, series.log, degree), z, degree)]

    expected_reduced = series.value.inverse()
    parts.append(_compare_series("reduced", expected_reduced, reduce_wheels(z, degree), degree))

    if euler:
        factor = {(1,): sl}
        for j in range(1, degree):
            if series.euler_trace[j]:
                factor[(j + 1,)] = -series.euler_trace[j]
        rhs = z * WheelsPolynomial(factor, degree)
        parts.append(_compare_wheels("euler", rhs, euler_operator(z), degree))

    report = AlexanderCheckReport(degree, str(alexander_poly(k)), sl, parts)
    for p in parts:
        if not p.passed:
            logger.warning("Alexander check part %s fails at degree %d", p.name, p.first_failing_degree)
    return report
