# wknots/alexander/series.py
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import List, Sequence

from wknots.errors import WKnotsError


class SeriesError(WKnotsError):
    """Raised for ill-defined series operations (log of a series without constant 1, ...)."""


class PowerSeries:
    """Rational power series in x truncated after x^degree."""

    __slots__ = ("coeffs", "degree")

    def __init__(self, coeffs: Sequence[object], degree: int):
        self.degree = degree
        cs = [Fraction(c) for c in list(coeffs)[: degree + 1]]
        self.coeffs: List[Fraction] = cs + [Fraction(0)] * (degree + 1 - len(cs))

    @classmethod
    def zero(cls, degree: int) -> "PowerSeries":
        return cls([], degree)

    @classmethod
    def one(cls, degree: int) -> "PowerSeries":
        return cls([1], degree)

    @classmethod
    def exp_linear(cls, a: int, degree: int) -> "PowerSeries":
        """e^(a x)"""
        return cls([Fraction(a) ** k / factorial(k) for k in range(degree + 1)], degree)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k <= self.degree else Fraction(0)

    def _deg(self, other: "PowerSeries") -> int:
        return min(self.degree, other.degree)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        d = self._deg(other)
        return PowerSeries([self[k] + other[k] for k in range(d + 1)], d)

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        d = self._deg(other)
        return PowerSeries([self[k] - other[k] for k in range(d + 1)], d)

    def __neg__(self) -> "PowerSeries":
        return self.scale(-1)

    def scale(self, c) -> "PowerSeries":
        c = Fraction(c)
        return PowerSeries([v * c for v in self.coeffs], self.degree)

    def __mul__(self, other) -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return self.scale(other)
        d = self._deg(other)
        out = [Fraction(0)] * (d + 1)
        for i in range(d + 1):
            a = self[i]
            if not a:
                continue
            for j in range(d + 1 - i):
                out[i + j] += a * other[j]
        return PowerSeries(out, d)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        d = self._deg(other)
        return all(self[k] == other[k] for k in range(d + 1))

    def truncate(self, degree: int) -> "PowerSeries":
        return PowerSeries(self.coeffs, min(degree, self.degree))

    def derivative(self) -> "PowerSeries":
        """Drops one order of precision."""
        return PowerSeries([k * self[k] for k in range(1, self.degree + 1)], max(self.degree - 1, 0))

    def shift_up(self) -> "PowerSeries":
        """x * f, keeping the truncation degree."""
        return PowerSeries([0] + self.coeffs[:-1], self.degree)

    def inverse(self) -> "PowerSeries":
        if not self[0]:
            raise SeriesError("series with zero constant term is not invertible")
        out = [Fraction(0)] * (self.degree + 1)
        out[0] = 1 / self[0]
        for n in range(1, self.degree + 1):
            out[n] = -sum((self[k] * out[n - k] for k in range(1, n + 1)), Fraction(0)) / self[0]
        return PowerSeries(out, self.degree)

    def exp(self) -> "PowerSeries":
        if self[0]:
            raise SeriesError("exp needs a series with zero constant term")
        # f' = g' f
        out = [Fraction(0)] * (self.degree + 1)
        out[0] = Fraction(1)
        for n in range(1, self.degree + 1):
            out[n] = sum((k * self[k] * out[n - k] for k in range(1, n + 1)), Fraction(0)) / n
        return PowerSeries(out, self.degree)

    def log(self) -> "PowerSeries":
        if self[0] != 1:
            raise SeriesError("log needs a series with constant term 1")
        # (log f)' = f' / f
        out = [Fraction(0)] * (self.degree + 1)
        for n in range(1, self.degree + 1):
            out[n] = (n * self[n] - sum((k * out[k] * self[n - k] for k in range(1, n)), Fraction(0))) / n
        return PowerSeries(out, self.degree)

    def __repr__(self) -> str:
        terms = [f"{c}*x^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"PowerSeries({' + '.join(terms) or '0'}; O(x^{self.degree + 1}))"


# -------------------------------
# Matrix series
# -------------------------------


class PowerSeriesMatrix:
    """n x n matrix of power series sharing one truncation degree."""

    def __init__(self, entries: Sequence[Sequence[PowerSeries]], degree: int):
        self.degree = degree
        self.n = len(entries)
        self.entries = [[e.truncate(degree) for e in row] for row in entries]
        for row in self.entries:
            if len(row) != self.n:
                raise SeriesError("series matrix must be square")
            for e in row:
                if e.degree != degree:
                    raise SeriesError("all entries must share the truncation degree")

    @classmethod
    def constant(cls, rows: Sequence[Sequence[object]], degree: int) -> "PowerSeriesMatrix":
        return cls([[PowerSeries([v], degree) for v in row] for row in rows], degree)

    @classmethod
    def identity(cls, n: int, degree: int) -> "PowerSeriesMatrix":
        return cls.constant([[int(i == j) for j in range(n)] for i in range(n)], degree)

    @classmethod
    def diagonal(cls, diag: Sequence[PowerSeries], degree: int) -> "PowerSeriesMatrix":
        n = len(diag)
        zero = PowerSeries.zero(degree)
        return cls([[diag[i] if i == j else zero for j in range(n)] for i in range(n)], degree)

    def __add__(self, other: "PowerSeriesMatrix") -> "PowerSeriesMatrix":
        return PowerSeriesMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)], self.degree
        )

    def __sub__(self, other: "PowerSeriesMatrix") -> "PowerSeriesMatrix":
        return PowerSeriesMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)], self.degree
        )

    def __mul__(self, other: "PowerSeriesMatrix") -> "PowerSeriesMatrix":
        n = self.n
        zero = PowerSeries.zero(self.degree)
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if any(a.coeffs) and any(b.coeffs):
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PowerSeriesMatrix(out, self.degree)

    def trace(self) -> PowerSeries:
        total = PowerSeries.zero(self.degree)
        for i in range(self.n):
            total = total + self.entries[i][i]
        return total

    def neumann_inverse(self) -> "PowerSeriesMatrix":
        """(I - self)^-1 = sum_k self^k, valid when self has no constant term."""
        for row in self.entries:
            if any(e[0] for e in row):
                raise SeriesError("Neumann series needs a matrix without constant term")
        ident = PowerSeriesMatrix.identity(self.n, self.degree)
        total, power = ident, ident
        for _ in range(self.degree):
            power = power * self
            total = total + power
        return total
