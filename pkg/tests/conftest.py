# tests/conftest.py
from __future__ import annotations

import random

import pytest
import sympy

from wknots.alexander import LaurentPoly
from wknots.config import Settings, settings
from wknots.corpus import load_corpus
from wknots.knots import GaussDiagram


@pytest.fixture(autouse=True)
def restore_settings():
    """The CLI reconfigures the shared settings object; put it back after each test."""
    saved = {name: getattr(settings, name) for name in Settings.model_fields}
    yield settings
    for name, value in saved.items():
        setattr(settings, name, value)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240601)


@pytest.fixture(scope="session")
def corpus():
    return {entry.name: entry for entry in load_corpus()}


def fox_alexander(k: GaussDiagram) -> LaurentPoly:
    """
    Alexander polynomial from the Wirtinger presentation, computed with sympy.

    Arcs of the long knot are cut at under-visits. Each crossing gives one
    row over the arcs; the first arc's column is dropped and the determinant
    is brought to symmetric form.
    """
    t = sympy.Symbol("t")
    n = k.n_crossings
    if n == 0:
        return LaurentPoly.one()
    over_arc, under_in = {}, {}
    arc = 0
    for e in k.endpoints:
        if e.role == "O":
            over_arc[e.crossing] = arc
        else:
            under_in[e.crossing] = arc
            arc += 1
    signs = k.signs()
    rows = []
    for c in range(1, n + 1):
        row = [sympy.Integer(0)] * (n + 1)
        o, i = over_arc[c], under_in[c]
        j = i + 1
        if signs[c - 1] > 0:
            row[o] += 1 - t
            row[i] += t
            row[j] -= 1
        else:
            row[o] += t - 1
            row[i] += 1
            row[j] -= t
        rows.append(row[1:])
    det = sympy.expand(sympy.Matrix(rows).det(method="berkowitz"))
    poly = sympy.Poly(det, t)
    low = min(m[0] for m in poly.monoms())
    return LaurentPoly({m[0] - low: int(c) for m, c in poly.terms()}).normalized()


@pytest.fixture(scope="session")
def alexander_oracle():
    return fox_alexander
