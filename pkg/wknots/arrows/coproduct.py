# wknots/arrows/coproduct.py
from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Tuple

from wknots.linalg import rank_of_rows

from .diagrams import (
    ArrowCalculusError,
    LineKey,
    Skeleton,
    SpaceKind,
    UnsupportedSpaceError,
    circle_key,
    class_key,
    renumber,
)
from .quotient import get_quotient

logger = logging.getLogger("wknots.arrows.coproduct")

Pair = Tuple[LineKey, LineKey]


def restrict(key: LineKey, arrows) -> LineKey:
    keep = set(arrows)
    return renumber(t for t in key if abs(t) in keep)


def coproduct(sk: Skeleton, key: LineKey) -> Dict[Pair, int]:
    """Sum over all ways of dividing the arrows into a left and a right co-factor."""
    if sk.kind == "strands":
        raise UnsupportedSpaceError("coproduct is implemented for line and circle skeleta")
    close = circle_key if sk.kind == "circle" else (lambda k: k)
    m = len(key) // 2
    arrows = range(1, m + 1)
    out: Dict[Pair, int] = {}
    for r in range(m + 1):
        for left in combinations(arrows, r):
            right = [a for a in arrows if a not in left]
            pair = (close(restrict(key, left)), close(restrict(key, right)))
            out[pair] = out.get(pair, 0) + 1
    return out


def reduced_coproduct(sk: Skeleton, key: LineKey) -> Dict[Pair, int]:
    """Delta minus the two primitive-like terms."""
    out = coproduct(sk, key)
    if key:
        whole = circle_key(key) if sk.kind == "circle" else renumber(key)
        for pair in ((whole, ()), ((), whole)):
            out[pair] = out.get(pair, 0) - 1
            if not out[pair]:
                del out[pair]
    return out


def primitive_dimension(sk: Skeleton, space, m: int) -> int:
    """Dimension of the kernel of the reduced coproduct on the degree-m quotient."""
    space = SpaceKind.parse(space)
    if m < 1:
        raise ArrowCalculusError("primitives live in degree >= 1")
    top = get_quotient(sk, space, m)
    lower = {p: get_quotient(sk, space, p) for p in range(1, m)}
    free = {}
    for p, q in lower.items():
        cols = [i for i in range(len(q.classes)) if i not in q.reducer.pivot_rows]
        free[p] = {i: n for n, i in enumerate(cols)}

    def coords(p: int, key: LineKey) -> Dict[int, Fraction]:
        q = lower[p]
        nf = q.reduce_vector({q.index[class_key(sk, space, key)]: 1})
        return {free[p][i]: c for i, c in nf.items()}

    rows: List[Dict[int, Fraction]] = []
    # columns of the tensor target are enumerated lazily
    col_of: Dict[Tuple[int, int, int], int] = {}
    for rep in top.basis():
        image: Dict[int, Fraction] = {}
        for (left, right), mult in reduced_coproduct(sk, rep).items():
            p = len(left) // 2
            lc = coords(p, left)
            rc = coords(m - p, right)
            for i, a in lc.items():
                for j, b in rc.items():
                    col = col_of.setdefault((p, i, j), len(col_of))
                    image[col] = image.get(col, 0) + mult * a * b
        rows.append({c: v for c, v in image.items() if v})
    dim = top.dimension - rank_of_rows(rows, len(col_of) or None)
    logger.info("dim G_%d P^%s(%s) = %d", m, space.value, sk, dim)
    return dim


def milnor_moore_dimensions(primitive_dims: List[int]) -> List[int]:
    """
    Graded dimensions a_0..a_N of a connected cocommutative bialgebra with
    primitives p_1..p_N, from prod_m (1 - t^m)^(-p_m).
    """
    n = len(primitive_dims)
    series = [1] + [0] * n
    for m, p in enumerate(primitive_dims, start=1):
        for _ in range(p):
            # multiply by 1/(1 - t^m)
            for d in range(m, n + 1):
                series[d] += series[d - m]
    return series
