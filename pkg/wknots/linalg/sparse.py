# wknots/linalg/sparse.py
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from sympy import randprime

from wknots.config import settings
from wknots.errors import WKnotsError

logger = logging.getLogger("wknots.linalg")

# column index -> nonzero coefficient
Row = Dict[int, object]


class LinalgError(WKnotsError):
    """Base exception for linear-algebra failures."""


class DimensionMismatchError(LinalgError):
    """Raised when a row refers to a column outside the ambient space."""


class RankIndeterminateError(LinalgError):
    """Raised when modular ranks keep disagreeing after all retries."""


class _UnluckyPrime(Exception):
    """A denominator vanished modulo the chosen prime."""


# -------------------------------
# Fields
# -------------------------------


class RationalField:
    """Exact arithmetic over Q with fractions.Fraction."""

    name = "QQ"

    def convert(self, value) -> Fraction:
        return value if isinstance(value, Fraction) else Fraction(value)

    def is_zero(self, value) -> bool:
        return value == 0

    def inv(self, value) -> Fraction:
        return 1 / value

    def mul(self, a, b):
        return a * b

    def sub(self, a, b):
        return a - b

    def add(self, a, b):
        return a + b


class PrimeField:
    """Arithmetic in F_p; rationals are mapped through the inverse of the denominator."""

    def __init__(self, p: int):
        self.p = p
        self.name = f"GF({p})"

    def convert(self, value) -> int:
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise _UnluckyPrime(self.p)
            return value.numerator * pow(den, -1, self.p) % self.p
        return int(value) % self.p

    def is_zero(self, value) -> bool:
        return value == 0

    def inv(self, value) -> int:
        return pow(value, -1, self.p)

    def mul(self, a, b):
        return a * b % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def add(self, a, b):
        return (a + b) % self.p


# -------------------------------
# Matrix container
# -------------------------------


@dataclass(frozen=True)
class SparseMatrix:
    n_rows: int
    n_cols: int
    entries: Tuple[Tuple[int, int, Fraction], ...] = ()

    def __post_init__(self):
        seen: Set[Tuple[int, int]] = set()
        for i, j, v in self.entries:
            if not (0 <= i < self.n_rows and 0 <= j < self.n_cols):
                raise DimensionMismatchError(
                    f"entry ({i}, {j}) outside a {self.n_rows}x{self.n_cols} matrix"
                )
            if (i, j) in seen:
                raise LinalgError(f"duplicate entry at ({i}, {j})")
            if v == 0:
                raise LinalgError(f"stored zero at ({i}, {j})")
            seen.add((i, j))

    @classmethod
    def from_rows(cls, rows: Sequence[Mapping[int, object]], n_cols: int) -> "SparseMatrix":
        entries = []
        for i, row in enumerate(rows):
            for j, v in row.items():
                v = Fraction(v)
                if v:
                    entries.append((i, j, v))
        return cls(len(rows), n_cols, tuple(sorted(entries)))

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[object]]) -> "SparseMatrix":
        n_cols = len(dense[0]) if dense else 0
        rows = [{j: v for j, v in enumerate(r) if v} for r in dense]
        return cls.from_rows(rows, n_cols)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, tuple((i, i, Fraction(1)) for i in range(n)))

    def rows(self) -> List[Row]:
        out: List[Row] = [dict() for _ in range(self.n_rows)]
        for i, j, v in self.entries:
            out[i][j] = v
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(
            self.n_cols,
            self.n_rows,
            tuple(sorted((j, i, v) for i, j, v in self.entries)),
        )

    @property
    def nnz(self) -> int:
        return len(self.entries)


# -------------------------------
# Incremental reduced row echelon form
# -------------------------------


class RowReducer:
    """
    Incremental sparse RREF over a field.

    Pivot rows are kept fully reduced (zero in every other pivot column) and a
    column -> pivot index makes back-substitution touch only affected rows.
    With track=True each pivot row remembers which input rows produced it.
    """

    def __init__(self, field=None, track: bool = False, leftmost: bool = False):
        self.field = field or RationalField()
        self.track = track
        self.leftmost = leftmost
        self.pivot_rows: Dict[int, Row] = {}
        self.col_index: Dict[int, Set[int]] = {}
        self.provenance: Dict[int, Dict[Hashable, object]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    @property
    def pivots(self) -> List[int]:
        return sorted(self.pivot_rows)

    def _axpy(self, target: Row, coef, source: Row) -> None:
        """target -= coef * source (in place)."""
        F = self.field
        for k, v in source.items():
            cur = target.get(k)
            new = F.sub(cur, F.mul(coef, v)) if cur is not None else F.sub(0, F.mul(coef, v))
            if F.is_zero(new):
                target.pop(k, None)
            else:
                target[k] = new

    def _combo_axpy(self, target: Dict, coef, source: Dict) -> None:
        self._axpy(target, coef, source)

    def reduce(self, row: Mapping[int, object], combo: Optional[Dict] = None) -> Row:
        """Return the normal form of row: the unique representative supported off the pivots."""
        F = self.field
        out: Row = {}
        for k, v in row.items():
            v = F.convert(v)
            if not F.is_zero(v):
                out[k] = v
        for c in [k for k in out if k in self.pivot_rows]:
            coef = out.get(c)
            if coef is None:
                continue
            self._axpy(out, coef, self.pivot_rows[c])
            if combo is not None and self.track:
                self._combo_axpy(combo, coef, self.provenance[c])
        return out

    def add(self, row: Mapping[int, object], tag: Hashable = None) -> bool:
        """Insert a row; return True when it increased the rank."""
        F = self.field
        combo: Optional[Dict] = None
        if self.track:
            combo = {tag: F.convert(1)}
        r = self.reduce(row, combo)
        if not r:
            return False

        if self.leftmost:
            c = min(r)
        else:
            # minimal fill: prefer the column touched by the fewest pivot rows
            c = min(r, key=lambda k: (len(self.col_index.get(k, ())), k))
        inv = F.inv(r[c])
        r = {k: F.mul(inv, v) for k, v in r.items()}
        if combo is not None:
            combo = {k: F.mul(inv, v) for k, v in combo.items()}

        for p in list(self.col_index.get(c, ())):
            prow = self.pivot_rows[p]
            coef = prow[c]
            before = set(prow)
            self._axpy(prow, coef, r)
            after = set(prow)
            for k in before - after:
                if k != p:
                    self.col_index.get(k, set()).discard(p)
            for k in after - before:
                self.col_index.setdefault(k, set()).add(p)
            if self.track:
                self._combo_axpy(self.provenance[p], coef, combo)

        self.col_index.pop(c, None)
        for k in r:
            if k != c:
                self.col_index.setdefault(k, set()).add(c)
        self.pivot_rows[c] = r
        if self.track:
            self.provenance[c] = combo
        return True

    def in_span(self, row: Mapping[int, object]) -> bool:
        return not self.reduce(row)


# -------------------------------
# Rank
# -------------------------------


def _clean_rows(rows: Iterable[Mapping[int, object]], n_cols: Optional[int]) -> List[Dict[int, Fraction]]:
    out = []
    for row in rows:
        clean = {}
        for k, v in row.items():
            if n_cols is not None and not (0 <= k < n_cols):
                raise DimensionMismatchError(f"column {k} outside ambient dimension {n_cols}")
            v = Fraction(v)
            if v:
                clean[k] = v
        if clean:
            out.append(clean)
    # least entries first
    out.sort(key=len)
    return out


def _content_free(row: Dict[int, int]) -> Dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {k: v // g for k, v in row.items()} if g > 1 else row


def _rank_fraction_free(rows: List[Dict[int, Fraction]]) -> int:
    """Rank over Q by integer elimination with content removal (Bareiss-style)."""
    pivots: Dict[int, Dict[int, int]] = {}
    for row in rows:
        den = 1
        for v in row.values():
            den = den * v.denominator // gcd(den, v.denominator)
        r = _content_free({k: int(v * den) for k, v in row.items()})
        while r:
            c = min(r)
            prow = pivots.get(c)
            if prow is None:
                pivots[c] = r
                break
            a, b = prow[c], r[c]
            # r <- a*r - b*prow cancels column c without leaving Z
            new = {k: a * v for k, v in r.items()}
            for k, v in prow.items():
                nv = new.get(k, 0) - b * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            r = _content_free(new)
    return len(pivots)


def _rank_mod_p(rows: List[Dict[int, Fraction]], p: int) -> int:
    reducer = RowReducer(PrimeField(p))
    for row in rows:
        reducer.add(row)
    return reducer.rank


def _draw_prime(bits: int, avoid: Set[int]) -> int:
    while True:
        p = randprime(2 ** (bits - 1), 2 ** bits)
        if p not in avoid:
            return p


def _modular_certified_rank(rows: List[Dict[int, Fraction]]) -> int:
    used: Set[int] = set()
    for attempt in range(1, settings.modular_retries + 1):
        try:
            p1 = _draw_prime(settings.modular_prime_bits, used)
            used.add(p1)
            p2 = _draw_prime(settings.modular_prime_bits, used)
            used.add(p2)
            r1 = _rank_mod_p(rows, p1)
            r2 = _rank_mod_p(rows, p2)
        except _UnluckyPrime as exc:
            logger.warning("Prime %s divides a denominator; redrawing", exc.args[0])
            continue
        if r1 == r2:
            logger.debug("Modular rank %d certified by primes %d, %d", r1, p1, p2)
            return r1
        logger.warning(
            "Modular ranks disagree (%d mod %d vs %d mod %d), attempt %d",
            r1, p1, r2, p2, attempt,
        )
    raise RankIndeterminateError(
        f"modular rank not certified after {settings.modular_retries} attempts"
    )


def rank_of_rows(
    rows: Iterable[Mapping[int, object]],
    n_cols: Optional[int] = None,
    mode: Optional[str] = None,
) -> int:
    mode = mode or settings.rank_mode
    clean = _clean_rows(rows, n_cols)
    if not clean:
        return 0
    if mode == "exact":
        return _rank_fraction_free(clean)
    if mode == "modular":
        return _modular_certified_rank(clean)
    raise LinalgError(f"unknown rank mode {mode!r}")


def rank(m: SparseMatrix, mode: Optional[str] = None) -> int:
    """Rank of a sparse matrix, exactly over Q or certified by two primes."""
    return rank_of_rows(m.rows(), m.n_cols, mode)


def quotient_dim(ambient: int, relations: Sequence[Mapping[int, object]], mode: Optional[str] = None) -> int:
    """Dimension of the span of the ambient basis modulo the given relation rows."""
    return ambient - rank_of_rows(relations, ambient, mode)


def solve_in_span(
    target: Mapping[int, object],
    relations: Sequence[Mapping[int, object]],
) -> Optional[List[Fraction]]:
    """
    Coefficients c with target = sum c_i * relations[i], or None when the
    target is not in the span. Exact over Q.
    """
    reducer = RowReducer(RationalField(), track=True)
    for i, row in enumerate(relations):
        reducer.add(row, tag=i)
    # after reduction: remainder = target + sum(combo[i] * relations[i])
    combo: Dict = {}
    remainder = reducer.reduce(target, combo)
    if remainder:
        return None
    coeffs = [Fraction(0)] * len(relations)
    for i, v in combo.items():
        coeffs[i] = -v
    return coeffs


def solve_linear_system(
    equations: Sequence[Mapping[int, object]],
    rhs: Sequence[object],
    n_unknowns: int,
) -> Tuple[Optional[List[Fraction]], List[List[Fraction]]]:
    """
    Solve sum_j equations[i][j] * u_j = rhs[i] over Q.

    Returns (basic, kernel): the solution with every free unknown set to zero
    (None when inconsistent) and a kernel basis with one vector per free
    unknown. Pivots are taken leftmost, so earlier unknowns are preferred.
    """
    if len(equations) != len(rhs):
        raise DimensionMismatchError("one right-hand side per equation")
    reducer = RowReducer(RationalField(), leftmost=True)
    for eq, b in zip(equations, rhs):
        row = {}
        for j, v in eq.items():
            if not 0 <= j < n_unknowns:
                raise DimensionMismatchError(f"unknown {j} outside 0..{n_unknowns - 1}")
            row[j] = v
        row[n_unknowns] = b
        reducer.add(row)

    basic: Optional[List[Fraction]] = [Fraction(0)] * n_unknowns
    if n_unknowns in reducer.pivot_rows:
        basic = None
    else:
        for c, prow in reducer.pivot_rows.items():
            basic[c] = Fraction(prow.get(n_unknowns, 0))

    kernel: List[List[Fraction]] = []
    for f in range(n_unknowns):
        if f in reducer.pivot_rows:
            continue
        vec = [Fraction(0)] * n_unknowns
        vec[f] = Fraction(1)
        for c in reducer.col_index.get(f, ()):
            vec[c] = -Fraction(reducer.pivot_rows[c][f])
        kernel.append(vec)
    return basic, kernel


def _sparsity_key(vec: Sequence[Fraction]):
    support = tuple(i for i, v in enumerate(vec) if v)
    return len(support), support, tuple(vec[i] for i in support)


def sparsest_point(
    base: Sequence[object],
    directions: Sequence[Sequence[object]],
) -> Tuple[List[Fraction], List[Fraction]]:
    """
    The point base + sum s_i * directions[i] with the fewest nonzero
    coordinates; ties go to the lexicographically smallest support, then to
    the smallest values on it. Returns (point, s).

    directions must be linearly independent. An optimum is attained where
    len(directions) independent coordinates vanish, so those vertices are
    enumerated.
    """
    point = [Fraction(v) for v in base]
    dirs = [[Fraction(v) for v in d] for d in directions]
    if any(len(d) != len(point) for d in dirs):
        raise DimensionMismatchError("directions must match the base point in length")
    k = len(dirs)
    best, best_s = point, [Fraction(0)] * k
    best_key = _sparsity_key(point)
    if not k:
        return best, best_s
    tried = 0
    for zeros in combinations(range(len(point)), k):
        equations = [{i: d[c] for i, d in enumerate(dirs) if d[c]} for c in zeros]
        s, free = solve_linear_system(equations, [-point[c] for c in zeros], k)
        if s is None or free:
            continue
        tried += 1
        cand = [p + sum(si * d[c] for si, d in zip(s, dirs)) for c, p in enumerate(point)]
        key = _sparsity_key(cand)
        if key < best_key:
            best, best_s, best_key = cand, s, key
    logger.debug("Sparsest point: %d vertices, %d nonzeros", tried, best_key[0])
    return best, best_s
