# wknots/arrows/quotient.py
from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Union

from wknots.config import settings
from wknots.linalg import RationalField, RowReducer, rank_of_rows, solve_in_span

from .diagrams import (
    ArrowCalculusError,
    ArrowCombination,
    DiagramKey,
    Skeleton,
    SkeletonMismatchError,
    SpaceKind,
    check_cap,
    class_key,
    enumerate_classes,
    key_degree,
)
from .relations import class_relations, dedupe

logger = logging.getLogger("wknots.arrows.quotient")


class NotInSpanError(ArrowCalculusError):
    """Raised when a vector is not a combination of the requested basis."""


def _class_rows(sk: Skeleton, space: SpaceKind, m: int, index: Mapping[DiagramKey, int]):
    rows = []
    for row in dedupe(class_relations(sk, space, m)):
        vec = {}
        for k, c in row.items():
            if k not in index:
                raise ArrowCalculusError(f"relation term {k!r} outside the class basis")
            vec[index[k]] = c
        rows.append(vec)
    return rows


class ArrowQuotient:
    """
    One graded piece of an arrow-diagram space with an exact reduced echelon
    form of its relations; vectors are reduced to normal forms supported on
    the free columns, which index a basis of the quotient.
    """

    def __init__(self, sk: Skeleton, space: Union[SpaceKind, str], m: int):
        self.skeleton = sk
        self.space = SpaceKind.parse(space)
        self.degree = m
        self.classes: List[DiagramKey] = enumerate_classes(sk, self.space, m)
        self.index: Dict[DiagramKey, int] = {k: i for i, k in enumerate(self.classes)}
        self.reducer = RowReducer(RationalField())
        rows = _class_rows(sk, self.space, m, self.index)
        for row in rows:
            self.reducer.add(row)
        logger.info(
            "Quotient %s/%s degree %d: %d classes, %d relations, dimension %d",
            sk, self.space.value, m, len(self.classes), len(rows), self.dimension,
        )

    @property
    def dimension(self) -> int:
        return len(self.classes) - self.reducer.rank

    def basis(self) -> List[DiagramKey]:
        """Class keys of the free columns."""
        pivots = self.reducer.pivot_rows
        return [k for i, k in enumerate(self.classes) if i not in pivots]

    def vector(self, e: ArrowCombination) -> Dict[int, Fraction]:
        """Degree-m part of e in class coordinates."""
        if e.skeleton != self.skeleton:
            raise SkeletonMismatchError(f"{e.skeleton} vs {self.skeleton}")
        out: Dict[int, Fraction] = {}
        for k, c in e.terms.items():
            if key_degree(self.skeleton, k) != self.degree:
                continue
            i = self.index[class_key(self.skeleton, self.space, k)]
            out[i] = out.get(i, 0) + c
        return {i: c for i, c in out.items() if c}

    def reduce_vector(self, vec: Mapping[int, object]) -> Dict[int, Fraction]:
        return self.reducer.reduce(vec)

    def reduce(self, e: ArrowCombination) -> Dict[int, Fraction]:
        return self.reducer.reduce(self.vector(e))

    def contains(self, e: ArrowCombination) -> bool:
        """True when the degree-m part of e vanishes in the quotient."""
        return not self.reduce(e)

    def normal_form(self, e: ArrowCombination) -> ArrowCombination:
        nf = self.reduce(e)
        return ArrowCombination(
            self.skeleton, {self.classes[i]: c for i, c in nf.items()}, canonical=True
        )

    def coordinates(self, e: ArrowCombination, generators: List[ArrowCombination]) -> List[Fraction]:
        """Coefficients c with e = sum c_i * generators[i] in the quotient."""
        target = self.reduce(e)
        images = [self.reduce(g) for g in generators]
        coeffs = solve_in_span(target, images)
        if coeffs is None:
            raise NotInSpanError(
                f"element is not in the span of {len(generators)} generators "
                f"in {self.skeleton}/{self.space.value} degree {self.degree}"
            )
        return coeffs


def get_quotient(sk: Skeleton, space: SpaceKind, m: int) -> ArrowQuotient:
    space = SpaceKind.parse(space)
    check_cap(sk, space, m)
    return _cached_quotient(sk, space, m)


@lru_cache(maxsize=64)
def _cached_quotient(sk: Skeleton, space: SpaceKind, m: int) -> ArrowQuotient:
    return ArrowQuotient(sk, space, m)


@lru_cache(maxsize=128)
def _graded_dimension(sk: Skeleton, space: SpaceKind, m: int, mode: str) -> int:
    classes = enumerate_classes(sk, space, m)
    index = {k: i for i, k in enumerate(classes)}
    rows = _class_rows(sk, space, m, index)
    dim = len(classes) - rank_of_rows(rows, len(classes), mode)
    logger.info("dim G_%d A^%s(%s) = %d", m, space.value, sk, dim)
    return dim


def graded_dimension(sk: Skeleton, space, m: int, mode: Optional[str] = None) -> int:
    """Dimension of the degree-m piece of the quotient space."""
    space = SpaceKind.parse(space)
    check_cap(sk, space, m)
    return _graded_dimension(sk, space, m, mode or settings.rank_mode)


def in_relation_span(e: ArrowCombination, space) -> bool:
    """True when every graded part of e vanishes in the quotient."""
    space = SpaceKind.parse(space)
    return all(
        get_quotient(e.skeleton, space, m).contains(e)
        for m in sorted({key_degree(e.skeleton, k) for k in e.terms})
    )
