# wknots/arrows/relations.py
"""
Relation generators for arrow-diagram spaces.

A local relation is a combination of words in the letters a_ij (an arrow from
strand i to strand j) on three strands. On a line each strand becomes a
contiguous segment placed into a gap of a smaller base diagram; all gap
choices and all strand orders are generated, so instances are over-generated
and deduplicated.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations_with_replacement, permutations
from typing import Dict, Iterable, Iterator, List, Set, Tuple

from .diagrams import (
    ArrowCalculusError,
    DiagramKey,
    LineKey,
    Skeleton,
    SpaceKind,
    UnsupportedSpaceError,
    check_cap,
    circle_key,
    class_key,
    enumerate_diagrams,
    enumerate_line,
    enumerate_strand_words,
    insert_tokens,
    plain_key,
    renumber,
    trace_normal_form,
)

logger = logging.getLogger("wknots.arrows.relations")

Word = Tuple[Tuple[int, int], ...]
LocalRelation = List[Tuple[Fraction, Word]]
Relation = Dict[DiagramKey, Fraction]


def _commutator(x: Word, y: Word) -> LocalRelation:
    return [(Fraction(1), x + y), (Fraction(-1), y + x)]


def six_term(i: int = 0, j: int = 1, k: int = 2) -> LocalRelation:
    """[a_ij, a_ik] + [a_ij, a_jk] + [a_ik, a_jk]"""
    aij, aik, ajk = ((i, j),), ((i, k),), ((j, k),)
    return _commutator(aij, aik) + _commutator(aij, ajk) + _commutator(aik, ajk)


def four_term(i: int = 0, j: int = 1, k: int = 2) -> LocalRelation:
    """[a_ij + a_ik, a_jk]"""
    aij, aik, ajk = ((i, j),), ((i, k),), ((j, k),)
    return _commutator(aij, ajk) + _commutator(aik, ajk)


def tails_commute(i: int = 0, j: int = 1, k: int = 2) -> LocalRelation:
    """[a_ij, a_ik]"""
    return _commutator(((i, j),), ((i, k),))


def local_relations(space: SpaceKind) -> List[LocalRelation]:
    if space.is_w:
        return [four_term()]
    return [six_term()]


# -------------------------------
# Line placements
# -------------------------------


def _segments(word: Word, first_id: int) -> Dict[int, LineKey]:
    """Tokens each strand sees when the word is read bottom to top."""
    segs: Dict[int, List[int]] = {0: [], 1: [], 2: []}
    for n, (s, t) in enumerate(word):
        a = first_id + n
        for strand in segs:
            if strand == s:
                segs[strand].append(a)
            if strand == t:
                segs[strand].append(-a)
    return {s: tuple(v) for s, v in segs.items()}


def place_on_line(base: LineKey, rel: LocalRelation) -> Iterator[Relation]:
    """Every placement of the three strands into gaps of base."""
    first_id = len(base) // 2 + 1
    segmented = [(c, _segments(w, first_id)) for c, w in rel]
    for gaps in combinations_with_replacement(range(len(base) + 1), 3):
        for order in permutations(range(3)):
            row: Relation = {}
            for c, segs in segmented:
                key = insert_tokens(base, [(g, segs[s]) for g, s in zip(gaps, order)])
                row[key] = row.get(key, 0) + c
            yield {k: v for k, v in row.items() if v}


def _isolated_arrow_rows(m: int, fi: bool) -> Iterator[Relation]:
    for base in enumerate_line(m - 1):
        new = len(base) // 2 + 1
        for g in range(len(base) + 1):
            right = insert_tokens(base, [(g, (new, -new))])
            left = insert_tokens(base, [(g, (-new, new))])
            if fi:
                yield {right: Fraction(1)}
                yield {left: Fraction(1)}
            else:
                yield {right: Fraction(1), left: Fraction(-1)}


def _tc_rows_line(m: int) -> Iterator[Relation]:
    for d in enumerate_line(m):
        for p in range(len(d) - 1):
            if d[p] > 0 and d[p + 1] > 0:
                swapped = renumber(d[:p] + (d[p + 1], d[p]) + d[p + 2:])
                if swapped > d:
                    yield {d: Fraction(1), swapped: Fraction(-1)}


def line_relations(space: SpaceKind, m: int, include_tc: bool = True) -> Iterator[Relation]:
    """Relations of degree m on the long line, keyed by plain line keys."""
    if m >= 2:
        for base in enumerate_line(m - 2):
            for rel in local_relations(space):
                yield from place_on_line(base, rel)
        if space.is_w and include_tc:
            yield from _tc_rows_line(m)
    if m >= 1 and (space.ri or space.fi):
        yield from _isolated_arrow_rows(m, space.fi)


# -------------------------------
# Strands
# -------------------------------


def strand_relations(n: int, space: SpaceKind, m: int) -> Iterator[Relation]:
    """u * R * v for every local relation R on three distinct strands and monomials u, v."""
    if space.ri or space.fi:
        raise UnsupportedSpaceError(f"{space.value} is only defined on line and circle skeleta")
    if m < 2 or n < 3:
        return
    monomials = {ell: enumerate_strand_words(n, ell) for ell in range(m - 1)}
    labels = range(1, n + 1)
    for triple in permutations(labels, 3):
        for rel in local_relations(space):
            local = [(c, tuple((triple[s], triple[t]) for s, t in w)) for c, w in rel]
            for ell in range(m - 1):
                for u in monomials[ell]:
                    for v in monomials[m - 2 - ell]:
                        row: Relation = {}
                        for c, w in local:
                            key = trace_normal_form(u + w + v)
                            row[key] = row.get(key, 0) + c
                        row = {k: c for k, c in row.items() if c}
                        if row:
                            yield row


# -------------------------------
# Dispatch
# -------------------------------


def relation_combinations(sk: Skeleton, space: SpaceKind, m: int) -> Iterator[Relation]:
    """Relations in plain keys: tails-commute rows are explicit."""
    check_cap(sk, space, m)
    if sk.kind == "line":
        yield from line_relations(space, m)
    elif sk.kind == "circle":
        for row in line_relations(space, m):
            yield _map_row(row, circle_key)
    else:
        if m >= 2 and space.is_w and sk.n >= 2:
            # tails-commute rows between plain strand words
            for word in enumerate_strand_words(sk.n, m):
                for p, q in _tails_meeting(word):
                    moved = word[:p] + (word[q], word[p]) + word[p + 1:q] + word[q + 1:]
                    other = trace_normal_form(moved)
                    if other != word:
                        yield {word: Fraction(1), other: Fraction(-1)}
        yield from strand_relations(sk.n, space, m)


def _tails_meeting(word: Word) -> Iterator[Tuple[int, int]]:
    """Pairs p < q with a shared tail where word[q] slides down next to word[p]."""
    for q in range(1, len(word)):
        b = word[q]
        for p in range(q - 1, -1, -1):
            a = word[p]
            if a[0] == b[0] and a[1] != b[1]:
                yield p, q
            if {a[0], a[1]} & {b[0], b[1]}:
                break


def class_relations(sk: Skeleton, space: SpaceKind, m: int) -> Iterator[Relation]:
    """Relations in class keys (tails-commute is built into the keys for w-spaces)."""
    check_cap(sk, space, m)
    if sk.kind == "strands":
        rows: Iterable[Relation] = strand_relations(sk.n, space, m)
    else:
        rows = line_relations(space, m, include_tc=False)
    for row in rows:
        yield _map_row(row, lambda k: class_key(sk, space, k))


def _map_row(row: Relation, fn) -> Relation:
    out: Relation = {}
    for k, c in row.items():
        key = fn(k)
        out[key] = out.get(key, 0) + c
    return {k: c for k, c in out.items() if c}


def normalized(row: Relation):
    """Hashable form up to an overall scalar, for deduplication."""
    items = sorted(row.items())
    lead = items[0][1]
    return tuple((k, c / lead) for k, c in items)


def dedupe(rows: Iterable[Relation]) -> List[Relation]:
    seen: Set = set()
    out: List[Relation] = []
    total = 0
    for row in rows:
        total += 1
        if not row:
            continue
        h = normalized(row)
        if h in seen:
            continue
        seen.add(h)
        out.append(row)
    logger.debug("Relations: %d generated, %d distinct", total, len(out))
    return out


def relation_vectors(sk: Skeleton, space, m: int) -> List[Dict[int, Fraction]]:
    """Relation rows indexed by position in enumerate_diagrams(sk, space, m)."""
    space = SpaceKind.parse(space)
    basis = enumerate_diagrams(sk, space, m)
    index = {k: i for i, k in enumerate(basis)}
    out = []
    for row in dedupe(relation_combinations(sk, space, m)):
        vec = {}
        for k, c in row.items():
            key = plain_key(sk, k)
            if key not in index:
                raise ArrowCalculusError(f"relation term {key!r} outside the enumerated basis")
            vec[index[key]] = vec.get(index[key], 0) + c
        vec = {i: c for i, c in vec.items() if c}
        if vec:
            out.append(vec)
    return out
