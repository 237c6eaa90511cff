# wknots/expansions/braid_log.py
"""
log Z of a w-braid in the semidirect algebra tr_n x| tder_n.

The arrow a_ij (tail on strand i, head on strand j) is the tangential
derivation whose only component sits in slot j and equals x_i. Crossing
factors are slid to the bottom exactly as in the diagrammatic expansion and
multiplied with BCH.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from wknots.at import LieElement, SemidirectElement, TDerElement, l_split, semidirect_bch, u_split
from wknots.config import settings
from wknots.knots import BraidRelation, BraidWord, FreeWord, braid_act, uc_nonrelations, wb_relations

from .braid_z import braid_factors
from .knot_z import ExpansionError, resolve_degree

logger = logging.getLogger("wknots.expansions.braids")

SPLITS = {"u": u_split, "l": l_split}


@dataclass(frozen=True)
class BraidInvariantLog:
    n_strands: int
    degree: int
    perm: tuple
    log: SemidirectElement

    def to_dict(self) -> Dict[str, object]:
        return {"perm": list(self.perm), "degree": self.degree, **self.log.to_dict()}


def arrow_derivation(n: int, degree: int, tail: int, head: int) -> TDerElement:
    return TDerElement.single(n, degree, head, LieElement.generator(n, degree, tail))


def braid_z_log(b: BraidWord, degree: Optional[int] = None, split: str = "u") -> BraidInvariantLog:
    """
    split picks how tder_n sits inside the semidirect algebra: "u" puts each
    head above its tails, (0, D); "l" puts it below, (div D, D).
    """
    n = resolve_degree(degree, settings.default_braid_degree, settings.max_braid_degree, "braid")
    try:
        lift = SPLITS[split]
    except KeyError:
        raise ExpansionError(f"unknown split {split!r}; expected one of {sorted(SPLITS)}") from None
    factors, perm = braid_factors(b)
    log = SemidirectElement.zero(b.n_strands, n)
    for sign, tail, head in factors:
        step = lift(arrow_derivation(b.n_strands, n, tail, head)).scale(sign)
        log = semidirect_bch(log, step, n)
    logger.debug("log Z of a %d-letter braid through degree %d", len(b), n)
    return BraidInvariantLog(b.n_strands, n, perm, log)


def first_difference(x: BraidInvariantLog, y: BraidInvariantLog) -> Optional[str]:
    """None when equal; otherwise 'permutation' or the first differing degree."""
    if x.perm != y.perm:
        return "permutation"
    diff = x.log - y.log
    for k in range(1, min(x.degree, y.degree) + 1):
        if diff.graded_part(k):
            return f"degree {k}"
    return None


# -------------------------------
# Relation checks
# -------------------------------


@dataclass
class RelationCheck:
    name: str
    is_relation: bool
    holds: bool
    witness: Optional[str] = None

    @property
    def as_expected(self) -> bool:
        return self.holds == self.is_relation


@dataclass
class RelationReport:
    kind: str
    n_strands: int
    degree: Optional[int]
    checks: List[RelationCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.as_expected for c in self.checks)

    def check(self, name: str) -> RelationCheck:
        return next(c for c in self.checks if c.name == name)


def _catalogue(n: int):
    return [(r, True) for r in wb_relations(n)] + [(r, False) for r in uc_nonrelations(n)]


def _log_check(rel: BraidRelation, is_relation: bool, degree: int) -> RelationCheck:
    witness = first_difference(braid_z_log(rel.lhs, degree), braid_z_log(rel.rhs, degree))
    return RelationCheck(rel.name, is_relation, witness is None, witness)


def check_relations(n: int, degree: Optional[int] = None) -> RelationReport:
    """braid_z_log on both sides of every wB_n relation and of the UC non-relation."""
    if n < 2:
        raise ExpansionError("relation checks need at least two strands")
    N = resolve_degree(degree, settings.default_braid_degree, settings.max_braid_degree, "braid")
    report = RelationReport("z-log", n, N, [_log_check(r, ok, N) for r, ok in _catalogue(n)])
    for c in report.checks:
        if not c.as_expected:
            logger.warning("Relation %s: expected holds=%s, got %s (%s)", c.name, c.is_relation, c.holds, c.witness)
    return report


def _action_check(rel: BraidRelation, is_relation: bool, n: int) -> RelationCheck:
    for i in range(1, n + 1):
        x = FreeWord.generator(n, i)
        if braid_act(x, rel.lhs) != braid_act(x, rel.rhs):
            return RelationCheck(rel.name, is_relation, False, f"x{i}")
    return RelationCheck(rel.name, is_relation, True)


def check_action_relations(n: int) -> RelationReport:
    """The free-group action on every generator, both sides of each relation."""
    if n < 2:
        raise ExpansionError("relation checks need at least two strands")
    report = RelationReport("action", n, None, [_action_check(r, ok, n) for r, ok in _catalogue(n)])
    for c in report.checks:
        if not c.as_expected:
            logger.warning("Action relation %s: expected holds=%s, got %s", c.name, c.is_relation, c.holds)
    return report
