# wknots/knots/moves.py
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import List, Tuple

from .gauss import Endpoint, GaussDiagram, KnotObjectError

logger = logging.getLogger("wknots.knots.moves")

R2_INSERT = "R2-insert"
R2_DELETE = "R2-delete"
R3 = "R3"
OC = "OC"
R1S_SPIN = "R1s-spin"
VIRTUAL_KINDS = ("VR1", "VR2", "VR3", "M")

MOVE_KINDS = (R2_INSERT, R2_DELETE, R3, OC, R1S_SPIN) + VIRTUAL_KINDS

_ARITY = {R2_INSERT: 2, R2_DELETE: 2, R3: 3, OC: 1, R1S_SPIN: 2}


class MoveError(KnotObjectError):
    """Raised when a move pattern does not match at the requested site."""


@dataclass(frozen=True)
class Move:
    """
    A local rewrite of a Gauss diagram.

    sites:
      R2-insert  (p, q): gaps of the input where the Over pair and the Under pair go
      R2-delete  (p, q): first positions of the adjacent Over pair and Under pair
      R3         (p1, p2, p3): first positions of three adjacent endpoint pairs
      OC         (p,): first position of two adjacent Over endpoints
      R1s-spin   (p, step): first position of an isolated kink, step is +1 or -1
    sign and antiparallel are only read by R2-insert.
    """

    kind: str
    sites: Tuple[int, ...] = ()
    sign: int = 1
    antiparallel: bool = False

    def __post_init__(self):
        if self.kind not in MOVE_KINDS:
            raise MoveError(f"unknown move kind {self.kind!r}")
        arity = _ARITY.get(self.kind)
        if arity is not None and len(self.sites) != arity:
            raise MoveError(f"{self.kind} takes {arity} site parameters, got {len(self.sites)}")
        if self.sign not in (1, -1):
            raise MoveError("sign must be +1 or -1")
        if self.kind == R1S_SPIN and self.sites[1] not in (1, -1):
            raise MoveError("R1s-spin step must be +1 or -1")


def _check_range(k: GaussDiagram, positions, upper: int) -> None:
    for p in positions:
        if not 0 <= p <= upper:
            raise MoveError(f"site {p} out of range 0..{upper}")


def _r2_insert(k: GaussDiagram, m: Move) -> GaussDiagram:
    p, q = m.sites
    _check_range(k, (p, q), len(k))
    a, b = k.n_crossings + 1, k.n_crossings + 2
    overs = [Endpoint(a, "O", m.sign), Endpoint(b, "O", -m.sign)]
    unders = [Endpoint(a, "U", m.sign), Endpoint(b, "U", -m.sign)]
    if m.antiparallel:
        unders.reverse()
    out: List[Endpoint] = []
    for gap in range(len(k) + 1):
        # at a shared gap the Over pair comes first
        if gap == p:
            out.extend(overs)
        if gap == q:
            out.extend(unders)
        if gap < len(k):
            out.append(k.endpoints[gap])
    return GaussDiagram.from_endpoints(out)


def _r2_delete(k: GaussDiagram, m: Move) -> GaussDiagram:
    p, q = m.sites
    _check_range(k, (p, q), len(k) - 2)
    eps = k.endpoints
    o1, o2, u1, u2 = eps[p], eps[p + 1], eps[q], eps[q + 1]
    if not (o1.role == o2.role == "O" and u1.role == u2.role == "U"):
        raise MoveError(f"R2-delete needs Over pair at {p} and Under pair at {q}")
    if {o1.crossing, o2.crossing} != {u1.crossing, u2.crossing} or o1.crossing == o2.crossing:
        raise MoveError("R2-delete pairs must involve the same two crossings")
    if o1.sign == o2.sign:
        raise MoveError("R2-delete needs crossings of opposite sign")
    drop = {p, p + 1, q, q + 1}
    return GaussDiagram.from_endpoints(e for i, e in enumerate(eps) if i not in drop)


def _r3_roles(k: GaussDiagram, pairs):
    """Classify three adjacent pairs as (T, M, B) segments, or raise."""
    eps = k.endpoints
    crossings = set()
    by_role = {}
    for p in pairs:
        a, b = eps[p], eps[p + 1]
        if a.crossing == b.crossing:
            raise MoveError(f"R3 pair at {p} is a kink")
        crossings.update((a.crossing, b.crossing))
        n_over = (a.role == "O") + (b.role == "O")
        key = {2: "T", 1: "M", 0: "B"}[n_over]
        if key in by_role:
            raise MoveError("R3 needs one Over-Over, one mixed and one Under-Under pair")
        by_role[key] = p
    if len(crossings) != 3 or len(by_role) != 3:
        raise MoveError("R3 pairs must share exactly three crossings")
    return by_role


def _r3(k: GaussDiagram, m: Move) -> GaussDiagram:
    sites = sorted(m.sites)
    _check_range(k, sites, len(k) - 2)
    if any(b - a < 2 for a, b in zip(sites, sites[1:])):
        raise MoveError("R3 pairs overlap")
    eps = k.endpoints
    seg = _r3_roles(k, sites)

    def crossings_on(key):
        p = seg[key]
        return eps[p].crossing, eps[p + 1].crossing

    t_pair, m_pair, b_pair = crossings_on("T"), crossings_on("M"), crossings_on("B")
    tm = (set(t_pair) & set(m_pair)).pop()
    tb = (set(t_pair) & set(b_pair)).pop()
    mb = (set(m_pair) & set(b_pair)).pop()
    # the M segment holds the head of tm and the tail of mb
    p_m = seg["M"]
    if {(e.crossing, e.role) for e in eps[p_m:p_m + 2]} != {(tm, "U"), (mb, "O")}:
        raise MoveError("R3 mixed pair has the wrong orientation")

    sign = {c: s for c, s in enumerate(k.signs(), start=1)}
    o_t = 1 if t_pair[0] == tm else -1
    o_m = 1 if m_pair[0] == tm else -1
    o_b = 1 if b_pair[0] == tb else -1
    if sign[tm] * sign[tb] != o_m * o_b or sign[tm] * sign[mb] != o_t * o_b:
        raise MoveError("R3 signs and orders do not form a Reidemeister triangle")

    out = list(eps)
    for p in sites:
        out[p], out[p + 1] = out[p + 1], out[p]
    return GaussDiagram.from_endpoints(out)


def _oc(k: GaussDiagram, m: Move) -> GaussDiagram:
    (p,) = m.sites
    _check_range(k, (p,), len(k) - 2)
    a, b = k.endpoints[p], k.endpoints[p + 1]
    if a.role != "O" or b.role != "O" or a.crossing == b.crossing:
        raise MoveError(f"OC needs two adjacent Over endpoints of distinct crossings at {p}")
    out = list(k.endpoints)
    out[p], out[p + 1] = b, a
    return GaussDiagram.from_endpoints(out)


def _r1s_spin(k: GaussDiagram, m: Move) -> GaussDiagram:
    p, step = m.sites
    _check_range(k, (p,), len(k) - 2)
    eps = list(k.endpoints)
    if eps[p].crossing != eps[p + 1].crossing:
        raise MoveError(f"no isolated kink at {p}")
    kink = eps[p:p + 2]
    if step > 0:
        if p + 2 >= len(eps):
            raise MoveError("kink is already at the right end")
        out = eps[:p] + [eps[p + 2]] + kink + eps[p + 3:]
    else:
        if p == 0:
            raise MoveError("kink is already at the left end")
        out = eps[:p - 1] + kink + [eps[p - 1]] + eps[p + 2:]
    return GaussDiagram.from_endpoints(out)


_APPLY = {
    R2_INSERT: _r2_insert,
    R2_DELETE: _r2_delete,
    R3: _r3,
    OC: _oc,
    R1S_SPIN: _r1s_spin,
}


def apply_move(k: GaussDiagram, m: Move) -> GaussDiagram:
    """Rewrite k by m; virtual moves leave a Gauss diagram unchanged."""
    if m.kind in VIRTUAL_KINDS:
        return k
    out = _APPLY[m.kind](k, m)
    logger.debug("%s at %s: %d -> %d crossings", m.kind, m.sites, k.n_crossings, out.n_crossings)
    return out


def _matches(k: GaussDiagram, m: Move) -> bool:
    try:
        apply_move(k, m)
    except MoveError:
        return False
    return True


def find_moves(k: GaussDiagram, kind: str) -> List[Move]:
    """All sites where a move of the given kind applies (R2-insert excluded)."""
    n = len(k)
    if kind == R2_DELETE:
        candidates = [Move(kind, (p, q)) for p in range(n - 1) for q in range(n - 1)]
    elif kind == R3:
        pairs = range(n - 1)
        candidates = [
            Move(kind, s) for s in combinations(pairs, 3)
            if s[1] - s[0] >= 2 and s[2] - s[1] >= 2
        ]
    elif kind == OC:
        candidates = [Move(kind, (p,)) for p in range(n - 1)]
    elif kind == R1S_SPIN:
        candidates = [Move(kind, (p, d)) for p in range(n - 1) for d in (1, -1)]
    else:
        raise MoveError(f"cannot enumerate sites for {kind!r}")
    return [m for m in candidates if _matches(k, m)]
