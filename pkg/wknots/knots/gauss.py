# wknots/knots/gauss.py
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, NamedTuple, Tuple

from wknots.errors import WKnotsError

logger = logging.getLogger("wknots.knots.gauss")

_TOKEN_RE = re.compile(r"^([OU])(\d+)([+-])$")


class KnotObjectError(WKnotsError):
    """Base exception for knot-object failures."""


class GaussCodeError(KnotObjectError):
    """Raised when a Gauss code does not describe a valid diagram."""

    def __init__(self, message: str, position: int = -1):
        self.position = position
        if position >= 0:
            message = f"token {position}: {message}"
        super().__init__(message)


class Endpoint(NamedTuple):
    crossing: int
    role: str  # "O" | "U"
    sign: int  # +1 | -1

    def code(self) -> str:
        return f"{self.role}{self.crossing}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class GaussDiagram:
    """
    Signed Gauss diagram of a long knot.

    endpoints lists the visits along the line; crossings are numbered 1..n
    in order of first appearance.
    """

    n_crossings: int
    endpoints: Tuple[Endpoint, ...] = ()

    def __post_init__(self):
        _validate(self.endpoints)
        if len({e.crossing for e in self.endpoints}) != self.n_crossings:
            raise GaussCodeError("crossing count does not match endpoints")

    @classmethod
    def from_endpoints(cls, endpoints: Iterable[Endpoint]) -> "GaussDiagram":
        eps = renumber(endpoints)
        return cls(len(eps) // 2, eps)

    def __len__(self) -> int:
        return len(self.endpoints)

    def positions(self) -> Dict[int, Tuple[int, int]]:
        """crossing -> (position of Over visit, position of Under visit)."""
        over: Dict[int, int] = {}
        under: Dict[int, int] = {}
        for pos, e in enumerate(self.endpoints):
            (over if e.role == "O" else under)[e.crossing] = pos
        return {c: (over[c], under[c]) for c in over}

    def signs(self) -> List[int]:
        out = [0] * self.n_crossings
        for e in self.endpoints:
            out[e.crossing - 1] = e.sign
        return out

    def to_code(self) -> str:
        return " ".join(e.code() for e in self.endpoints)

    def __str__(self) -> str:
        return self.to_code()


def _validate(endpoints: Tuple[Endpoint, ...]) -> None:
    seen: Dict[int, List[Tuple[int, Endpoint]]] = {}
    for pos, e in enumerate(endpoints):
        if e.role not in ("O", "U") or e.sign not in (1, -1):
            raise GaussCodeError(f"malformed endpoint {e!r}", pos)
        seen.setdefault(e.crossing, []).append((pos, e))
    for crossing, visits in seen.items():
        if len(visits) != 2:
            raise GaussCodeError(
                f"crossing {crossing} appears {len(visits)} times", visits[-1][0]
            )
        (_, a), (pos_b, b) = visits
        if {a.role, b.role} != {"O", "U"}:
            raise GaussCodeError(f"crossing {crossing} needs one O and one U visit", pos_b)
        if a.sign != b.sign:
            raise GaussCodeError(f"sign mismatch on crossing {crossing}", pos_b)


def renumber(endpoints: Iterable[Endpoint]) -> Tuple[Endpoint, ...]:
    """Relabel crossings 1..n in order of first appearance."""
    mapping: Dict[int, int] = {}
    out = []
    for e in endpoints:
        if e.crossing not in mapping:
            mapping[e.crossing] = len(mapping) + 1
        out.append(Endpoint(mapping[e.crossing], e.role, e.sign))
    return tuple(out)


def strip_comments(text: str) -> str:
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def parse_gauss_code(text: str) -> GaussDiagram:
    """Parse whitespace-separated tokens O<k><s> / U<k><s>; '#' starts a comment."""
    tokens = strip_comments(text).split()
    raw = []
    for pos, tok in enumerate(tokens):
        m = _TOKEN_RE.match(tok)
        if not m:
            raise GaussCodeError(f"malformed token {tok!r}", pos)
        role, k, s = m.groups()
        if int(k) <= 0:
            raise GaussCodeError(f"crossing id must be positive in {tok!r}", pos)
        raw.append(Endpoint(int(k), role, 1 if s == "+" else -1))
    _validate(tuple(raw))
    diagram = GaussDiagram.from_endpoints(raw)
    logger.debug("Parsed Gauss code with %d crossings", diagram.n_crossings)
    return diagram


def self_linking(k: GaussDiagram) -> int:
    """Sum of crossing signs."""
    return sum(k.signs())
