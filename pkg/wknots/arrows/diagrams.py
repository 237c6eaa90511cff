# wknots/arrows/diagrams.py
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from wknots.config import settings
from wknots.errors import WKnotsError

logger = logging.getLogger("wknots.arrows")

# A line or circle diagram is a tuple of signed arrow ids in skeleton order:
# +k is the tail of arrow k, -k its head. Arrows are numbered by first appearance.
LineKey = Tuple[int, ...]
# A strand diagram is a word of letters (i, j): an arrow from strand i to strand j.
StrandKey = Tuple[Tuple[int, int], ...]
DiagramKey = Union[LineKey, StrandKey]


class ArrowCalculusError(WKnotsError):
    """Base exception for arrow-diagram computations."""


class EnumerationCapError(ArrowCalculusError):
    """Raised when a degree exceeds the configured enumeration cap."""


class SkeletonMismatchError(ArrowCalculusError):
    """Raised when combining diagrams that live on different skeleta."""


class UnsupportedSpaceError(ArrowCalculusError):
    """Raised for a skeleton/space pairing that is not implemented."""


# -------------------------------
# Spaces and skeleta
# -------------------------------


class SpaceKind(str, Enum):
    V = "v"
    SV = "sv"
    RV = "rv"
    W = "w"
    SW = "sw"
    RW = "rw"

    @property
    def is_w(self) -> bool:
        return self.value.endswith("w")

    @property
    def ri(self) -> bool:
        return self.value.startswith("s")

    @property
    def fi(self) -> bool:
        return self.value.startswith("r")

    @classmethod
    def parse(cls, value: Union[str, "SpaceKind"]) -> "SpaceKind":
        try:
            return cls(value)
        except ValueError as exc:
            raise UnsupportedSpaceError(f"unknown space {value!r}") from exc


@dataclass(frozen=True)
class Skeleton:
    kind: str  # "line" | "circle" | "strands"
    n: int = 1

    def __post_init__(self):
        if self.kind not in ("line", "circle", "strands"):
            raise ArrowCalculusError(f"unknown skeleton kind {self.kind!r}")
        if self.n < 1:
            raise ArrowCalculusError("Strands(n) needs n >= 1")
        if self.kind != "strands" and self.n != 1:
            raise ArrowCalculusError("line and circle skeleta have one component")

    @classmethod
    def strands(cls, n: int) -> "Skeleton":
        return cls("strands", n)

    @classmethod
    def parse(cls, text: str) -> "Skeleton":
        text = text.strip().lower()
        if text in ("line", "longline"):
            return LONG_LINE
        if text == "circle":
            return CIRCLE
        m = re.fullmatch(r"strands\((\d+)\)|strands:(\d+)", text)
        if m:
            return cls.strands(int(m.group(1) or m.group(2)))
        raise ArrowCalculusError(f"unknown skeleton {text!r}")

    def __str__(self) -> str:
        return f"Strands({self.n})" if self.kind == "strands" else self.kind


LONG_LINE = Skeleton("line")
CIRCLE = Skeleton("circle")


def enumeration_cap(sk: Skeleton, space: SpaceKind) -> int:
    if sk.kind == "circle":
        return settings.max_degree_circle
    if sk.kind == "strands":
        return settings.max_degree_strands
    return settings.line_cap(space.value)


def check_cap(sk: Skeleton, space: SpaceKind, m: int) -> None:
    if m < 0:
        raise ArrowCalculusError(f"degree must be >= 0, got {m}")
    cap = enumeration_cap(sk, space)
    if m > cap:
        raise EnumerationCapError(
            f"degree {m} exceeds the enumeration cap {cap} for {sk} / {space.value}"
        )


# -------------------------------
# Line / circle keys
# -------------------------------


def renumber(tokens: Iterable[int]) -> LineKey:
    mapping: Dict[int, int] = {}
    out = []
    for t in tokens:
        a = abs(t)
        if a not in mapping:
            mapping[a] = len(mapping) + 1
        out.append(mapping[a] if t > 0 else -mapping[a])
    return tuple(out)


def tc_canonical(tokens: LineKey) -> LineKey:
    """Representative of the tails-commute class: every run of adjacent tails sorted by head position."""
    head_at = {-t: i for i, t in enumerate(tokens) if t < 0}
    out = list(tokens)
    i = 0
    while i < len(out):
        if out[i] < 0:
            i += 1
            continue
        j = i
        while j < len(out) and out[j] > 0:
            j += 1
        out[i:j] = sorted(out[i:j], key=head_at.__getitem__)
        i = j
    return renumber(out)


def rotations(tokens: LineKey) -> Iterator[LineKey]:
    for r in range(len(tokens)):
        yield tokens[r:] + tokens[:r]


def circle_key(tokens: Iterable[int]) -> LineKey:
    """Minimal rotation after renumbering."""
    tokens = tuple(tokens)
    if not tokens:
        return ()
    return min(renumber(rot) for rot in rotations(tokens))


def circle_tc_key(tokens: Iterable[int]) -> LineKey:
    """Tails-commute class on the circle: cut only where no tail run is split."""
    tokens = tuple(tokens)
    n = len(tokens)
    if not n:
        return ()
    best = None
    for r in range(n):
        if tokens[r - 1] > 0 and tokens[r] > 0:
            continue
        cand = tc_canonical(renumber(tokens[r:] + tokens[:r]))
        if best is None or cand < best:
            best = cand
    return best


def line_degree(tokens: LineKey) -> int:
    return len(tokens) // 2


def format_tokens(tokens: LineKey) -> str:
    return " ".join(f"T{t}" if t > 0 else f"H{-t}" for t in tokens)


_TOKEN_RE = re.compile(r"^([HT])(\d+)$")


def parse_tokens(text: str) -> LineKey:
    """Parse 'T1 H2 H1 T2' into a canonical key."""
    out = []
    for pos, tok in enumerate(text.split()):
        m = _TOKEN_RE.match(tok)
        if not m:
            raise ArrowCalculusError(f"token {pos}: malformed diagram token {tok!r}")
        k = int(m.group(2))
        out.append(k if m.group(1) == "T" else -k)
    for a in {abs(t) for t in out}:
        if sorted(t for t in out if abs(t) == a) != [-a, a]:
            raise ArrowCalculusError(f"arrow {a} needs exactly one head and one tail")
    return renumber(out)


def insert_tokens(base: LineKey, placements: Iterable[Tuple[int, LineKey]]) -> LineKey:
    """
    Insert token segments into gaps of base (gap g sits before base[g]).
    Segments at the same gap are placed in the given order. Segment ids must
    not clash with base ids; the result is renumbered.
    """
    by_gap: Dict[int, List[int]] = {}
    for gap, seg in placements:
        by_gap.setdefault(gap, []).extend(seg)
    out: List[int] = []
    for g in range(len(base) + 1):
        out.extend(by_gap.get(g, ()))
        if g < len(base):
            out.append(base[g])
    return renumber(out)


def enumerate_line(m: int) -> List[LineKey]:
    """All (2m)!/m! arrow diagrams of degree m on a long line."""
    out: List[LineKey] = []

    def rec(seq: List[int], next_id: int, open_ends: Dict[int, int]):
        if len(seq) == 2 * m:
            out.append(tuple(seq))
            return
        for a, first in list(open_ends.items()):
            del open_ends[a]
            seq.append(-first)
            rec(seq, next_id, open_ends)
            seq.pop()
            open_ends[a] = first
        if next_id <= m:
            for first in (next_id, -next_id):
                open_ends[next_id] = first
                seq.append(first)
                rec(seq, next_id + 1, open_ends)
                seq.pop()
                del open_ends[next_id]

    rec([], 1, {})
    return sorted(out)


# -------------------------------
# Strand keys
# -------------------------------


def _commute(a: Tuple[int, int], b: Tuple[int, int], tails_commute: bool) -> bool:
    if not ({a[0], a[1]} & {b[0], b[1]}):
        return True
    return tails_commute and a[0] == b[0] and a[1] != b[1]


def trace_normal_form(word: Iterable[Tuple[int, int]], tails_commute: bool = False) -> StrandKey:
    """Lexicographic normal form in the partially commutative monoid."""
    rest = list(word)
    out = []
    while rest:
        best = None
        for idx, letter in enumerate(rest):
            if best is not None and letter >= rest[best]:
                continue
            if all(_commute(letter, rest[k], tails_commute) for k in range(idx)):
                best = idx
        out.append(rest.pop(best))
    return tuple(out)


def strand_letters(n: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def enumerate_strand_words(n: int, m: int, tails_commute: bool = False) -> List[StrandKey]:
    words = {()}
    letters = strand_letters(n)
    for _ in range(m):
        words = {trace_normal_form(w + (x,), tails_commute) for w in words for x in letters}
    return sorted(words)


def format_word(word: StrandKey) -> str:
    return " ".join(f"a{i}{j}" if max(i, j) < 10 else f"a{i},{j}" for i, j in word) or "1"


_ARROW_RE = re.compile(r"^a(?:(\d)(\d)|(\d+),(\d+))$")


def parse_strand_word(text: str) -> StrandKey:
    """Inverse of format_word: 'a12 a31' or 'a10,2'; '1' is the empty word."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    letters = []
    for pos, tok in enumerate(text.split()):
        m = _ARROW_RE.match(tok)
        if not m:
            raise ArrowCalculusError(f"token {pos}: malformed arrow {tok!r}")
        i, j = (int(g) for g in m.groups() if g is not None)
        if i == j:
            raise ArrowCalculusError(f"token {pos}: arrow {tok!r} starts and ends on one strand")
        letters.append((i, j))
    return trace_normal_form(letters)


# -------------------------------
# Dispatch on skeleton / space
# -------------------------------


def plain_key(sk: Skeleton, key) -> DiagramKey:
    """Key under the relations every space imposes (renumbering, rotation, far commutativity)."""
    if sk.kind == "line":
        return renumber(key)
    if sk.kind == "circle":
        return circle_key(key)
    return trace_normal_form(key)


def class_key(sk: Skeleton, space: SpaceKind, key) -> DiagramKey:
    """Key modulo the tails-commute relation in w-spaces, plain key otherwise."""
    if not space.is_w:
        return plain_key(sk, key)
    if sk.kind == "line":
        return tc_canonical(renumber(key))
    if sk.kind == "circle":
        return circle_tc_key(key)
    return trace_normal_form(key, tails_commute=True)


def key_degree(sk: Skeleton, key: DiagramKey) -> int:
    return len(key) if sk.kind == "strands" else len(key) // 2


def enumerate_diagrams(sk: Skeleton, space: Union[SpaceKind, str], m: int) -> List[DiagramKey]:
    """All canonical diagrams of degree m before relations (tails are not commuted)."""
    space = SpaceKind.parse(space)
    check_cap(sk, space, m)
    if sk.kind == "line":
        out = enumerate_line(m)
    elif sk.kind == "circle":
        out = sorted({circle_key(k) for k in enumerate_line(m)})
    else:
        if space.ri or space.fi:
            raise UnsupportedSpaceError(f"{space.value} is only defined on line and circle skeleta")
        out = enumerate_strand_words(sk.n, m)
    logger.debug("Enumerated %d diagrams on %s in degree %d", len(out), sk, m)
    return out


def enumerate_classes(sk: Skeleton, space: SpaceKind, m: int) -> List[DiagramKey]:
    """Class keys of degree m; for w-spaces these are tails-commute classes."""
    if not space.is_w:
        return enumerate_diagrams(sk, space, m)
    check_cap(sk, space, m)
    if sk.kind == "strands":
        if space.ri or space.fi:
            raise UnsupportedSpaceError(f"{space.value} is only defined on line and circle skeleta")
        return enumerate_strand_words(sk.n, m, tails_commute=True)
    return sorted({class_key(sk, space, k) for k in enumerate_line(m)})


# -------------------------------
# Combinations
# -------------------------------


Scalar = Union[int, Fraction]


class ArrowCombination:
    """
    Rational combination of diagrams on one skeleton.

    degree is the truncation: terms above it are dropped by every operation.
    None means untruncated.
    """

    __slots__ = ("skeleton", "terms", "degree")

    def __init__(
        self,
        skeleton: Skeleton,
        terms: Optional[Mapping[DiagramKey, Scalar]] = None,
        degree: Optional[int] = None,
        canonical: bool = False,
    ):
        self.skeleton = skeleton
        self.degree = degree
        self.terms: Dict[DiagramKey, Fraction] = {}
        for key, coef in (terms or {}).items():
            if not canonical:
                key = plain_key(skeleton, key)
            self._add(key, Fraction(coef))

    def _add(self, key: DiagramKey, coef: Fraction) -> None:
        if not coef:
            return
        if self.degree is not None and key_degree(self.skeleton, key) > self.degree:
            return
        new = self.terms.get(key, 0) + coef
        if new:
            self.terms[key] = new
        else:
            self.terms.pop(key, None)

    @classmethod
    def zero(cls, skeleton: Skeleton, degree: Optional[int] = None) -> "ArrowCombination":
        return cls(skeleton, {}, degree)

    @classmethod
    def unit(cls, skeleton: Skeleton, degree: Optional[int] = None) -> "ArrowCombination":
        return cls(skeleton, {(): 1}, degree, canonical=True)

    @classmethod
    def single(cls, skeleton: Skeleton, key, coef: Scalar = 1, degree: Optional[int] = None):
        return cls(skeleton, {key: coef}, degree)

    def _check(self, other: "ArrowCombination") -> None:
        if self.skeleton != other.skeleton:
            raise SkeletonMismatchError(f"{self.skeleton} vs {other.skeleton}")

    def _min_degree(self, other: "ArrowCombination") -> Optional[int]:
        degs = [d for d in (self.degree, other.degree) if d is not None]
        return min(degs) if degs else None

    def copy(self, degree: Optional[int] = None) -> "ArrowCombination":
        out = ArrowCombination(self.skeleton, degree=self.degree if degree is None else degree)
        for k, v in self.terms.items():
            out._add(k, v)
        return out

    def truncate(self, degree: int) -> "ArrowCombination":
        return self.copy(degree)

    def __add__(self, other: "ArrowCombination") -> "ArrowCombination":
        self._check(other)
        out = ArrowCombination(self.skeleton, degree=self._min_degree(other))
        for k, v in self.terms.items():
            out._add(k, v)
        for k, v in other.terms.items():
            out._add(k, v)
        return out

    def __neg__(self) -> "ArrowCombination":
        return self.scale(-1)

    def __sub__(self, other: "ArrowCombination") -> "ArrowCombination":
        return self + (-other)

    def scale(self, c: Scalar) -> "ArrowCombination":
        c = Fraction(c)
        out = ArrowCombination(self.skeleton, degree=self.degree)
        if c:
            out.terms = {k: v * c for k, v in self.terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return concat(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ArrowCombination):
            return NotImplemented
        return self.skeleton == other.skeleton and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def graded_part(self, m: int) -> "ArrowCombination":
        return ArrowCombination(
            self.skeleton,
            {k: v for k, v in self.terms.items() if key_degree(self.skeleton, k) == m},
            self.degree,
            canonical=True,
        )

    def max_degree(self) -> int:
        return max((key_degree(self.skeleton, k) for k in self.terms), default=0)

    def map_keys(self, fn: Callable[[DiagramKey], DiagramKey], skeleton: Optional[Skeleton] = None):
        out = ArrowCombination(skeleton or self.skeleton, degree=self.degree)
        for k, v in self.terms.items():
            out._add(fn(k), v)
        return out

    def format_key(self, key: DiagramKey) -> str:
        if self.skeleton.kind == "strands":
            return format_word(key)
        return format_tokens(key) or "1"

    def to_dict(self) -> Dict[str, str]:
        return {self.format_key(k): str(v) for k, v in sorted(self.terms.items())}

    def __repr__(self) -> str:
        body = " + ".join(f"({v})[{self.format_key(k)}]" for k, v in sorted(self.terms.items()))
        return f"ArrowCombination({self.skeleton}, {body or '0'})"


def concat(a: ArrowCombination, b: ArrowCombination) -> ArrowCombination:
    """Stack b after a along the skeleton (line: b to the right; strands: b on top)."""
    a._check(b)
    if a.skeleton.kind == "circle":
        raise UnsupportedSpaceError("diagrams on a circle cannot be concatenated")
    out = ArrowCombination(a.skeleton, degree=a._min_degree(b))
    for ka, va in a.terms.items():
        for kb, vb in b.terms.items():
            if out.degree is not None and key_degree(a.skeleton, ka) + key_degree(a.skeleton, kb) > out.degree:
                continue
            if a.skeleton.kind == "line":
                shift = len(ka) // 2
                key = ka + tuple(t + shift if t > 0 else t - shift for t in kb)
            else:
                key = trace_normal_form(ka + kb)
            out._add(key, va * vb)
    return out


def close_to_circle(c: ArrowCombination) -> ArrowCombination:
    """Close a long-line combination into a circle combination."""
    if c.skeleton.kind != "line":
        raise SkeletonMismatchError("only long-line combinations can be closed")
    return c.map_keys(circle_key, CIRCLE)


def d_l() -> ArrowCombination:
    return ArrowCombination.single(LONG_LINE, (-1, 1))


def d_r() -> ArrowCombination:
    return ArrowCombination.single(LONG_LINE, (1, -1))
