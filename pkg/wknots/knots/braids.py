# wknots/knots/braids.py
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import List, NamedTuple, Tuple

from .gauss import KnotObjectError

logger = logging.getLogger("wknots.knots.braids")

# letter kinds: v = virtual crossing s_i, p = sigma_i, m = sigma_i^-1
LETTER_KINDS = ("v", "p", "m")
_LETTER_RE = re.compile(r"\s*([vpm])(\d+)\s*")

Permutation = Tuple[int, ...]


class BraidError(KnotObjectError):
    """Base exception for braid-word failures."""


class StrandMismatchError(BraidError):
    """Raised when two braids (or a braid and a word) have different strand counts."""


class Letter(NamedTuple):
    kind: str
    index: int

    def code(self) -> str:
        return f"{self.kind}{self.index}"


_INVERSE_KIND = {"v": "v", "p": "m", "m": "p"}


@dataclass(frozen=True)
class BraidWord:
    """A word in s_i, sigma_i and sigma_i^-1, read from bottom to top."""

    n_strands: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.n_strands < 1:
            raise BraidError("a braid needs at least one strand")
        for pos, (kind, i) in enumerate(self.letters):
            if kind not in LETTER_KINDS:
                raise BraidError(f"letter {pos}: unknown kind {kind!r}")
            if not 1 <= i <= self.n_strands - 1:
                raise BraidError(
                    f"letter {pos}: index {i} outside 1..{self.n_strands - 1}"
                )

    @classmethod
    def parse(cls, n_strands: int, text: str) -> "BraidWord":
        """Parse v<i> / p<i> / m<i> tokens; separators are optional."""
        letters = []
        pos = 0
        while pos < len(text):
            m = _LETTER_RE.match(text, pos)
            if not m:
                if text[pos:].strip() == "":
                    break
                raise BraidError(f"cannot parse braid word at {text[pos:]!r}")
            letters.append(Letter(m.group(1), int(m.group(2))))
            pos = m.end()
        return cls(n_strands, tuple(letters))

    @classmethod
    def identity(cls, n_strands: int) -> "BraidWord":
        return cls(n_strands, ())

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return braid_compose(self, other)

    def to_code(self) -> str:
        return " ".join(letter.code() for letter in self.letters)

    def __str__(self) -> str:
        return self.to_code() or "1"


def word(n_strands: int, *letters: str) -> BraidWord:
    """Shorthand: word(3, "p1", "m2")."""
    return BraidWord.parse(n_strands, " ".join(letters))


def braid_compose(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.n_strands != b.n_strands:
        raise StrandMismatchError(f"cannot compose {a.n_strands} and {b.n_strands} strands")
    return BraidWord(a.n_strands, a.letters + b.letters)


def braid_invert(a: BraidWord) -> BraidWord:
    return BraidWord(
        a.n_strands,
        tuple(Letter(_INVERSE_KIND[k], i) for k, i in reversed(a.letters)),
    )


# -------------------------------
# Skeleton permutations
# -------------------------------


def identity_perm(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def compose_perms(first: Permutation, then: Permutation) -> Permutation:
    """Left-to-right product: position i goes through first, then through then."""
    return tuple(then[first[i] - 1] for i in range(len(first)))


def invert_perm(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, image in enumerate(p, start=1):
        out[image - 1] = i
    return tuple(out)


def transposition(n: int, i: int) -> Permutation:
    p = list(range(1, n + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def skeleton_perm(a: BraidWord) -> Permutation:
    """Image under the skeleton map; entry i-1 is the top position of the strand starting at i."""
    perm = identity_perm(a.n_strands)
    for _, i in a.letters:
        perm = compose_perms(perm, transposition(a.n_strands, i))
    return perm


# -------------------------------
# Strand operations on words
# -------------------------------


def delete_strand(a: BraidWord, k: int) -> BraidWord:
    """Remove the strand that starts at bottom position k, with every letter it takes part in."""
    if not 1 <= k <= a.n_strands:
        raise BraidError(f"strand {k} outside 1..{a.n_strands}")
    if a.n_strands == 1:
        raise BraidError("cannot delete the only strand")
    arrangement = list(range(1, a.n_strands + 1))
    out: List[Letter] = []
    for kind, i in a.letters:
        left, right = arrangement[i - 1], arrangement[i]
        if k not in (left, right):
            pos_k = arrangement.index(k) + 1
            out.append(Letter(kind, i - 1 if pos_k < i else i))
        arrangement[i - 1], arrangement[i] = right, left
    return BraidWord(a.n_strands - 1, tuple(out))


def unzip_strand(a: BraidWord, k: int) -> BraidWord:
    """
    Double the strand that starts at bottom position k.

    Each crossing with another strand becomes two crossings of the same kind,
    the daughter nearer the other strand crossing first.
    """
    if not 1 <= k <= a.n_strands:
        raise BraidError(f"strand {k} outside 1..{a.n_strands}")
    arrangement = list(range(1, a.n_strands + 1))
    out: List[Letter] = []
    for kind, i in a.letters:
        left, right = arrangement[i - 1], arrangement[i]
        pos_k = arrangement.index(k) + 1
        if left == k:
            out += [Letter(kind, i + 1), Letter(kind, i)]
        elif right == k:
            out += [Letter(kind, i), Letter(kind, i + 1)]
        else:
            out.append(Letter(kind, i + 1 if pos_k < i else i))
        arrangement[i - 1], arrangement[i] = right, left
    return BraidWord(a.n_strands + 1, tuple(out))


def insert_strand(a: BraidWord, k: int) -> BraidWord:
    """
    Add a strand at position k that stays there; crossings that straddle it
    are conjugated by virtual crossings.
    """
    if not 1 <= k <= a.n_strands + 1:
        raise BraidError(f"insertion position {k} outside 1..{a.n_strands + 1}")
    out: List[Letter] = []
    for kind, i in a.letters:
        if i + 1 < k:
            out.append(Letter(kind, i))
        elif i >= k:
            out.append(Letter(kind, i + 1))
        else:
            out += [Letter("v", k - 1), Letter(kind, k), Letter("v", k - 1)]
    return BraidWord(a.n_strands + 1, tuple(out))


# -------------------------------
# Defining relations of wB_n
# -------------------------------


@dataclass(frozen=True)
class BraidRelation:
    name: str
    lhs: BraidWord
    rhs: BraidWord


def wb_relations(n: int) -> List[BraidRelation]:
    """Every instance of the defining relations of wB_n."""
    rels: List[BraidRelation] = []

    def add(name, lhs, rhs):
        rels.append(BraidRelation(name, word(n, *lhs), word(n, *rhs)))

    for i in range(1, n):
        add(f"s{i}^2", [f"v{i}", f"v{i}"], [])
        add(f"R2+ {i}", [f"p{i}", f"m{i}"], [])
        add(f"R2- {i}", [f"m{i}", f"p{i}"], [])
        for j in range(i + 2, n):
            add(f"vv far {i},{j}", [f"v{i}", f"v{j}"], [f"v{j}", f"v{i}"])
            add(f"pp far {i},{j}", [f"p{i}", f"p{j}"], [f"p{j}", f"p{i}"])
            add(f"pv far {i},{j}", [f"p{i}", f"v{j}"], [f"v{j}", f"p{i}"])
            add(f"vp far {i},{j}", [f"v{i}", f"p{j}"], [f"p{j}", f"v{i}"])
        if i + 1 < n:
            j = i + 1
            add(f"vR3 {i}", [f"v{i}", f"v{j}", f"v{i}"], [f"v{j}", f"v{i}", f"v{j}"])
            add(f"R3 {i}", [f"p{i}", f"p{j}", f"p{i}"], [f"p{j}", f"p{i}", f"p{j}"])
            add(f"mixed {i}", [f"v{i}", f"p{j}", f"v{i}"], [f"v{j}", f"p{i}", f"v{j}"])
            add(f"OC {i}", [f"p{i}", f"p{j}", f"v{i}"], [f"v{j}", f"p{i}", f"p{j}"])
    return rels


def uc_nonrelations(n: int) -> List[BraidRelation]:
    """Undercrossings-commute instances; these are not relations of wB_n."""
    return [
        BraidRelation(
            f"UC {i}",
            word(n, f"v{i}", f"p{i + 1}", f"p{i}"),
            word(n, f"p{i + 1}", f"p{i}", f"v{i + 1}"),
        )
        for i in range(1, n - 1)
    ]
