# wknots/knots/free_group.py
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from .braids import BraidWord, StrandMismatchError
from .gauss import KnotObjectError

_GEN_RE = re.compile(r"\s*x(\d+)(\^-1)?\s*")


class FreeWordError(KnotObjectError):
    """Raised for malformed free-group words."""


def _reduce(letters: Iterable[int]) -> Tuple[int, ...]:
    stack: List[int] = []
    for g in letters:
        if stack and stack[-1] == -g:
            stack.pop()
        else:
            stack.append(g)
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    """
    Reduced word in the free group on x_1..x_n.
    Letters are signed generator indices: 2 is x_2, -2 is x_2^-1.
    """

    n_generators: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        for g in self.letters:
            if g == 0 or abs(g) > self.n_generators:
                raise FreeWordError(f"generator {g} outside 1..{self.n_generators}")
        if _reduce(self.letters) != self.letters:
            raise FreeWordError("word is not reduced")

    @classmethod
    def make(cls, n_generators: int, letters: Iterable[int]) -> "FreeWord":
        return cls(n_generators, _reduce(letters))

    @classmethod
    def generator(cls, n_generators: int, i: int) -> "FreeWord":
        return cls(n_generators, (i,))

    @classmethod
    def parse(cls, n_generators: int, text: str) -> "FreeWord":
        """Tokens x<i> or x<i>^-1; '1' or an empty string is the identity."""
        text = text.strip()
        if text in ("", "1", "e"):
            return cls(n_generators, ())
        letters = []
        pos = 0
        while pos < len(text):
            m = _GEN_RE.match(text, pos)
            if not m:
                raise FreeWordError(f"cannot parse free word at {text[pos:]!r}")
            g = int(m.group(1))
            letters.append(-g if m.group(2) else g)
            pos = m.end()
        return cls.make(n_generators, letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord.make(self.n_generators, self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.n_generators, tuple(-g for g in reversed(self.letters)))

    def substitute(self, images: Dict[int, "FreeWord"]) -> "FreeWord":
        """Apply the endomorphism x_i -> images[i] (missing generators are fixed)."""
        out: List[int] = []
        for g in self.letters:
            image = images.get(abs(g))
            if image is None:
                out.append(g)
            else:
                out.extend(image.letters if g > 0 else image.inverse().letters)
        return FreeWord.make(self.n_generators, out)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{g}" if g > 0 else f"x{-g}^-1" for g in self.letters)


def _letter_images(n: int, kind: str, i: int) -> Dict[int, FreeWord]:
    a, b = i, i + 1
    if kind == "v":
        return {a: FreeWord(n, (b,)), b: FreeWord(n, (a,))}
    if kind == "p":
        return {a: FreeWord(n, (b,)), b: FreeWord.make(n, (b, a, -b))}
    # inverse automorphism of the sigma_i substitution
    return {a: FreeWord.make(n, (-a, b, a)), b: FreeWord(n, (a,))}


def braid_act(w: FreeWord, b: BraidWord) -> FreeWord:
    """Right action of wB_n on F_n: letters of b are applied bottom to top."""
    if w.n_generators != b.n_strands:
        raise StrandMismatchError(
            f"word on {w.n_generators} generators, braid on {b.n_strands} strands"
        )
    for kind, i in b.letters:
        w = w.substitute(_letter_images(b.n_strands, kind, i))
    return w
