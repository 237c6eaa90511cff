# wknots/schemas/algebra.py
from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from wknots.arrows import ArrowCalculusError, ArrowCombination, Skeleton, WheelsPolynomial
from wknots.arrows.diagrams import circle_key, parse_strand_word, parse_tokens
from wknots.arrows.wheels import parse_monomial
from wknots.at import ATSpaceError, LieElement, TDerElement, TrElement
from wknots.at.lie import is_lyndon
from wknots.at.words import format_word, parse_word
from wknots.kv import KVSolution


def check_rational(value: object) -> str:
    """Rationals travel as 'p/q' (or 'n'); normalize and reject anything else."""
    try:
        return str(Fraction(str(value).strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"{value!r} is not a rational 'p/q'") from exc


def _rational_map(values: Dict[str, object]) -> Dict[str, str]:
    return {k: check_rational(v) for k, v in values.items()}


def _sorted_map(pairs) -> Dict[str, str]:
    return {k: str(v) for k, v in pairs}


def _parse_generators(text: str, n: int) -> tuple:
    try:
        word = parse_word(text)
    except ATSpaceError as exc:
        raise ValueError(str(exc)) from exc
    if not word:
        raise ValueError("words must be nonempty")
    if any(not 1 <= g <= n for g in word):
        raise ValueError(f"word {text!r} uses a generator outside x1..x{n}")
    return word


# -------------------------------
# Arrow combinations
# -------------------------------


class CombinationModel(BaseModel):
    """An ArrowCombination on one skeleton, keyed by diagram tokens."""

    model_config = ConfigDict(extra="forbid")

    skeleton: str = Field(..., description="'line', 'circle' or 'Strands(n)'.")
    degree: Optional[int] = Field(default=None, ge=0, description="Truncation degree; null if untruncated.")
    terms: Dict[str, str] = Field(
        default_factory=dict,
        description="Diagram key ('T1 H1', 'a12 a21', '1') to coefficient 'p/q'.",
    )

    @field_validator("skeleton")
    @classmethod
    def validate_skeleton(cls, v: str) -> str:
        try:
            return str(Skeleton.parse(v))
        except ArrowCalculusError as exc:
            raise ValueError(str(exc)) from exc

    @field_validator("terms", mode="before")
    @classmethod
    def validate_terms(cls, v):
        return _rational_map(v)

    @model_validator(mode="after")
    def validate_keys(self) -> "CombinationModel":
        for key in self.terms:
            self._parse_key(key)
        return self

    def _parse_key(self, text: str):
        sk = Skeleton.parse(self.skeleton)
        try:
            if sk.kind == "strands":
                word = parse_strand_word(text)
                if any(max(letter) > sk.n for letter in word):
                    raise ValueError(f"{text!r} uses a strand outside 1..{sk.n}")
                return word
            tokens = () if text.strip() == "1" else parse_tokens(text)
            return circle_key(tokens) if sk.kind == "circle" else tokens
        except ArrowCalculusError as exc:
            raise ValueError(str(exc)) from exc

    @classmethod
    def from_combination(cls, c: ArrowCombination) -> "CombinationModel":
        return cls(skeleton=str(c.skeleton), degree=c.degree, terms=c.to_dict())

    def to_combination(self) -> ArrowCombination:
        terms = {self._parse_key(k): Fraction(v) for k, v in self.terms.items()}
        return ArrowCombination(Skeleton.parse(self.skeleton), terms, self.degree)


class WheelsPolynomialModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    degree: Optional[int] = Field(default=None, ge=0)
    terms: Dict[str, str] = Field(
        default_factory=dict,
        description="Monomial 'DA^a w2^m2 ...' ('1' for the unit) to coefficient 'p/q'.",
    )

    @field_validator("terms", mode="before")
    @classmethod
    def validate_terms(cls, v):
        out = _rational_map(v)
        for key in out:
            try:
                parse_monomial(key)
            except ValueError as exc:
                raise ValueError(f"bad wheels monomial {key!r}") from exc
        return out

    @classmethod
    def from_wheels(cls, p: WheelsPolynomial) -> "WheelsPolynomialModel":
        return cls(degree=p.degree, terms=p.to_dict())

    def to_wheels(self) -> WheelsPolynomial:
        return WheelsPolynomial({parse_monomial(k): Fraction(v) for k, v in self.terms.items()}, self.degree)


# -------------------------------
# KV solutions
# -------------------------------


class KVSolutionModel(BaseModel):
    """
    A KV triple. D is a pair of maps from Lyndon words ('x1 x1 x2' meaning
    [x1,[x1,x2]]) to coefficients; b and c map cyclic words to coefficients.
    """

    model_config = ConfigDict(extra="forbid")

    N: int = Field(..., ge=1, description="Truncation degree.")
    D: List[Dict[str, str]] = Field(..., min_length=2, max_length=2, description="Components of D in tder_2.")
    b: Dict[str, str] = Field(default_factory=dict, description="b in tr_2.")
    c: Dict[str, str] = Field(default_factory=dict, description="c in tr_1.")

    @field_validator("D", mode="before")
    @classmethod
    def validate_d(cls, v):
        out = []
        for comp in v:
            comp = _rational_map(comp)
            for key in comp:
                word = _parse_generators(key, 2)
                if not is_lyndon(word):
                    raise ValueError(f"{key!r} is not a Lyndon word")
            out.append(comp)
        return out

    @field_validator("b", mode="before")
    @classmethod
    def validate_b(cls, v):
        out = _rational_map(v)
        for key in out:
            _parse_generators(key, 2)
        return out

    @field_validator("c", mode="before")
    @classmethod
    def validate_c(cls, v):
        out = _rational_map(v)
        for key in out:
            _parse_generators(key, 1)
        return out

    @classmethod
    def from_solution(cls, sol: KVSolution) -> "KVSolutionModel":
        comps = [
            _sorted_map((format_word(w), c) for w, c in sorted(a.coeffs.items(), key=lambda t: (len(t[0]), t[0])))
            for a in sol.D.components
        ]
        return cls(N=sol.degree, D=comps, b=sol.b.to_dict(), c=sol.c.to_dict())

    def to_solution(self) -> KVSolution:
        n = self.N
        comps = [LieElement(2, n, {parse_word(k): Fraction(v) for k, v in comp.items()}) for comp in self.D]
        return KVSolution(
            degree=n,
            D=TDerElement(2, n, comps),
            b=TrElement.from_dict(2, n, self.b),
            c=TrElement.from_dict(1, n, self.c),
        )
