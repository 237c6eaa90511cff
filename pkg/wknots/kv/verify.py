# wknots/kv/verify.py
"""
Independent re-check of a KV triple (D, b, c):

    hard:       exp(D^21)(x + y) = log(e^x e^y)         through degree N + 1
    unitarity:  2 b^21 + j(e^{D^21}) = 0                 through degree N
    cap:        b^21 = c(x) + c(y) - c(log(e^x e^y))      through degree N
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from wknots.at import LieElement, bch, delta_tilde, exp_derivation_action, j_exp, swap_strands

from .solver import SWAP, KVSolution

logger = logging.getLogger("wknots.kv")

EQUATIONS = ("hard", "unitarity", "cap")


@dataclass
class KVCheck:
    equation: str
    degree: int
    passed: bool
    residual: Dict[str, str] = field(default_factory=dict)


@dataclass
class KVReport:
    degree: int
    checks: List[KVCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self, equation: str) -> Optional[int]:
        return next((c.degree for c in self.checks if c.equation == equation and not c.passed), None)

    def failing(self) -> List[KVCheck]:
        return [c for c in self.checks if not c.passed]


def _per_degree(equation: str, residual, degrees) -> List[KVCheck]:
    out = []
    for k in degrees:
        part = residual.graded_part(k)
        out.append(KVCheck(equation, k, not part, part.to_dict()))
    return out


def verify_kv(sol: KVSolution) -> KVReport:
    n = sol.degree
    G = swap_strands(sol.D)
    top = n + 1

    x_plus_y = LieElement(2, top, {(1,): 1, (2,): 1})
    z = bch(LieElement.generator(2, top, 1), LieElement.generator(2, top, 2))
    hard = exp_derivation_action(G, x_plus_y) - z

    b21 = sol.b.relabel(SWAP)
    unitarity = b21.scale(2) + j_exp(G, n)
    cap = b21 - delta_tilde(sol.c.with_degree(n), n)

    checks = (
        _per_degree("hard", hard, range(1, top + 1))
        + _per_degree("unitarity", unitarity, range(1, n + 1))
        + _per_degree("cap", cap, range(1, n + 1))
    )
    report = KVReport(degree=n, checks=checks)
    if report.passed:
        logger.info("KV triple verified through degree %d", n)
    else:
        for c in report.failing():
            logger.warning("KV %s equation fails at degree %d", c.equation, c.degree)
    return report
