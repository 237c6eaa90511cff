# wknots/arrows/jacobi.py
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .diagrams import LONG_LINE, ArrowCalculusError, ArrowCombination, renumber

logger = logging.getLogger("wknots.arrows.jacobi")

SkeletonEnd = Tuple[int, str]  # (edge, "T" | "H")
Vertex = Tuple[int, int, int]  # (left input, right input, output)
TreeExpr = Union[str, Tuple["TreeExpr", "TreeExpr"]]

ORDERS = ("leftmost", "rightmost")


class STUEliminationError(ArrowCalculusError):
    """Raised when internal vertices cannot be removed through the skeleton."""


class JacobiDiagramError(ArrowCalculusError):
    """Raised for inconsistent edge bookkeeping."""


@dataclass(frozen=True)
class JacobiDiagram:
    """
    A w-Jacobi diagram on a long line.

    skeleton lists edge ends along the line: (e, "T") where edge e starts and
    (e, "H") where it ends. Each internal vertex has two incoming edges, stored
    as (left, right), and one outgoing edge.
    """

    skeleton: Tuple[SkeletonEnd, ...]
    vertices: Tuple[Vertex, ...] = ()

    def __post_init__(self):
        starts: Dict[int, int] = {}
        ends: Dict[int, int] = {}
        for e, role in self.skeleton:
            if role not in ("T", "H"):
                raise JacobiDiagramError(f"bad skeleton end {(e, role)!r}")
            bucket = starts if role == "T" else ends
            bucket[e] = bucket.get(e, 0) + 1
        for left, right, out in self.vertices:
            for e in (left, right):
                ends[e] = ends.get(e, 0) + 1
            starts[out] = starts.get(out, 0) + 1
        edges = set(starts) | set(ends)
        for e in edges:
            if starts.get(e) != 1 or ends.get(e) != 1:
                raise JacobiDiagramError(f"edge {e} must start once and end once")

    @property
    def degree(self) -> int:
        return (len(self.vertices) + len(self.skeleton)) // 2

    def swap_inputs(self, v: int) -> "JacobiDiagram":
        vs = list(self.vertices)
        left, right, out = vs[v]
        vs[v] = (right, left, out)
        return JacobiDiagram(self.skeleton, tuple(vs))

    def arrow_key(self):
        """Line key of a diagram without internal vertices."""
        if self.vertices:
            raise JacobiDiagramError("diagram still has internal vertices")
        return renumber(e if role == "T" else -e for e, role in self.skeleton)


def _contact_positions(j: JacobiDiagram) -> List[int]:
    into = {e for v in j.vertices for e in v[:2]}
    out_of = {v[2] for v in j.vertices}
    return [
        p for p, (e, role) in enumerate(j.skeleton)
        if (role == "H" and e in out_of) or (role == "T" and e in into)
    ]


def _stu_step(j: JacobiDiagram, p: int) -> List[Tuple[int, JacobiDiagram]]:
    e, role = j.skeleton[p]
    sk = list(j.skeleton)
    if role == "H":
        # head on the skeleton: the vertex output becomes a commutator of its inputs
        v = next(i for i, vert in enumerate(j.vertices) if vert[2] == e)
        left, right, _ = j.vertices[v]
        rest = j.vertices[:v] + j.vertices[v + 1:]
        a = sk[:p] + [(left, "H"), (right, "H")] + sk[p + 1:]
        b = sk[:p] + [(right, "H"), (left, "H")] + sk[p + 1:]
        return [(1, JacobiDiagram(tuple(a), rest)), (-1, JacobiDiagram(tuple(b), rest))]

    v = next(i for i, vert in enumerate(j.vertices) if e in vert[:2])
    left, right, out = j.vertices[v]
    is_left = left == e
    u = right if is_left else left
    sign = 1 if is_left else -1
    rest = list(j.vertices[:v] + j.vertices[v + 1:])
    terms = []
    for s, seg in ((sign, [(u, "H"), (e, "T")]), (-sign, [(e, "T"), (u, "H")])):
        new_sk = sk[:p] + seg + sk[p + 1:]
        new_vs = list(rest)
        # e takes over the target of the removed output edge
        if (out, "H") in new_sk:
            new_sk[new_sk.index((out, "H"))] = (e, "H")
        else:
            w = next(i for i, vert in enumerate(new_vs) if out in vert[:2])
            l2, r2, o2 = new_vs[w]
            new_vs[w] = (e if l2 == out else l2, e if r2 == out else r2, o2)
        terms.append((s, JacobiDiagram(tuple(new_sk), tuple(new_vs))))
    return terms


def stu_eliminate(j: JacobiDiagram, order: str = "leftmost") -> ArrowCombination:
    """Remove every internal vertex by STU moves at the chosen skeleton end."""
    if order not in ORDERS:
        raise ArrowCalculusError(f"order must be one of {ORDERS}")
    out = ArrowCombination.zero(LONG_LINE)
    stack: List[Tuple[Fraction, JacobiDiagram]] = [(Fraction(1), j)]
    steps = 0
    while stack:
        coef, d = stack.pop()
        if not d.vertices:
            out._add(d.arrow_key(), coef)
            continue
        contacts = _contact_positions(d)
        if not contacts:
            raise STUEliminationError("a component of internal vertices does not touch the skeleton")
        p = contacts[0] if order == "leftmost" else contacts[-1]
        for s, nd in _stu_step(d, p):
            stack.append((coef * s, nd))
        steps += 1
    logger.debug("STU elimination (%s): %d steps, %d terms", order, steps, len(out.terms))
    return out


# -------------------------------
# Builders
# -------------------------------


class JacobiBuilder:
    """
    Assemble a Jacobi diagram from named pieces, then lay their skeleton ends
    out along the line in a given order.
    """

    def __init__(self):
        self.ends: Dict[str, SkeletonEnd] = {}
        self.vertices: List[Vertex] = []
        self._next = 1

    def _edge(self) -> int:
        e = self._next
        self._next += 1
        return e

    def _name(self, name: str, end: SkeletonEnd) -> None:
        if name in self.ends:
            raise JacobiDiagramError(f"duplicate skeleton end name {name!r}")
        self.ends[name] = end

    def arrow(self, name: str) -> "JacobiBuilder":
        """A plain arrow with ends '<name>.T' and '<name>.H'."""
        e = self._edge()
        self._name(f"{name}.T", (e, "T"))
        self._name(f"{name}.H", (e, "H"))
        return self

    def tree(self, expr: TreeExpr, root: str) -> "JacobiBuilder":
        """Leaves are tails named by their labels; the root is a head named root."""

        def build(x: TreeExpr) -> int:
            if isinstance(x, str):
                e = self._edge()
                self._name(x, (e, "T"))
                return e
            left, right = build(x[0]), build(x[1])
            out = self._edge()
            self.vertices.append((left, right, out))
            return out

        self._name(root, (build(expr), "H"))
        return self

    def wheel(self, k: int, prefix: str = "s") -> "JacobiBuilder":
        """k-wheel; spoke t is the left input of rim vertex t, spoke tails named <prefix><t>."""
        if k < 1:
            raise JacobiDiagramError("a wheel needs at least one spoke")
        spokes = [self._edge() for _ in range(k)]
        rim = [self._edge() for _ in range(k)]
        for t in range(k):
            self.vertices.append((spokes[t], rim[t - 1], rim[t]))
            self._name(f"{prefix}{t + 1}", (spokes[t], "T"))
        return self

    def build(self, layout: Sequence[str]) -> JacobiDiagram:
        if sorted(layout) != sorted(self.ends):
            raise JacobiDiagramError(
                f"layout must use every skeleton end exactly once: {sorted(self.ends)}"
            )
        return JacobiDiagram(tuple(self.ends[x] for x in layout), tuple(self.vertices))


def wheel_jacobi(k: int) -> JacobiDiagram:
    """The k-wheel with all spokes adjacent on the line."""
    return JacobiBuilder().wheel(k).build([f"s{t}" for t in range(1, k + 1)])


def tree_jacobi(expr: TreeExpr, layout: Sequence[str]) -> JacobiDiagram:
    return JacobiBuilder().tree(expr, "root").build(layout)


def as_relation(j: JacobiDiagram, v: int, order: str = "leftmost") -> ArrowCombination:
    """A diagram plus the one with the inputs of vertex v exchanged."""
    return stu_eliminate(j, order) + stu_eliminate(j.swap_inputs(v), order)


def ihx_relation(layout: Sequence[str], arrows: Sequence[str] = ()) -> ArrowCombination:
    """
    [[a,b],c] - [a,[b,c]] + [b,[a,c]] with tails a, b, c and head 'root' laid out
    as given, next to optional plain arrows.
    """
    total = ArrowCombination.zero(LONG_LINE)
    for coef, expr in ((1, (("a", "b"), "c")), (-1, ("a", ("b", "c"))), (1, ("b", ("a", "c")))):
        builder = JacobiBuilder()
        for name in arrows:
            builder.arrow(name)
        builder.tree(expr, "root")
        total = total + stu_eliminate(builder.build(layout)).scale(coef)
    return total


# -------------------------------
# Random diagrams for property tests
# -------------------------------


def _random_expr(rng: random.Random, leaves: List[str]) -> TreeExpr:
    if len(leaves) == 1:
        return leaves[0]
    cut = rng.randint(1, len(leaves) - 1)
    return (_random_expr(rng, leaves[:cut]), _random_expr(rng, leaves[cut:]))


def random_tree_diagram(rng: random.Random, n_leaves: int, n_arrows: int = 0) -> JacobiDiagram:
    """A random bracket tree with n_leaves tails plus plain arrows, ends shuffled along the line."""
    leaves = [f"l{i}" for i in range(n_leaves)]
    builder = JacobiBuilder().tree(_random_expr(rng, leaves), "root")
    for i in range(n_arrows):
        builder.arrow(f"x{i}")
    layout = list(builder.ends)
    rng.shuffle(layout)
    return builder.build(layout)


def random_wheel_diagram(rng: random.Random, k: int, n_arrows: int = 0,
                         tree_leaves: Optional[int] = None) -> JacobiDiagram:
    """A k-wheel plus plain arrows (and optionally a tree), ends shuffled along the line."""
    builder = JacobiBuilder().wheel(k)
    for i in range(n_arrows):
        builder.arrow(f"x{i}")
    if tree_leaves:
        builder.tree(_random_expr(rng, [f"l{i}" for i in range(tree_leaves)]), "root")
    layout = list(builder.ends)
    rng.shuffle(layout)
    return builder.build(layout)
