"""Labelled simple graphs on [n] and the interval subclass.

An interval graph is stored by its column vector ``m``: vertex ``i`` is
adjacent to exactly the vertices ``i+1, ..., m[i-1]`` above it.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Iterable, Iterator


class NotInterval(ValueError):
    """The graph has an upward neighbourhood with a gap."""


class SimpleGraph:
    """Graph on vertices 1..n; edges are pairs (i, j) with i < j."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("n must be nonnegative")
        clean = set()
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if i > j:
                i, j = j, i
            if i < 1 or j > n:
                raise ValueError(f"edge {(i, j)} outside [1, {n}]")
            clean.add((i, j))
        self.n = n
        self.edges: frozenset[tuple[int, int]] = frozenset(clean)
        # adj[u][v] for 1 <= u, v <= n; row/column 0 unused
        adj = [[False] * (n + 1) for _ in range(n + 1)]
        for i, j in clean:
            adj[i][j] = adj[j][i] = True
        self.adj = tuple(tuple(row) for row in adj)

    def adjacent(self, u: int, v: int) -> bool:
        return self.adj[u][v]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def lower_neighbors(self, v: int) -> list[int]:
        return [u for u in range(1, v) if self.adj[u][v]]

    def __eq__(self, other):
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"SimpleGraph({self.n}, {self.sorted_edges()})"

    def key(self) -> str:
        return "e=" + ",".join(f"{i}-{j}" for i, j in self.sorted_edges()) + f";n={self.n}"

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}


class IntervalGraph(SimpleGraph):
    """Interval graph encoded by ``m`` with i <= m_i <= n."""

    __slots__ = ("m",)

    def __init__(self, m: Iterable[int]):
        m = tuple(m)
        n = len(m)
        for i, mi in enumerate(m, start=1):
            if not (i <= mi <= n):
                raise ValueError(f"need {i} <= m_{i} <= {n}, got m_{i} = {mi}")
        super().__init__(n, ((i, j) for i in range(1, n + 1) for j in range(i + 1, m[i - 1] + 1)))
        self.m = m

    def __repr__(self):
        return f"IntervalGraph({self.m})"

    def key(self) -> str:
        return "m=" + ",".join(map(str, self.m))

    def to_json(self) -> dict:
        return {"n": self.n, "m": list(self.m)}


def complete_graph(n: int) -> IntervalGraph:
    return IntervalGraph([n] * n)


def empty_graph(n: int) -> IntervalGraph:
    return IntervalGraph(range(1, n + 1))


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> IntervalGraph:
    """Interval encoding of an edge list, or :class:`NotInterval`."""
    g = SimpleGraph(n, edges)
    return as_interval(g)


def as_interval(g: SimpleGraph) -> IntervalGraph:
    if isinstance(g, IntervalGraph):
        return g
    m = []
    for i in range(1, g.n + 1):
        up = [j for j in range(i + 1, g.n + 1) if g.adj[i][j]]
        top = max(up, default=i)
        if len(up) != top - i:
            raise NotInterval(f"upward neighbourhood of {i} is {up}, not contiguous")
        m.append(top)
    return IntervalGraph(m)


def is_interval(g: SimpleGraph) -> bool:
    try:
        as_interval(g)
    except NotInterval:
        return False
    return True


def flip(g: SimpleGraph) -> SimpleGraph:
    """Relabel every vertex i as n + 1 - i."""
    n = g.n
    return SimpleGraph(n, ((n + 1 - j, n + 1 - i) for i, j in g.edges))


def is_dyck(g: SimpleGraph) -> bool:
    return is_interval(g) and is_interval(flip(g))


def enumerate_interval(n: int) -> Iterator[IntervalGraph]:
    """All n! interval graphs on [n], lexicographic in m."""
    for m in product(*(range(i, n + 1) for i in range(1, n + 1))):
        yield IntervalGraph(m)


def _weakly_increasing(n: int) -> Iterator[tuple[int, ...]]:
    def rec(i: int, low: int, acc: list[int]):
        if i > n:
            yield tuple(acc)
            return
        for mi in range(max(i, low), n + 1):
            acc.append(mi)
            yield from rec(i + 1, mi, acc)
            acc.pop()

    yield from rec(1, 1, [])


def enumerate_dyck(n: int) -> Iterator[IntervalGraph]:
    """All Catalan(n) Dyck graphs (weakly increasing m), lexicographic in m."""
    for m in _weakly_increasing(n):
        yield IntervalGraph(m)


def induced_subgraph(g: SimpleGraph, subset: Iterable[int]) -> SimpleGraph:
    """Subgraph on ``subset`` relabelled monotonically onto [|subset|].

    Interval input gives interval output.
    """
    verts = sorted(set(subset))
    if not verts:
        raise ValueError("empty vertex subset")
    rank = {v: k for k, v in enumerate(verts, start=1)}
    sub = SimpleGraph(len(verts), ((rank[u], rank[v]) for u, v in combinations(verts, 2) if g.adj[u][v]))
    if isinstance(g, IntervalGraph):
        return as_interval(sub)
    return sub


def interval_realization(g: IntervalGraph) -> list[tuple[Fraction, Fraction]]:
    """Closed intervals I_1..I_n whose overlap graph is ``g``.

    I_j = [j, n+1] when j is below nothing in the poset (m_j = n),
    otherwise [j, m_j + 1/2].
    """
    g = as_interval(g)
    n = g.n
    out = []
    for j, mj in enumerate(g.m, start=1):
        right = Fraction(n + 1) if mj == n else Fraction(2 * mj + 1, 2)
        out.append((Fraction(j), right))
    return out


def overlap_graph(intervals: list[tuple[Fraction, Fraction]]) -> SimpleGraph:
    edges = [
        (i, j)
        for (i, (a, b)), (j, (c, d)) in combinations(enumerate(intervals, start=1), 2)
        if not (b < c or d < a)
    ]
    return SimpleGraph(len(intervals), edges)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


_EDGE = re.compile(r"^(\d+)-(\d+)$")


def parse_graph(text: str) -> SimpleGraph:
    """Parse "m=3,2,3" or "e=1-3,2-3" (optionally suffixed ";n=5").

    Edge lists that happen to be interval are returned as IntervalGraph.
    """
    s = text.strip().replace(" ", "")
    if s.startswith("m="):
        try:
            return IntervalGraph(int(t) for t in s[2:].split(","))
        except ValueError as exc:
            raise ValueError(f"bad graph literal {text!r}: {exc}") from None
    if s.startswith("e="):
        body, _, tail = s[2:].partition(";")
        edges = []
        for token in filter(None, body.split(",")):
            match = _EDGE.match(token)
            if not match:
                raise ValueError(f"bad edge {token!r} in {text!r}")
            edges.append((int(match.group(1)), int(match.group(2))))
        if tail:
            if not tail.startswith("n="):
                raise ValueError(f"bad graph literal {text!r}")
            n = int(tail[2:])
        else:
            n = max((max(e) for e in edges), default=0)
        g = SimpleGraph(n, edges)
        return as_interval(g) if is_interval(g) else g
    raise ValueError(f"graph literal must start with 'm=' or 'e=': {text!r}")


def graph_from_json(obj: dict) -> SimpleGraph:
    if "m" in obj:
        g = IntervalGraph(obj["m"])
        if obj.get("n", g.n) != g.n:
            raise ValueError("n does not match len(m)")
        return g
    return SimpleGraph(obj["n"], (tuple(e) for e in obj["edges"]))
