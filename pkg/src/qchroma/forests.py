"""Increasing spanning forests, the forest weight and the maps between
proper colorings and forests.

A forest on [n] is stored as its parent vector: ``parents[v - 1]`` is the
parent of ``v`` or 0 when ``v`` is a root.  Trees are ordered by their roots.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional

from .colorings import Word, coinv_set, is_proper
from .graphs import NotInterval, SimpleGraph, is_interval


@dataclass(frozen=True)
class IncreasingForest:
    parents: tuple[int, ...]

    def __post_init__(self):
        for v, p in enumerate(self.parents, start=1):
            if p < 0 or p >= v:
                raise ValueError(f"vertex {v} has parent {p}; parents must be smaller")

    @property
    def n(self) -> int:
        return len(self.parents)

    @property
    def roots(self) -> tuple[int, ...]:
        return tuple(v for v, p in enumerate(self.parents, start=1) if p == 0)

    def root_of(self, v: int) -> int:
        while self.parents[v - 1]:
            v = self.parents[v - 1]
        return v

    def tree_index(self) -> tuple[int, ...]:
        """0-based index of the tree containing each vertex."""
        index = {r: k for k, r in enumerate(self.roots)}
        out = [0] * self.n
        for v in range(1, self.n + 1):
            p = self.parents[v - 1]
            out[v - 1] = index[v] if p == 0 else out[p - 1]
        return tuple(out)

    def trees(self) -> list[tuple[int, ...]]:
        """Vertex sets of the trees, each sorted, in root order."""
        groups: list[list[int]] = [[] for _ in self.roots]
        for v, k in enumerate(self.tree_index(), start=1):
            groups[k].append(v)
        return [tuple(g) for g in groups]

    def edges(self) -> list[tuple[int, int]]:
        return [(p, v) for v, p in enumerate(self.parents, start=1) if p]

    def __str__(self):
        return format_forest(self)

    def to_json(self) -> dict:
        return {"n": self.n, "parents": list(self.parents), "literal": format_forest(self)}


def singletons(n: int) -> IncreasingForest:
    return IncreasingForest((0,) * n)


def from_edges(n: int, edges) -> IncreasingForest:
    parents = [0] * n
    for u, v in edges:
        if u > v:
            u, v = v, u
        if parents[v - 1]:
            raise ValueError(f"vertex {v} has two parents")
        parents[v - 1] = u
    return IncreasingForest(tuple(parents))


def check_spanning(g: SimpleGraph, forest: IncreasingForest) -> None:
    if forest.n != g.n:
        raise ValueError(f"forest on {forest.n} vertices, graph on {g.n}")
    for u, v in forest.edges():
        if not g.adj[u][v]:
            raise ValueError(f"forest edge {(u, v)} is not an edge of the graph")


def enumerate_isf(g: SimpleGraph) -> Iterator[IncreasingForest]:
    """Each vertex picks "root" (0) or a smaller neighbour as its parent."""
    choices = [[0] + g.lower_neighbors(v) for v in range(1, g.n + 1)]
    for parents in product(*choices):
        yield IncreasingForest(parents)


def count_isf(g: SimpleGraph) -> int:
    out = 1
    for v in range(1, g.n + 1):
        out *= 1 + len(g.lower_neighbors(v))
    return out


def g_inversions(g: SimpleGraph, forest: IncreasingForest) -> frozenset[tuple[int, int]]:
    """Edges (u, v), u < v, with u in a later tree than v."""
    check_spanning(g, forest)
    idx = forest.tree_index()
    return frozenset((u, v) for u, v in g.edges if idx[u - 1] > idx[v - 1])


def edge_weight(g: SimpleGraph, forest: IncreasingForest, u: int, v: int) -> int:
    idx = forest.tree_index()
    k = idx[v - 1]
    return sum(1 for w in range(u, v) if idx[w - 1] == k and g.adj[w][v])


def wt(g: SimpleGraph, forest: IncreasingForest) -> int:
    check_spanning(g, forest)
    idx = forest.tree_index()
    total = sum(1 for u, v in g.edges if idx[u - 1] > idx[v - 1])
    for u, v in forest.edges():
        k = idx[v - 1]
        total += sum(1 for w in range(u, v) if idx[w - 1] == k and g.adj[w][v])
    return total


# --- coloring -> forest -----------------------------------------------------

def get_w(g: SimpleGraph, v: int, s, kappa: Word) -> list[int]:
    """Vertices reachable from v by increasing edges with increasing colors.

    S is scanned in increasing order, so a vertex added early can license a
    later one.
    """
    adj = g.adj
    w_set = [v]
    for w in sorted(s):
        if any(u < w and adj[u][w] and kappa[u - 1] < kappa[w - 1] for u in w_set):
            w_set.append(w)
    return sorted(w_set)


@dataclass
class TraceRow:
    tree: int
    i: int
    vertex: int
    lower: tuple[int, ...]
    r: int
    parent: int


def phi(g: SimpleGraph, kappa: Word, trace: Optional[list] = None) -> IncreasingForest:
    """Map a proper coloring to an increasing spanning forest.

    Each new vertex W_i attaches to L[#L - r + 1] where L lists its smaller
    neighbours already in the tree and r counts those with a smaller color.
    """
    if not is_proper(g, kappa):
        raise ValueError(f"coloring {kappa} is not proper")
    adj = g.adj
    parents = [0] * g.n
    remaining = set(range(1, g.n + 1))
    tree = 0
    while remaining:
        v = min(remaining)
        remaining.discard(v)
        w_list = get_w(g, v, remaining, kappa)
        in_tree = [v]
        for i, x in enumerate(w_list[1:], start=2):
            lower = [u for u in in_tree if u < x and adj[u][x]]
            r = sum(1 for u in lower if kappa[u - 1] < kappa[x - 1])
            parent = lower[len(lower) - r]
            parents[x - 1] = parent
            in_tree.append(x)
            remaining.discard(x)
            if trace is not None:
                trace.append(TraceRow(tree, i, x, tuple(lower), r, parent))
        tree += 1
    return IncreasingForest(tuple(parents))


# --- forest -> coloring -----------------------------------------------------

def colortree(g: SimpleGraph, vertices, parents: dict[int, int], d: int) -> tuple[int, ...]:
    """Colors {d, ..., d+k-1} for the tree on ``vertices``, in vertex order.

    ``parents`` maps every non-root vertex to its parent.  Each vertex b with
    parent a gets color c+1, where c is the (r+1)-th smallest color among its
    smaller tree neighbours and r counts those neighbours above a; existing
    colors >= c+1 move up by one.
    """
    verts = sorted(vertices)
    if not verts:
        raise ValueError("empty tree")
    adj = g.adj
    colors = [d]
    for i, b in enumerate(verts[1:], start=1):
        a = parents.get(b)
        if a is None or a not in verts[:i]:
            raise ValueError(f"vertex {b} has no parent inside the tree")
        if not adj[a][b]:
            raise ValueError(f"tree edge {(a, b)} is not an edge of the graph")
        lower = [k for k in range(i) if adj[verts[k]][b]]
        r = sum(1 for k in lower if verts[k] > a)
        new = sorted(colors[k] for k in lower)[r] + 1
        colors = [c + 1 if c >= new else c for c in colors]
        colors.append(new)
    return tuple(colors)


def f(g: SimpleGraph, forest: IncreasingForest) -> Word:
    """The section of phi: a permutation whose image is ``forest``.

    Tree T_i receives the block of colors ending at n - (sizes of earlier
    trees), so earlier trees get larger colors.
    """
    check_spanning(g, forest)
    n = g.n
    sigma = [0] * n
    used = 0
    for verts in forest.trees():
        used += len(verts)
        parents = {v: forest.parents[v - 1] for v in verts[1:]}
        clr = colortree(g, verts, parents, n + 1 - used)
        for v, c in zip(verts, clr):
            sigma[v - 1] = c
    return tuple(sigma)


def coinv_of_forest(g: SimpleGraph, forest: IncreasingForest) -> frozenset[tuple[int, int]]:
    """G-coinversions shared by the whole phi-fiber of ``forest``."""
    if not is_interval(g):
        raise NotInterval("forest coinversion sets need an interval graph")
    return coinv_set(g, f(g, forest))


# --- literals ---------------------------------------------------------------

def format_forest(forest: IncreasingForest) -> str:
    """"[1:3<1 | 2:4<2,5<2]"; a lone root prints as just its label."""
    chunks = []
    for verts in forest.trees():
        root, rest = verts[0], verts[1:]
        if rest:
            chunks.append(f"{root}:" + ",".join(f"{v}<{forest.parents[v - 1]}" for v in rest))
        else:
            chunks.append(str(root))
    return "[" + " | ".join(chunks) + "]"


_CHILD = re.compile(r"^(\d+)<(\d+)$")


def parse_forest(text: str, n: Optional[int] = None) -> IncreasingForest:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"forest literal must be bracketed: {text!r}")
    parent_of: dict[int, int] = {}
    listed_in: dict[int, int] = {}
    roots = []
    for chunk in body[1:-1].split("|"):
        chunk = chunk.replace(" ", "")
        if not chunk:
            raise ValueError(f"empty tree in {text!r}")
        root_text, _, rest = chunk.partition(":")
        if not root_text.isdigit():
            raise ValueError(f"bad root {root_text!r} in {text!r}")
        root = int(root_text)
        roots.append(root)
        parent_of[root] = 0
        listed_in[root] = root
        for token in filter(None, rest.split(",")):
            m = _CHILD.match(token)
            if not m:
                raise ValueError(f"bad child {token!r} in {text!r}")
            child, par = int(m.group(1)), int(m.group(2))
            if child in parent_of:
                raise ValueError(f"vertex {child} listed twice in {text!r}")
            parent_of[child] = par
            listed_in[child] = root
    size = max(parent_of) if n is None else n
    if sorted(parent_of) != list(range(1, size + 1)):
        raise ValueError(f"forest {text!r} does not cover [1, {size}]")
    forest = IncreasingForest(tuple(parent_of[v] for v in range(1, size + 1)))
    if list(forest.roots) != sorted(roots) or forest.roots != tuple(roots):
        raise ValueError(f"trees must be listed by increasing root: {text!r}")
    for v in range(1, size + 1):
        if forest.root_of(v) != listed_in[v]:
            raise ValueError(f"inconsistent tree membership in {text!r}")
    return forest
