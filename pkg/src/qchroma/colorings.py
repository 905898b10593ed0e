"""Colorings of [n] and the permutation statistics built on them.

A coloring is a tuple ``k`` with ``k[v - 1]`` the color of vertex ``v``.
Permutations use the same one-line encoding.  All position and vertex sets
returned here are 1-based.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Iterator

from .compositions import Composition, comp_of
from .graphs import SimpleGraph

Word = tuple[int, ...]


def _check_len(g: SimpleGraph, w: Word) -> None:
    if len(w) != g.n:
        raise ValueError(f"word of length {len(w)} on a graph with {g.n} vertices")


def inverse(sigma: Word) -> Word:
    inv = [0] * len(sigma)
    for i, v in enumerate(sigma, start=1):
        inv[v - 1] = i
    return tuple(inv)


def reverse(sigma: Word) -> Word:
    """sigma-bar: the word read right to left."""
    return tuple(reversed(sigma))


def is_permutation(w: Word) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def all_permutations(n: int) -> Iterator[Word]:
    return permutations(range(1, n + 1))


# --- (co)inversions of colorings ----------------------------------------

def inv_set(g: SimpleGraph, kappa: Word) -> frozenset[tuple[int, int]]:
    """Edges (i, j), i < j, with kappa(i) > kappa(j)."""
    _check_len(g, kappa)
    return frozenset((i, j) for i, j in g.edges if kappa[i - 1] > kappa[j - 1])


def coinv_set(g: SimpleGraph, kappa: Word) -> frozenset[tuple[int, int]]:
    """Edges (i, j), i < j, with kappa(i) < kappa(j)."""
    _check_len(g, kappa)
    return frozenset((i, j) for i, j in g.edges if kappa[i - 1] < kappa[j - 1])


def inv(g: SimpleGraph, kappa: Word) -> int:
    return sum(1 for i, j in g.edges if kappa[i - 1] > kappa[j - 1])


def coinv(g: SimpleGraph, kappa: Word) -> int:
    return sum(1 for i, j in g.edges if kappa[i - 1] < kappa[j - 1])


def is_proper(g: SimpleGraph, kappa: Word) -> bool:
    _check_len(g, kappa)
    return all(kappa[i - 1] != kappa[j - 1] for i, j in g.edges)


def standardize(kappa: Word) -> Word:
    """Left-to-right standardization, e.g. 3253353 -> 2163475."""
    order = sorted(range(len(kappa)), key=lambda i: (kappa[i], i))
    out = [0] * len(kappa)
    for rank, i in enumerate(order, start=1):
        out[i] = rank
    return tuple(out)


# --- descent sets --------------------------------------------------------

def des(w: Word) -> frozenset[int]:
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def des_G(g: SimpleGraph, tau: Word) -> frozenset[int]:
    """Positions i with tau(i) > tau(i+1) or {tau(i), tau(i+1)} an edge."""
    adj = g.adj
    return frozenset(
        i for i in range(1, len(tau)) if tau[i - 1] > tau[i] or adj[tau[i - 1]][tau[i]]
    )


def tilde_des_G(g: SimpleGraph, sigma: Word) -> frozenset[int]:
    """Positions i with sigma(i) > sigma(i+1) and no edge between them."""
    adj = g.adj
    return frozenset(
        i for i in range(1, len(sigma)) if sigma[i - 1] > sigma[i] and not adj[sigma[i - 1]][sigma[i]]
    )


def tilde_inv_G(g: SimpleGraph, sigma: Word) -> int:
    """Edges {sigma(i), sigma(j)} with i < j and sigma(i) > sigma(j)."""
    adj = g.adj
    n = len(sigma)
    return sum(
        1
        for i in range(n)
        for j in range(i + 1, n)
        if sigma[i] > sigma[j] and adj[sigma[i]][sigma[j]]
    )


def maj_comp(g: SimpleGraph, sigma: Word) -> int:
    """Major index over the complement graph: sum of the tilde-descents."""
    return sum(tilde_des_G(g, sigma))


def alpha_G(g: SimpleGraph, sigma: Word) -> Composition:
    """comp(n - ([n-1] minus Des_G(sigma-bar)))."""
    n = len(sigma)
    if n == 0:
        return ()
    rest = set(range(1, n)) - des_G(g, reverse(sigma))
    alpha = comp_of(n, {n - i for i in rest})
    assert alpha == comp_of(n, tilde_des_G(g, sigma)), "Des/tilde-Des identity failed"
    return alpha


# --- rearrangement classes -----------------------------------------------

def rearrangements(beta: Composition) -> Iterator[Word]:
    """All words with beta_i copies of letter i, in lexicographic order."""
    counts = list(beta)
    n = sum(beta)
    word: list[int] = []

    def rec():
        if len(word) == n:
            yield tuple(word)
            return
        for letter, c in enumerate(counts, start=1):
            if c:
                counts[letter - 1] -= 1
                word.append(letter)
                yield from rec()
                word.pop()
                counts[letter - 1] += 1

    yield from rec()


def beta_blocks(sigma: Word, beta: Composition) -> list[frozenset[int]]:
    """S_i: the values of sigma in the i-th contiguous segment of sizes beta."""
    if sum(beta) != len(sigma):
        raise ValueError("|beta| must equal the length of sigma")
    blocks, start = [], 0
    for b in beta:
        blocks.append(frozenset(sigma[start : start + b]))
        start += b
    return blocks


def sigma_beta(sigma: Word, beta: Composition) -> Word:
    """Replace each value of the i-th block of sigma by i (as a word on [n])."""
    out = [0] * len(sigma)
    for i, block in enumerate(beta_blocks(sigma, beta), start=1):
        for v in block:
            out[v - 1] = i
    return tuple(out)


def segments(sigma: Word, alpha: Composition) -> list[Word]:
    if sum(alpha) != len(sigma):
        raise ValueError("|alpha| must equal the length of sigma")
    out, start = [], 0
    for a in alpha:
        out.append(tuple(sigma[start : start + a]))
        start += a
    return out


def _clean_segment(g: SimpleGraph, seg: Word) -> bool:
    adj = g.adj
    for i in range(len(seg) - 1):
        if seg[i] > seg[i + 1] and not adj[seg[i]][seg[i + 1]]:
            return False
    for r in range(1, len(seg)):
        x = seg[r]
        if all(seg[s] < x and not adj[seg[s]][x] for s in range(r)):
            return False
    return True


def in_N(g: SimpleGraph, alpha: Composition, sigma: Word) -> bool:
    """No segment has a G-descent or a nontrivial left-to-right G-maximum."""
    return all(_clean_segment(g, seg) for seg in segments(sigma, alpha))


# --- packed proper colorings ---------------------------------------------

def packed_proper_colorings(g: SimpleGraph) -> Iterator[Word]:
    """Proper colorings whose color set is exactly [r] for some r."""
    n, adj = g.n, g.adj
    kappa = [0] * (n + 1)

    def rec(v: int, colors: frozenset[int]):
        if v > n:
            if len(colors) == max(colors):
                yield tuple(kappa[1:])
            return
        for c in range(1, n + 1):
            new = colors | {c}
            # the vertices after v must still be able to fill every gap
            if max(new) - len(new) > n - v:
                continue
            if any(adj[u][v] and kappa[u] == c for u in range(1, v)):
                continue
            kappa[v] = c
            yield from rec(v + 1, new)
        kappa[v] = 0

    if n:
        yield from rec(1, frozenset())


def ev(kappa: Word) -> Composition:
    """Exponent vector of a packed coloring: number of vertices of each color."""
    top = max(kappa)
    counts = [0] * top
    for c in kappa:
        counts[c - 1] += 1
    if 0 in counts:
        raise ValueError(f"coloring {kappa} is not packed")
    return tuple(counts)


# --- literals --------------------------------------------------------------

def parse_word(text: str) -> Word:
    """"31852647" (single digits) or "3,1,8,5,2,6,4,7"."""
    s = text.strip().replace(" ", "")
    if "," in s:
        out = tuple(int(t) for t in s.split(","))
    elif s.isdigit():
        out = tuple(int(c) for c in s)
    else:
        raise ValueError(f"bad word literal {text!r}")
    if any(c < 1 for c in out):
        raise ValueError(f"letters must be positive: {text!r}")
    return out


def parse_permutation(text: str) -> Word:
    w = parse_word(text)
    if not is_permutation(w):
        raise ValueError(f"{text!r} is not a permutation of [1..{len(w)}]")
    return w


def format_word(w: Iterable[int]) -> str:
    w = tuple(w)
    if all(c < 10 for c in w):
        return "".join(map(str, w))
    return ",".join(map(str, w))
