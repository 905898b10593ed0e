"""Vectorised permutation statistics over all of S_n for one graph at a time.

Everything here mirrors a scalar function in :mod:`colorings` or
:mod:`foata`; the test suite checks the two agree for small n.  Tables are
built for n <= 9 (362880 rows).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np

from .graphs import SimpleGraph
from .qcoeff import QPoly

MAX_N = 9


class PermTable:
    """All permutations of [n] in lexicographic order, with pair gathers."""

    def __init__(self, n: int):
        if not 1 <= n <= MAX_N:
            raise ValueError(f"permutation tables are limited to 1 <= n <= {MAX_N}")
        self.n = n
        self.perms = np.array(list(permutations(range(1, n + 1))), dtype=np.int8).reshape(-1, n)
        inv = np.empty_like(self.perms)
        rows = np.arange(len(self.perms))[:, None]
        inv[rows, self.perms.astype(np.intp) - 1] = np.arange(1, n + 1, dtype=np.int8)
        self.inverse = inv
        iu, ju = np.triu_indices(n, k=1)
        self.pi, self.pj = iu, ju
        # values at position pairs i < j
        self.a = self.perms[:, iu].astype(np.intp)
        self.b = self.perms[:, ju].astype(np.intp)

    def __len__(self):
        return len(self.perms)


@lru_cache(maxsize=3)
def perm_table(n: int) -> PermTable:
    return PermTable(n)


def adjacency(g: SimpleGraph) -> np.ndarray:
    return np.array(g.adj, dtype=bool)


def _vertex_pair_edges(t: PermTable, adj: np.ndarray) -> np.ndarray:
    return adj[t.pi + 1, t.pj + 1]


def coinv(t: PermTable, adj: np.ndarray) -> np.ndarray:
    """coinv_G of each permutation read as a coloring."""
    e = _vertex_pair_edges(t, adj)
    return (t.a[:, e] < t.b[:, e]).sum(axis=1)


def inv(t: PermTable, adj: np.ndarray) -> np.ndarray:
    e = _vertex_pair_edges(t, adj)
    return (t.a[:, e] > t.b[:, e]).sum(axis=1)


def tilde_inv(t: PermTable, adj: np.ndarray) -> np.ndarray:
    return ((t.a > t.b) & adj[t.a, t.b]).sum(axis=1)


def _mask(bits: np.ndarray) -> np.ndarray:
    weights = (1 << np.arange(bits.shape[1], dtype=np.int64))
    return bits.astype(np.int64) @ weights


def coinv_codes(words: np.ndarray, g: SimpleGraph) -> np.ndarray:
    """Bitmask of CoInv_G for each row; bit k is the k-th sorted edge."""
    edges = g.sorted_edges()
    if not edges:
        return np.zeros(len(words), dtype=np.int64)
    i = np.array([e[0] for e in edges]) - 1
    j = np.array([e[1] for e in edges]) - 1
    return _mask(words[:, i] < words[:, j])


def coinv_code(g: SimpleGraph, word) -> int:
    """Scalar counterpart of :func:`coinv_codes`."""
    return sum(1 << k for k, (i, j) in enumerate(g.sorted_edges()) if word[i - 1] < word[j - 1])


def des_mask(words: np.ndarray) -> np.ndarray:
    w = words.astype(np.intp)
    return _mask(w[:, :-1] > w[:, 1:])


def des_G_mask(words: np.ndarray, adj: np.ndarray) -> np.ndarray:
    w = words.astype(np.intp)
    return _mask((w[:, :-1] > w[:, 1:]) | adj[w[:, :-1], w[:, 1:]])


def tilde_des_mask(words: np.ndarray, adj: np.ndarray) -> np.ndarray:
    w = words.astype(np.intp)
    return _mask((w[:, :-1] > w[:, 1:]) & ~adj[w[:, :-1], w[:, 1:]])


def mask_sum(masks: np.ndarray, n: int) -> np.ndarray:
    """Sum of the (1-based) elements of each subset mask."""
    out = np.zeros(len(masks), dtype=np.int64)
    for i in range(n - 1):
        out += ((masks >> i) & 1) * (i + 1)
    return out


def histogram(exponents: np.ndarray) -> QPoly:
    return QPoly.from_counts(dict(enumerate(np.bincount(exponents).tolist())))


def grouped_histogram(keys: np.ndarray, exponents: np.ndarray) -> dict[int, QPoly]:
    """key -> sum of q^exponent over rows with that key."""
    width = int(exponents.max()) + 1 if len(exponents) else 1
    combined = keys.astype(np.int64) * width + exponents
    values, counts = np.unique(combined, return_counts=True)
    out: dict[int, dict[int, int]] = {}
    for v, c in zip(values.tolist(), counts.tolist()):
        out.setdefault(v // width, {})[v % width] = c
    return {k: QPoly.from_counts(d) for k, d in out.items()}


# --- series coefficients ------------------------------------------------------

def chromatic_l_coefficients(g: SimpleGraph) -> dict[int, QPoly]:
    """Des_G(sigma^-1) mask -> sum of q^coinv_G(sigma)."""
    t, adj = perm_table(g.n), adjacency(g)
    return grouped_histogram(des_G_mask(t.inverse, adj), coinv(t, adj))


def llt_l_coefficients(g: SimpleGraph) -> dict[int, QPoly]:
    """Des(sigma^-1) mask -> sum of q^inv_G(sigma)."""
    t, adj = perm_table(g.n), adjacency(g)
    return grouped_histogram(des_mask(t.inverse), inv(t, adj))


def alpha_distribution(g: SimpleGraph) -> dict[int, QPoly]:
    """mask of tilde-Des_G(sigma) -> sum of q^tilde_inv_G(sigma)."""
    t, adj = perm_table(g.n), adjacency(g)
    return grouped_histogram(tilde_des_mask(t.perms, adj), tilde_inv(t, adj))


def mahonian_polynomial(g: SimpleGraph) -> QPoly:
    t, adj = perm_table(g.n), adjacency(g)
    maj = mask_sum(tilde_des_mask(t.perms, adj), g.n)
    return histogram(maj + tilde_inv(t, adj))


# --- Foata-type bijection --------------------------------------------------------

def _right_class(w: np.ndarray, x: np.ndarray, adj: np.ndarray) -> np.ndarray:
    xs = x[:, None]
    return (w > xs) & ~adj[w, xs]


def gamma_rows(w: np.ndarray, x: np.ndarray, adj: np.ndarray, check: bool = True) -> np.ndarray:
    """Row-wise gamma step: rotate each block right by one letter.

    With ``check`` (valid for interval graphs) every right-class letter is
    asserted to exceed every left-class letter.
    """
    rows, k = w.shape
    if k == 0:
        return w
    right = _right_class(w, x, adj)
    if check:
        lo = np.where(right, w, np.iinfo(np.intp).max).min(axis=1)
        hi = np.where(right, np.iinfo(np.intp).min, w).max(axis=1)
        if np.any(lo <= hi):
            raise AssertionError("order property of the bar decomposition failed")
    ends = right == right[:, -1:]
    idx = np.arange(k)
    nxt = np.where(ends, idx, k)
    nxt = np.minimum.accumulate(nxt[:, ::-1], axis=1)[:, ::-1]
    starts = np.ones_like(ends)
    starts[:, 1:] = ends[:, :-1]
    prev = np.zeros_like(w)
    prev[:, 1:] = w[:, :-1]
    return np.where(starts, np.take_along_axis(w, nxt, axis=1), prev)


def ungamma_rows(u: np.ndarray, x: np.ndarray, adj: np.ndarray) -> np.ndarray:
    """Inverse of :func:`gamma_rows`: rotate each block left by one letter."""
    rows, k = u.shape
    if k == 0:
        return u
    right = _right_class(u, x, adj)
    starts = right == right[:, :1]
    idx = np.arange(k)
    first = np.where(starts, idx, -1)
    first = np.maximum.accumulate(first, axis=1)
    is_end = np.ones_like(starts)
    is_end[:, :-1] = starts[:, 1:]
    nxt = np.zeros_like(u)
    nxt[:, :-1] = u[:, 1:]
    return np.where(is_end, np.take_along_axis(u, first, axis=1), nxt)


def foata_rows(words: np.ndarray, adj: np.ndarray, check: bool = True) -> np.ndarray:
    words = words.astype(np.intp)
    rows, n = words.shape
    w = np.zeros((rows, 0), dtype=np.intp)
    for i in range(n):
        x = words[:, i]
        w = np.concatenate([gamma_rows(w, x, adj, check), x[:, None]], axis=1)
    return w


def foata_inverse_rows(images: np.ndarray, adj: np.ndarray) -> np.ndarray:
    w = images.astype(np.intp)
    rows, n = w.shape
    out = np.zeros((rows, n), dtype=np.intp)
    for i in range(n - 1, -1, -1):
        x = w[:, -1]
        out[:, i] = x
        w = ungamma_rows(w[:, :-1], x, adj)
    return out


def classical_inv(words: np.ndarray) -> np.ndarray:
    w = words.astype(np.intp)
    n = w.shape[1]
    iu, ju = np.triu_indices(n, k=1)
    return (w[:, iu] > w[:, ju]).sum(axis=1)


def encode_rows(words: np.ndarray) -> np.ndarray:
    """Injective int64 code of each row (base n+1 digits)."""
    w = words.astype(np.int64)
    base = w.shape[1] + 1
    code = np.zeros(len(w), dtype=np.int64)
    for col in range(w.shape[1]):
        code = code * base + w[:, col]
    return code


# --- segment condition N_{G,alpha} ---------------------------------------------

def n_membership(words: np.ndarray, adj: np.ndarray) -> np.ndarray:
    """Column k says whether each row lies in N_{G,alpha} for alpha of mask k.

    A position r > 1 that does not start a segment needs no G-descent at
    r-1 and a blocker (an earlier larger or adjacent letter) at or after
    the start of its segment.
    """
    w = words.astype(np.intp)
    rows, n = w.shape
    blocker = np.zeros((rows, n), dtype=np.intp)  # 1-based position, 0 = none
    for r in range(1, n):
        hit = (w[:, :r] > w[:, r : r + 1]) | adj[w[:, :r], w[:, r : r + 1]]
        last = np.where(hit, np.arange(1, r + 1), 0).max(axis=1)
        blocker[:, r] = last
    descent = np.zeros((rows, n), dtype=bool)
    descent[:, 1:] = (w[:, :-1] > w[:, 1:]) & ~adj[w[:, :-1], w[:, 1:]]
    out = np.zeros((rows, 1 << max(n - 1, 0)), dtype=bool)
    for mask in range(out.shape[1]):
        starts = [0] + [i for i in range(1, n) if mask >> (i - 1) & 1]
        ok = np.ones(rows, dtype=bool)
        seg_start = 0
        for r in range(1, n):
            if r in starts:
                seg_start = r
                continue
            # 0-based start s corresponds to 1-based position s + 1
            ok &= ~descent[:, r] & (blocker[:, r] >= seg_start + 1)
        out[:, mask] = ok
    return out
