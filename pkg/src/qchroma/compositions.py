"""Integer compositions and the subset calculus attached to them.

A composition is a plain tuple of positive ints.  Subsets of ``[n-1]`` are
``frozenset`` objects in the public API; internally they are bitmasks where
element ``i`` sits at bit ``i - 1``.
"""

from __future__ import annotations

import re
from collections import Counter
from functools import lru_cache
from itertools import groupby
from math import factorial, prod
from typing import Iterable, Iterator

Composition = tuple[int, ...]


def _check(alpha: Iterable[int]) -> Composition:
    alpha = tuple(alpha)
    if any(type(p) is not int or p < 1 for p in alpha):
        raise ValueError(f"not a composition: {alpha!r}")
    return alpha


def size(alpha: Composition) -> int:
    return sum(alpha)


def set_of(alpha: Composition) -> frozenset[int]:
    """Partial sums of all parts but the last, e.g. (1,4,1,2) -> {1,5,6}."""
    alpha = _check(alpha)
    out, s = [], 0
    for part in alpha[:-1]:
        s += part
        out.append(s)
    return frozenset(out)


def comp_of(n: int, subset: Iterable[int]) -> Composition:
    """Inverse of :func:`set_of` for compositions of ``n``."""
    if n < 1:
        raise ValueError("n must be positive")
    points = sorted(set(subset))
    if points and (points[0] < 1 or points[-1] > n - 1):
        raise ValueError(f"subset {points} is not contained in [1, {n - 1}]")
    parts, prev = [], 0
    for p in points + [n]:
        parts.append(p - prev)
        prev = p
    return tuple(parts)


def mask_of(alpha: Composition) -> int:
    mask, s = 0, 0
    for part in alpha[:-1]:
        s += part
        mask |= 1 << (s - 1)
    return mask


def comp_of_mask(n: int, mask: int) -> Composition:
    parts, prev = [], 0
    for i in range(1, n):
        if mask >> (i - 1) & 1:
            parts.append(i - prev)
            prev = i
    parts.append(n - prev)
    return tuple(parts)


def reversal(alpha: Composition) -> Composition:
    return tuple(reversed(alpha))


def complement(alpha: Composition) -> Composition:
    n = sum(alpha)
    full = (1 << (n - 1)) - 1
    return comp_of_mask(n, full & ~mask_of(alpha))


def transpose(alpha: Composition) -> Composition:
    return complement(reversal(alpha))


def _same_size(alpha: Composition, beta: Composition) -> int:
    n = sum(alpha)
    if n != sum(beta):
        raise ValueError(f"size mismatch: |{alpha}| != |{beta}|")
    return n


def refines(alpha: Composition, beta: Composition) -> bool:
    """True when ``alpha`` is a refinement of ``beta``."""
    _same_size(alpha, beta)
    b = mask_of(beta)
    return mask_of(alpha) & b == b


def meet(alpha: Composition, beta: Composition) -> Composition:
    """Coarsest common refinement."""
    n = _same_size(alpha, beta)
    return comp_of_mask(n, mask_of(alpha) | mask_of(beta))


def split_by(alpha: Composition, beta: Composition) -> tuple[Composition, ...]:
    """Cut a refinement ``alpha`` of ``beta`` into blocks of sizes beta_i."""
    blocks, i = [], 0
    for b in beta:
        block, s = [], 0
        while s < b:
            if i >= len(alpha):
                raise ValueError(f"{alpha} does not refine {beta}")
            block.append(alpha[i])
            s += alpha[i]
            i += 1
        if s != b:
            raise ValueError(f"{alpha} does not refine {beta}")
        blocks.append(tuple(block))
    return tuple(blocks)


def gamma(alpha: Composition, beta: Composition) -> tuple[Composition, ...]:
    """The meet of alpha and beta, cut along the parts of beta."""
    return split_by(meet(alpha, beta), beta)


def eta(alpha: Composition) -> int:
    """Sum of the partial sums alpha_1 + ... + alpha_i for i < len(alpha)."""
    total, s = 0, 0
    for part in alpha[:-1]:
        s += part
        total += s
    return total


def eta_gamma(alpha: Composition, beta: Composition) -> int:
    return sum(eta(block) for block in gamma(alpha, beta))


def lambda_of(alpha: Composition) -> Composition:
    return tuple(sorted(alpha, reverse=True))


def z_of(alpha: Composition) -> int:
    return prod(factorial(m) * i**m for i, m in Counter(alpha).items())


@lru_cache(maxsize=None)
def enumerate_compositions(n: int) -> tuple[Composition, ...]:
    """All 2^(n-1) compositions of n, ordered by the bitmask of their set."""
    if n < 1:
        raise ValueError("n must be positive")
    return tuple(comp_of_mask(n, mask) for mask in range(1 << (n - 1)))


def coarsenings(alpha: Composition) -> Iterator[Composition]:
    """Every beta with alpha refining beta (alpha included)."""
    n, a = sum(alpha), mask_of(alpha)
    sub = a
    while True:
        yield comp_of_mask(n, sub)
        if sub == 0:
            return
        sub = (sub - 1) & a


def refinements(alpha: Composition) -> Iterator[Composition]:
    """Every beta refining alpha (alpha included)."""
    n, a = sum(alpha), mask_of(alpha)
    free = ((1 << (n - 1)) - 1) & ~a
    sub = free
    while True:
        yield comp_of_mask(n, a | sub)
        if sub == 0:
            return
        sub = (sub - 1) & free


def partitions(n: int, largest: int | None = None) -> Iterator[Composition]:
    """Partitions of n as weakly decreasing tuples, reverse-lex order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def multinomial(beta: Composition) -> int:
    return factorial(sum(beta)) // prod(factorial(b) for b in beta)


def format_comp(alpha: Composition, exponential: bool = False) -> str:
    """Render as "(1,4,1,2)"; with ``exponential`` runs collapse: "(1^3,2)"."""
    if not exponential:
        return "(" + ",".join(map(str, alpha)) + ")"
    chunks = []
    for part, run in groupby(alpha):
        k = len(list(run))
        chunks.append(f"{part}^{k}" if k > 1 else str(part))
    return "(" + ",".join(chunks) + ")"


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_comp(text: str) -> Composition:
    """Parse "(1,4,1,2)", "1,4,1,2" or the exponential form "(1^4,2,1^2)"."""
    body = text.strip().strip("()[]").replace(" ", "")
    if not body:
        raise ValueError(f"empty composition literal {text!r}")
    parts: list[int] = []
    for token in body.split(","):
        match = _TOKEN.match(token)
        if not match:
            raise ValueError(f"bad composition literal {text!r}")
        part, times = int(match.group(1)), int(match.group(2) or 1)
        if times < 1:
            raise ValueError(f"bad exponent in composition literal {text!r}")
        parts.extend([part] * times)
    return _check(parts)
