"""A Foata-type bijection on S_n adapted to an interval graph.

It carries tilde_inv_G + maj over the complement to the classical inversion
number.  The building block is the gamma step on words.
"""

from __future__ import annotations

from .colorings import Word, maj_comp, tilde_inv_G
from .graphs import SimpleGraph, is_interval


def right_class(g: SimpleGraph, w: Word, x: int) -> list[bool]:
    """True at positions j with w_j > x and {x, w_j} not an edge."""
    adj = g.adj
    return [c > x and not adj[x][c] for c in w]


def _check_order(w: Word, right: list[bool]) -> None:
    big = [c for c, r in zip(w, right) if r]
    small = [c for c, r in zip(w, right) if not r]
    if big and small and min(big) <= max(small):
        raise AssertionError(f"order property failed for {w}: {small} vs {big}")


def gamma_step(g: SimpleGraph, w: Word, x: int, check: bool = True) -> Word:
    """Cut w after every letter in the class of its last letter, then rotate
    each block so that its last letter comes first.

    ``check`` asserts that right-class letters exceed left-class letters,
    which holds whenever g is an interval graph.
    """
    if not w:
        return ()
    right = right_class(g, w, x)
    if check:
        _check_order(w, right)
    case = right[-1]
    out: list[int] = []
    block: list[int] = []
    for c, r in zip(w, right):
        block.append(c)
        if r == case:
            out.append(block[-1])
            out.extend(block[:-1])
            block = []
    return tuple(out)


def gamma_step_inverse(g: SimpleGraph, u: Word, x: int) -> Word:
    """Undo :func:`gamma_step`; blocks start at letters in the class of u_1."""
    if not u:
        return ()
    right = right_class(g, u, x)
    case = right[0]
    blocks: list[list[int]] = []
    for c, r in zip(u, right):
        if r == case:
            blocks.append([c])
        else:
            blocks[-1].append(c)
    out: list[int] = []
    for block in blocks:
        out.extend(block[1:])
        out.append(block[0])
    return tuple(out)


def phi_foata(g: SimpleGraph, sigma: Word) -> Word:
    check = is_interval(g)
    w: Word = ()
    for x in sigma:
        w = gamma_step(g, w, x, check) + (x,)
    return w


def phi_foata_inv(g: SimpleGraph, tau: Word) -> Word:
    w = tuple(tau)
    out: list[int] = []
    while w:
        x = w[-1]
        out.append(x)
        w = gamma_step_inverse(g, w[:-1], x)
    return tuple(reversed(out))


def classical_inv(w: Word) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def certificate(g: SimpleGraph, sigma: Word) -> dict:
    """Image of sigma together with both sides of the statistic identity."""
    image = phi_foata(g, sigma)
    t_inv, maj = tilde_inv_G(g, sigma), maj_comp(g, sigma)
    return {
        "image": image,
        "inv": classical_inv(image),
        "tilde_inv": t_inv,
        "maj_comp": maj,
        "holds": classical_inv(image) == t_inv + maj,
    }
