"""Chromatic, LLT and forest quasisymmetric functions of a graph.

Each series has a permutation route (fundamental basis, vectorised over
S_n) and an independent coloring route (monomial basis).
"""

from __future__ import annotations

from collections import defaultdict

import numpy as np

from . import batch
from .colorings import coinv, ev, inv, packed_proper_colorings, rearrangements
from .compositions import enumerate_compositions
from .forests import IncreasingForest, check_spanning, enumerate_isf, f, phi, wt
from .graphs import IntervalGraph, NotInterval, SimpleGraph, as_interval
from .qcoeff import QPoly
from .qsym import QSymElem, from_masks

KINDS = ("chrom", "llt", "forest")


def _interval(g: SimpleGraph) -> IntervalGraph:
    try:
        return as_interval(g)
    except NotInterval as exc:
        raise NotInterval(f"this construction needs an interval graph: {exc}") from None


def _need_vertices(g: SimpleGraph) -> None:
    if g.n < 1:
        raise ValueError("series are defined for graphs with at least one vertex")


# --- chromatic ---------------------------------------------------------------

def chromatic(g: SimpleGraph) -> QSymElem:
    """sum over S_n of q^coinv_G(sigma) L_{Des_G(sigma^-1)} (interval G)."""
    _need_vertices(g)
    g = _interval(g)
    return from_masks(g.n, "L", batch.chromatic_l_coefficients(g))


def chromatic_monomial(g: SimpleGraph) -> QSymElem:
    """sum over packed proper colorings of q^coinv_G(kappa) M_ev(kappa)."""
    _need_vertices(g)
    acc: dict = defaultdict(lambda: defaultdict(int))
    for kappa in packed_proper_colorings(g):
        acc[ev(kappa)][coinv(g, kappa)] += 1
    return QSymElem(g.n, "M", {a: QPoly.from_counts(c) for a, c in acc.items()})


# --- LLT ---------------------------------------------------------------------------

def llt(g: SimpleGraph) -> QSymElem:
    """sum over S_n of q^inv_G(sigma) L_{Des(sigma^-1)} (any graph)."""
    _need_vertices(g)
    return from_masks(g.n, "L", batch.llt_l_coefficients(g))


def llt_monomial(g: SimpleGraph) -> QSymElem:
    """Coefficient of M_beta is sum over R(beta) of q^inv_G(w)."""
    _need_vertices(g)
    out = {}
    for beta in enumerate_compositions(g.n):
        counts: dict[int, int] = defaultdict(int)
        for w in rearrangements(beta):
            counts[inv(g, w)] += 1
        out[beta] = QPoly.from_counts(counts)
    return QSymElem(g.n, "M", out)


# --- forests -----------------------------------------------------------------------

def forest_qsym(g: SimpleGraph, forest: IncreasingForest) -> QSymElem:
    """Sum of L_{Des_G(sigma^-1)} over sigma with CoInv_G(sigma) = CoInv_G(F)."""
    _need_vertices(g)
    g = _interval(g)
    check_spanning(g, forest)
    t, adj = batch.perm_table(g.n), batch.adjacency(g)
    codes = batch.coinv_codes(t.perms, g)
    target = batch.coinv_code(g, f(g, forest))
    rows = codes == target
    masks = batch.des_G_mask(t.inverse[rows], adj)
    values, counts = np.unique(masks, return_counts=True)
    return from_masks(g.n, "L", dict(zip(values.tolist(), counts.tolist())))


def forest_qsym_monomial(g: SimpleGraph, forest: IncreasingForest) -> QSymElem:
    """Sum of M_ev(kappa) over packed proper colorings in the phi-fiber of F."""
    _need_vertices(g)
    check_spanning(g, forest)
    acc: dict = defaultdict(int)
    for kappa in packed_proper_colorings(g):
        if phi(g, kappa) == forest:
            acc[ev(kappa)] += 1
    return QSymElem(g.n, "M", acc)


def forest_decomposition(g: SimpleGraph) -> list[tuple[IncreasingForest, int, QSymElem]]:
    """(F, wt_G(F), Q_F) for every F in ISF(G), from one pass over S_n."""
    _need_vertices(g)
    g = _interval(g)
    t, adj = batch.perm_table(g.n), batch.adjacency(g)
    codes = batch.coinv_codes(t.perms, g)
    masks = batch.des_G_mask(t.inverse, adj)
    fibers: dict[int, dict[int, int]] = defaultdict(lambda: defaultdict(int))
    for code, mask in zip(codes.tolist(), masks.tolist()):
        fibers[code][mask] += 1
    out = []
    for forest in enumerate_isf(g):
        code = batch.coinv_code(g, f(g, forest))
        out.append((forest, wt(g, forest), from_masks(g.n, "L", fibers[code])))
    return out


def chromatic_from_forests(g: SimpleGraph) -> QSymElem:
    """sum over ISF(G) of q^wt_G(F) Q_F."""
    total = QSymElem(g.n, "L")
    for _, weight, q_f in forest_decomposition(g):
        total = total + q_f.map_coeffs(lambda c, k=weight: c.shift(k))
    return total


def build(kind: str, g: SimpleGraph, forest: IncreasingForest | None = None, route: str = "perm") -> QSymElem:
    """Dispatch used by the command line; ``route`` is 'perm' or 'monomial'."""
    if kind == "chrom":
        return chromatic(g) if route == "perm" else chromatic_monomial(g)
    if kind == "llt":
        return llt(g) if route == "perm" else llt_monomial(g)
    if kind == "forest":
        if forest is None:
            raise ValueError("kind 'forest' needs a forest")
        return forest_qsym(g, forest) if route == "perm" else forest_qsym_monomial(g, forest)
    raise ValueError(f"unknown series kind {kind!r}")
