"""Executable checks of the theorems and conjectures, with graph sweeps.

Every check takes one graph and returns ``(passed, witness)``; the witness
is None on success and otherwise a JSON-ready dict that names the
offending object together with both sides of the failed comparison.
"""

from __future__ import annotations

import json
import random
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable, Iterable, Iterator, Optional

import numpy as np

from . import batch
from .colorings import (
    Word,
    coinv,
    coinv_set,
    des_G,
    inverse,
    inv,
    rearrangements,
)
from .compositions import (
    Composition,
    comp_of_mask,
    enumerate_compositions,
    eta_gamma,
    format_comp,
    lambda_of,
    mask_of,
    partitions,
    z_of,
)
from .forests import enumerate_isf, f, format_forest, phi, wt
from .graphs import (
    IntervalGraph,
    SimpleGraph,
    complete_graph,
    enumerate_dyck,
    enumerate_interval,
    is_dyck,
    is_interval,
    parse_graph,
)
from .qcoeff import NotPolynomial, QPoly, format_poly, q_factorial
from .qsym import (
    QSymElem,
    cm_transform,
    involution_omega,
    is_symmetric,
    m_to_psi,
    power_sum,
    psi_gate,
)
from .series import (
    chromatic,
    chromatic_from_forests,
    chromatic_monomial,
    forest_decomposition,
    llt,
    llt_monomial,
)

Outcome = tuple[bool, Optional[dict]]


@dataclass
class Verdict:
    claim: str
    kind: str
    graph: str
    passed: bool
    witness: Optional[dict] = None
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "kind": self.kind,
            "graph": self.graph,
            "pass": self.passed,
            "witness": self.witness,
            "seconds": round(self.seconds, 6),
        }


@dataclass(frozen=True)
class Claim:
    id: str
    kind: str  # "theorem" or "conjecture"
    family: str  # "interval", "dyck" or "complete"
    check: Callable[[SimpleGraph], Outcome]
    summary: str


def _fail(**items) -> Outcome:
    return False, {k: _jsonable(v) for k, v in items.items()}


def _jsonable(v):
    if isinstance(v, QPoly):
        return format_poly(v)
    if isinstance(v, QSymElem):
        return str(v)
    if isinstance(v, (frozenset, set)):
        return sorted(_jsonable(x) for x in v)
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    return v


def _first_diff(a: QSymElem, b: QSymElem) -> Optional[dict]:
    a = a.to(b.basis)
    for alpha in enumerate_compositions(a.degree):
        x, y = a.coefficient(alpha), b.coefficient(alpha)
        if x != y:
            return {"basis": b.basis, "comp": format_comp(alpha), "left": str(x), "right": str(y)}
    return None


def _compare(lhs: QSymElem, rhs: QSymElem, **context) -> Outcome:
    diff = _first_diff(lhs, rhs)
    if diff is None:
        return True, None
    return _fail(**context, **diff)


# --- forests and colorings -------------------------------------------------

def check_phi_section(g: SimpleGraph) -> Outcome:
    """phi(f(F)) = F and Des_G(f(F)^-1) = [n-1] for every F in ISF(G)."""
    full = frozenset(range(1, g.n))
    for forest in enumerate_isf(g):
        sigma = f(g, forest)
        back = phi(g, sigma)
        if back != forest:
            return _fail(forest=format_forest(forest), f=list(sigma), phi=format_forest(back))
        if des_G(g, inverse(sigma)) != full:
            return _fail(forest=format_forest(forest), f=list(sigma), des_G_inverse=des_G(g, inverse(sigma)))
    return True, None


def check_wt_coinv(g: SimpleGraph) -> Outcome:
    """wt(phi(s)) = coinv(s), and phi-fibers are exactly the CoInv classes."""
    by_forest: dict = {}
    by_coinv: dict = {}
    for sigma in map(tuple, batch.perm_table(g.n).perms.tolist()):
        forest = phi(g, sigma)
        cs = coinv_set(g, sigma)
        if wt(g, forest) != len(cs):
            return _fail(sigma=list(sigma), forest=format_forest(forest), wt=wt(g, forest), coinv=len(cs))
        if by_forest.setdefault(forest, cs) != cs:
            return _fail(sigma=list(sigma), forest=format_forest(forest), coinv_set=cs, other=by_forest[forest])
        if by_coinv.setdefault(cs, forest) != forest:
            return _fail(sigma=list(sigma), coinv_set=cs, forest=format_forest(forest), other=format_forest(by_coinv[cs]))
    isf = sum(1 for _ in enumerate_isf(g))
    if len(by_forest) != isf:
        return _fail(images=len(by_forest), isf=isf)
    return True, None


def check_forest_fundamental(g: SimpleGraph) -> Outcome:
    """Q_F from the CoInv filter on S_n equals the phi-fiber of packed colorings."""
    from .colorings import ev, packed_proper_colorings

    fibers: dict = {}
    for kappa in packed_proper_colorings(g):
        acc = fibers.setdefault(phi(g, kappa), {})
        acc[ev(kappa)] = acc.get(ev(kappa), 0) + 1
    for forest, _, q_f in forest_decomposition(g):
        monomial = QSymElem(g.n, "M", fibers.get(forest, {}))
        ok, witness = _compare(q_f, monomial, forest=format_forest(forest))
        if not ok:
            return ok, witness
    return True, None


def check_chrom_forests(g: SimpleGraph) -> Outcome:
    chi = chromatic(g)
    ok, witness = _compare(chromatic_from_forests(g), chi, route="forests")
    if not ok:
        return ok, witness
    return _compare(chromatic_monomial(g), chi, route="monomial")


def check_llt_fundamental(g: SimpleGraph) -> Outcome:
    return _compare(llt(g), llt_monomial(g))


def check_kn_corollary(g: SimpleGraph) -> Outcome:
    """For K_n phi is a bijection S_n -> ISF and sum of q^wt is [n]_q!."""
    images = {phi(g, s) for s in map(tuple, batch.perm_table(g.n).perms.tolist())}
    isf = list(enumerate_isf(g))
    if len(images) != len(isf):
        return _fail(images=len(images), isf=len(isf))
    total = QPoly.from_counts(_count(wt(g, forest) for forest in isf))
    if total != q_factorial(g.n):
        return _fail(weights=total, expected=q_factorial(g.n))
    return True, None


def _count(values: Iterable[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for v in values:
        out[v] = out.get(v, 0) + 1
    return out


# --- the fundamental formula, Mahonian identity and Foata map ----------------------------

def main_formula_sides(g: SimpleGraph, beta: Composition, dist: Optional[dict] = None) -> tuple[QPoly, QPoly]:
    n = g.n
    if dist is None:
        dist = batch.alpha_distribution(g)
    lhs = QPoly()
    for mask, poly in dist.items():
        lhs = lhs + poly.shift(eta_gamma(comp_of_mask(n, mask), beta))
    words = _count(inv(g, w) for w in rearrangements(beta))
    rhs = QPoly.from_counts(words)
    for part in beta:
        rhs = rhs * q_factorial(part)
    return lhs, rhs


def check_main_formula(g: SimpleGraph, beta: Optional[Composition] = None) -> Outcome:
    dist = batch.alpha_distribution(g)
    betas = enumerate_compositions(g.n) if beta is None else (tuple(beta),)
    for b in betas:
        lhs, rhs = main_formula_sides(g, b, dist)
        if lhs != rhs:
            return _fail(beta=format_comp(b), left=lhs, right=rhs)
    return True, None


def check_mahonian(g: SimpleGraph) -> Outcome:
    got = batch.mahonian_polynomial(g)
    if got != q_factorial(g.n):
        return _fail(left=got, right=q_factorial(g.n))
    return True, None


def check_foata(g: SimpleGraph) -> Outcome:
    """phi_G is a bijection with inv(phi_G(s)) = tilde_inv + maj over the complement."""
    t, adj = batch.perm_table(g.n), batch.adjacency(g)
    images = batch.foata_rows(t.perms, adj, check=True)
    codes = batch.encode_rows(images)
    if len(np.unique(codes)) != len(t):
        return _fail(reason="not injective")
    lhs = batch.classical_inv(images)
    rhs = batch.tilde_inv(t, adj) + batch.mask_sum(batch.tilde_des_mask(t.perms, adj), g.n)
    bad = np.flatnonzero(lhs != rhs)
    if len(bad):
        k = int(bad[0])
        return _fail(sigma=t.perms[k].tolist(), image=images[k].tolist(), inv=int(lhs[k]), stat=int(rhs[k]))
    back = batch.foata_inverse_rows(images, adj)
    bad = np.flatnonzero((back != t.perms).any(axis=1))
    if len(bad):
        k = int(bad[0])
        return _fail(sigma=t.perms[k].tolist(), image=images[k].tolist(), inverse=back[k].tolist())
    return True, None


# --- the main identity and symmetry ------------------------------------------------

def check_main_identity(g: SimpleGraph) -> Outcome:
    if is_interval(g):
        chi = chromatic(g)
    else:
        warnings.warn("main identity probed outside interval graphs; no expectation", stacklevel=2)
        chi = chromatic_monomial(g).to("L")
    try:
        lhs = cm_transform(chi)
    except NotPolynomial as exc:
        return _fail(reason=str(exc))
    return _compare(lhs, llt(g).to("M"))


def check_dyck_symmetric(g: SimpleGraph) -> Outcome:
    for name, elem in (("chromatic", chromatic(g)), ("llt", llt(g))):
        if not is_symmetric(elem):
            return _fail(series=name, value=elem)
    return True, None


def nonsymmetric_witness(n: int) -> Optional[IntervalGraph]:
    """First non-Dyck interval graph on [n] whose chromatic function is not symmetric."""
    for g in enumerate_interval(n):
        if not is_dyck(g) and not is_symmetric(chromatic(g)):
            return g
    return None


# --- the Psi expansions -------------------------------------------------------------

def n_distribution(g: SimpleGraph) -> dict[Composition, QPoly]:
    """alpha -> sum over N_{G,alpha} of q^tilde_inv_G."""
    t, adj = batch.perm_table(g.n), batch.adjacency(g)
    member = batch.n_membership(t.perms, adj)
    tinv = batch.tilde_inv(t, adj)
    out = {}
    for mask in range(member.shape[1]):
        sel = tinv[member[:, mask]]
        out[comp_of_mask(g.n, mask)] = batch.histogram(sel) if len(sel) else QPoly()
    return out


def _psi_element(n: int, coeffs: dict[Composition, object]) -> QSymElem:
    return QSymElem(n, "Psi", {a: c * _inv(z_of(a)) for a, c in coeffs.items()})


def _inv(k: int):
    from fractions import Fraction

    return Fraction(1, k)


def check_athanasiadis(g: SimpleGraph) -> Outcome:
    dist = n_distribution(g)
    rhs = QSymElem(g.n, "M")
    for lam in partitions(g.n):
        rhs = rhs + power_sum(lam).scale(dist[lam] * _inv(z_of(lam)))
    return _compare(involution_omega(chromatic(g)).to("M"), rhs)


def check_interval_conjecture(g: SimpleGraph) -> Outcome:
    psi_gate(g.n)
    lhs = m_to_psi(involution_omega(chromatic(g)))
    return _compare(lhs, _psi_element(g.n, n_distribution(g)))


def check_dyck_alpha(g: SimpleGraph) -> Outcome:
    dist = n_distribution(g)
    for alpha in enumerate_compositions(g.n):
        if dist[alpha] != dist[lambda_of(alpha)]:
            return _fail(alpha=format_comp(alpha), left=dist[alpha], right=dist[lambda_of(alpha)])
    return True, None


def forest_conjecture_witness(g: SimpleGraph) -> Optional[dict]:
    """Check the Psi expansion of omega Q_phi(tau) for one tau per forest.

    tau runs over f_G(ISF(G)); for interval G every tau in S_n shares
    phi_G(tau) and Inv_G(tau) with exactly one of these.
    """
    psi_gate(g.n)
    t, adj = batch.perm_table(g.n), batch.adjacency(g)
    member = batch.n_membership(t.perms, adj)
    inverse_codes = batch.coinv_codes(t.inverse, g)
    all_edges = (1 << len(g.edges)) - 1
    for forest, _, q_f in forest_decomposition(g):
        tau = f(g, forest)
        target = all_edges ^ batch.coinv_code(g, tau)
        rows = member[inverse_codes == target]
        counts = {comp_of_mask(g.n, k): int(c) for k, c in enumerate(rows.sum(axis=0).tolist()) if c}
        ok, witness = _compare(m_to_psi(involution_omega(q_f)), _psi_element(g.n, counts))
        if not ok:
            witness["tau"] = list(tau)
            witness["forest"] = format_forest(forest)
            return witness
    return None


def check_forest_conjecture(g: SimpleGraph) -> Outcome:
    witness = forest_conjecture_witness(g)
    return witness is None, witness


def check_implication(g: SimpleGraph) -> Outcome:
    forest_ok, _ = check_forest_conjecture(g)
    interval_ok, witness = check_interval_conjecture(g)
    if forest_ok and not interval_ok:
        return _fail(reason="forest expansion holds but interval expansion fails", detail=witness)
    return True, None


# --- the non-interval counterexample -------------------------------------------------------

def non_interval_counterexample() -> dict:
    """The three-vertex graph with edges 13, 23: phi merges 123 and 132."""
    g = SimpleGraph(3, [(1, 3), (2, 3)])
    a, b = (1, 2, 3), (1, 3, 2)
    fa, fb = phi(g, a), phi(g, b)
    return {
        "graph": g.key(),
        "interval": is_interval(g),
        "phi_123": format_forest(fa),
        "phi_132": format_forest(fb),
        "same_forest": fa == fb,
        "coinv_set_123": sorted(coinv_set(g, a)),
        "coinv_set_132": sorted(coinv_set(g, b)),
        "wt_phi_132": wt(g, fb),
        "coinv_132": coinv(g, b),
    }


# --- registry -----------------------------------------------------------------------

CLAIMS: dict[str, Claim] = {
    c.id: c
    for c in [
        Claim("phi-section", "theorem", "interval", check_phi_section, "phi(f(F)) = F on ISF(G)"),
        Claim("wt-coinv", "theorem", "interval", check_wt_coinv, "wt(phi(s)) = coinv(s); fibers are CoInv classes"),
        Claim("forest-fundamental", "theorem", "interval", check_forest_fundamental, "Q_F via S_n filter = Q_F via packed colorings"),
        Claim("chrom-forests", "theorem", "interval", check_chrom_forests, "chi = sum q^wt Q_F = monomial route"),
        Claim("llt-fundamental", "theorem", "interval", check_llt_fundamental, "LLT fundamental expansion = monomial route"),
        Claim("kn-corollary", "theorem", "complete", check_kn_corollary, "K_n: phi bijective on S_n, sum q^wt = [n]_q!"),
        Claim("main-formula", "theorem", "interval", check_main_formula, "eta-weighted alpha_G distribution = [beta]_q! R(beta) sum"),
        Claim("mahonian", "theorem", "interval", check_mahonian, "tilde_inv + maj over the complement is Mahonian"),
        Claim("foata", "theorem", "interval", check_foata, "Foata-type bijection carries the statistic to inv"),
        Claim("main-identity", "theorem", "interval", check_main_identity, "(1-q)^n rho psi chi[X/(1-q)] = LLT"),
        Claim("athanasiadis", "theorem", "dyck", check_athanasiadis, "p_lambda expansion of omega chi for Dyck graphs"),
        Claim("dyck-symmetric", "theorem", "dyck", check_dyck_symmetric, "chi and LLT symmetric for Dyck graphs"),
        Claim("interval-conjecture", "conjecture", "interval", check_interval_conjecture, "Psi expansion of omega chi"),
        Claim("forest-conjecture", "conjecture", "interval", check_forest_conjecture, "Psi expansion of omega Q_F"),
        Claim("dyck-alpha-conjecture", "conjecture", "dyck", check_dyck_alpha, "N_alpha sum depends only on lambda(alpha)"),
        Claim("dyck-alpha-interval", "conjecture", "interval", check_dyck_alpha, "same statement probed on interval graphs"),
        Claim("implication", "theorem", "interval", check_implication, "forest expansion implies interval expansion"),
    ]
}


def load_defaults(path: Optional[str] = None) -> dict:
    """Per-claim sweep defaults; the packaged file unless ``path`` is given."""
    if path is None:
        text = resources.files("qchroma").joinpath("data/verify_defaults.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return json.loads(text)


def parse_range(text: str) -> list[int]:
    """"3..6" -> [3, 4, 5, 6]; "5" -> [5]; "1,3" -> [1, 3]."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    if any(k < 1 for k in out):
        raise ValueError(f"graph sizes must be positive: {text!r}")
    return sorted(set(out))


def family_graphs(family: str, n: int) -> list[SimpleGraph]:
    if family == "interval":
        return list(enumerate_interval(n))
    if family == "dyck":
        return list(enumerate_dyck(n))
    if family == "complete":
        return [complete_graph(n)]
    raise ValueError(f"unknown graph family {family!r}")


def run_claim(claim_id: str, g: SimpleGraph) -> Verdict:
    claim = CLAIMS[claim_id]
    start = time.perf_counter()
    passed, witness = claim.check(g)
    return Verdict(claim.id, claim.kind, g.key(), passed, witness, time.perf_counter() - start)


def _run_literal(args: tuple[str, str]) -> Verdict:
    claim_id, literal = args
    return run_claim(claim_id, parse_graph(literal))


def select_graphs(
    claim_id: str,
    ns: Iterable[int],
    sample: Optional[int] = None,
    seed: int = 0,
    graph_filter: Optional[Callable[[SimpleGraph], bool]] = None,
) -> list[SimpleGraph]:
    """Graphs of the claim's family in deterministic order, optionally sampled per n."""
    family = CLAIMS[claim_id].family
    rng = random.Random(seed)
    chosen: list[SimpleGraph] = []
    for n in ns:
        graphs = family_graphs(family, n)
        if graph_filter is not None:
            graphs = [g for g in graphs if graph_filter(g)]
        if sample is not None and sample < len(graphs):
            keep = sorted(rng.sample(range(len(graphs)), sample))
            graphs = [graphs[i] for i in keep]
        chosen.extend(graphs)
    return chosen


def iter_sweep(claim_id: str, graphs: list[SimpleGraph], jobs: int = 1) -> Iterator[Verdict]:
    """Yield verdicts as they complete (order follows ``graphs`` when jobs = 1)."""
    if claim_id not in CLAIMS:
        raise KeyError(f"unknown claim {claim_id!r}")
    if jobs <= 1 or len(graphs) < 2:
        for g in graphs:
            yield run_claim(claim_id, g)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        tasks = [(claim_id, g.key()) for g in graphs]
        yield from pool.map(_run_literal, tasks, chunksize=max(1, len(tasks) // (4 * jobs)))


def sweep(
    claim_id: str,
    ns: Iterable[int],
    sample: Optional[int] = None,
    seed: int = 0,
    jobs: int = 1,
    graph_filter: Optional[Callable[[SimpleGraph], bool]] = None,
) -> list[Verdict]:
    graphs = select_graphs(claim_id, ns, sample, seed, graph_filter)
    order = {g.key(): k for k, g in enumerate(graphs)}
    return sorted(iter_sweep(claim_id, graphs, jobs), key=lambda v: order[v.graph])


@dataclass
class Summary:
    claim: str
    kind: str
    total: int = 0
    passed: int = 0
    seconds: float = 0.0
    failures: list[Verdict] = field(default_factory=list)

    @property
    def fatal(self) -> bool:
        return self.kind == "theorem" and bool(self.failures)

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "kind": self.kind,
            "total": self.total,
            "passed": self.passed,
            "failed": len(self.failures),
            "seconds": round(self.seconds, 3),
        }


def summarize(claim_id: str, verdicts: Iterable[Verdict]) -> Summary:
    s = Summary(claim_id, CLAIMS[claim_id].kind)
    for v in verdicts:
        s.total += 1
        s.seconds += v.seconds
        if v.passed:
            s.passed += 1
        else:
            s.failures.append(v)
    return s
