"""Homogeneous quasisymmetric functions with exact q-coefficients.

An element is a degree, a basis tag ('M', 'L' or 'Psi') and a mapping from
compositions of the degree to coefficients (QPoly, or QRat when a genuine
denominator is present).
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Iterable, Mapping

from .compositions import (
    Composition,
    comp_of_mask,
    complement,
    enumerate_compositions,
    eta,
    format_comp,
    gamma,
    lambda_of,
    mask_of,
    parse_comp,
    partitions,
    refinements,
    reversal,
    split_by,
    transpose,
    coarsenings,
    z_of,
)
from .qcoeff import (
    ONE,
    QPoly,
    QRat,
    NotPolynomial,
    coerce_coeff,
    format_poly,
    one_minus_q_power_product,
    parse_coeff,
)

BASES = ("M", "L", "Psi")


def _is_zero(c) -> bool:
    return not c


class QSymElem:
    """Immutable homogeneous element; equality compares M-expansions."""

    __slots__ = ("degree", "basis", "coeffs")

    def __init__(self, degree: int, basis: str, coeffs: Mapping[Composition, object] = ()):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        clean: dict[Composition, object] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for alpha, c in items:
            alpha = tuple(alpha)
            if sum(alpha) != degree:
                raise ValueError(f"{alpha} is not a composition of {degree}")
            c = coerce_coeff(c)
            if alpha in clean:
                c = coerce_coeff(clean[alpha] + c)
            if _is_zero(c):
                clean.pop(alpha, None)
            else:
                clean[alpha] = c
        self.degree = degree
        self.basis = basis
        self.coeffs: dict[Composition, object] = clean

    # --- basic protocol ---------------------------------------------------
    def coefficient(self, alpha: Iterable[int]):
        return self.coeffs.get(tuple(alpha), QPoly())

    def terms(self) -> list[tuple[Composition, object]]:
        """Terms in ascending bitmask order of the composition."""
        return sorted(self.coeffs.items(), key=lambda kv: mask_of(kv[0]))

    def is_zero(self) -> bool:
        return not self.coeffs

    def to(self, basis: str) -> "QSymElem":
        if basis == self.basis:
            return self
        m = self if self.basis == "M" else (l_to_m(self) if self.basis == "L" else psi_to_m(self))
        if basis == "M":
            return m
        return m_to_l(m) if basis == "L" else m_to_psi(m)

    def __eq__(self, other):
        if not isinstance(other, QSymElem):
            return NotImplemented
        if self.degree != other.degree:
            return self.is_zero() and other.is_zero()
        if self.basis == other.basis:
            return self.coeffs == other.coeffs
        return self.to("M").coeffs == other.to("M").coeffs

    def __hash__(self):
        return hash((self.degree, frozenset(self.to("M").coeffs.items())))

    def _combine(self, other: "QSymElem", sign: int) -> "QSymElem":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        other = other.to(self.basis)
        out = dict(self.coeffs)
        for alpha, c in other.coeffs.items():
            out[alpha] = out[alpha] + sign * c if alpha in out else sign * c
        return QSymElem(self.degree, self.basis, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return QSymElem(self.degree, self.basis, {a: -c for a, c in self.coeffs.items()})

    def scale(self, c) -> "QSymElem":
        return QSymElem(self.degree, self.basis, {a: v * c for a, v in self.coeffs.items()})

    def map_coeffs(self, fn) -> "QSymElem":
        return QSymElem(self.degree, self.basis, {a: fn(v) for a, v in self.coeffs.items()})

    def at_q(self, value) -> "QSymElem":
        """Specialize q to a number (coefficients become constants)."""
        def ev(c):
            if isinstance(c, QRat):
                return QPoly([c.num(value) / c.den(value)])
            return QPoly([c(value)])
        return self.map_coeffs(ev)

    def __repr__(self):
        return f"QSymElem({self.degree}, {self.basis!r}, {render(self)!r})"

    def __str__(self):
        return render(self)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": self.basis,
            "terms": [{"comp": list(a), "coeff": _coeff_json(c)} for a, c in self.terms()],
        }


def _coeff_json(c):
    return c.to_json()


def from_json(obj: dict) -> QSymElem:
    return QSymElem(
        obj["degree"],
        obj["basis"],
        [(tuple(t["comp"]), parse_coeff(t["coeff"])) for t in obj["terms"]],
    )


def basis_element(basis: str, alpha: Iterable[int], coeff=1) -> QSymElem:
    alpha = tuple(alpha)
    return QSymElem(sum(alpha), basis, {alpha: coeff})


def M(*alpha: int) -> QSymElem:
    return basis_element("M", alpha)


def L(*alpha: int) -> QSymElem:
    return basis_element("L", alpha)


def from_masks(n: int, basis: str, by_mask: Mapping[int, object]) -> QSymElem:
    return QSymElem(n, basis, {comp_of_mask(n, k): c for k, c in by_mask.items()})


# --- text rendering -------------------------------------------------------------

def _coeff_text(c) -> str:
    if isinstance(c, QRat):
        return f"({c})"
    s = format_poly(c)
    if len(c.coeffs) == 1 or sum(1 for x in c.coeffs if x) == 1:
        return s
    return f"({s})"


def render(e: QSymElem) -> str:
    """"L_(2,1) + q^2 L_(1,2) + (1+2q+q^2) L_(1^3)"."""
    if not e.coeffs:
        return "0"
    parts = []
    for alpha, c in e.terms():
        name = f"{e.basis}_{format_comp(alpha, exponential=True)}"
        s = _coeff_text(c)
        if s == "1":
            parts.append(name)
        elif s == "-1":
            parts.append("-" + name)
        else:
            parts.append(f"{s} {name}")
    text = parts[0]
    for p in parts[1:]:
        text += " - " + p[1:] if p.startswith("-") else " + " + p
    return text


def parse_element(text: str) -> QSymElem:
    """Inverse of :func:`render` for polynomial coefficients."""
    import re

    body = text.strip()
    pattern = re.compile(r"\s*([+-])?\s*(?:\(([^()]*)\)|([0-9/q^+-]*?))\s*(M|L|Psi)_(\([^)]*\))")
    pos, terms, basis = 0, [], None
    while pos < len(body):
        m = pattern.match(body, pos)
        if not m:
            raise ValueError(f"bad element literal {text!r}")
        sign, paren, bare, b, comp = m.groups()
        raw = paren if paren is not None else (bare or "1")
        c = parse_coeff(raw.strip() or "1")
        if sign == "-":
            c = -c
        if basis is None:
            basis = b
        elif basis != b:
            raise ValueError("mixed bases in one element literal")
        terms.append((parse_comp(comp), c))
        pos = m.end()
    if not terms:
        raise ValueError(f"empty element literal {text!r}")
    return QSymElem(sum(terms[0][0]), basis, terms)


# --- M and L ------------------------------------------------------------------------

def l_to_m(e: QSymElem) -> QSymElem:
    """L_alpha = sum of M_beta over refinements beta of alpha."""
    if e.basis != "L":
        e = e.to("L")
    out: dict[Composition, object] = {}
    for alpha, c in e.coeffs.items():
        for beta in refinements(alpha):
            out[beta] = out[beta] + c if beta in out else c
    return QSymElem(e.degree, "M", out)


def m_to_l(e: QSymElem) -> QSymElem:
    """M_alpha = sum over refinements beta of (-1)^(l(beta)-l(alpha)) L_beta."""
    if e.basis != "M":
        e = e.to("M")
    out: dict[Composition, object] = {}
    for alpha, c in e.coeffs.items():
        for beta in refinements(alpha):
            term = c if (len(beta) - len(alpha)) % 2 == 0 else -c
            out[beta] = out[beta] + term if beta in out else term
    return QSymElem(e.degree, "L", out)


# --- involutions -----------------------------------------------------------------------

def _relabel(e: QSymElem, fn) -> QSymElem:
    return QSymElem(e.degree, e.basis, {fn(a): c for a, c in e.coeffs.items()})


def involution_rho(e: QSymElem) -> QSymElem:
    """Reverse every composition; acts the same way on M and on L."""
    if e.basis == "Psi":
        e = e.to("L")
    return _relabel(e, reversal)


def involution_psi(e: QSymElem) -> QSymElem:
    return _relabel(e.to("L"), complement)


def involution_omega(e: QSymElem) -> QSymElem:
    return _relabel(e.to("L"), transpose)


# --- products and power sums ------------------------------------------------------------

@lru_cache(maxsize=None)
def quasi_shuffle(a: Composition, b: Composition) -> tuple[tuple[Composition, int], ...]:
    """Stuffle of two compositions with multiplicities."""
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    acc: Counter = Counter()
    for rest, k in quasi_shuffle(a[1:], b):
        acc[(a[0],) + rest] += k
    for rest, k in quasi_shuffle(a, b[1:]):
        acc[(b[0],) + rest] += k
    for rest, k in quasi_shuffle(a[1:], b[1:]):
        acc[(a[0] + b[0],) + rest] += k
    return tuple(acc.items())


def m_product(x: QSymElem, y: QSymElem) -> QSymElem:
    x, y = x.to("M"), y.to("M")
    out: dict[Composition, object] = {}
    for a, ca in x.coeffs.items():
        for b, cb in y.coeffs.items():
            cab = ca * cb
            for gamma_, k in quasi_shuffle(a, b):
                term = cab * k
                out[gamma_] = out[gamma_] + term if gamma_ in out else term
    return QSymElem(x.degree + y.degree, "M", out)


def power_sum(lam: Iterable[int]) -> QSymElem:
    """p_lambda as a product of M_(lambda_i)."""
    lam = tuple(lam)
    out = M(lam[0])
    for part in lam[1:]:
        out = m_product(out, M(part))
    return out


# --- the Psi basis -------------------------------------------------------------------------

def _pi(alpha: Composition, beta: Composition) -> int:
    total = 1
    for block in split_by(alpha, beta):
        s = 0
        for part in block:
            s += part
            total *= s
    return total


@lru_cache(maxsize=None)
def psi_in_m(alpha: Composition) -> tuple[tuple[Composition, Fraction], ...]:
    """Psi_alpha = z_alpha * sum over coarsenings beta of M_beta / pi(alpha, beta)."""
    z = z_of(alpha)
    return tuple((beta, Fraction(z, _pi(alpha, beta))) for beta in coarsenings(alpha))


_GATED: set[int] = set()


def psi_gate(n: int) -> None:
    """Certify sum over lambda(alpha) = lambda of Psi_alpha equals p_lambda."""
    if n in _GATED:
        return
    by_shape: dict[Composition, dict[Composition, Fraction]] = {}
    for alpha in enumerate_compositions(n):
        acc = by_shape.setdefault(lambda_of(alpha), {})
        for beta, c in psi_in_m(alpha):
            acc[beta] = acc.get(beta, 0) + c
    for lam in partitions(n):
        lhs = QSymElem(n, "M", {b: QPoly([c]) for b, c in by_shape[lam].items()})
        if lhs.coeffs != power_sum(lam).coeffs:
            raise RuntimeError(f"Psi transition fails the power-sum gate at lambda={lam}")
    _GATED.add(n)


def psi_to_m(e: QSymElem) -> QSymElem:
    if e.basis == "M":
        return e
    if e.basis == "L":
        return l_to_m(e)
    psi_gate(e.degree)
    out: dict[Composition, object] = {}
    for alpha, c in e.coeffs.items():
        for beta, k in psi_in_m(alpha):
            term = c * k
            out[beta] = out[beta] + term if beta in out else term
    return QSymElem(e.degree, "M", out)


def m_to_psi(e: QSymElem) -> QSymElem:
    """Solve the refinement-triangular system from the finest compositions up."""
    e = e.to("M")
    n = e.degree
    psi_gate(n)
    order = sorted(enumerate_compositions(n), key=lambda a: (-len(a), mask_of(a)))
    residual = dict(e.coeffs)
    out: dict[Composition, object] = {}
    for alpha in order:
        c = residual.pop(alpha, None)
        if c is None or _is_zero(c):
            continue
        terms = psi_in_m(alpha)
        diag = dict(terms)[alpha]
        x = c * (1 / diag)
        out[alpha] = x
        for beta, k in terms:
            if beta != alpha:
                residual[beta] = residual[beta] - x * k if beta in residual else -(x * k)
    if any(not _is_zero(c) for c in residual.values()):
        raise RuntimeError("Psi transition left a residual")
    return QSymElem(n, "Psi", out)


# --- symmetry -----------------------------------------------------------------------------------

def is_symmetric(e: QSymElem) -> bool:
    m = e.to("M")
    shapes: dict[Composition, object] = {}
    for alpha in enumerate_compositions(e.degree) if e.degree else ():
        c = m.coefficient(alpha)
        lam = lambda_of(alpha)
        if lam in shapes:
            if shapes[lam] != c:
                return False
        else:
            shapes[lam] = c
    return True


# --- plethysm by the geometric alphabet ------------------------------------------------

def l_principal(alpha: Composition) -> QRat:
    """L_alpha evaluated on 1, q, q^2, ...: q^eta(alpha^r) / prod (1 - q^i)."""
    return QRat(QPoly.monomial(eta(reversal(alpha))), one_minus_q_power_product(sum(alpha)))


def _eta_rev_blocks(alpha: Composition, beta: Composition) -> int:
    return sum(eta(reversal(block)) for block in gamma(alpha, beta))


def cm_transform(f: QSymElem) -> QSymElem:
    """(1-q)^n rho(psi(f)[X/(1-q)]) in the M basis, every coefficient checked
    to be a polynomial.

    For psi(f) = sum d_alpha L_alpha the M_beta coefficient of the plethysm is
    sum_alpha d_alpha prod_i L_{gamma^i(alpha, beta)} on the geometric
    alphabet; all terms share the denominator prod_i prod_{k <= beta_i} (1-q^k).
    """
    n = f.degree
    g = involution_psi(f)
    scale = (QPoly([1, -1])) ** n
    out: dict[Composition, object] = {}
    for beta in enumerate_compositions(n):
        num = QPoly()
        for alpha, d in g.coeffs.items():
            if isinstance(d, QRat):
                raise TypeError("cm_transform expects polynomial coefficients")
            num = num + d.shift(_eta_rev_blocks(alpha, beta))
        if not num:
            continue
        den = ONE
        for part in beta:
            den = den * one_minus_q_power_product(part)
        quot, rem = (num * scale).divmod(den)
        if rem:
            raise NotPolynomial(
                f"coefficient of M_{format_comp(beta)} keeps the denominator {format_poly(den)}"
            )
        out[reversal(beta)] = quot
    return QSymElem(n, "M", out)


def cm_transform_reference(f: QSymElem) -> QSymElem:
    """Same transform through QRat arithmetic and l_principal, term by term."""
    n = f.degree
    g = involution_psi(f)
    scale = QPoly([1, -1]) ** n
    out: dict[Composition, object] = {}
    for beta in enumerate_compositions(n):
        acc = QRat(QPoly())
        for alpha, d in g.coeffs.items():
            acc = acc + QRat(d) * prod((l_principal(blk) for blk in gamma(alpha, beta)), start=QRat(ONE))
        acc = acc * scale
        if not acc.is_polynomial():
            raise NotPolynomial(f"coefficient of M_{format_comp(beta)} is {acc}")
        out[reversal(beta)] = acc.num
    return QSymElem(n, "M", out)
