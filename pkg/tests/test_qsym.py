from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from qchroma.compositions import (
    comp_of_mask,
    enumerate_compositions,
    lambda_of,
    partitions,
    set_of,
)
from qchroma.qcoeff import NotPolynomial, QPoly
from qchroma.qsym import (
    L,
    M,
    QSymElem,
    cm_transform,
    cm_transform_reference,
    from_json,
    involution_omega,
    involution_psi,
    involution_rho,
    is_symmetric,
    l_principal,
    m_product,
    parse_element,
    power_sum,
    psi_gate,
    psi_in_m,
    quasi_shuffle,
)

from .strategies import compositions


def elements(max_n=5, basis="L"):
    def build(n):
        comps = enumerate_compositions(n)
        coeff = st.lists(st.integers(-3, 3), min_size=1, max_size=3).map(QPoly)
        return st.dictionaries(st.sampled_from(comps), coeff, max_size=len(comps)).map(
            lambda d: QSymElem(n, basis, d)
        )

    return st.integers(1, max_n).flatmap(build)


@given(elements(basis="L"))
def test_l_m_round_trip(e):
    assert e.to("M").to("L").coeffs == e.coeffs


@given(elements(basis="M"))
def test_m_psi_round_trip(e):
    assert e.to("Psi").to("M").coeffs == e.coeffs


@given(elements())
def test_involutions(e):
    for inv_ in (involution_rho, involution_psi, involution_omega):
        assert inv_(inv_(e)) == e
    assert involution_omega(e) == involution_rho(involution_psi(e))


@given(elements())
def test_rho_is_the_same_on_both_bases(e):
    assert involution_rho(e).to("M") == involution_rho(e.to("M"))


@given(elements())
def test_text_and_json_round_trip(e):
    assert from_json(e.to_json()).coeffs == e.coeffs
    assert parse_element(str(e)).coeffs == e.coeffs if e.coeffs else str(e) == "0"


def test_render_order_and_format():
    e = L(1, 1, 1).scale(QPoly([1, 2, 1])) + L(1, 2).scale(QPoly.monomial(2)) + L(2, 1)
    assert str(e) == "q^2 L_(1,2) + L_(2,1) + (1+2q+q^2) L_(1^3)"


def test_small_products():
    assert m_product(M(1), M(1)) == M(1, 1).scale(2) + M(2)
    assert dict(quasi_shuffle((1,), (2,))) == {(1, 2): 1, (2, 1): 1, (3,): 1}
    assert L(1) == M(1)
    assert L(2) == M(2) + M(1, 1)


def monomials(e, letters=4):
    """Expansion of e in finitely many variables: exponent vector -> coefficient."""
    out = {}
    for alpha, c in e.to("M").coeffs.items():
        k = len(alpha)
        for pos in product(range(letters), repeat=k):
            if all(pos[i] < pos[i + 1] for i in range(k - 1)):
                exps = [0] * letters
                for p, a in zip(pos, alpha):
                    exps[p] = a
                out[tuple(exps)] = out.get(tuple(exps), QPoly()) + c
    return out


@given(compositions(max_n=3), compositions(max_n=3))
def test_m_product_matches_polynomial_multiplication(a, b):
    expected = {}
    for ea, ca in monomials(M(*a)).items():
        for eb, cb in monomials(M(*b)).items():
            key = tuple(i + j for i, j in zip(ea, eb))
            expected[key] = expected.get(key, QPoly()) + ca * cb
    assert monomials(m_product(M(*a), M(*b))) == {k: v for k, v in expected.items() if v}


def test_psi_examples_and_gate():
    assert dict(psi_in_m((1, 2))) == {(1, 2): 1, (3,): Fraction(2, 3)}
    assert dict(psi_in_m((2, 1))) == {(2, 1): 1, (3,): Fraction(1, 3)}
    for n in range(1, 7):
        psi_gate(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_psi_sum_by_shape_is_power_sum(n):
    for lam in partitions(n):
        total = QSymElem(n, "Psi", {a: 1 for a in enumerate_compositions(n) if lambda_of(a) == lam})
        assert total == power_sum(lam)
        assert is_symmetric(total)


def test_symmetry_detection():
    assert is_symmetric(M(1, 2) + M(2, 1))
    assert not is_symmetric(M(1, 2))


def principal_series(alpha, degree):
    """Brute coefficients of L_alpha(1, q, q^2, ...) up to q^degree."""
    n = sum(alpha)
    strict = set_of(alpha)
    counts = [0] * (degree + 1)

    def rec(i, low, total):
        if total > degree:
            return
        if i == n:
            counts[total] += 1
            return
        start = low + 1 if i in strict else low
        for v in range(start, degree + 1):
            if total + v > degree:
                break
            rec(i + 1, v, total + v)

    rec(0, 0, 0)
    return counts


@given(compositions(max_n=5))
def test_principal_specialization(alpha):
    degree = 12
    r = l_principal(alpha)
    series = QPoly(principal_series(alpha, degree))
    lhs = (series * r.den).coeffs[: degree + 1]
    rhs = list(r.num.coeffs[: degree + 1])
    lhs = list(lhs) + [0] * (degree + 1 - len(lhs))
    rhs = rhs + [0] * (degree + 1 - len(rhs))
    assert lhs == rhs


@given(elements(max_n=4))
def test_fast_and_reference_transforms_agree(e):
    try:
        fast = cm_transform(e)
    except NotPolynomial:
        with pytest.raises(NotPolynomial):
            cm_transform_reference(e)
        return
    assert fast == cm_transform_reference(e)


def test_transform_of_one_variable():
    assert cm_transform(L(1)) == M(1)


def test_masks_cover_all_compositions():
    assert {comp_of_mask(4, k) for k in range(8)} == set(enumerate_compositions(4))
