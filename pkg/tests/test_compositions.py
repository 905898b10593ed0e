from itertools import product

import pytest
from hypothesis import given

from qchroma.compositions import (
    coarsenings,
    comp_of,
    comp_of_mask,
    complement,
    enumerate_compositions,
    eta,
    eta_gamma,
    format_comp,
    gamma,
    lambda_of,
    mask_of,
    meet,
    multinomial,
    parse_comp,
    partitions,
    refinements,
    refines,
    reversal,
    set_of,
    split_by,
    transpose,
    z_of,
)

from .strategies import composition_pairs, compositions


def brute_compositions(n):
    """Oracle: filter all tuples of positive parts with the right sum."""
    out = []
    for k in range(1, n + 1):
        for parts in product(range(1, n + 1), repeat=k):
            if sum(parts) == n:
                out.append(parts)
    return out


def test_set_and_comp_examples():
    assert set_of((1, 4, 1, 2)) == {1, 5, 6}
    assert comp_of(8, {1, 5, 6}) == (1, 4, 1, 2)
    assert comp_of(3, set()) == (3,)


def test_meet_and_gamma_examples():
    assert meet((2, 2, 1), (3, 2)) == (2, 1, 1, 1)
    assert gamma((2, 2, 1), (3, 2)) == ((2, 1), (1, 1))
    assert eta((2, 2, 1)) == 6
    assert eta_gamma((2, 2, 1), (3, 2)) == 3
    assert eta((5,)) == 0


def test_refinement_example():
    assert refines((1, 3, 1, 1, 2, 1), (1, 4, 1, 3))
    assert not refines((1, 4, 1, 3), (1, 3, 1, 1, 2, 1))


def test_involution_examples():
    assert complement((1, 2)) == (2, 1)
    assert reversal((2, 1)) == (1, 2)
    assert transpose((3,)) == (1, 1, 1)


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_matches_brute_force(n):
    got = enumerate_compositions(n)
    assert sorted(got) == sorted(brute_compositions(n))
    assert len(got) == 2 ** (n - 1)
    assert [mask_of(a) for a in got] == list(range(2 ** (n - 1)))


@given(compositions())
def test_set_comp_round_trip(alpha):
    n = sum(alpha)
    assert comp_of(n, set_of(alpha)) == alpha
    assert comp_of_mask(n, mask_of(alpha)) == alpha


@given(compositions())
def test_involutions_square_to_identity(alpha):
    assert reversal(reversal(alpha)) == alpha
    assert complement(complement(alpha)) == alpha
    assert transpose(transpose(alpha)) == alpha
    assert transpose(alpha) == reversal(complement(alpha))


@given(compositions(max_n=6))
def test_refinements_and_coarsenings_are_dual(alpha):
    n = sum(alpha)
    fine = set(refinements(alpha))
    coarse = set(coarsenings(alpha))
    for beta in enumerate_compositions(n):
        assert (beta in fine) == refines(beta, alpha)
        assert (beta in coarse) == refines(alpha, beta)


@given(composition_pairs())
def test_gamma_blocks(pair):
    alpha, beta = pair
    blocks = gamma(alpha, beta)
    assert tuple(sum(b) for b in blocks) == beta
    assert tuple(p for b in blocks for p in b) == meet(alpha, beta)
    assert set_of(meet(alpha, beta)) == set_of(alpha) | set_of(beta)


@given(compositions())
def test_split_by_self_and_top(alpha):
    n = sum(alpha)
    assert split_by(alpha, (n,)) == (alpha,)
    assert split_by(alpha, alpha) == tuple((p,) for p in alpha)


def test_split_by_rejects_non_refinement():
    with pytest.raises(ValueError):
        split_by((2, 1), (1, 2))


def test_partitions_and_z():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert z_of((2, 2, 1)) == 8
    assert z_of((1, 2, 2)) == 8
    assert lambda_of((1, 3, 2)) == (3, 2, 1)
    assert multinomial((2, 1)) == 3


def test_literals():
    assert format_comp((1, 1, 1, 1, 2, 1, 1), exponential=True) == "(1^4,2,1^2)"
    assert parse_comp("(1^4,2,1^2)") == (1, 1, 1, 1, 2, 1, 1)
    assert parse_comp("1,4,1,2") == (1, 4, 1, 2)
    for bad in ["()", "(0,1)", "(a)", "(1^0)"]:
        with pytest.raises(ValueError):
            parse_comp(bad)


@given(compositions())
def test_literal_round_trip(alpha):
    assert parse_comp(format_comp(alpha)) == alpha
    assert parse_comp(format_comp(alpha, exponential=True)) == alpha
