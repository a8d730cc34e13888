from itertools import permutations, product as cartesian
from math import factorial

import pytest
from hypothesis import given, strategies as st

from multimahonian.permstat import (
    BudgetExceeded,
    all_descent_sets,
    all_permutations,
    complement,
    compose,
    count_product_one,
    descent_class_filter,
    descent_set,
    descents_of_lambda,
    format_descent_set,
    format_permutation,
    identity,
    inverse,
    iter_product_one,
    lambda_of_descents,
    lambda_of_permutation,
    longest_element,
    mahonian_polynomial,
    major_index,
    parse_descent_set,
    parse_permutation,
    permutations_with_descent_set,
    product,
    q_factorial,
    reverse,
    statistics,
)


@st.composite
def perms(draw, n=None):
    if n is None:
        n = draw(st.integers(1, 8))
    return tuple(draw(st.permutations(range(1, n + 1))))


@st.composite
def perm_triples(draw):
    n = draw(st.integers(1, 8))
    return tuple(draw(perms(n)) for _ in range(3))


def test_descent_set_examples():
    assert descent_set((3, 5, 2, 4, 1)) == {2, 4}
    assert descent_set(identity(6)) == frozenset()
    assert descent_set((3, 2, 1)) == {1, 2}


def test_statistics_examples():
    assert statistics((3, 5, 2, 4, 1)) == (6, 7)
    assert statistics(identity(5)) == (0, 0)


def test_inversions_of_35241_by_pairs():
    w = (3, 5, 2, 4, 1)
    pairs = [(w[i], w[j]) for i in range(5) for j in range(i + 1, 5) if w[i] > w[j]]
    assert len(pairs) == 7
    assert statistics(w)[1] == 7


def test_lambda_examples():
    assert lambda_of_permutation((3, 5, 2, 4, 1)) == (2, 2, 1, 1)
    assert lambda_of_permutation(identity(4)) == ()
    assert lambda_of_permutation((2, 1)) == (1,)


@pytest.mark.parametrize("n", range(1, 9))
def test_lambda_size_is_major_index(n):
    for p in all_permutations(n):
        assert sum(lambda_of_permutation(p)) == major_index(p)


@pytest.mark.parametrize("n", range(1, 10))
def test_lambda_encodes_descent_set(n):
    seen = {}
    for D in all_descent_sets(n):
        lam = lambda_of_descents(n, D)
        assert lam not in seen
        seen[lam] = D
        assert descents_of_lambda(lam) == D


def test_composition_convention_reproduces_worked_example():
    assert product([(1, 2, 4, 3), (1, 4, 2, 3), (1, 4, 3, 2)]) == identity(4)
    assert product([(2, 3, 4, 1), (2, 4, 1, 3), (2, 4, 3, 1)]) == identity(4)
    assert product([(1, 3, 4, 2), (1, 2, 4, 3), (1, 4, 3, 2)]) == identity(4)


def test_compose_size_mismatch():
    with pytest.raises(ValueError):
        compose((1, 2), (1, 2, 3))


@given(perm_triples())
def test_compose_associative(triple):
    a, b, c = triple
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(perms())
def test_inverse_two_sided(p):
    e = identity(len(p))
    assert compose(p, inverse(p)) == e
    assert compose(inverse(p), p) == e


@pytest.mark.parametrize("n", range(1, 8))
def test_longest_element_twists(n):
    w0 = longest_element(n)
    for p in all_permutations(n):
        # reverse is p followed by w0 on the right, complement is w0 then p
        assert reverse(p) == compose(w0, p)
        assert complement(p) == compose(p, w0)


def test_descent_class_examples():
    assert permutations_with_descent_set(3, {1, 2}) == [(3, 2, 1)]
    assert permutations_with_descent_set(4, {3}) == [(1, 2, 4, 3), (1, 3, 4, 2), (2, 3, 4, 1)]
    for n in range(1, 7):
        assert permutations_with_descent_set(n, set()) == [identity(n)]


@pytest.mark.parametrize("n", range(1, 8))
def test_descent_class_matches_filter(n):
    for D in all_descent_sets(n):
        assert sorted(permutations_with_descent_set(n, D)) == descent_class_filter(n, D)


@pytest.mark.parametrize("n", range(1, 9))
def test_descent_classes_partition_sn(n):
    assert sum(len(permutations_with_descent_set(n, D)) for D in all_descent_sets(n)) == factorial(n)


def test_descent_set_out_of_range():
    with pytest.raises(ValueError):
        permutations_with_descent_set(3, {3})


def test_mahonian_small():
    assert mahonian_polynomial(1) == [1]
    assert mahonian_polynomial(3, "maj") == [1, 2, 2, 1]
    assert mahonian_polynomial(3, "inv") == [1, 2, 2, 1]


@pytest.mark.parametrize("n", range(1, 9))
def test_maj_inv_equidistributed(n):
    assert mahonian_polynomial(n, "maj") == mahonian_polynomial(n, "inv") == q_factorial(n)


def _brute_product_one(n, k):
    everything = cartesian(list(permutations(range(1, n + 1))), repeat=k)
    return sorted(t for t in everything if product(list(t)) == identity(n))


@pytest.mark.parametrize("n,k", [(1, 1), (2, 2), (3, 1), (3, 2), (3, 3), (4, 3)])
def test_product_one_enumeration_against_brute_force(n, k):
    assert sorted(iter_product_one(n, [None] * k)) == _brute_product_one(n, k)


def test_product_one_with_profiles_against_brute_force():
    n, k = 4, 3
    full = _brute_product_one(n, k)
    for profile in [({3}, {2}, {2, 3}), ({3}, {3}, {2, 3}), ({1}, {1, 3}, {2}), (set(), set(), set())]:
        want = [t for t in full if all(descent_set(p) == D for p, D in zip(t, profile))]
        assert sorted(iter_product_one(n, profile)) == want
        assert count_product_one(n, profile) == len(want)


def test_product_one_budget():
    with pytest.raises(BudgetExceeded):
        count_product_one(6, [None, None, None], budget=1000)


def test_serialization():
    assert format_permutation((3, 5, 2, 4, 1)) == "35241"
    assert parse_permutation("35241") == (3, 5, 2, 4, 1)
    long = tuple(range(10, 0, -1))
    assert format_permutation(long) == "10,9,8,7,6,5,4,3,2,1"
    assert parse_permutation(format_permutation(long)) == long
    assert format_descent_set({4, 2}) == "{2,4}"
    assert parse_descent_set("{2,4}") == {2, 4}
    assert parse_descent_set("{}") == frozenset()
    with pytest.raises(ValueError):
        parse_permutation("1224")
