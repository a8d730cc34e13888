from itertools import permutations, product

import pytest

from multimahonian.permstat import (
    all_descent_sets,
    all_permutations,
    compose,
    descent_set,
    identity,
    inverse,
    iter_product_one,
    longest_element,
)
from multimahonian.symmetry import (
    StatKind,
    count_mixed,
    dcac_kinds,
    mixed_profile,
    profiles,
    stat,
    transform,
    verify_dcac,
    verify_sym,
)


def asc(p):
    return frozenset(i for i in range(1, len(p)) if p[i - 1] < p[i])


def test_transform_examples():
    assert transform(4, {3}, StatKind.CODES) == {1}
    assert transform(4, {3}, StatKind.ASC) == {1, 2}
    assert transform(4, {3}, StatKind.COASC) == {2, 3}
    assert transform(4, {3}, StatKind.DES) == {3}


@pytest.mark.parametrize("n", range(1, 9))
def test_transforms_are_involutions(n):
    for D in all_descent_sets(n):
        for kind in StatKind:
            assert transform(n, transform(n, D, kind), kind) == D


@pytest.mark.parametrize("n", range(1, 8))
def test_stat_definitions_on_permutations(n):
    w0 = longest_element(n)
    for p in all_permutations(n):
        assert stat(p, StatKind.ASC) == asc(p)
        assert stat(p, StatKind.CODES) == descent_set(compose(w0, compose(p, w0)))
        # Des of sigma*w0 and w0*sigma in one-line notation
        assert descent_set(tuple(p[n - j] for j in range(1, n + 1))) == stat(p, StatKind.COASC)
        assert descent_set(tuple(n + 1 - x for x in p)) == stat(p, StatKind.ASC)


def brute_mixed(n, D, kinds, perm):
    k = len(D)
    total = 0
    for tup in iter_product_one(n, [None] * k):
        if all(stat(tup[perm[i] - 1], kinds[i]) == frozenset(D[i]) for i in range(k)):
            total += 1
    return total


@pytest.mark.parametrize("n", [3, 4])
def test_count_mixed_against_direct_statistics(n):
    sets = all_descent_sets(n)
    for D in [(sets[1], sets[-1], sets[2]), (sets[0], sets[3], sets[3]), (frozenset({1}), frozenset({2}), frozenset({1}))]:
        for kinds in product(StatKind, repeat=3):
            for perm in [(1, 2, 3), (2, 3, 1), (3, 1, 2)]:
                assert count_mixed(n, D, kinds, perm) == brute_mixed(n, D, kinds, perm)


def test_count_mixed_examples():
    D = [{3}, {2}, {2, 3}]
    assert count_mixed(4, D, [StatKind.DES] * 3) == 2
    for perm in permutations((1, 2, 3)):
        assert count_mixed(4, D, [StatKind.DES] * 3, perm) == 2


def test_mixed_profile_validation():
    with pytest.raises(ValueError):
        mixed_profile(3, [{1}, {2}], [StatKind.DES], (1, 2))
    with pytest.raises(ValueError):
        mixed_profile(3, [{1}, {2}], [StatKind.DES] * 2, (1, 1))


def test_dcac_kinds():
    assert dcac_kinds(4, 1, 2, 3) == (StatKind.DES, StatKind.CODES, StatKind.ASC, StatKind.COASC)
    assert dcac_kinds(2, 0, 0, 0) == (StatKind.COASC,) * 2
    with pytest.raises(ValueError):
        dcac_kinds(2, 2, 1, 2)


def test_profiles_sampling_is_seeded():
    a = profiles(5, 3, sample=20, seed=7)
    assert a == profiles(5, 3, sample=20, seed=7)
    assert len(set(a)) == 20
    assert len(profiles(3, 2)) == 16


def test_inverse_pairs_are_the_k2_case():
    # (s, s^-1) is the only way to complete s to a product-one pair
    for n in range(1, 6):
        pairs = sorted(iter_product_one(n, [None, None]))
        assert pairs == sorted((p, inverse(p)) for p in all_permutations(n))
        assert all(compose(a, b) == identity(n) for a, b in pairs)


@pytest.mark.parametrize("n,k", [(3, 2), (3, 3), (4, 3)])
def test_verify_sym_exhaustive(n, k):
    report = verify_sym(n, k)
    assert report.ok, report.text()


def test_verify_sym_sampled():
    report = verify_sym(5, 3, sample=25, seed=1)
    assert report.ok, report.text()


@pytest.mark.parametrize("k", [1, 2, 3])
def test_verify_dcac(k):
    report = verify_dcac(4, k)
    assert report.ok, report.text()
    assert all(row["status"] == "PASS" for row in report.data)
    assert len(report.data) == 8**k
