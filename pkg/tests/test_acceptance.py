"""Acceptance criteria, one test per criterion.

Run under pytest for a per-criterion PASS/FAIL block in the terminal
summary, or directly (``python tests/test_acceptance.py``) for the same
lines without pytest.
"""

import time
from contextlib import contextmanager
from itertools import product

import pytest

from multimahonian.cli import main
from multimahonian.distributions import (
    count_tuples_with_descents,
    multimahonian_via_kronecker,
    refined_multimahonian,
    verify_multipartite_count,
    verify_refined_quotient_identity,
)
from multimahonian.kronecker import KroneckerTable, kronecker_character, kronecker_recursive, tensor_decompose
from multimahonian.permstat import all_permutations, descent_set, inverse, mahonian_polynomial
from multimahonian.symmetry import verify_dcac, verify_sym
from multimahonian.tableaux import (
    canonical_descents,
    canonical_tableau,
    conjugate,
    dimension,
    dominance_leq,
    enumerate_standard_tableaux,
    partitions,
    rs_correspondence,
    shape,
    tableau_descents,
    tableaux_with_descent_set,
)

pytestmark = pytest.mark.acceptance


@contextmanager
def time_limit(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, limit {seconds}s"


def closed_form(n):
    # prod_{i=1}^{n-1} (1 + q + ... + q^i), as a coefficient list
    coeffs = [1]
    for i in range(1, n):
        out = [0] * (len(coeffs) + i)
        for a, c in enumerate(coeffs):
            for b in range(i + 1):
                out[a + b] += c
        coeffs = out
    return coeffs


def test_criterion_01_worked_example(capsys):
    with time_limit(1.0):
        assert main(["kron", "3,1", "2,2", "2,1,1"]) == 0
        assert capsys.readouterr().out == "1\n"
        assert count_tuples_with_descents(4, [{3}, {2}, {2, 3}]) == 2
        assert kronecker_recursive([(3, 1), (3, 1), (2, 1, 1)]) == 1


def test_criterion_02_oracle_equivalence():
    with time_limit(60.0):
        checked = 0
        for n, k in [(n, 3) for n in range(1, 6)] + [(n, 2) for n in range(1, 7)]:
            table = KroneckerTable(n)
            for key in product(partitions(n), repeat=k):
                assert kronecker_recursive(key, table) == kronecker_character(key), key
                checked += 1
        assert checked >= 343


def test_criterion_03_classical_sanity():
    for n in range(1, 7):
        table = KroneckerTable(n)
        for mu in partitions(n):
            assert kronecker_recursive([mu], table) == (1 if mu == (n,) else 0)
            for nu in partitions(n):
                assert kronecker_recursive([mu, nu], table) == (1 if mu == nu else 0)
        if n <= 5:
            for a, b in product(partitions(n), repeat=2):
                decomp = tensor_decompose(a, b, table)
                assert sum(d * dimension(rho) for rho, d in decomp.items()) == dimension(a) * dimension(b)


def test_criterion_04_macmahon():
    with time_limit(30.0):
        for n in range(1, 9):
            assert mahonian_polynomial(n, "maj") == mahonian_polynomial(n, "inv") == closed_form(n)


@pytest.mark.parametrize("n,k", [(3, 3), (4, 3), (4, 2), (5, 2)])
def test_criterion_05_main_identity(n, k):
    assert refined_multimahonian(n, k) == multimahonian_via_kronecker(n, k)


@pytest.mark.parametrize("n,k,cap", [(2, 2, 2), (3, 2, 3), (2, 3, 2), (3, 3, 2)])
def test_criterion_06_quotient_window(n, k, cap):
    report = verify_refined_quotient_identity(n, k, cap)
    assert report.ok, report.text()


@pytest.mark.parametrize("n,k,cap", [(2, 2, 2), (3, 2, 2)])
def test_criterion_07_multipartite_count(n, k, cap):
    report = verify_multipartite_count(n, k, cap)
    assert report.ok, report.text()


def test_criterion_08_robinson_schensted():
    with time_limit(60.0):
        for n in range(1, 8):
            image = set()
            for p in all_permutations(n):
                P, Q = rs_correspondence(p)
                assert shape(P) == shape(Q)
                assert tableau_descents(Q) == descent_set(p)
                assert tableau_descents(P) == descent_set(inverse(p))
                image.add((P, Q))
            same_shape_pairs = sum(dimension(mu) ** 2 for mu in partitions(n))
            assert len(image) == same_shape_pairs == len(list(all_permutations(n)))


def test_criterion_09_symmetry_suites():
    report = verify_sym(4, 3)
    assert report.ok, report.text()
    report = verify_sym(5, 3, sample=40, seed=0)
    assert report.ok, report.text()
    for k in range(1, 5):
        report = verify_dcac(4, k)
        assert report.ok, report.text()
    for n in range(1, 6):
        table = KroneckerTable(n)
        for a, b, c in product(partitions(n), repeat=3):
            assert kronecker_recursive([conjugate(a), conjugate(b), c], table) == kronecker_recursive([a, b, c], table)


def test_criterion_10_canonical_tableau():
    for n in range(1, 9):
        for mu in partitions(n):
            D = canonical_descents(mu)
            same_shape = [t for t in enumerate_standard_tableaux(mu) if tableau_descents(t) == D]
            assert same_shape == [canonical_tableau(mu)]
            for t in tableaux_with_descent_set(n, D):
                assert dominance_leq(mu, shape(t))


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
