import random
from itertools import permutations, product
from math import gcd

import pytest
from hypothesis import given, strategies as st

from seifert_euler.numbertheory import (
    CongruenceSystem, IntegerMatrix, ext_gcd, invariant_factors, inverse_mod, lattice_member,
    lcm, smith_normal_form, solve_crt,
)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_ext_gcd_bezout(a, b):
    g, x, y = ext_gcd(a, b)
    assert g == gcd(a, b)
    assert a * x + b * y == g


def test_ext_gcd_small():
    assert ext_gcd(6, 4) == (2, 1, -1)
    assert ext_gcd(0, 0) == (0, 0, 0)
    assert ext_gcd(0, -5)[0] == 5


@given(st.integers(-500, 500), st.integers(1, 200))
def test_inverse_mod(a, m):
    r = inverse_mod(a, m)
    if gcd(a, m) == 1:
        assert 0 <= r < m and (a * r - 1) % m == 0
    else:
        assert r is None


def brute_crt(system):
    L = lcm(*(mod for _, mod in system))
    for x in range(L):
        if all((x - r) % mod == 0 for r, mod in system):
            return x, L
    return None


@given(st.lists(st.tuples(st.integers(-50, 50), st.integers(1, 24)), min_size=1, max_size=3))
def test_crt_matches_brute_force(system):
    assert solve_crt(system) == brute_crt(system)


def test_crt_exhaustive_small_pairs():
    for m1, m2 in product(range(1, 13), repeat=2):
        for r1, r2 in product(range(m1), range(m2)):
            assert solve_crt([(r1, m1), (r2, m2)]) == brute_crt([(r1, m1), (r2, m2)])


def test_crt_examples_and_errors():
    assert solve_crt([(1, 4), (3, 6)]) == (9, 12)
    assert solve_crt([(1, 4), (2, 6)]) is None
    assert solve_crt([]) == (0, 1)
    with pytest.raises(ValueError):
        CongruenceSystem([(1, 0)])


def random_matrix(rng, max_dim=6, lo=-99, hi=99):
    r, c = rng.randint(1, max_dim), rng.randint(1, max_dim)
    return IntegerMatrix.from_rows([[rng.randint(lo, hi) for _ in range(c)] for _ in range(r)], c)


def brute_det(M):
    n = M.rows
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i in range(n):
            term *= M[i, perm[i]]
        total += term
    return total


def check_snf(A):
    U, S, V = smith_normal_form(A)
    assert U @ A @ V == S
    assert abs(U.determinant()) == 1 and abs(V.determinant()) == 1
    assert S.is_diagonal()
    d = S.diagonal()
    assert all(x >= 0 for x in d)
    nonzero = [x for x in d if x]
    assert d[:len(nonzero)] == nonzero  # zeros last
    assert all(y % x == 0 for x, y in zip(nonzero, nonzero[1:]))


def test_snf_random_small():
    rng = random.Random(1)
    for _ in range(200):
        check_snf(random_matrix(rng, max_dim=4, lo=-5, hi=5))


@given(st.integers(1, 4), st.data())
def test_determinant_matches_permutation_expansion(n, data):
    rows = [[data.draw(st.integers(-9, 9)) for _ in range(n)] for _ in range(n)]
    M = IntegerMatrix.from_rows(rows, n)
    assert M.determinant() == brute_det(M)


def test_snf_known():
    A = IntegerMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert invariant_factors(A) == [2, 6, 12]
    assert invariant_factors(IntegerMatrix.zeros(2, 3)) == [0, 0]


def test_snf_zero_and_empty_rows():
    check_snf(IntegerMatrix.zeros(3, 2))
    check_snf(IntegerMatrix.from_rows([[0, 0, 7]]))


@given(st.data())
def test_lattice_member_against_box_search(data):
    r, c = data.draw(st.integers(1, 3)), data.draw(st.integers(1, 3))
    B = IntegerMatrix.from_rows(
        [[data.draw(st.integers(-3, 3)) for _ in range(c)] for _ in range(r)], c)
    v = [data.draw(st.integers(-6, 6)) for _ in range(r)]
    x = lattice_member(B, v)
    box = [x0 for x0 in product(range(-6, 7), repeat=c) if B @ list(x0) == v]
    if x is None:
        assert not box
    else:
        assert B @ x == v
    if box:
        assert x is not None


@given(st.data())
def test_lattice_member_finds_constructed_points(data):
    r, c = data.draw(st.integers(1, 5)), data.draw(st.integers(1, 5))
    B = IntegerMatrix.from_rows(
        [[data.draw(st.integers(-20, 20)) for _ in range(c)] for _ in range(r)], c)
    x0 = [data.draw(st.integers(-20, 20)) for _ in range(c)]
    x = lattice_member(B, B @ x0)
    assert x is not None and B @ x == B @ x0


def test_lattice_member_rejects():
    assert lattice_member([[2, 0], [0, 3]], [1, 0]) is None
    assert lattice_member([[2, 0], [0, 3]], [4, -3]) == [2, -1]
    with pytest.raises(ValueError):
        lattice_member([[1, 0]], [1, 2])


def test_matrix_basics():
    A = IntegerMatrix.from_rows([[1, 2], [3, 4]])
    assert A.transpose().tolist() == [[1, 3], [2, 4]]
    assert A @ IntegerMatrix.identity(2) == A
    assert A @ [1, 1] == [3, 7]
    assert A.determinant() == -2
    with pytest.raises(ValueError):
        IntegerMatrix(2, 2, [1, 2, 3])
