import random
from fractions import Fraction
from math import factorial

import pytest

from hopfsharp import exact
from hopfsharp import kernels
from hopfsharp.exact import QPoly, qbinomial, qfactorial, qint


def test_qpoly_roundtrip_str():
    p = QPoly({2: 3, 1: 9, 0: 22})
    assert str(p) == "3q^2+9q+22"
    assert str(QPoly()) == "0"
    assert str(QPoly({1: 1})) == "q"
    assert str(QPoly({3: Fraction(1, 3)})) == "1/3q^3"
    assert str(QPoly({2: 2, 0: -1})) == "2q^2-1"


def test_qfactorial_small():
    assert qfactorial(0) == QPoly.const(1)
    # [3]! = (1)(1+q)(1+q+q^2) = 1 + 2q + 2q^2 + q^3
    assert qfactorial(3) == QPoly({0: 1, 1: 2, 2: 2, 3: 1})
    for n in range(7):
        assert qfactorial(n)(1) == factorial(n)


def test_qbinomial_exact_division():
    for n in range(7):
        for k in range(n + 1):
            qb = qbinomial(n, k)
            assert qb(1) == factorial(n) // (factorial(k) * factorial(n - k))
    with pytest.raises(exact.NonExactDivision):
        (qint(3)).divide_exact(qint(2))


def test_qpoly_arith_random():
    rng = random.Random(5)

    def rand_poly():
        return QPoly({rng.randint(0, 5): Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                      for _ in range(4)})

    for _ in range(50):
        a, b, c = rand_poly(), rand_poly(), rand_poly()
        assert (a + b) * c == a * c + b * c
        if b:
            assert (a * b).divide_exact(b) == a


def test_rank_basics():
    eye = [{0: 1}, {1: 1}, {2: 1}]
    assert exact.rank(eye) == 3
    assert exact.rank([{}, {}]) == 0
    assert exact.rank([{0: 1, 1: 2}, {0: 2, 1: 4}]) == 1


def test_rank_invariance_random():
    rng = random.Random(17)
    for _ in range(25):
        nrows, ncols = rng.randint(1, 8), rng.randint(1, 8)
        vecs = [
            {c: Fraction(rng.randint(-3, 3), rng.randint(1, 4)) for c in range(ncols)}
            for _ in range(nrows)
        ]
        r = exact.rank(vecs)
        shuffled = vecs[:]
        rng.shuffle(shuffled)
        assert exact.rank(shuffled) == r
        scaled = [
            {k: v * Fraction(rng.choice([1, 2, 3, -1, 5])) for k, v in vec.items()}
            for vec in vecs
        ]
        assert exact.rank(scaled) == r
        assert exact.rank_lower_bound_mod(vecs) <= r


def test_mod_rank_agrees_with_exact_random():
    rng = random.Random(23)
    for _ in range(40):
        nrows, ncols = rng.randint(1, 10), rng.randint(1, 10)
        vecs = [
            {c: Fraction(rng.randint(-6, 6)) for c in range(ncols)}
            for _ in range(nrows)
        ]
        assert exact.rank_lower_bound_mod(vecs) == exact.rank(vecs)


def test_solve_in_span():
    basis = [{0: Fraction(1)}, {1: Fraction(1)}]
    assert exact.solve_in_span({0: Fraction(1)}, basis) == [1, 0]
    assert exact.solve_in_span({}, basis) == [0, 0]
    assert exact.solve_in_span({2: Fraction(1)}, basis) is None


def test_solve_recovers_random_combinations():
    rng = random.Random(2)
    for _ in range(30):
        dim, nb = rng.randint(1, 6), rng.randint(1, 5)
        basis = [
            {c: Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for c in range(dim)}
            for _ in range(nb)
        ]
        coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(nb)]
        target = {}
        for f, vec in zip(coeffs, basis):
            for k, v in vec.items():
                target[k] = target.get(k, Fraction(0)) + f * v
        target = {k: v for k, v in target.items() if v}
        sol = exact.solve_in_span(target, basis)
        assert sol is not None
        rebuilt = {}
        for f, vec in zip(sol, basis):
            for k, v in vec.items():
                rebuilt[k] = rebuilt.get(k, Fraction(0)) + f * v
        assert {k: v for k, v in rebuilt.items() if v} == target


def test_kernels_parity_rank():
    rng = random.Random(9)
    for _ in range(20):
        rows = [[rng.randint(-9, 9) for _ in range(6)] for _ in range(5)]
        assert kernels.int_rank([r[:] for r in rows]) == kernels.PY.int_rank(
            [r[:] for r in rows]
        )
        p = 2147483647
        assert kernels.mod_rank([[x % p for x in r] for r in rows], p) == kernels.PY.mod_rank(
            [[x % p for x in r] for r in rows], p
        )


def test_kernels_parity_convolve_and_pack():
    rng = random.Random(13)
    table = [[(i * 5 + j * 3) % 7 for j in range(7)] for i in range(7)]
    xi = [0, 2, 4]
    xn = [3, -1, 10**25]
    yi = [1, 3]
    yn = [7, 2]
    assert kernels.convolve(table, xi, xn, yi, yn, 7) == kernels.PY.convolve(
        table, xi, xn, yi, yn, 7
    )
    for _ in range(40):
        n = rng.randint(0, 8)
        u = tuple(rng.randint(1, 4) for _ in range(n))
        v = tuple(rng.randint(1, 4) for _ in range(n))
        assert kernels.pack_pair(u, v) == kernels.PY.pack_pair(u, v)
