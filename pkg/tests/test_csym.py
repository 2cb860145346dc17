from fractions import Fraction
from itertools import permutations as iperms
from math import factorial

from hopfsharp import csym, exact, nsym
from hopfsharp.combinat import (
    compositions,
    cycle_type,
    derangement_number,
    descent_composition,
    major_index_composition,
    number_of_partitions,
    partitions,
)
from hopfsharp.csym import (
    SymFunc,
    commutative_image,
    gessel_reutenauer,
    h,
    lie_character,
    p,
    plethysm_h_of,
    q_derangement,
    specialize_E,
    sym_one,
)


def F(*a):
    return Fraction(*a)


def test_h_newton_roundtrip():
    # h_n in p, then p_n recovered via Newton's identity n h_n = sum p_k h_{n-k}
    for n in range(1, 11):
        acc = csym.sym_zero(n)
        for k in range(1, n + 1):
            acc = acc + p((k,)) * h(n - k)
        assert acc == h(n).scale(n)


def test_commutative_image_basics():
    assert commutative_image(nsym.S((1,))) == p((1,))
    assert commutative_image(nsym.S((2, 1))) == h(2) * h(1)
    # images of the primitive family are p_n / n
    for n in range(1, 8):
        zn = nsym.zassenhaus(n)[n]
        assert commutative_image(zn) == p((n,)).scale(F(1, n))


def test_commutative_image_kernel_dimension():
    for n in range(1, 8):
        vecs = [commutative_image(nsym.S(I)).coeffs for I in compositions(n)]
        image_rank = exact.rank(vecs)
        assert image_rank == number_of_partitions(n)
        assert 2 ** (n - 1) - image_rank == 2 ** (n - 1) - number_of_partitions(n)


def test_hall_pairing():
    for n in range(1, 6):
        for lam in partitions(n):
            for mu in partitions(n):
                val = p(lam).hall(p(mu))
                assert val == (csym.zee(lam) if lam == mu else 0)


def test_lie_character_small():
    assert lie_character(1) == p((1,))
    assert lie_character(2) == SymFunc(2, {(1, 1): F(1, 2), (2,): F(-1, 2)})
    # dimension of the free Lie piece: n! times the p_1^n coefficient
    for n in range(1, 7):
        dim = lie_character(n).coeffs.get((1,) * n, 0) * factorial(n)
        assert dim == factorial(n - 1)
    # trivial component vanishes for n >= 2
    for n in range(2, 7):
        assert lie_character(n).hall(h(n)) == 0


def test_plethysm_basics():
    g = SymFunc(2, {(2,): F(1, 3), (1, 1): F(2, 5)})
    assert plethysm_h_of(g, 1) == g
    assert plethysm_h_of(p((1,)), 2) == h(2)
    assert plethysm_h_of(p((1,)), 3) == h(3)


def test_gessel_reutenauer_completeness():
    # the classes sum to the characteristic of the identity permutation
    for n in range(1, 8):
        acc = csym.sym_zero(n)
        for mu in partitions(n):
            acc = acc + gessel_reutenauer(mu)
        assert acc == p((1,) * n)
    # the all-ones class alone is the full symmetrizer character
    for n in range(1, 7):
        assert gessel_reutenauer((1,) * n) == h(n)


def test_specialize_E():
    for n in range(0, 9):
        assert specialize_E(h(n)) == F(1, factorial(n))
    assert specialize_E(p((2,))) == 0
    assert specialize_E(p((1, 1))) == 1
    # elementary functions also evaluate to 1/n!
    for n in range(0, 7):
        assert specialize_E(csym.e(n)) == F(1, factorial(n))


def test_sharp_image_specializes_to_derangement_numbers():
    # evaluated at a single variable (every p_k -> 1)
    for n in range(0, 9):
        val = csym.specialize_at(
            commutative_image(nsym.sigma_sharp(n)[n]), lambda k: 1
        )
        assert val == F(derangement_number(n), factorial(n))
    # equivalently: h_n at the difference alphabet, p_1 -> 0, p_k -> 1
    for n in range(0, 9):
        val = csym.specialize_at(h(n), lambda k: 0 if k == 1 else 1)
        assert val == F(derangement_number(n), factorial(n))


def test_desarrangement_specialization():
    series = nsym.desarrangement_series(8)
    for n in range(0, 9):
        val = specialize_E(commutative_image(series[n]))
        assert val == F(derangement_number(n), factorial(n))


def test_derangement_generating_row():
    # degree-n coefficient of e^{-t}/(1-t): evaluate h_n on the virtual
    # difference alphabet directly
    for n in range(0, 9):
        val = csym.specialize_at(h(n), lambda k: 1 - (k == 1))
        assert val == F(derangement_number(n), factorial(n))


def test_q_derangement_closed_form_vs_brute_force():
    for n in range(0, 8):
        poly = q_derangement(n)
        brute = {}
        for sigma in iperms(range(1, n + 1)):
            if all(sigma[i - 1] != i for i in range(1, n + 1)):
                maj = major_index_composition(descent_composition(sigma))
                brute[maj] = brute.get(maj, 0) + 1
        assert {k: int(v) for k, v in poly.coeffs.items()} == brute
        assert poly(1) == derangement_number(n)
    assert q_derangement(3) == exact.QPoly({1: 1, 2: 1})
    assert q_derangement(0) == exact.QPoly.const(1)
    assert q_derangement(1) == exact.QPoly()


def test_character_generating_function_coefficientwise():
    # two-variable expansion of the transformed complete series against
    # 1/(1 - t p_1): coefficient of t^{n-k} u^k recovers the block characters
    N = 6
    # sigma((u - t) Y) = exp(sum_m (u^m - t^m) p_m / m) expanded in (t, u)
    # degree in Y equals total degree in (t, u)
    from itertools import product

    # build exp incrementally over monomials t^a u^b with a+b <= N
    terms = {(0, 0): sym_one()}
    # X = sum_m (u^m - t^m) p_m/m  -> components X[(a,b)] with a+b = m
    X = {}
    for m in range(1, N + 1):
        X[(m, 0)] = p((m,)).scale(F(-1, m))
        X[(0, m)] = p((m,)).scale(F(1, m))
    acc = {(0, 0): sym_one()}
    power = {(0, 0): sym_one()}
    for j in range(1, N + 1):
        nxt = {}
        for (a1, b1), v in power.items():
            for (a2, b2), w in X.items():
                a, b = a1 + a2, b1 + b2
                if a + b > N:
                    continue
                key = (a, b)
                cur = nxt.get(key)
                piece = v * w
                nxt[key] = piece if cur is None else cur + piece
        power = {k: v.scale(F(1, j)) for k, v in nxt.items()}
        if not power:
            break
        for k, v in power.items():
            acc[k] = acc[k] + v if k in acc else v
    # multiply by sum_j t^j p_1^j
    full = {}
    for (a, b), v in acc.items():
        for j in range(0, N - a - b + 1):
            key = (a + j, b)
            piece = v * p((1,) * j)
            full[key] = full[key] + piece if key in full else piece
    for n in range(1, N + 1):
        for k in range(n + 1):
            got = full.get((n - k, k), csym.sym_zero(n))
            assert got == csym.character_delta(n, k)
