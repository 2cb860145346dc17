import random
from itertools import permutations as iperms
from math import comb, factorial

import pytest

from hopfsharp import combinat as cb


def test_compositions_count_and_weight():
    for n in range(7):
        comps = list(cb.compositions(n))
        assert len(comps) == (1 if n == 0 else 2 ** (n - 1))
        assert all(sum(c) == n for c in comps)
        assert len(set(comps)) == len(comps)


def test_descent_set_bijection():
    for n in range(1, 8):
        seen = set()
        for c in cb.compositions(n):
            d = cb.descent_set(c)
            assert cb.descents_to_composition(d, n) == c
            seen.add(d)
        assert len(seen) == 2 ** (n - 1)


def test_partitions_reverse_lex():
    parts9 = sorted(cb.partitions_no_one(9), key=cb.reverse_lex_key)
    assert parts9 == [
        (9,), (7, 2), (6, 3), (5, 4), (5, 2, 2), (4, 3, 2), (3, 3, 3), (3, 2, 2, 2),
    ]


def test_zee_and_multiplicity():
    assert cb.zee((2, 1, 1)) == 2 * 1 * 2
    assert cb.multiplicity_factor((3, 2, 2, 1)) == 2
    # sum over cycle types of n!/z_lambda = n!
    for n in range(1, 7):
        assert sum(factorial(n) // cb.zee(l) for l in cb.partitions(n)) == factorial(n)


# -- pack / biwords ---------------------------------------------------------

def test_pack_reference_value():
    assert cb.pack((8, 7, 1, 8, 8, 3, 3, 1, 9)) == (4, 3, 1, 4, 4, 2, 2, 1, 5)
    assert cb.pack((1, 2, 3)) == (1, 2, 3)
    assert cb.pack(()) == ()


def test_pack_idempotent_random():
    rng = random.Random(7)
    for _ in range(200):
        w = tuple(rng.randint(1, 9) for _ in range(rng.randint(0, 10)))
        p = cb.pack(w)
        assert cb.pack(p) == p
        assert len(p) == len(w)
        # relative order of values preserved
        for i in range(len(w)):
            for j in range(len(w)):
                assert (w[i] < w[j]) == (p[i] < p[j])


def test_pack_biword_reference_value():
    u = (4, 2, 4, 1, 2, 2, 5, 3)
    v = (5, 3, 1, 5, 4, 3, 2, 3)
    assert cb.pack_biword(u, v) == (6, 2, 5, 1, 3, 2, 7, 4)


def test_pack_biword_degenerate_rows():
    rng = random.Random(1)
    for _ in range(50):
        n = rng.randint(0, 8)
        v = tuple(rng.randint(1, 5) for _ in range(n))
        ones = (1,) * n
        assert cb.pack_biword(ones, v) == cb.pack(v)
        # constant second row: order by first row (brute-force relabeling)
        assert cb.pack_biword(v, ones) == cb.pack(v)
    with pytest.raises(ValueError):
        cb.pack_biword((1, 2), (1,))


def test_packed_words_are_ordered_bell():
    assert [cb.ordered_bell(n) for n in range(6)] == [1, 1, 3, 13, 75, 541]
    for n in range(5):
        assert all(cb.is_packed(w) for w in cb.packed_words(n))


# -- shuffles ---------------------------------------------------------------

def test_shuffle_basics():
    assert sorted(cb.shuffle((1,), (2, 3))) == [(1, 2, 3), (2, 1, 3), (2, 3, 1)]
    assert list(cb.shuffle(("a", "b"), ())) == [("a", "b")]


def test_shuffle_count_with_multiplicity():
    rng = random.Random(3)
    for _ in range(20):
        a = tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 4)))
        b = tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 4)))
        assert len(list(cb.shuffle(a, b))) == comb(len(a) + len(b), len(a))


# -- foata transform and the consecutive-minima statistic --------------------

def test_foata_reference_value():
    assert cb.foata_phi((6, 2, 7, 8, 1, 4, 5, 3)) == (4, 7, 1, 5, 3, 6, 8, 2)
    assert cb.foata_phi((1,)) == (1,)
    assert cb.foata_phi_inv((4, 7, 1, 5, 3, 6, 8, 2)) == (6, 2, 7, 8, 1, 4, 5, 3)


@pytest.mark.parametrize("n", range(0, 8))
def test_foata_bijection_and_fixed_points(n):
    image = set()
    for p in iperms(range(1, n + 1)):
        q = cb.foata_phi(p)
        assert cb.foata_phi_inv(q) == p
        assert cb.fixed_points(q) == cb.consecutive_lr_min_stat(p)
        image.add(q)
    assert len(image) == factorial(n)


def test_stat_distribution_matches_fixed_points():
    for n in range(1, 8):
        stat_dist = {}
        fix_dist = {}
        for p in iperms(range(1, n + 1)):
            s = cb.consecutive_lr_min_stat(p)
            stat_dist[s] = stat_dist.get(s, 0) + 1
            f = cb.fixed_points(p)
            fix_dist[f] = fix_dist.get(f, 0) + 1
        assert stat_dist == fix_dist
        assert stat_dist == cb.fixed_point_count_table(n)


def test_stat_zero_count_is_derangement_number():
    count = sum(1 for p in iperms(range(1, 5)) if cb.consecutive_lr_min_stat(p) == 0)
    assert count == 9 == cb.derangement_number(4)
    # a permutation ending in 1 always scores at least 1
    for p in iperms(range(1, 6)):
        if p[-1] == 1:
            assert cb.consecutive_lr_min_stat(p) >= 1


# -- weak order ---------------------------------------------------------------

def test_weak_order_extremes():
    for n in range(1, 6):
        ident = tuple(range(1, n + 1))
        w0 = tuple(range(n, 0, -1))
        for p in iperms(range(1, n + 1)):
            assert cb.weak_order_leq(ident, p)
            assert cb.weak_order_leq(p, w0)
    with pytest.raises(ValueError):
        cb.weak_order_leq((1,), (1, 2))


def test_weak_order_s3_hexagon():
    elems = list(iperms(range(1, 4)))
    assert len(elems) == 6
    covers = 0
    for a in elems:
        for b in elems:
            if a != b and cb.weak_order_leq(a, b):
                inv_a = len(cb.position_inversions(a))
                inv_b = len(cb.position_inversions(b))
                if inv_b == inv_a + 1:
                    covers += 1
    assert covers == 6


def _brute_maxima(n, k):
    xs = set(cb.x_set(n, k))
    maxima = set()
    for p in xs:
        if not any(q != p and q in xs and cb.weak_order_leq(p, q) for q in xs):
            maxima.add(p)
    return maxima


@pytest.mark.parametrize("n", range(1, 7))
def test_x_ideal_property(n):
    # downward closure in left weak order, every k
    for k in range(0, n + 1):
        xs = set(cb.x_set(n, k))
        for p in xs:
            for q in iperms(range(1, n + 1)):
                if cb.weak_order_leq(q, p):
                    assert q in xs


def test_maximal_elements_reference_n5():
    assert cb.maximal_elements_X(5, 0) == {
        (1, 5, 4, 3, 2), (3, 5, 4, 1, 2), (4, 5, 1, 3, 2),
    }


def test_maximal_elements_small_pins():
    assert cb.maximal_elements_X(2, 0) == {(1, 2)}
    assert cb.maximal_elements_X(1, 1) == {(1,)}
    assert cb.m_count(1, 1) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_maximal_elements_match_brute_force(n):
    for k in range(0, n + 1):
        assert cb.maximal_elements_X(n, k) == _brute_maxima(n, k)


M_TABLE = {
    1: [0, 1],
    2: [1, 1, 1],
    3: [1, 2, 2, 1],
    4: [2, 3, 3, 3, 1],
    5: [3, 5, 6, 4, 4, 1],
    6: [5, 9, 9, 10, 5, 5, 1],
    7: [8, 15, 19, 14, 15, 6, 6, 1],
    8: [13, 27, 31, 34, 20, 21, 7, 7, 1],
}


def test_m_count_table():
    for n, row in M_TABLE.items():
        assert [cb.m_count(n, k) for k in range(n + 1)] == row
    assert cb.m_count(8, 2) == 31
    assert cb.m_count(5, 2) == 6
    for n in range(1, 9):
        assert cb.m_count(n, n) == 1


def test_m_count_matches_enumeration():
    for n, row in M_TABLE.items():
        for k in range(n + 1):
            assert len(cb.maximal_elements_X(n, k)) == row[k]


def test_w_of_composition():
    assert cb.w_of_composition((5,)) == (1, 5, 4, 3, 2)
    assert cb.w_of_composition((3, 2)) == (3, 5, 4, 1, 2)
    assert cb.w_of_composition((2, 3)) == (4, 5, 1, 3, 2)


# -- permutations -------------------------------------------------------------

def test_permutation_algebra():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(1, 7)
        p = tuple(rng.sample(range(1, n + 1), n))
        q = tuple(rng.sample(range(1, n + 1), n))
        assert cb.inverse(cb.inverse(p)) == p
        assert cb.compose(p, cb.inverse(p)) == tuple(range(1, n + 1))
        r = tuple(rng.sample(range(1, n + 1), n))
        assert cb.compose(cb.compose(p, q), r) == cb.compose(p, cb.compose(q, r))
        assert sum(cb.cycle_type(p)) == n


def test_cycle_type_and_fixed_points():
    assert cb.cycle_type((2, 1, 3)) == (2, 1)
    assert cb.fixed_points((2, 1, 3)) == 1
    assert cb.cycles((4, 7, 1, 5, 3, 6, 8, 2)) == [(1, 4, 5, 3), (2, 7, 8), (6,)]


# -- set partitions ------------------------------------------------------------

def test_set_partition_counts():
    bell = [1, 1, 2, 5, 15, 52]
    for n in range(6):
        assert len(list(cb.set_partitions(n))) == bell[n]


def test_meet_is_lattice_inf():
    parts = list(cb.set_partitions(4))
    for p1 in parts:
        for p2 in parts:
            m = cb.meet(p1, p2)
            assert cb.refines(m, p1) and cb.refines(m, p2)
            assert cb.meet(p1, p1) == p1
            assert cb.meet(p1, p2) == cb.meet(p2, p1)


def test_words_with_set_partition():
    p = cb.word_to_set_partition((2, 1, 2, 3, 1))
    words = cb.words_with_set_partition(p)
    assert len(words) == 6
    assert all(cb.word_to_set_partition(w) == p for w in words)


def test_fine_and_catalan():
    assert [cb.fine_number(n) for n in range(9)] == [1, 0, 1, 2, 6, 18, 57, 186, 622]
    assert [cb.catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]
