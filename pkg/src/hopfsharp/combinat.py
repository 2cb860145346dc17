"""Combinatorial ground types: compositions, partitions, permutations,
packed words and set partitions, plus the statistics built on them.

Value conventions used throughout the package:

- a composition is a tuple of positive ints (the empty tuple is allowed);
- a partition is a weakly decreasing tuple of positive ints;
- a permutation of ``{1..n}`` is a tuple in one-line notation;
- a packed word is a tuple over ``{1..l}`` using every letter up to its max;
- a set partition of ``{1..n}`` is a frozenset of frozensets.

All functions are pure and all values are immutable, so everything here is
safe to share between threads and to use as dict keys.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations as iter_permutations
from math import comb, factorial


# ---------------------------------------------------------------------------
# compositions and partitions

def compositions(n: int):
    """All compositions of n in lexicographic order of descent sets.

    >>> list(compositions(3))
    [(3,), (1, 2), (2, 1), (1, 1, 1)]
    """
    if n == 0:
        yield ()
        return
    for mask in range(1 << (n - 1)):
        yield descents_to_composition(
            frozenset(i + 1 for i in range(n - 1) if mask >> i & 1), n
        )


def descent_set(comp: tuple) -> frozenset:
    """Partial sums i1, i1+i2, ... excluding n itself."""
    out, total = [], 0
    for part in comp[:-1]:
        total += part
        out.append(total)
    return frozenset(out)


def descents_to_composition(descents, n: int) -> tuple:
    if n == 0:
        return ()
    cuts = sorted(descents)
    prev, parts = 0, []
    for c in cuts:
        parts.append(c - prev)
        prev = c
    parts.append(n - prev)
    return tuple(parts)


def composition_refines(fine: tuple, coarse: tuple) -> bool:
    """True when `fine` can be split-grouped consecutively into `coarse`."""
    return descent_set(coarse) <= descent_set(fine)


def conjugate_composition(comp: tuple) -> tuple:
    """Conjugate ribbon shape (descent-set complement, mirrored)."""
    n = sum(comp)
    if n == 0:
        return ()
    full = set(range(1, n))
    missing = full - set(descent_set(comp))
    return tuple(reversed(descents_to_composition(frozenset(missing), n)))


def mirror_composition(comp: tuple) -> tuple:
    return tuple(reversed(comp))


def major_index_composition(comp: tuple) -> int:
    return sum(descent_set(comp))


def partitions(n: int, min_part: int = 1):
    """Weakly decreasing tuples summing to n, reverse lexicographic order.

    >>> list(partitions(4))
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), min_part - 1, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    return rec(n, n)


def partitions_no_one(n: int):
    return partitions(n, min_part=2)


def reverse_lex_key(partition: tuple):
    """Sort key putting partitions in reverse lexicographic order."""
    return tuple(-p for p in partition)


def multiplicity_factor(partition: tuple) -> int:
    """Product of factorials of part multiplicities, m_lambda."""
    counts = {}
    for p in partition:
        counts[p] = counts.get(p, 0) + 1
    out = 1
    for c in counts.values():
        out *= factorial(c)
    return out


def zee(partition: tuple) -> int:
    """z_lambda = prod i^{m_i} m_i!, the centralizer order of a cycle type."""
    counts = {}
    for p in partition:
        counts[p] = counts.get(p, 0) + 1
    out = 1
    for part, c in counts.items():
        out *= part**c * factorial(c)
    return out


def sort_composition(comp: tuple) -> tuple:
    """Underlying partition (weakly decreasing rearrangement)."""
    return tuple(sorted(comp, reverse=True))


def rearrangements(partition: tuple):
    """Distinct compositions rearranging the given multiset of parts."""
    seen = set()
    for p in iter_permutations(partition):
        if p not in seen:
            seen.add(p)
            yield p


def number_of_partitions(n: int) -> int:
    return sum(1 for _ in partitions(n))


# ---------------------------------------------------------------------------
# permutations

def permutations(n: int):
    return iter_permutations(range(1, n + 1))


def inverse(perm: tuple) -> tuple:
    out = [0] * len(perm)
    for pos, val in enumerate(perm):
        out[val - 1] = pos + 1
    return tuple(out)


def compose(sigma: tuple, tau: tuple) -> tuple:
    """(sigma tau)(i) = sigma(tau(i))."""
    return tuple(sigma[t - 1] for t in tau)


def cycle_type(perm: tuple) -> tuple:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, cur = 0, start
        while not seen[cur]:
            seen[cur] = True
            cur = perm[cur] - 1
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def fixed_points(perm: tuple) -> int:
    return sum(1 for i, v in enumerate(perm, start=1) if i == v)


def cycles(perm: tuple):
    """Disjoint cycles, each starting at its minimum, by increasing minimum."""
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc, cur = [], start
        while not seen[cur]:
            seen[cur] = True
            cyc.append(cur + 1)
            cur = perm[cur] - 1
        out.append(tuple(cyc))
    return out


def descent_composition(perm: tuple) -> tuple:
    """Composition recording the descents of the one-line word."""
    n = len(perm)
    des = frozenset(i for i in range(1, n) if perm[i - 1] > perm[i])
    return descents_to_composition(des, n)


def value_inversions(perm: tuple) -> frozenset:
    """Pairs (a, b), a < b, with b appearing before a; orders the RIGHT weak order."""
    inv = inverse(perm)
    n = len(perm)
    return frozenset(
        (a, b) for a in range(1, n) for b in range(a + 1, n + 1) if inv[a - 1] > inv[b - 1]
    )


def weak_order_leq(sigma: tuple, tau: tuple) -> bool:
    """Left weak order: containment of position-inversion sets.

    Multiplying on the left by an adjacent value transposition toggles exactly
    one position inversion, so the order generated by inversion-increasing
    left multiplications is containment of position-inversion sets.  The
    convention is pinned by the ideal property of the bounded-statistic sets
    and their reference maxima (see tests).
    """
    if len(sigma) != len(tau):
        raise ValueError("weak_order_leq needs permutations of equal size")
    return position_inversions(sigma) <= position_inversions(tau)


def right_weak_leq(sigma: tuple, tau: tuple) -> bool:
    """Right weak order: containment of value-inversion sets."""
    if len(sigma) != len(tau):
        raise ValueError("right_weak_leq needs permutations of equal size")
    return value_inversions(sigma) <= value_inversions(tau)


def position_inversions(perm: tuple) -> frozenset:
    n = len(perm)
    return frozenset(
        (i, j) for i in range(1, n) for j in range(i + 1, n + 1) if perm[i - 1] > perm[j - 1]
    )


# ---------------------------------------------------------------------------
# left-right minima, the cycle transform and its statistic

def lr_minima_positions(word: tuple) -> list:
    """Positions i (1-based) with word[i] smaller than everything before it."""
    out, best = [], None
    for i, v in enumerate(word, start=1):
        if best is None or v < best:
            out.append(i)
            best = v
    return out


def foata_phi(perm: tuple) -> tuple:
    """Cut the word at its left-right minima and read the pieces as cycles.

    >>> foata_phi((6, 2, 7, 8, 1, 4, 5, 3))
    (4, 7, 1, 5, 3, 6, 8, 2)
    """
    n = len(perm)
    if n == 0:
        return ()
    mins = lr_minima_positions(perm)
    out = [0] * n
    bounds = mins + [n + 1]
    for k in range(len(mins)):
        segment = perm[bounds[k] - 1 : bounds[k + 1] - 1]
        for a, b in zip(segment, segment[1:] + segment[:1]):
            out[a - 1] = b
    return tuple(out)


def foata_phi_inv(perm: tuple) -> tuple:
    """Inverse transform: cycles written min-first, sorted by decreasing min.

    >>> foata_phi_inv((4, 7, 1, 5, 3, 6, 8, 2))
    (6, 2, 7, 8, 1, 4, 5, 3)
    """
    cycs = cycles(perm)
    cycs.sort(key=lambda c: -c[0])
    return tuple(v for c in cycs for v in c)


def consecutive_lr_min_stat(perm: tuple) -> int:
    """Number of adjacent position pairs that are both left-right minima of
    the word extended by a trailing 0.  Equals the number of fixed points of
    foata_phi (validated exhaustively in the tests)."""
    mins = lr_minima_positions(perm + (0,))
    return sum(1 for a, b in zip(mins, mins[1:]) if b == a + 1)


def x_set(n: int, k: int):
    """Permutations whose consecutive-minima statistic is at most k."""
    return [p for p in permutations(n) if consecutive_lr_min_stat(p) <= k]


def shifted_concat(alpha: tuple, beta: tuple) -> tuple:
    """alpha shifted above beta, then concatenated (beta keeps its letters)."""
    shift = len(beta)
    return tuple(a + shift for a in alpha) + beta


def _w_cell(i: int) -> tuple:
    """1 followed by i, i-1, ..., 2."""
    return (1,) + tuple(range(i, 1, -1))


def w_of_composition(comp: tuple) -> tuple:
    """Left-shifted concatenation of the cells w_{i_1}, ..., w_{i_r}.

    >>> w_of_composition((3, 2))
    (3, 5, 4, 1, 2)
    """
    out = ()
    for part in comp:
        out = shifted_concat(out, _w_cell(part))
    return out


def _compositions_exact_ones(n: int, ones: int, rest_min: int = 2):
    """Compositions of n with exactly `ones` parts 1, other parts >= rest_min."""
    if n - ones < 0:
        return
    for skeleton in _compositions_min_part(n - ones, rest_min):
        for gaps in _weak_compositions(ones, len(skeleton) + 1):
            word = (1,) * gaps[0]
            for part, g in zip(skeleton, gaps[1:]):
                word += (part,) + (1,) * g
            yield word


def _weak_compositions(total: int, slots: int):
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, slots - 1):
            yield (first,) + rest


def _compositions_min_part(n: int, min_part: int):
    if n == 0:
        yield ()
        return
    for first in range(min_part, n + 1):
        for rest in _compositions_min_part(n - first, min_part):
            yield (first,) + rest


def maximal_composition_family(n: int, k) -> list:
    """Index compositions of the maximal elements of the order ideal.

    For k = 0 these are the compositions with no part 1; for k >= 1 either
    exactly k-1 parts 1 with all other parts equal to 2, or exactly k parts 1.
    """
    if k == "inf" or (isinstance(k, int) and k >= n):
        k = n
    out = []
    if k == 0:
        out.extend(_compositions_min_part(n, 2))
        return out
    m2, rem = divmod(n - (k - 1), 2)
    if rem == 0 and m2 >= 0:
        out.extend(
            c
            for c in _compositions_exact_ones(n, k - 1)
            if all(p in (1, 2) for p in c)
        )
    out.extend(_compositions_exact_ones(n, k))
    return out


def maximal_elements_X(n: int, k) -> set:
    """Maximal elements of {perm : consecutive_lr_min_stat <= k} in left weak order."""
    return {w_of_composition(c) for c in maximal_composition_family(n, k)}


def m_count(n: int, k: int) -> int:
    """Closed count of the maximal elements.

    Binomials with out-of-range arguments vanish; the count of compositions of
    m into l parts >= 2 is C(m-l-1, l-1), with the empty composition counting
    once for m = l = 0.
    """
    total = 0
    if k >= 1 and (n - k + 1) % 2 == 0 and n - k + 1 >= 0:
        m2 = (n - k + 1) // 2
        total += comb(k - 1 + m2, k - 1)
    m = n - k
    if m >= 0:
        for ell in range(0, m // 2 + 1):
            total += comb(ell + k, k) * _count_comps_ge2(m, ell)
    return total


def _count_comps_ge2(m: int, ell: int) -> int:
    if ell == 0:
        return 1 if m == 0 else 0
    if m - ell - 1 < 0 or ell - 1 < 0:
        return 0
    return comb(m - ell - 1, ell - 1)


# ---------------------------------------------------------------------------
# words: shuffles and packing

def shuffle(a: tuple, b: tuple):
    """All interleavings of a and b, with multiplicity.

    >>> sorted(shuffle((1,), (2, 3)))
    [(1, 2, 3), (2, 1, 3), (2, 3, 1)]
    """
    if not a:
        yield b
        return
    if not b:
        yield a
        return
    for rest in shuffle(a[1:], b):
        yield (a[0],) + rest
    for rest in shuffle(a, b[1:]):
        yield (b[0],) + rest


def pack(word: tuple) -> tuple:
    """Replace the k-th smallest letter value by k.

    >>> pack((8, 7, 1, 8, 8, 3, 3, 1, 9))
    (4, 3, 1, 4, 4, 2, 2, 1, 5)
    """
    letters = sorted(set(word))
    rank = {v: i + 1 for i, v in enumerate(letters)}
    return tuple(rank[v] for v in word)


def pack_biword(u: tuple, v: tuple) -> tuple:
    """Pack the biword (u, v) with biletters compared lexicographically.

    >>> pack_biword((4, 2, 4, 1, 2, 2, 5, 3), (5, 3, 1, 5, 4, 3, 2, 3))
    (6, 2, 5, 1, 3, 2, 7, 4)
    """
    if len(u) != len(v):
        raise ValueError("pack_biword needs words of equal length")
    biletters = sorted(set(zip(u, v)))
    rank = {b: i + 1 for i, b in enumerate(biletters)}
    return tuple(rank[b] for b in zip(u, v))


def is_packed(word: tuple) -> bool:
    return pack(word) == word


@lru_cache(maxsize=None)
def packed_words(n: int) -> tuple:
    """All packed words of length n (ordered Bell many), sorted.

    Built by letting the last position either join an existing letter class
    or open a new class at any rank (shifting larger letters up); each packed
    word arises exactly once.
    """
    if n == 0:
        return ((),)
    out = []
    for w in packed_words(n - 1):
        m = max(w, default=0)
        for v in range(1, m + 1):
            out.append(w + (v,))
        for j in range(1, m + 2):
            out.append(tuple(x + 1 if x >= j else x for x in w) + (j,))
    return tuple(sorted(out))


def evaluation(word: tuple) -> tuple:
    """Multiplicity composition ev(u): occurrences of 1, 2, ..., max."""
    if not word:
        return ()
    counts = [0] * max(word)
    for v in word:
        counts[v - 1] += 1
    return tuple(counts)


def is_non_unitary_word(word: tuple) -> bool:
    """No letter occurs exactly once."""
    return all(c != 1 for c in evaluation(word))


def ordered_bell(n: int) -> int:
    return len(packed_words(n))


# ---------------------------------------------------------------------------
# set partitions

def word_to_set_partition(word: tuple) -> frozenset:
    """Forget the block order of the set composition encoded by a packed word.

    >>> sorted(sorted(b) for b in word_to_set_partition((2, 1, 2, 3, 1)))
    [[1, 3], [2, 5], [4]]
    """
    blocks = {}
    for pos, letter in enumerate(word, start=1):
        blocks.setdefault(letter, set()).add(pos)
    return frozenset(frozenset(b) for b in blocks.values())


def set_partitions(n: int):
    """All set partitions of {1..n}."""
    seen = set()
    for w in packed_words(n):
        p = word_to_set_partition(w)
        if p not in seen:
            seen.add(p)
            yield p


def block_sizes(partition: frozenset) -> tuple:
    return tuple(sorted((len(b) for b in partition), reverse=True))


def meet(p1: frozenset, p2: frozenset) -> frozenset:
    """Common refinement (the inf of the refinement order)."""
    out = set()
    for b1 in p1:
        for b2 in p2:
            inter = b1 & b2
            if inter:
                out.add(frozenset(inter))
    return frozenset(out)


def refines(fine: frozenset, coarse: frozenset) -> bool:
    return all(any(b <= c for c in coarse) for b in fine)


def canonical_blocks(partition: frozenset) -> tuple:
    """Deterministic serialization: blocks sorted by minimum."""
    return tuple(tuple(sorted(b)) for b in sorted(partition, key=min))


def words_with_set_partition(partition: frozenset) -> list:
    """Packed words encoding the given set partition (one per block order)."""
    blocks = sorted(partition, key=min)
    n = sum(len(b) for b in blocks)
    out = []
    for order in iter_permutations(range(len(blocks))):
        word = [0] * n
        for letter, idx in enumerate(order, start=1):
            for pos in blocks[idx]:
                word[pos - 1] = letter
        w = tuple(word)
        if is_packed(w):
            out.append(w)
    return out


# ---------------------------------------------------------------------------
# misc numeric helpers

def derangement_number(n: int) -> int:
    """1, 0, 1, 2, 9, 44, ..."""
    if n == 0:
        return 1
    if n == 1:
        return 0
    return (n - 1) * (derangement_number(n - 1) + derangement_number(n - 2))


def fixed_point_count_table(n: int) -> dict:
    """k -> number of permutations of n with exactly k fixed points."""
    out = {}
    for k in range(n + 1):
        if k == n - 1:
            continue
        out[k] = comb(n, k) * derangement_number(n - k)
    return {k: v for k, v in out.items() if v}


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def fine_number(n: int) -> int:
    """1, 0, 1, 2, 6, 18, 57, 186, 622, ... via 2*f(n) = C(n) - f(n-1)."""
    f = 1
    for m in range(1, n + 1):
        f = (catalan(m) - f) // 2
    return f


def as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)
