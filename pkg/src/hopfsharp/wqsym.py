"""Packed-word realization of the Solomon-Tits algebras.

Basis N_u indexed by packed words of length n; the internal product packs
biwords, N_u * N_v = N_{pack(u, v)}.  The descent algebra embeds by summing
words with a fixed evaluation.  The complete orthogonal idempotent families
are built from the Zassenhaus coefficients, either recursively along the
refinement order or directly by a single internal product.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd

from . import kernels, nsym
from .combinat import (
    block_sizes,
    evaluation,
    is_non_unitary_word,
    meet,
    multiplicity_factor,
    packed_words,
    refines,
    set_partitions,
    sort_composition,
    word_to_set_partition,
    words_with_set_partition,
)
from .exact import QPoly, rank as exact_rank
from .guards import check_guard

_ZERO = Fraction(0)


class WordSpace:
    def __init__(self, n):
        self.n = n
        self.words = list(packed_words(n))
        self.index = {w: i for i, w in enumerate(self.words)}
        self._table = None

    def table(self):
        if self._table is None:
            check_guard("saliola", self.n)
            words = self.words
            index = self.index
            pack_pair = kernels.pack_pair
            self._table = [
                [index[pack_pair(u, v)] for v in words] for u in words
            ]
        return self._table


@lru_cache(maxsize=None)
def wspace(n: int) -> WordSpace:
    return WordSpace(n)


class WqsymElement:
    __slots__ = ("degree", "coeffs")

    def __init__(self, degree, coeffs):
        self.degree = degree
        self.coeffs = {w: Fraction(v) for w, v in coeffs.items() if v}

    def __add__(self, other):
        out = dict(self.coeffs)
        for w, v in other.coeffs.items():
            out[w] = out.get(w, _ZERO) + v
        return WqsymElement(self.degree, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, f):
        f = Fraction(f)
        return WqsymElement(self.degree, {w: v * f for w, v in self.coeffs.items()})

    def __eq__(self, other):
        return (
            isinstance(other, WqsymElement)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def is_zero(self):
        return not self.coeffs

    def star(self, other):
        if self.degree != other.degree:
            return WqsymElement(self.degree, {})
        n = self.degree
        if len(self.coeffs) * len(other.coeffs) <= 64:
            out = {}
            for u, v in self.coeffs.items():
                for w, x in other.coeffs.items():
                    r = kernels.pack_pair(u, w)
                    out[r] = out.get(r, _ZERO) + v * x
            return WqsymElement(n, out)
        sp = wspace(n)
        table = sp.table()
        xi, xn, dx = _int_items(self.coeffs, sp.index)
        yi, yn, dy = _int_items(other.coeffs, sp.index)
        dense = kernels.convolve(table, xi, xn, yi, yn, len(sp.words))
        den = dx * dy
        out = {}
        for i, num in enumerate(dense):
            if num:
                out[sp.words[i]] = Fraction(num, den)
        return WqsymElement(n, out)

    def sharp(self):
        return self.star(embed_nsf(nsym.sigma_sharp(self.degree)[self.degree]))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(
            (f"N_{''.join(map(str, w))}" if v == 1 else f"{v}*N_{''.join(map(str, w))}")
            for w, v in sorted(self.coeffs.items())
        )


def _int_items(coeffs, index):
    den = 1
    for v in coeffs.values():
        den = den * v.denominator // gcd(den, v.denominator)
    idx, nums = [], []
    for w, v in coeffs.items():
        idx.append(index[w])
        nums.append(int(v * den))
    return idx, nums, den


def N(word) -> WqsymElement:
    word = tuple(word)
    return WqsymElement(len(word), {word: 1})


def embed_nsf(x: nsym.NsfElement) -> WqsymElement:
    """S^I -> sum of N_u over packed words with evaluation I."""
    x = x.to_S()
    n = x.degree
    out = {}
    for u in packed_words(n):
        v = x.coeffs.get(evaluation(u))
        if v:
            out[u] = out.get(u, _ZERO) + v
    return WqsymElement(n, out)


def project_to_nsf(x: WqsymElement):
    """Inverse of the embedding when coefficients only depend on the
    evaluation; None otherwise."""
    by_ev = {}
    for u in packed_words(x.degree):
        ev = evaluation(u)
        val = x.coeffs.get(u, _ZERO)
        if ev in by_ev and by_ev[ev] != val:
            return None
        by_ev[ev] = val
    return nsym.NsfElement(x.degree, "S", {ev: v for ev, v in by_ev.items() if v})


# ---------------------------------------------------------------------------
# the transformed component

def non_unitary_words(n: int) -> list:
    return [u for u in packed_words(n) if is_non_unitary_word(u)]


def sharp_basis(n: int) -> list:
    """Transformed words without singleton classes: a basis of the image."""
    return [N(u).sharp() for u in non_unitary_words(n)]


def sharp_component_checks(n: int) -> dict:
    basis = sharp_basis(n)
    words = non_unitary_words(n)
    vecs = [x.coeffs for x in basis if not x.is_zero()]
    r = exact_rank(vecs) if vecs else 0
    dn = N((1,) * n).sharp() if n else N(())
    neutral_ok = all(
        dn.star(x) == x and x.star(dn) == x for x in basis
    )
    # the image of the full algebra has the same rank
    all_vecs = [N(u).sharp().coeffs for u in packed_words(n)]
    all_vecs = [v for v in all_vecs if v]
    full_rank = exact_rank(all_vecs) if all_vecs else 0
    return {
        "dim": len(words),
        "rank": r,
        "spans": full_rank == r,
        "independent": r == len(words),
        "neutral_ok": neutral_ok,
    }


# ---------------------------------------------------------------------------
# complete orthogonal idempotent families

def _zassenhaus_c(I: tuple) -> Fraction:
    """Coefficient of the Zassenhaus monomial in the identity decomposition:
    1/m_I on increasing arrangements, 0 otherwise."""
    if tuple(sorted(I)) != I:
        return _ZERO
    return Fraction(1, multiplicity_factor(sort_composition(I)))


def l_element(pi: frozenset) -> WqsymElement:
    """The seed combination for a set partition: words refining it, weighted
    by the identity-decomposition coefficients of their evaluations."""
    n = sum(len(b) for b in pi)
    out = {}
    for u in words_with_set_partition(pi):
        c = _zassenhaus_c(evaluation(u))
        if c:
            out[u] = c
    return WqsymElement(n, out)


def saliola_idempotents(n: int, mode: str = "direct", force: bool = False) -> dict:
    """Complete orthogonal idempotents indexed by set partitions.

    direct:     e_pi = l_pi * e_lambda with lambda the block sizes;
    recursive:  e_pi = l_pi * (N_{1^n} - sum of e_pi' over strictly finer pi').
    """
    check_guard("saliola", n, force)
    parts = sorted(set_partitions(n), key=lambda p: (-len(p), _pi_key(p)))
    out = {}
    if mode == "direct":
        lambdas = {}
        for pi in parts:
            lam = block_sizes(pi)
            if lam not in lambdas:
                lambdas[lam] = embed_nsf(nsym.e_lambda(lam))
            out[pi] = l_element(pi).star(lambdas[lam])
        return out
    if mode != "recursive":
        raise ValueError(f"unknown mode {mode!r}")
    neutral = N((1,) * n)
    for pi in parts:  # finest first: the recursion only needs finer terms
        acc = neutral
        for rho, e_rho in out.items():
            if rho != pi and refines(rho, pi):
                acc = acc - e_rho
        out[pi] = l_element(pi).star(acc)
    return out


def _pi_key(pi: frozenset):
    return tuple(tuple(sorted(b)) for b in sorted(pi, key=min))


def verify_saliola(n: int, force: bool = False) -> dict:
    direct = saliola_idempotents(n, "direct", force)
    recursive = saliola_idempotents(n, "recursive", force)
    same = all(direct[pi] == recursive[pi] for pi in direct)
    total = WqsymElement(n, {})
    idem = True
    for pi, e in direct.items():
        total = total + e
        idem = idem and e.star(e) == e
    complete = total == N((1,) * n)
    orthogonal = True
    items = list(direct.items())
    for i, (pi, e) in enumerate(items):
        for rho, f in items[i + 1 :]:
            if not (e.star(f).is_zero() and f.star(e).is_zero()):
                orthogonal = False
    # grouping by block sizes recovers the embedded spectral idempotents
    grouping = True
    for lam in {block_sizes(pi) for pi in direct}:
        acc = WqsymElement(n, {})
        for pi, e in direct.items():
            if block_sizes(pi) == lam:
                acc = acc + e
        grouping = grouping and acc == embed_nsf(nsym.e_lambda(lam))
    return {
        "modes_agree": same,
        "idempotent": idem,
        "complete": complete,
        "orthogonal": orthogonal,
        "grouping": grouping,
    }


# ---------------------------------------------------------------------------
# radical and semisimple quotient

def radical_basis(n: int) -> list:
    """Differences of words encoding the same set partition."""
    out = []
    for pi in set_partitions(n):
        words = words_with_set_partition(pi)
        base = words[0]
        out.extend(N(w) - N(base) for w in words[1:])
    return out


def radical_and_quotient(n: int) -> dict:
    basis = radical_basis(n)
    from .combinat import ordered_bell

    bell = sum(1 for _ in set_partitions(n))
    dim_ok = len(basis) == ordered_bell(n) - bell
    vecs = [x.coeffs for x in basis]
    rank_ok = (exact_rank(vecs) == len(basis)) if vecs else True
    squares = all(x.star(x).is_zero() for x in basis)
    # the quotient multiplies like the meet of set partitions
    quotient_ok = True
    for u in packed_words(n):
        for v in packed_words(n):
            prod = kernels.pack_pair(u, v)
            if word_to_set_partition(prod) != meet(
                word_to_set_partition(u), word_to_set_partition(v)
            ):
                quotient_ok = False
    return {
        "basis": basis,
        "dim_ok": dim_ok,
        "rank_ok": rank_ok,
        "squares_to_zero": squares,
        "quotient_matches_meet": quotient_ok,
    }


def unitary_ideal_closed(n: int) -> bool:
    """Words with a singleton class span a two-sided internal ideal."""
    for u in packed_words(n):
        for v in packed_words(n):
            if is_non_unitary_word(u) and is_non_unitary_word(v):
                continue
            if is_non_unitary_word(kernels.pack_pair(u, v)):
                return False
    return True


def sharp_projection_isomorphism(n: int) -> bool:
    """The projection modulo the unitary ideal restricts to an internal-
    product isomorphism on the transformed component."""
    basis_words = non_unitary_words(n)
    sharp = {u: N(u).sharp() for u in basis_words}

    def project(x: WqsymElement) -> WqsymElement:
        return WqsymElement(
            x.degree,
            {w: v for w, v in x.coeffs.items() if is_non_unitary_word(w)},
        )

    for u in basis_words:
        if project(sharp[u]) != N(u):
            return False
    for u in basis_words:
        for v in basis_words:
            lhs = project(sharp[u].star(sharp[v]))
            rhs = N(kernels.pack_pair(u, v))
            if is_non_unitary_word(kernels.pack_pair(u, v)):
                if lhs != rhs:
                    return False
            elif not lhs.is_zero():
                return False
    return True


# ---------------------------------------------------------------------------
# Cartan data

def set_partition_labels(n: int, restricted_to_sharp: bool = False) -> list:
    labels = sorted(set_partitions(n), key=lambda p: (len(p), _pi_key(p)))
    if restricted_to_sharp:
        labels = [p for p in labels if all(len(b) >= 2 for b in p)]
    return labels


def cartan_entry(alpha: frozenset, beta: frozenset) -> QPoly:
    """q-Cartan invariant: splitting multiplicities times a power of q."""
    if alpha == beta:
        return QPoly.const(1)
    if not refines(alpha, beta):
        return QPoly()
    mult = 1
    for b in beta:
        pieces = sum(1 for a in alpha if a <= b)
        mult *= factorial(pieces - 1)
    return QPoly.q(len(alpha) - len(beta), mult)


def cartan_wqsym(n: int, restricted_to_sharp: bool = False) -> dict:
    labels = set_partition_labels(n, restricted_to_sharp)
    matrix = [[cartan_entry(a, b) for a in labels] for b in labels]
    return {"labels": labels, "matrix": matrix}


def cartan_rank_oracle(n: int, force: bool = False) -> bool:
    """Check the q=1 Cartan invariants as sandwich dimensions."""
    check_guard("wqsym_rank_oracle", n, force)
    es = saliola_idempotents(n, "direct", force)
    words = list(packed_words(n))
    for beta, eb in es.items():
        for alpha, ea in es.items():
            vecs = []
            for u in words:
                x = eb.star(N(u)).star(ea)
                if not x.is_zero():
                    vecs.append(x.coeffs)
            r = exact_rank(vecs) if vecs else 0
            if r != cartan_entry(alpha, beta)(1):
                return False
    return True


def quiver_wqsym(n: int, restricted_to_sharp: bool = False) -> list:
    """Arrows: merge exactly two blocks (q-degree one entries)."""
    labels = set_partition_labels(n, restricted_to_sharp)
    arrows = []
    for a in labels:
        for b in labels:
            if len(a) == len(b) + 1 and refines(a, b):
                entry = cartan_entry(a, b)
                if entry.degree() == 1:
                    arrows.append((a, b))
    return arrows


# ---------------------------------------------------------------------------
# sandwich filtration

def v_filtration(n: int, k, force: bool = False) -> dict:
    """Spans of the two-sided block-projector sandwiches up to level k."""
    check_guard("v_filtration", n, force)
    if k == "inf":
        k = n
    words = list(packed_words(n))
    vectors = []
    neutral = WqsymElement(n, {})
    for j in range(min(k, n) + 1):
        dj = embed_nsf(nsym.D_nk(n, j))
        neutral = neutral + dj
        for u in words:
            x = dj.star(N(u)).star(dj)
            if not x.is_zero():
                vectors.append(x.coeffs)
    dim = exact_rank(vectors) if vectors else 0
    return {"vectors": vectors, "dim": dim, "neutral": neutral}


def v_filtration_checks(n: int, k, force: bool = False) -> dict:
    data = v_filtration(n, k, force)
    vectors = data["vectors"]
    neutral = data["neutral"]
    from .exact import in_span

    sample = [WqsymElement(n, v) for v in vectors]
    closed = all(
        in_span(x.star(y).coeffs, vectors) or x.star(y).is_zero()
        for x in sample[:12]
        for y in sample[:12]
    )
    unital = all(
        neutral.star(x) == x and x.star(neutral) == x for x in sample[:12]
    )
    return {"dim": data["dim"], "closed": closed, "unital": unital}
