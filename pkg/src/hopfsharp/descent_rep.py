"""Cartan invariants, quivers and Loewy data for the descent algebra and its
derangement subalgebras.

Entries are dimensions of idempotent sandwiches e_mu * A * e_lambda, computed
exactly in the Zassenhaus-monomial coordinates of nsym.e_sandwich; the grading
exponent is the length difference.  An independent combinatorial oracle (free
Lie algebra multidegree dimensions summed over multiset partitions) and the
radical-filtration oracle cross-check the same numbers in the tests.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd

from . import nsym
from .combinat import (
    number_of_partitions,
    partitions,
    partitions_no_one,
    rearrangements,
    reverse_lex_key,
)
from .csym import _mobius
from .exact import QPoly, rank as exact_rank
from .guards import ConsistencyError, check_guard


# ---------------------------------------------------------------------------
# Cartan invariants by exact rank of idempotent sandwiches

@lru_cache(maxsize=None)
def cartan_invariant(lam: tuple, mu: tuple) -> int:
    """dim span{e_mu * e_I : I rearranging lam}, exactly."""
    if len(lam) < len(mu):
        return 0
    if len(lam) == len(mu):
        return 1 if lam == mu else 0
    vectors = []
    for I in rearrangements(lam):
        coords = nsym.e_sandwich(mu, I)
        if coords:
            vectors.append(coords)
    if not vectors:
        return 0
    return exact_rank(vectors)


def q_cartan_entry(lam: tuple, mu: tuple) -> QPoly:
    c = cartan_invariant(lam, mu)
    if not c:
        return QPoly()
    return QPoly.q(len(lam) - len(mu), c)


class CartanMatrix:
    """Row/column labels (partitions) with QPoly entries; rows are the
    coarser index of the sandwich, columns the finer."""

    __slots__ = ("labels", "entries")

    def __init__(self, labels, entries):
        self.labels = list(labels)
        self.entries = entries

    def entry(self, i, j) -> QPoly:
        return self.entries[i][j]

    def at_q1(self):
        return [[e(1) for e in row] for row in self.entries]

    def total(self) -> QPoly:
        acc = QPoly()
        for row in self.entries:
            for e in row:
                acc = acc + e
        return acc

    def arrows(self):
        """Pairs (finer, coarser) carried by entries of q-degree one."""
        out = []
        for i, row_label in enumerate(self.labels):
            for j, col_label in enumerate(self.labels):
                e = self.entries[i][j]
                if e and e.degree() == 1 and not e.coeffs.get(0):
                    out.append((col_label, row_label))
        return sorted(out)


def labels_d0(n: int) -> list:
    return sorted(partitions_no_one(n), key=reverse_lex_key)


def labels_sym(n: int) -> list:
    return sorted(partitions(n), key=reverse_lex_key)


def labels_dk(n: int, k) -> list:
    if k == "inf":
        k = n
    out = []
    for ones in range(min(k, n) + 1):
        for core in sorted(partitions_no_one(n - ones), key=reverse_lex_key):
            out.append(core + (1,) * ones)
    return out


def _matrix_for(labels) -> CartanMatrix:
    entries = [[q_cartan_entry(lam, mu) for lam in labels] for mu in labels]
    return CartanMatrix(labels, entries)


@lru_cache(maxsize=None)
def cartan_d0(n: int) -> CartanMatrix:
    return _matrix_for(tuple(labels_d0(n)))


@lru_cache(maxsize=None)
def cartan_sym(n: int) -> CartanMatrix:
    return _matrix_for(tuple(labels_sym(n)))


@lru_cache(maxsize=None)
def cartan_dk(n: int, k) -> CartanMatrix:
    """Block-diagonal assembly over the number of ones; also checked against
    zeroing the full matrix outside equal-ones pairs."""
    labels = labels_dk(n, k)
    ones = {lab: sum(1 for p in lab if p == 1) for lab in labels}
    entries = []
    for mu in labels:
        row = []
        for lam in labels:
            if ones[mu] != ones[lam]:
                row.append(QPoly())
                continue
            core_mu = tuple(p for p in mu if p > 1)
            core_lam = tuple(p for p in lam if p > 1)
            row.append(q_cartan_entry(core_lam, core_mu))
        entries.append(row)
    matrix = CartanMatrix(labels, entries)
    # consistency with the direct sandwich computation on the full labels
    for i, mu in enumerate(labels):
        for j, lam in enumerate(labels):
            direct = q_cartan_entry(lam, mu) if ones[mu] == ones[lam] else QPoly()
            if direct != matrix.entries[i][j]:
                raise ConsistencyError(
                    f"block and zeroing constructions disagree at {mu}, {lam}"
                )
    return matrix


def cartan(algebra: str, n: int, k=None) -> CartanMatrix:
    if algebra == "d0":
        return cartan_d0(n)
    if algebra == "sym":
        return cartan_sym(n)
    if algebra == "dk":
        return cartan_dk(n, k if k is not None else "inf")
    raise ValueError(f"unknown algebra {algebra!r}")


# ---------------------------------------------------------------------------
# quivers

def merge_two_distinct_parts(lam: tuple, mu: tuple) -> bool:
    """mu arises from lam by adding two distinct parts."""
    if len(lam) != len(mu) + 1:
        return False
    parts = list(lam)
    seen = set()
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if parts[i] == parts[j]:
                continue
            merged = sorted(
                parts[:i] + parts[i + 1 : j] + parts[j + 1 :] + [parts[i] + parts[j]],
                reverse=True,
            )
            seen.add(tuple(merged))
    return mu in seen


def quiver(algebra: str, n: int, k=None) -> dict:
    """Vertices and arrows; Cartan q-degree-one entries must match the
    merge-two-distinct-parts predicate."""
    matrix = cartan(algebra, n, k)
    arrows = matrix.arrows()
    if algebra in ("d0", "sym"):
        predicate = sorted(
            (lam, mu)
            for lam in matrix.labels
            for mu in matrix.labels
            if merge_two_distinct_parts(lam, mu) and cartan_invariant(lam, mu)
        )
    else:
        ones = {lab: sum(1 for p in lab if p == 1) for lab in matrix.labels}
        predicate = sorted(
            (lam, mu)
            for lam in matrix.labels
            for mu in matrix.labels
            if ones[lam] == ones[mu]
            and merge_two_distinct_parts(
                tuple(p for p in lam if p > 1), tuple(p for p in mu if p > 1)
            )
            and cartan_invariant(
                tuple(p for p in lam if p > 1), tuple(p for p in mu if p > 1)
            )
        )
    if arrows != predicate:
        raise ConsistencyError(
            f"quiver characterizations disagree for {algebra}, n={n}"
        )
    return {"vertices": matrix.labels, "arrows": arrows}


# ---------------------------------------------------------------------------
# q-dimension polynomials

def q_dimension_polynomial(n: int) -> QPoly:
    """Sum of all q-Cartan entries of the full filtration algebra."""
    return cartan_dk(n, "inf").total()


def q_dimension_polynomials(up_to_n: int) -> list:
    """Polynomials for degrees 1..up_to_n (index 0 is degree 1)."""
    return [q_dimension_polynomial(n) for n in range(1, up_to_n + 1)]


def triangle_rows(count: int) -> list:
    """Coefficient rows (constant term first) of the dimension polynomials."""
    rows = []
    for poly in q_dimension_polynomials(count):
        d = poly.degree()
        rows.append([int(poly.coeffs.get(i, 0)) for i in range(d + 1)])
    return rows


def second_column_check(up_to_n: int) -> bool:
    """The linear coefficient counts choices of two distinct parts (both
    larger than one) over all partitions."""
    for n in range(1, up_to_n + 1):
        poly = q_dimension_polynomial(n)
        linear = poly.coeffs.get(1, 0)
        count = 0
        for lam in partitions(n):
            vals = sorted({p for p in lam if p > 1})
            count += len(vals) * (len(vals) - 1) // 2
        if linear != count:
            return False
        if poly.coeffs.get(0, 0) != number_of_partitions(n):
            return False
    return True


def arrow_count_shift_check(up_to_n: int) -> bool:
    """Arrows of the full filtration quiver at degree n match the arrows of
    the whole descent algebra at degree n-2."""
    for n in range(2, up_to_n + 1):
        full = len(quiver("dk", n, "inf")["arrows"])
        small = len(quiver("sym", n - 2)["arrows"]) if n - 2 >= 1 else 0
        if full != small:
            return False
    return True


# ---------------------------------------------------------------------------
# combinatorial oracle: multiset partitions weighted by free-Lie dimensions

def _fine_lie_dimension(block: tuple) -> int:
    """Dimension of the fine multidegree component of the free Lie algebra:
    one generator per distinct value, multiplicities as exponents."""
    from collections import Counter

    alpha = sorted(Counter(block).values())
    r = sum(alpha)
    g = 0
    for a in alpha:
        g = gcd(g, a)
    total = 0
    for d in range(1, g + 1):
        if g % d:
            continue
        mob = _mobius(d)
        if not mob:
            continue
        term = factorial(r // d)
        for a in alpha:
            term //= factorial(a // d)
        total += mob * term
    return total // r


def cartan_invariant_oracle(lam: tuple, mu: tuple) -> int:
    """Sum over multiset partitions of lam into blocks with sums mu of the
    product of fine free-Lie dimensions.

    Blocks feeding equal parts of mu are taken in weakly decreasing order so
    that each multiset of blocks counts once.
    """
    if len(lam) < len(mu):
        return 0

    def rec(remaining: tuple, parts: tuple, prev):
        if not parts:
            return 1 if not remaining else 0
        target = parts[0]
        total = 0
        for block in sorted(set(_sub_multisets(remaining, target)), reverse=True):
            if prev is not None and block > prev:
                continue
            d = _fine_lie_dimension(block)
            if not d:
                continue
            nxt_prev = block if len(parts) > 1 and parts[1] == target else None
            total += d * rec(_remove(remaining, block), parts[1:], nxt_prev)
        return total

    return rec(tuple(sorted(lam, reverse=True)), tuple(mu), None)


def _sub_multisets(values: tuple, target: int):
    """Sub-multisets of a sorted tuple with the given sum, as sorted tuples."""
    out = []

    def rec(idx, acc, remaining):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for i in range(idx, len(values)):
            if i > idx and values[i] == values[i - 1]:
                continue
            if values[i] <= remaining:
                acc.append(values[i])
                rec(i + 1, acc, remaining - values[i])
                acc.pop()

    rec(0, [], target)
    return out


def _remove(values: tuple, block: tuple) -> tuple:
    rest = list(values)
    for b in block:
        rest.remove(b)
    return tuple(rest)


# ---------------------------------------------------------------------------
# radical filtration oracle

def _s_coords(el: nsym.NsfElement) -> dict:
    return dict(el.to_S().coeffs)


def _ideal_layer(n: int, lower_bases: dict) -> list:
    """Degree-n spanning vectors of the commutator ideal layer above the
    given lower layer (dict degree -> list of elements)."""
    from .combinat import compositions

    vectors = []
    for m, basis in lower_bases.items():
        for g in basis:
            for x in range(1, n - m + 1):
                core_pairs = []
                gx = nsym.S((x,)) * g - g * nsym.S((x,))
                # pad with arbitrary monomials on both sides
                rem = n - m - x
                for a in range(rem + 1):
                    for A in compositions(a):
                        for B in compositions(rem - a):
                            vec = nsym.S(A) * gx * nsym.S(B)
                            if not vec.is_zero():
                                vectors.append(vec)
    return vectors


def radical_filtration_oracle(n: int, jmax: int, force: bool = False) -> dict:
    """Spans of the commutator-ideal powers in degree n, with the layer
    membership of the idempotent sandwiches."""
    check_guard("radical_oracle", n, force)
    from .combinat import compositions

    # gamma^1 in all degrees up to n: ideal generated by commutators
    layers = []  # layers[j-1][m] = list of basis elements of degree m
    first = {}
    for m in range(2, n + 1):
        vecs = []
        for a in range(m + 1):
            for x in range(1, m - a + 1):
                for y in range(1, m - a - x + 1):
                    b = m - a - x - y
                    if b < 0:
                        continue
                    comm = nsym.S((x,)) * nsym.S((y,)) - nsym.S((y,)) * nsym.S((x,))
                    for A in compositions(a):
                        for B in compositions(b):
                            vec = nsym.S(A) * comm * nsym.S(B)
                            if not vec.is_zero():
                                vecs.append(vec)
        first[m] = _reduce_basis(vecs)
    layers.append(first)
    for j in range(2, jmax + 1):
        prev = layers[-1]
        nxt = {}
        for m in range(2, n + 1):
            vecs = _ideal_layer(m, {mm: bb for mm, bb in prev.items() if mm <= m})
            nxt[m] = _reduce_basis(vecs)
        layers.append(nxt)
    dims = [len(layer.get(n, [])) for layer in layers]
    return {"dims": dims, "layers": layers}


def _reduce_basis(elements) -> list:
    """Row-reduce a family of elements to an independent subfamily."""
    basis = []
    vecs = []
    for el in elements:
        coords = _s_coords(el)
        if not coords:
            continue
        vecs.append(coords)
        if exact_rank(vecs) == len(vecs):
            basis.append(el)
        else:
            vecs.pop()
    return basis


def sandwich_layer_check(n: int, force: bool = False) -> bool:
    """e_mu * e_I sits in layer l(lam)-l(mu) and not one deeper."""
    data = radical_filtration_oracle(n, n, force)
    layers = data["layers"]

    def layer_vectors(j):
        if j == 0:
            return None
        return [_s_coords(el) for el in layers[j - 1].get(n, [])]

    from .exact import in_span

    for mu in partitions(n):
        for lam in partitions(n):
            c = cartan_invariant(lam, mu)
            if not c or lam == mu:
                continue
            j = len(lam) - len(mu)
            if j >= len(layers) + 1:
                continue
            for I in rearrangements(lam):
                el = nsym.e_lambda(mu).star(nsym.e_idempotent(I))
                if el.is_zero():
                    continue
                coords = _s_coords(el)
                inside = in_span(coords, layer_vectors(j)) if j else True
                deeper_vecs = layer_vectors(j + 1)
                too_deep = in_span(coords, deeper_vecs) if deeper_vecs else False
                if not inside or too_deep:
                    return False
    return True


# ---------------------------------------------------------------------------
# rendering

def _label_str(label: tuple) -> str:
    if not label:
        return "0"
    if max(label) > 9:
        return ",".join(map(str, label))
    return "".join(map(str, label))


def render_text(matrix: CartanMatrix) -> str:
    labels = [_label_str(l) for l in matrix.labels]
    cells = [
        [("." if not e else str(e)) for e in row]
        for row in matrix.entries
    ]
    width = max(
        [len(s) for s in labels] + [len(c) for row in cells for c in row] + [1]
    )
    head = " " * (width + 2) + " ".join(s.rjust(width) for s in labels)
    lines = [head]
    for lab, row in zip(labels, cells):
        lines.append(lab.rjust(width) + " | " + " ".join(c.rjust(width) for c in row))
    return "\n".join(lines) + "\n"


def render_json_dict(matrix: CartanMatrix) -> dict:
    return {
        "labels": [list(l) for l in matrix.labels],
        "entries": [[str(e) if e else "0" for e in row] for row in matrix.entries],
    }


def render_csv(matrix: CartanMatrix) -> str:
    labels = [_label_str(l) for l in matrix.labels]
    lines = ["label," + ",".join(labels)]
    for lab, row in zip(labels, matrix.entries):
        lines.append(lab + "," + ",".join(str(e) if e else "0" for e in row))
    return "\n".join(lines) + "\n"
