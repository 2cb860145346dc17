"""Noncommutative symmetric functions on the S (complete) and R (ribbon)
bases, with the outer product, the coproduct, the internal (descent-algebra)
product, truncated formal series, and the transform ``sharp`` that kills the
degree-one generator.

Conventions (pinned by the test suite against reference data):

- ``S^I`` is the left-to-right product ``S_{i_1} S_{i_2} ...``;
- the generating series factor exp(-S_1) sits on the LEFT:
  ``sigma_sharp = exp(-S_1) * sigma``, so the degree-n component is
  ``sum_i (-1)^i S_1^i/i! S_{n-i}``;
- the Zassenhaus factorization is ``sigma = e^{z_1} e^{z_2} ...`` with
  increasing degrees from the left, hence ``S_n = sum ζ^{λ↑}/m_λ`` over
  partitions arranged increasingly;
- the internal product follows the splitting rule: the left factor splits
  through the coproduct of the right factor (equivalently, the matrix rule
  with row sums from the left factor, read row by row).

The mirrored conventions fail the pinned reference matrices; see the tests.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .combinat import (
    compositions,
    descent_set,
    descents_to_composition,
    multiplicity_factor,
    partitions,
    rearrangements,
    sort_composition,
)

_ZERO = Fraction(0)


class NsfElement:
    """Homogeneous element: degree, basis tag ('S' or 'R'), sparse coeffs."""

    __slots__ = ("degree", "basis", "coeffs")

    def __init__(self, degree, basis, coeffs):
        self.degree = degree
        self.basis = basis
        self.coeffs = {c: Fraction(v) for c, v in coeffs.items() if v}

    # -- linear structure ------------------------------------------------
    def __add__(self, other):
        other = self._match(other)
        out = dict(self.coeffs)
        for c, v in other.coeffs.items():
            out[c] = out.get(c, _ZERO) + v
        return NsfElement(self.degree, self.basis, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, f):
        f = Fraction(f)
        return NsfElement(self.degree, self.basis, {c: v * f for c, v in self.coeffs.items()})

    def _match(self, other):
        if not isinstance(other, NsfElement):
            raise TypeError(other)
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return other.to_basis(self.basis)

    def __eq__(self, other):
        if not isinstance(other, NsfElement):
            return NotImplemented
        if self.degree != other.degree:
            return False
        return self.to_S().coeffs == other.to_S().coeffs

    def __hash__(self):
        return hash((self.degree, frozenset(self.to_S().coeffs.items())))

    def is_zero(self):
        return not self.coeffs

    # -- basis conversions -------------------------------------------------
    def to_basis(self, basis):
        return self.to_S() if basis == "S" else self.to_R()

    def to_S(self):
        if self.basis == "S":
            return self
        out = {}
        for I, v in self.coeffs.items():
            for J, sign in _ribbon_in_S(I).items():
                out[J] = out.get(J, _ZERO) + sign * v
        return NsfElement(self.degree, "S", out)

    def to_R(self):
        if self.basis == "R":
            return self
        out = {}
        for I, v in self.coeffs.items():
            for J in _coarsenings(I):
                out[J] = out.get(J, _ZERO) + v
        return NsfElement(self.degree, "R", out)

    # -- products ----------------------------------------------------------
    def __mul__(self, other):
        """Outer (concatenation) product."""
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        a, b = self.to_S(), other.to_S()
        out = {}
        for I, v in a.coeffs.items():
            for J, w in b.coeffs.items():
                c = I + J
                out[c] = out.get(c, _ZERO) + v * w
        return NsfElement(a.degree + b.degree, "S", out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def star(self, other):
        """Internal product; zero when the degrees differ."""
        if self.degree != other.degree:
            return zero(self.degree)
        a, b = self.to_S(), other.to_S()
        out = {}
        for J, v in a.coeffs.items():
            for K, w in b.coeffs.items():
                vw = v * w
                for L, mult in _s_star(J, K).items():
                    out[L] = out.get(L, _ZERO) + vw * mult
        return NsfElement(self.degree, "S", out)

    def sharp(self):
        """Internal product with the degree-matched projector component."""
        return self.star(sigma_sharp(self.degree)[self.degree])

    def coproduct(self):
        """dict (left composition, right composition) -> Fraction."""
        out = {}
        for I, v in self.to_S().coeffs.items():
            pairs = {((), ()): Fraction(1)}
            for part in I:
                nxt = {}
                for (L, R), c in pairs.items():
                    for a in range(part + 1):
                        key = (L + ((a,) if a else ()), R + ((part - a,) if part - a else ()))
                        nxt[key] = nxt.get(key, _ZERO) + c
                pairs = nxt
            for key, c in pairs.items():
                out[key] = out.get(key, _ZERO) + c * v
        return {k: v for k, v in out.items() if v}

    def is_primitive(self):
        n = self.degree
        expected = {}
        for I, v in self.to_S().coeffs.items():
            expected[(I, ())] = expected.get((I, ()), _ZERO) + v
            expected[((), I)] = expected.get(((), I), _ZERO) + v
        return self.coproduct() == {k: v for k, v in expected.items() if v}

    # -- io ------------------------------------------------------------------
    def to_json_dict(self):
        elem = self.to_basis(self.basis)
        terms = [
            {"index": list(c), "num": v.numerator, "den": v.denominator}
            for c, v in sorted(elem.coeffs.items())
        ]
        return {"basis": self.basis, "degree": self.degree, "terms": terms}

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for c, v in sorted(self.coeffs.items()):
            name = f"{self.basis}{list(c)}"
            bits.append(f"{v}*{name}" if v != 1 else name)
        return " + ".join(bits)


def from_json_dict(data) -> NsfElement:
    coeffs = {
        tuple(t["index"]): Fraction(t["num"], t["den"]) for t in data["terms"]
    }
    return NsfElement(data["degree"], data["basis"], coeffs)


def S(comp) -> NsfElement:
    comp = tuple(comp)
    return NsfElement(sum(comp), "S", {comp: Fraction(1)})


def R(comp) -> NsfElement:
    comp = tuple(comp)
    return NsfElement(sum(comp), "R", {comp: Fraction(1)})


def zero(n) -> NsfElement:
    return NsfElement(n, "S", {})


def one() -> NsfElement:
    return S(())


@lru_cache(maxsize=None)
def _ribbon_in_S(I: tuple) -> dict:
    """R_I = sum over coarser J of (-1)^{l(I)-l(J)} S^J."""
    out = {}
    for J in _coarsenings(I):
        out[J] = Fraction((-1) ** (len(I) - len(J)))
    return out


@lru_cache(maxsize=None)
def _coarsenings(I: tuple) -> tuple:
    """Compositions J with descent set contained in that of I."""
    n = sum(I)
    des = sorted(descent_set(I))
    out = []
    for mask in range(1 << len(des)):
        sub = frozenset(d for i, d in enumerate(des) if mask >> i & 1)
        out.append(descents_to_composition(sub, n))
    return tuple(out)


# ---------------------------------------------------------------------------
# internal product on the S basis

_s_star_memo = {}


def _s_star(J: tuple, K: tuple) -> dict:
    """S^J * S^K as a dict composition -> integer multiplicity.

    Splitting recursion: peel the first part of J, split K accordingly,
    concatenate.  Equivalent to summing the row readings of nonnegative
    integer matrices with row sums J and column sums K.
    """
    key = (J, K)
    hit = _s_star_memo.get(key)
    if hit is not None:
        return hit
    if not J:
        out = {(): 1}
        _s_star_memo[key] = out
        return out
    j, rest = J[0], J[1:]
    out = {}
    for take in _sub_splits(K, j):
        prefix = tuple(t for t in take if t)
        remainder = tuple(k - t for k, t in zip(K, take))
        sub = _s_star(rest, tuple(r for r in remainder if r))
        for L, mult in sub.items():
            comp = prefix + L
            out[comp] = out.get(comp, 0) + mult
    _s_star_memo[key] = out
    return out


def _sub_splits(K: tuple, total: int):
    """Componentwise vectors 0 <= take <= K with sum(take) == total."""
    if not K:
        if total == 0:
            yield ()
        return
    head, rest = K[0], K[1:]
    rest_sum = sum(rest)
    for t in range(max(0, total - rest_sum), min(head, total) + 1):
        for tail in _sub_splits(rest, total - t):
            yield (t,) + tail


# ---------------------------------------------------------------------------
# truncated series

class NsfSeries:
    """Degree-indexed components with an explicit truncation degree."""

    __slots__ = ("N", "comps")

    def __init__(self, N, comps=None):
        self.N = N
        self.comps = {}
        if comps:
            for n, el in comps.items():
                if n <= N and not el.is_zero():
                    self.comps[n] = el.to_S()

    def __getitem__(self, n) -> NsfElement:
        if n > self.N:
            raise IndexError(f"series truncated at degree {self.N}")
        return self.comps.get(n, zero(n))

    def constant_term(self) -> Fraction:
        return self.comps.get(0, zero(0)).coeffs.get((), _ZERO)

    def __add__(self, other):
        N = min(self.N, other.N)
        return NsfSeries(N, {n: self[n] + other[n] for n in range(N + 1)})

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, f):
        return NsfSeries(self.N, {n: el.scale(f) for n, el in self.comps.items()})

    def __mul__(self, other):
        N = min(self.N, other.N)
        comps = {}
        for n in range(N + 1):
            acc = zero(n)
            for a in range(n + 1):
                left, right = self.comps.get(a), other.comps.get(n - a)
                if left is not None and right is not None:
                    acc = acc + left * right
            comps[n] = acc
        return NsfSeries(N, comps)

    def exp(self):
        if self.constant_term() != 0:
            raise ValueError("exp needs constant term 0")
        result = unit_series(self.N)
        term = unit_series(self.N)
        for k in range(1, self.N + 1):
            term = (term * self).scale(Fraction(1, k))
            if all(el.is_zero() for el in term.comps.values()):
                break
            result = result + term
        return result

    def log(self):
        if self.constant_term() != 1:
            raise ValueError("log needs constant term 1")
        y = self - unit_series(self.N)
        result = NsfSeries(self.N)
        term = unit_series(self.N)
        for k in range(1, self.N + 1):
            term = term * y
            if all(el.is_zero() for el in term.comps.values()):
                break
            result = result + term.scale(Fraction((-1) ** (k + 1), k))
        return result

    def inverse(self):
        if self.constant_term() != 1:
            raise ValueError("inverse needs constant term 1")
        comps = {0: one()}
        for n in range(1, self.N + 1):
            acc = zero(n)
            for a in range(1, n + 1):
                if a in self.comps:
                    acc = acc + self.comps[a] * comps[n - a]
            comps[n] = acc.scale(-1)
        return NsfSeries(self.N, comps)


def unit_series(N) -> NsfSeries:
    return NsfSeries(N, {0: one()})


def homogeneous_series(el: NsfElement, N) -> NsfSeries:
    return NsfSeries(N, {el.degree: el})


@lru_cache(maxsize=None)
def sigma(N: int) -> NsfSeries:
    """sigma_1 = sum of the complete functions S_n."""
    return NsfSeries(N, {n: S((n,)) if n else one() for n in range(N + 1)})


@lru_cache(maxsize=None)
def lambda_elementary(n: int) -> NsfElement:
    """Elementary function: degree-n component of the inverse of sigma, signed."""
    if n == 0:
        return one()
    inv = sigma(n).inverse()
    return inv[n].scale((-1) ** n)


@lru_cache(maxsize=None)
def sigma_sharp(N: int) -> NsfSeries:
    """exp(-S_1) * sigma, the grouplike projector series.

    Degree-n component: sum_i (-1)^i S_1^i/i! S_{n-i}.
    """
    comps = {0: one()}
    for n in range(1, N + 1):
        coeffs = {}
        for i in range(n + 1):
            comp = (1,) * i + ((n - i,) if n - i else ())
            c = Fraction((-1) ** i, factorial(i))
            coeffs[comp] = coeffs.get(comp, _ZERO) + c
        comps[n] = NsfElement(n, "S", coeffs)
    return NsfSeries(N, comps)


def sharp(x: NsfElement) -> NsfElement:
    return x.sharp()


def monomial_coeffs_of_E_transform(N: int) -> dict:
    """Quasi-monomial values of the transformed alphabet, read off from the
    S-expansion of the projector series (degrees 1..N)."""
    out = {}
    for n in range(1, N + 1):
        for I in compositions(n):
            out[I] = sigma_sharp(N)[n].coeffs.get(I, _ZERO)
    return out


# ---------------------------------------------------------------------------
# Lie idempotent families

class LieFamily:
    """Primitive elements of each degree (commutative image p_n/n)."""

    __slots__ = ("name", "elements")

    def __init__(self, name, elements):
        self.name = name
        self.elements = dict(elements)

    def __getitem__(self, n) -> NsfElement:
        return self.elements[n]

    def max_degree(self) -> int:
        return max(self.elements)


@lru_cache(maxsize=None)
def zassenhaus(N: int) -> LieFamily:
    """The unique family with sigma = e^{z_1} e^{z_2} ..., peeled degreewise."""
    remaining = sigma(N)
    elements = {}
    for k in range(1, N + 1):
        z = remaining[k]
        elements[k] = z
        remaining = homogeneous_series(z, N).scale(-1).exp() * remaining
    return LieFamily("zassenhaus", elements)


@lru_cache(maxsize=None)
def solomon_and_hausdorff(N: int):
    """The log-sigma family, and the family obtained from log of the projector
    series in degrees >= 2 (degree one stays S_1)."""
    phi = sigma(N).log()
    solomon = LieFamily("solomon", {n: phi[n] for n in range(1, N + 1)})
    logsharp = sigma_sharp(N).log()
    elements = {1: S((1,))}
    for n in range(2, N + 1):
        elements[n] = logsharp[n]
    hausdorff = LieFamily("hausdorff", elements)
    return solomon, hausdorff


def lie_monomial(family: LieFamily, I: tuple) -> NsfElement:
    out = one()
    for part in I:
        out = out * family[part]
    return out


def idempotent_basis(family: LieFamily, n: int) -> dict:
    """Composition-indexed idempotents gamma^I / m_I for the given family."""
    if n == 0:
        return {(): one()}
    return {
        I: lie_monomial(family, I).scale(Fraction(1, multiplicity_factor(sort_composition(I))))
        for I in compositions(n)
    }


def e_idempotent(I: tuple) -> NsfElement:
    """Zassenhaus idempotent zeta^I / m_I."""
    fam = zassenhaus(sum(I) if I else 0)
    return lie_monomial(fam, I).scale(Fraction(1, multiplicity_factor(sort_composition(I))))


def e_lambda(partition: tuple) -> NsfElement:
    """The minimal idempotent for a partition: increasing arrangement."""
    return e_idempotent(tuple(sorted(partition)))


def spectral_idempotents(family: LieFamily, n: int) -> dict:
    """Partition-indexed projectors built from a Lie family.

    For a partition with s parts 1 and remaining parts lam' (all >= 2):
    (gamma_1^s / s!) * (1/r!) * sum over rearrangements I of lam' of gamma^I.
    """
    out = {}
    for lam in partitions(n):
        s = sum(1 for p in lam if p == 1)
        core = tuple(p for p in lam if p > 1)
        if core:
            acc = zero(n - s)
            for I in rearrangements(core):
                acc = acc + lie_monomial(family, I)
            acc = acc.scale(Fraction(1, factorial(len(core))))
        else:
            acc = one()
        head = one()
        for _ in range(s):
            head = head * family[1]
        out[lam] = head.scale(Fraction(1, factorial(s))) * acc
    return out


# ---------------------------------------------------------------------------
# the derangement filtration

def neutral_P(n: int, k) -> NsfElement:
    """P_n^{(k)} = sum_{i<=min(k,n)} S_1^i/i! S_{n-i}^sharp."""
    if k == "inf":
        k = n
    acc = zero(n)
    ss = sigma_sharp(n)
    for i in range(min(k, n) + 1):
        term = S((1,) * i).scale(Fraction(1, factorial(i))) * ss[n - i]
        acc = acc + term
    return acc


def D_nk(n: int, k: int) -> NsfElement:
    """Block projector S_1^k/k! S_{n-k}^sharp."""
    if k > n or k < 0:
        return zero(n)
    return S((1,) * k).scale(Fraction(1, factorial(k))) * sigma_sharp(n)[n - k]


def non_unitary_compositions(n: int):
    return [I for I in compositions(n) if 1 not in I]


def derangement_algebra_basis(n: int, k) -> list:
    """Basis S_1^j (S^I)^sharp, j <= k, I non-unitary of weight n-j."""
    if k == "inf":
        k = n
    out = []
    for j in range(min(k, n) + 1):
        for I in non_unitary_compositions(n - j):
            out.append(S((1,) * j) * S(I).sharp())
    return out


def derangement_dims(n_max: int, k) -> list:
    """Dimension row d_n^{(k)} for n = 0..n_max."""
    if k == "inf":
        k = n_max
    d0 = [len(non_unitary_compositions(n)) for n in range(n_max + 1)]
    return [sum(d0[n - i] for i in range(min(k, n) + 1)) for n in range(n_max + 1)]


# ---------------------------------------------------------------------------
# desarrangement series

@lru_cache(maxsize=None)
def desarrangement_series(N: int) -> NsfSeries:
    """lambda_{-t} * (1 - t S_1)^{-1}, computed degreewise."""
    comps = {0: one()}
    for n in range(1, N + 1):
        acc = zero(n)
        for i in range(n + 1):
            acc = acc + lambda_elementary(i).scale((-1) ** i) * S((1,) * (n - i))
        comps[n] = acc
    return NsfSeries(N, comps)


def desarrangement_ribbon_support(n: int) -> set:
    """Ribbons indexing the expansion: glue 1^{2i} onto a composition of n-2i."""
    out = set()
    for i in range(1, n // 2 + 1):
        m = n - 2 * i
        if m == 0:
            out.add((1,) * (2 * i))
            continue
        for J in compositions(m):
            out.add((1,) * (2 * i - 1) + (1 + J[0],) + J[1:])
    return out


# ---------------------------------------------------------------------------
# zeta-monomial calculus
#
# Internal products of Zassenhaus monomials stay inside the span of the
# rearranged monomials; this gives exact small coordinates for idempotent
# sandwiches without expanding anything in the S basis.

@lru_cache(maxsize=None)
def zeta_s_coeffs(k: int) -> dict:
    """S-expansion of the degree-k Zassenhaus element."""
    return dict(zassenhaus(k)[k].coeffs)


@lru_cache(maxsize=None)
def gamma_zeta(K: tuple) -> dict:
    """zeta_k * zeta^K in zeta-monomial coordinates (word -> Fraction).

    Sums over ordered set partitions of the positions of K: the block sizes
    form the S-index paired with the zeta_k coefficient, the block subwords
    concatenate into the resulting monomial.
    """
    if len(K) <= 1:
        return {K: Fraction(1)}
    zc = zeta_s_coeffs(sum(K))
    npos = len(K)
    out = {}

    def rec(mask, sizes, word):
        if mask == 0:
            c = zc.get(sizes)
            if c:
                out[word] = out.get(word, _ZERO) + c
            return
        sub = mask
        while sub:
            block = tuple(K[p] for p in range(npos) if sub >> p & 1)
            rec(mask ^ sub, sizes + (sum(block),), word + block)
            sub = (sub - 1) & mask

    rec((1 << npos) - 1, (), ())
    return {w: c for w, c in out.items() if c}


def e_sandwich(mu: tuple, I: tuple) -> dict:
    """e_mu * e_I in zeta-monomial coordinates (word -> Fraction).

    mu is a partition (used in increasing arrangement), I any composition of
    the same weight.  Distributes the factors of zeta^I over the slots of
    zeta^{mu} and multiplies the slotwise products.
    """
    mu_word = tuple(sorted(mu))
    slots = len(mu_word)
    total = {}

    def rec(pos, remaining, slot_words):
        if pos == len(I):
            if any(remaining):
                return
            prod = {(): Fraction(1)}
            for w in slot_words:
                factor = gamma_zeta(w)
                nxt = {}
                for a, ca in prod.items():
                    for b, cb in factor.items():
                        key = a + b
                        nxt[key] = nxt.get(key, _ZERO) + ca * cb
                prod = nxt
            for w, c in prod.items():
                total[w] = total.get(w, _ZERO) + c
            return
        part = I[pos]
        for t in range(slots):
            if remaining[t] >= part:
                remaining[t] -= part
                slot_words[t] = slot_words[t] + (part,)
                rec(pos + 1, remaining, slot_words)
                slot_words[t] = slot_words[t][:-1]
                remaining[t] += part
        return

    rec(0, list(mu_word), [()] * slots)
    scale = Fraction(
        1, multiplicity_factor(tuple(mu)) * multiplicity_factor(sort_composition(I))
    )
    return {w: c * scale for w, c in total.items() if c}


def zeta_monomial_in_S(I: tuple) -> dict:
    """S-expansion of zeta^I (for cross-checks and the radical oracle)."""
    el = lie_monomial(zassenhaus(sum(I) if I else 0), I)
    return dict(el.coeffs)


def clear_star_cache():
    _s_star_memo.clear()
