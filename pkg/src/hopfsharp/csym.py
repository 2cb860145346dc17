"""Commutative symmetric functions in the power-sum basis.

A SymFunc is a homogeneous Fraction-linear combination of p_lambda.  The
power sums make plethysm and the Hall pairing trivial; the h family enters
through Newton's identities only.
"""

from fractions import Fraction
from functools import lru_cache

from .combinat import partitions, zee
from .nsym import NsfElement

_ZERO = Fraction(0)


class SymFunc:
    """Homogeneous symmetric function, coefficients on p_lambda."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree, coeffs):
        self.degree = degree
        self.coeffs = {tuple(c): Fraction(v) for c, v in coeffs.items() if v}

    def __add__(self, other):
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        out = dict(self.coeffs)
        for c, v in other.coeffs.items():
            out[c] = out.get(c, _ZERO) + v
        return SymFunc(self.degree, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, f):
        f = Fraction(f)
        return SymFunc(self.degree, {c: v * f for c, v in self.coeffs.items()})

    def __mul__(self, other):
        out = {}
        for a, v in self.coeffs.items():
            for b, w in other.coeffs.items():
                c = tuple(sorted(a + b, reverse=True))
                out[c] = out.get(c, _ZERO) + v * w
        return SymFunc(self.degree + other.degree, out)

    def __eq__(self, other):
        return (
            isinstance(other, SymFunc)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def is_zero(self):
        return not self.coeffs

    def hall(self, other) -> Fraction:
        """Hall pairing: <p_lam, p_mu> = z_lam [lam == mu]."""
        if self.degree != other.degree:
            return _ZERO
        return sum(
            (v * other.coeffs.get(lam, _ZERO) * zee(lam) for lam, v in self.coeffs.items()),
            _ZERO,
        )

    def to_json_dict(self):
        return {
            "basis": "p",
            "degree": self.degree,
            "terms": [
                {"index": list(c), "num": v.numerator, "den": v.denominator}
                for c, v in sorted(self.coeffs.items())
            ],
        }

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(
            (f"{v}*p{list(c)}" if v != 1 else f"p{list(c)}")
            for c, v in sorted(self.coeffs.items())
        )


def p(partition) -> SymFunc:
    partition = tuple(sorted(partition, reverse=True))
    return SymFunc(sum(partition), {partition: 1})


def sym_zero(n) -> SymFunc:
    return SymFunc(n, {})


def sym_one() -> SymFunc:
    return SymFunc(0, {(): 1})


@lru_cache(maxsize=None)
def h(n: int) -> SymFunc:
    """Complete homogeneous function: h_n = sum p_lambda / z_lambda."""
    return SymFunc(n, {lam: Fraction(1, zee(lam)) for lam in partitions(n)})


@lru_cache(maxsize=None)
def e(n: int) -> SymFunc:
    """Elementary function: signs (-1)^{n - length} on the h expansion."""
    return SymFunc(
        n,
        {lam: Fraction((-1) ** (n - len(lam)), zee(lam)) for lam in partitions(n)},
    )


def commutative_image(x: NsfElement) -> SymFunc:
    """S^I -> h_{i_1} h_{i_2} ...; the kernel of this map is the radical."""
    x = x.to_S()
    out = sym_zero(x.degree)
    for I, v in x.coeffs.items():
        term = sym_one()
        for part in I:
            term = term * h(part)
        out = out + term.scale(v)
    return out


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    if n == 1:
        return 1
    m, out = n, 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            out = -out
        d += 1
    if m > 1:
        out = -out
    return out


@lru_cache(maxsize=None)
def lie_character(n: int) -> SymFunc:
    """Characteristic of the free Lie part: (1/n) sum_{d|n} mu(d) p_d^{n/d}."""
    if n < 1:
        raise ValueError("lie_character needs n >= 1")
    out = sym_zero(n)
    for d in range(1, n + 1):
        if n % d == 0:
            mob = _mobius(d)
            if mob:
                out = out + p((d,) * (n // d)).scale(Fraction(mob, n))
    return out


def p_plethysm(f: SymFunc, k: int) -> SymFunc:
    """p_k composed with f: substitute p_i -> p_{ik}."""
    return SymFunc(
        f.degree * k,
        {tuple(sorted((i * k for i in lam), reverse=True)): v for lam, v in f.coeffs.items()},
    )


def plethysm_h_of(g: SymFunc, n: int) -> SymFunc:
    """h_n[g] via exp(sum t^k p_k[g]/k), extracting the t^n coefficient.

    Graded pieces are collected degreewise in the auxiliary variable; g must
    be homogeneous of positive degree for the grading to make sense.
    """
    if n == 0:
        return sym_one()
    # comps[m] = coefficient of t^m, a symmetric function of degree m*deg(g)
    comps = {0: sym_one()}
    for m in range(1, n + 1):
        comps[m] = sym_zero(m * g.degree)
    # accumulate exp via powers of X = sum_k t^k p_k[g]/k
    term = {0: sym_one()}
    for j in range(1, n + 1):
        nxt = {}
        for m1, val in term.items():
            for k in range(1, n - m1 + 1):
                m = m1 + k
                if m > n:
                    continue
                piece = val * p_plethysm(g, k).scale(Fraction(1, k))
                nxt[m] = nxt.get(m, sym_zero(m * g.degree)) + piece
        term = {m: v.scale(Fraction(1, j)) for m, v in nxt.items()}
        if not term:
            break
        for m, v in term.items():
            comps[m] = comps[m] + v
    return comps[n]


@lru_cache(maxsize=None)
def gessel_reutenauer(nu: tuple) -> SymFunc:
    """L_nu = prod over part values k of h_{m_k}[l_k]."""
    out = sym_one()
    counts = {}
    for part in nu:
        counts[part] = counts.get(part, 0) + 1
    for k in sorted(counts):
        out = out * plethysm_h_of(lie_character(k), counts[k])
    return out


def specialize_E(f: SymFunc) -> Fraction:
    """Evaluate at the exponential alphabet: p_1 -> 1, p_k -> 0 for k >= 2."""
    total = _ZERO
    for lam, v in f.coeffs.items():
        if all(part == 1 for part in lam):
            total += v
    return total


def specialize_at(f: SymFunc, p_value) -> Fraction:
    """Evaluate with p_k -> p_value(k); p_value(k) = 1 is a single variable."""
    total = _ZERO
    for lam, v in f.coeffs.items():
        prod = Fraction(1)
        for part in lam:
            prod *= Fraction(p_value(part))
        total += v * prod
    return total


def cycle_index_from_counts(n: int, counts: dict) -> SymFunc:
    """Sum of c * p_type over a map cycle-type -> Fraction."""
    return SymFunc(n, dict(counts))


def character_delta(n: int, k: int) -> SymFunc:
    """Reference side of the character identity: sum of L_mu over mu with
    exactly k parts 1."""
    out = sym_zero(n)
    for mu in partitions(n):
        if sum(1 for part in mu if part == 1) == k:
            out = out + gessel_reutenauer(mu)
    return out


# ---------------------------------------------------------------------------
# q-derangements

def q_derangement(n: int):
    """[n]! sum_k (-1)^k q^{binom(k,2)} / [k]!, all divisions exact."""
    from .exact import QPoly, qfactorial

    total = QPoly()
    qf_n = qfactorial(n)
    for k in range(n + 1):
        term = qf_n.divide_exact(qfactorial(k))
        sign = (-1) ** k
        total = total + term * QPoly.q(k * (k - 1) // 2, sign)
    return total
