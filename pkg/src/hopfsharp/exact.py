"""Exact scalar and linear algebra: q-polynomials, ranks and solves over Q.

Coefficients are ``fractions.Fraction`` everywhere; nothing here ever rounds.
Matrices are lists of dict-vectors (index -> Fraction) or dense integer rows;
the elimination kernels live in :mod:`hopfsharp.kernels` so that the compiled
and pure-Python implementations stay interchangeable.
"""

from fractions import Fraction
from math import gcd

from . import kernels


class NonExactDivision(ArithmeticError):
    """Polynomial division left a remainder where exactness was required."""


class QPoly:
    """Univariate polynomial in q with Fraction coefficients.

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            for k, v in coeffs.items():
                v = Fraction(v)
                if v:
                    data[int(k)] = v
        object.__setattr__(self, "coeffs", data)

    # -- constructors ------------------------------------------------
    @classmethod
    def const(cls, c) -> "QPoly":
        return cls({0: Fraction(c)})

    @classmethod
    def q(cls, power: int = 1, coeff=1) -> "QPoly":
        return cls({power: Fraction(coeff)})

    # -- ring structure ----------------------------------------------
    def __add__(self, other):
        other = _as_qpoly(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-_as_qpoly(other))

    def __rsub__(self, other):
        return _as_qpoly(other) + (-self)

    def __mul__(self, other):
        other = _as_qpoly(other)
        out = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + v1 * v2
        return QPoly(out)

    __rmul__ = __mul__

    def divide_exact(self, other: "QPoly") -> "QPoly":
        """Exact polynomial division; raises NonExactDivision on remainder."""
        other = _as_qpoly(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        num = dict(self.coeffs)
        dlead = max(other.coeffs)
        dcoeff = other.coeffs[dlead]
        out = {}
        while num:
            lead = max(num)
            if lead < dlead:
                raise NonExactDivision(f"{self} is not divisible by {other}")
            k = lead - dlead
            c = num[lead] / dcoeff
            out[k] = c
            for e, v in other.coeffs.items():
                num[e + k] = num.get(e + k, 0) - c * v
                if not num[e + k]:
                    del num[e + k]
        return QPoly(out)

    # -- queries -------------------------------------------------------
    def __call__(self, value):
        return sum((c * Fraction(value) ** k for k, c in self.coeffs.items()), Fraction(0))

    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def __eq__(self, other):
        return self.coeffs == _as_qpoly(other).coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"QPoly({self})"

    def __str__(self):
        """Descending powers: '3q^2+9q+22'; '0' for the zero polynomial."""
        if not self.coeffs:
            return "0"
        chunks = []
        for k in sorted(self.coeffs, reverse=True):
            c = self.coeffs[k]
            mag = -c if c < 0 else c
            body = _coeff_str(mag)
            if k == 0:
                term = body
            else:
                qpart = "q" if k == 1 else f"q^{k}"
                term = qpart if mag == 1 else f"{body}{qpart}"
            if not chunks:
                chunks.append(term if c > 0 else "-" + term)
            else:
                chunks.append(("+" if c > 0 else "-") + term)
        return "".join(chunks)

    def coeff_list(self) -> list:
        """Coefficients by ascending power, trailing zeros trimmed."""
        d = self.degree()
        return [self.coeffs.get(k, Fraction(0)) for k in range(d + 1)]


def _coeff_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _as_qpoly(x) -> QPoly:
    if isinstance(x, QPoly):
        return x
    return QPoly({0: Fraction(x)})


def qint(n: int) -> QPoly:
    """[n] = 1 + q + ... + q^{n-1}."""
    return QPoly({k: 1 for k in range(n)})


def qfactorial(n: int) -> QPoly:
    """[n]! = [1][2]...[n]."""
    if n < 0:
        raise ValueError("qfactorial needs n >= 0")
    out = QPoly.const(1)
    for j in range(1, n + 1):
        out = out * qint(j)
    return out


def qbinomial(n: int, k: int) -> QPoly:
    if k < 0 or k > n:
        return QPoly()
    return qfactorial(n).divide_exact(qfactorial(k) * qfactorial(n - k))


# ---------------------------------------------------------------------------
# exact linear algebra over Q
#
# Vectors are dicts index -> Fraction over an arbitrary hashable index set.

def _integer_rows(vectors, index_order=None):
    """Clear denominators row by row; returns (rows, columns)."""
    if index_order is None:
        cols = sorted({k for v in vectors for k in v})
    else:
        cols = list(index_order)
    col_pos = {c: i for i, c in enumerate(cols)}
    rows = []
    for vec in vectors:
        den = 1
        for val in vec.values():
            f = Fraction(val)
            den = den * f.denominator // gcd(den, f.denominator)
        row = [0] * len(cols)
        for k, val in vec.items():
            f = Fraction(val)
            row[col_pos[k]] = int(f * den)
        rows.append(row)
    return rows, cols


def rank(vectors, index_order=None) -> int:
    """Exact rank over Q of a family of dict-vectors.

    Fraction-free elimination with row gcd reduction; deterministic for any
    input order (pivot choice depends only on the data).
    """
    rows, _ = _integer_rows(vectors, index_order)
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    return kernels.int_rank(rows)


def rank_lower_bound_mod(vectors, p: int = (1 << 61) - 1, index_order=None) -> int:
    """A certified lower bound on the rank over Q.

    Elimination mod the prime p exhibits a square minor with unit determinant
    mod p, whose integer determinant is therefore nonzero; the returned value
    is thus a rigorous lower bound (and generically equals the rank).
    """
    rows, _ = _integer_rows(vectors, index_order)
    rows = [[x % p for x in r] for r in rows]
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    return kernels.mod_rank(rows, p)


def solve_in_span(target: dict, basis: list):
    """Exact coefficients writing target over the basis, or None if outside.

    >>> from fractions import Fraction
    >>> solve_in_span({"x": Fraction(2)}, [{"x": Fraction(1)}])
    [Fraction(2, 1)]
    """
    cols = sorted({k for v in basis for k in v} | set(target))
    # augmented system: rows indexed by cols, unknowns = basis coefficients
    matrix = [[Fraction(vec.get(c, 0)) for vec in basis] for c in cols]
    rhs = [Fraction(target.get(c, 0)) for c in cols]
    ncols = len(basis)
    pivots = []
    row_i = 0
    for col in range(ncols):
        pivot = next((r for r in range(row_i, len(matrix)) if matrix[r][col]), None)
        if pivot is None:
            continue
        matrix[row_i], matrix[pivot] = matrix[pivot], matrix[row_i]
        rhs[row_i], rhs[pivot] = rhs[pivot], rhs[row_i]
        inv = 1 / matrix[row_i][col]
        matrix[row_i] = [x * inv for x in matrix[row_i]]
        rhs[row_i] *= inv
        for r in range(len(matrix)):
            if r != row_i and matrix[r][col]:
                f = matrix[r][col]
                matrix[r] = [a - f * b for a, b in zip(matrix[r], matrix[row_i])]
                rhs[r] -= f * rhs[row_i]
        pivots.append(col)
        row_i += 1
    # consistency: zero rows must have zero rhs
    for r in range(row_i, len(matrix)):
        if rhs[r]:
            return None
    coeffs = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        coeffs[col] = rhs[r]
    # free columns stay 0; verify (guards against deficient basis ordering)
    check = {}
    for c, vec in zip(coeffs, basis):
        if c:
            for k, v in vec.items():
                check[k] = check.get(k, 0) + c * Fraction(v)
    cleaned = {k: v for k, v in check.items() if v}
    tgt = {k: Fraction(v) for k, v in target.items() if Fraction(v)}
    if cleaned != tgt:
        return None
    return coeffs


def in_span(target: dict, basis: list) -> bool:
    return solve_in_span(target, basis) is not None
