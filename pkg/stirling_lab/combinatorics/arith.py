"""
Exact arithmetic substrate
Integers are Python ints, rationals are fractions.Fraction (always reduced,
positive denominator). Binomials follow the conventions of the diagonal
recurrences; determinants use fraction-free Bareiss elimination.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from combinatorics.exceptions import BinomialDomainError, PreconditionError

logger = logging.getLogger(__name__)

STRICT_EQ5 = 'strict-eq5'
PASCAL_EXTENSION = 'pascal-extension'
BINOMIAL_CONVENTIONS = (STRICT_EQ5, PASCAL_EXTENSION)


def factorial(n):
    """Return n! for n >= 0"""
    if n < 0:
        raise PreconditionError(f"factorial of negative number {n}")
    return math.factorial(n)


def binom_conventional(p, q):
    """
    Binomial coefficient with the conventions binom(0,0)=1, binom(-1,-1)=1
    and binom(p,q)=0 for p >= 0 > q. Any other negative pair is rejected.
    """
    if p >= 0:
        if q < 0 or q > p:
            return 0
        return math.comb(p, q)
    if p == -1 and q == -1:
        return 1
    raise BinomialDomainError(p, q, STRICT_EQ5)


def binom_pascal_extension(p, q):
    """
    Opt-in extension of binom_conventional: binom(-1, j) = (-1)^j for j >= 0,
    and 0 for any other negative lower index.
    """
    if p >= 0 or (p, q) == (-1, -1):
        return binom_conventional(p, q)
    if p == -1 and q >= 0:
        return -1 if q % 2 else 1
    if q < 0:
        return 0
    raise BinomialDomainError(p, q, PASCAL_EXTENSION)


def binomial_for(convention):
    """Return the binomial function implementing a named convention"""
    if convention == STRICT_EQ5:
        return binom_conventional
    if convention == PASCAL_EXTENSION:
        return binom_pascal_extension
    raise PreconditionError(f"unknown binomial convention {convention!r}")


def sign(exponent):
    """(-1)^exponent for any integer exponent"""
    return -1 if exponent % 2 else 1


def as_rational(value):
    """Coerce ints, strings like '1/3' and Fractions to a Fraction"""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


@dataclass(frozen=True)
class RationalMatrix:
    """Square matrix of exact rationals, stored row-major"""
    rows: tuple

    def __post_init__(self):
        order = len(self.rows)
        if order < 1:
            raise PreconditionError("matrix order must be at least 1")
        for row in self.rows:
            if len(row) != order:
                raise PreconditionError(f"matrix is not square: row of length {len(row)} in order {order}")

    @classmethod
    def from_rows(cls, rows):
        return cls(tuple(tuple(as_rational(entry) for entry in row) for row in rows))

    @property
    def order(self):
        return len(self.rows)

    def entry(self, i, j):
        return self.rows[i][j]

    def conjugate_by_signs(self, signs):
        """Return D*M*D for the diagonal matrix D = diag(signs), signs in {1, -1}"""
        if len(signs) != self.order:
            raise PreconditionError("sign vector length differs from matrix order")
        return RationalMatrix(tuple(
            tuple(signs[i] * signs[j] * value for j, value in enumerate(row))
            for i, row in enumerate(self.rows)
        ))


def det_exact(matrix):
    """
    Exact determinant of a RationalMatrix.

    Denominators are cleared with their lcm L, the integer matrix is reduced
    by Bareiss fraction-free elimination, and the result is divided by L^m.
    """
    order = matrix.order
    if order == 1:
        return matrix.entry(0, 0)

    common = 1
    for row in matrix.rows:
        for value in row:
            common = math.lcm(common, value.denominator)
    work = [[int(value * common) for value in row] for row in matrix.rows]

    det_sign = 1
    previous_pivot = 1
    for step in range(order - 1):
        if work[step][step] == 0:
            swap = next((r for r in range(step + 1, order) if work[r][step] != 0), None)
            if swap is None:
                return Fraction(0)
            work[step], work[swap] = work[swap], work[step]
            det_sign = -det_sign
        pivot = work[step][step]
        for i in range(step + 1, order):
            for j in range(step + 1, order):
                # exact division is guaranteed by Sylvester's identity
                work[i][j] = (pivot * work[i][j] - work[i][step] * work[step][j]) // previous_pivot
            work[i][step] = 0
        previous_pivot = pivot

    return Fraction(det_sign * work[order - 1][order - 1], common ** order)
