"""
Partial Bell polynomials and the derivative-limit representation

B_{n,k}(x_1..x_{n-k+1}) is evaluated over exact rationals by walking the
integer partitions of n into exactly k parts. Derivatives of
H_k(x) = ((e^x-1)/x)^k at 0 come from its truncated formal series.
"""
import logging
from fractions import Fraction

from sympy.utilities.iterables import partitions

from combinatorics.arith import binom_conventional, factorial, sign
from combinatorics.exceptions import ConsistencyError, IndexRangeError, PreconditionError
from combinatorics.report import single_check
from combinatorics.series import FormalSeries
from combinatorics.tables import StirlingKind, StirlingTable

logger = logging.getLogger(__name__)

BELL_ENUMERATION_BOUND = 25


def _second_kind_table(table, max_n):
    if table is None:
        return StirlingTable(StirlingKind.SECOND, max_n)
    if table.kind != StirlingKind.SECOND or not table.covers(max_n):
        raise PreconditionError(f"need a second-kind table covering n={max_n}")
    return table


def multiplicity_vectors(n, k):
    """Yield {part: multiplicity} for every partition of n into exactly k parts"""
    if k == 0:
        if n == 0:
            yield {}
        return
    if n == 0:
        return
    for partition in partitions(n, m=k):
        if sum(partition.values()) == k:
            yield dict(partition)


def reciprocal_arguments(n, k):
    """(1/2, 1/3, ..., 1/(n-k+2)), the moments of (e^x-1)/x at 0"""
    return tuple(Fraction(1, i + 1) for i in range(1, n - k + 2))


def bell_partial(n, k, args):
    """Partial Bell polynomial B_{n,k} evaluated at the rationals args"""
    if not n >= k >= 0:
        raise PreconditionError(f"need n >= k >= 0, got n={n}, k={k}")
    if n > BELL_ENUMERATION_BOUND:
        raise IndexRangeError(f"partition enumeration is bounded by n <= {BELL_ENUMERATION_BOUND}")
    args = tuple(Fraction(x) for x in args)
    if len(args) != n - k + 1:
        raise PreconditionError(f"B_{{{n},{k}}} takes {n - k + 1} arguments, got {len(args)}")

    total = Fraction(0)
    for multiplicities in multiplicity_vectors(n, k):
        term = Fraction(factorial(n))
        for part, count in multiplicities.items():
            term *= (args[part - 1] / factorial(part)) ** count / factorial(count)
        total += term
    return total


def bell_special_rhs(n, k, table=None):
    """n!/(n+k)! sum_{i=0}^{k} (-1)^{k-i} binom(n+k,k-i) S(n+i,i)"""
    if n < 0 or k < 0:
        raise PreconditionError(f"need n, k >= 0, got n={n}, k={k}")
    table = _second_kind_table(table, n + k)
    total = sum(sign(k - i) * binom_conventional(n + k, k - i) * table.value(n + i, i) for i in range(k + 1))
    return Fraction(factorial(n) * total, factorial(n + k))


def hk_series(k, order, table=None):
    """
    Truncated series of H_k(x) = ((e^x-1)/x)^k. With a table, every
    coefficient of x^m is checked against S(m+k,k)/(binom(m+k,k) m!).
    """
    if k < 1 or order < 0:
        raise PreconditionError(f"need k >= 1 and order >= 0, got k={k}, order={order}")
    series = FormalSeries.exp_minus_one_over_x(order) ** k
    if table is not None:
        for m in range(order + 1):
            if not table.covers(m + k):
                break
            expected = Fraction(table.value(m + k, k), binom_conventional(m + k, k) * factorial(m))
            if series.coefficient(m) != expected:
                raise ConsistencyError(
                    f"[x^{m}] H_{k} is {series.coefficient(m)}, table gives {expected}")
    return series


def faa_di_bruno_sides(k, m, table=None):
    """
    The m-th derivative of H_k at 0 evaluated four ways: through partial
    Bell polynomials, through the series, and through the two Stirling sums
    produced by the special Bell value.
    """
    table = _second_kind_table(table, 2 * m)
    top = min(m, k)

    bell_form = sum(
        (Fraction(factorial(k), factorial(k - ell)) * bell_partial(m, ell, reciprocal_arguments(m, ell))
         for ell in range(1, top + 1)),
        Fraction(0),
    )
    series_form = hk_series(k, m, table).derivative_at_zero(m)

    shifted_form = Fraction(0)
    diagonal_form = Fraction(0)
    for ell in range(1, top + 1):
        weight = Fraction(binom_conventional(k, ell), binom_conventional(m + ell, m))
        shifted_form += weight * sum(
            sign(i) * binom_conventional(m + ell, i) * table.value(m + ell - i, ell - i) for i in range(ell + 1))
        diagonal_form += sign(ell) * weight * sum(
            sign(i) * binom_conventional(m + ell, m + i) * table.value(m + i, i) for i in range(ell + 1))

    return {
        'bell_form': bell_form,
        'series_form': series_form,
        'shifted_form': shifted_form,
        'diagonal_form': diagonal_form,
    }


def faa_di_bruno_check(k, m, table=None):
    """Check that the four evaluations of H_k^{(m)}(0) coincide"""
    if k < 1 or not 1 <= m <= BELL_ENUMERATION_BOUND:
        raise PreconditionError(f"need k >= 1 and 1 <= m <= {BELL_ENUMERATION_BOUND}, got k={k}, m={m}")
    sides = faa_di_bruno_sides(k, m, table)
    passed = len(set(sides.values())) == 1
    if not passed:
        logger.warning(f"Faa di Bruno limit mismatch at k={k}, m={m}: {sides}")
    return single_check('faa-di-bruno', {'k': k, 'm': m}, passed, sides)
