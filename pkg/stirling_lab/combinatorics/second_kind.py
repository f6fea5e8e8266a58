"""
Stirling numbers of the second kind S(n,k)

The memoized triangular table is the canonical source. Every other engine
here is an independent verification engine: the explicit alternating sum,
the truncated exponential generating function, the derivative-limit
representation through ((e^x-1)/x)^k, and the diagonal recurrences.
"""
import logging
from fractions import Fraction

from combinatorics.arith import binom_conventional, factorial, sign
from combinatorics.exceptions import ConsistencyError, IndexRangeError, PreconditionError
from combinatorics.series import FormalSeries
from combinatorics.tables import StirlingKind

logger = logging.getLogger(__name__)


def _require_second_kind(table):
    if table.kind != StirlingKind.SECOND:
        raise PreconditionError(f"expected a second-kind table, got kind {int(table.kind)}")


def _require_triangle(n, k):
    if not 0 <= k <= n:
        raise PreconditionError(f"need 0 <= k <= n, got n={n}, k={k}")


def _as_integer(value, what):
    if value.denominator != 1:
        raise ConsistencyError(f"{what} evaluated to non-integral {value}")
    return value.numerator


def s2_explicit(n, k):
    """S(n,k) = (1/k!) sum_i (-1)^i binom(k,i) (k-i)^n"""
    _require_triangle(n, k)
    total = sum(sign(i) * binom_conventional(k, i) * (k - i) ** n for i in range(k + 1))
    quotient, remainder = divmod(total, factorial(k))
    if remainder:
        raise ConsistencyError(f"explicit sum for S({n},{k}) is not divisible by {k}!")
    return quotient


def s2_triangular(table, n, k):
    """S(n,k) from the memoized triangle S(n,k) = k S(n-1,k) + S(n-1,k-1)"""
    _require_second_kind(table)
    _require_triangle(n, k)
    if n > table.max_n:
        raise IndexRangeError(f"S({n},{k}) is beyond the table (max_n={table.max_n})")
    return table.value(n, k)


def s2_diagonal_full(n, k, table):
    """
    Double-sum diagonal recurrence:

        binom(n,k) sum_{l=1}^{n-k} (-1)^l binom(k,l)/binom(n-k+l,n-k)
                   sum_{i=0}^{l} (-1)^i binom(n-k+l,l-i) S(n-k+i,i)

    Inner values lie on the diagonal n-k and are read from the table. For
    n >= 2k the sum contains S(n,k) itself with coefficient 1.
    """
    _require_second_kind(table)
    if not n > k >= 0:
        raise PreconditionError(f"diagonal recurrence needs n > k >= 0, got n={n}, k={k}")
    offset = n - k
    total = Fraction(0)
    for ell in range(1, min(offset, k) + 1):
        weight = Fraction(sign(ell) * binom_conventional(k, ell), binom_conventional(offset + ell, offset))
        inner = sum(
            sign(i) * binom_conventional(offset + ell, ell - i) * table.value(offset + i, i)
            for i in range(ell + 1)
        )
        total += weight * inner
    return _as_integer(binom_conventional(n, k) * total, f"diagonal sum for S({n},{k})")


def s2_diagonal_interchanged(n, k, table):
    """Single-sum form obtained by interchanging the sums of s2_diagonal_full"""
    _require_second_kind(table)
    if not n > k >= 0:
        raise PreconditionError(f"diagonal recurrence needs n > k >= 0, got n={n}, k={k}")
    offset = n - k
    total = 0
    for i in range(1, min(offset, k) + 1):
        inner = sum(sign(ell) * binom_conventional(k - i, k - ell) for ell in range(i, offset + 1))
        total += sign(i) * binom_conventional(n, k - i) * inner * table.value(offset + i, i)
    return total


def _inner_alternating_sum(i, upper):
    """sum_{l=0}^{upper} (-1)^l binom(i,l), the uncollapsed inner sum"""
    return sum(sign(ell) * binom_conventional(i, ell) for ell in range(upper + 1))


def s2_diagonal_simplified_terms(n, k, table):
    """
    Terms (i, value) of the simplified diagonal recurrence

        (-1)^n sum_{i=max(0,2k-n)}^{k-1} (-1)^i binom(n,i) binom(i-1,2k-n-1) S(n-i,k-i)

    For n > 2k the collapsed binomial would need binom(-1, q) with q <= -2,
    so the inner sum is kept in its uncollapsed form, which reduces to the
    i = 0 term.
    """
    _require_second_kind(table)
    if not n > k >= 1:
        raise PreconditionError(f"simplified diagonal recurrence needs n > k >= 1, got n={n}, k={k}")
    terms = []
    if n <= 2 * k:
        for i in range(2 * k - n, k):
            value = (sign(n + i) * binom_conventional(n, i) * binom_conventional(i - 1, 2 * k - n - 1)
                     * table.value(n - i, k - i))
            terms.append((i, value))
    else:
        for i in range(k):
            value = binom_conventional(n, i) * _inner_alternating_sum(i, i - (2 * k - n)) * table.value(n - i, k - i)
            terms.append((i, value))
    return terms


def s2_diagonal_simplified(n, k, table, checked=False):
    """Sum of s2_diagonal_simplified_terms; checked mode compares with the triangle"""
    value = sum(term for _, term in s2_diagonal_simplified_terms(n, k, table))
    if checked and value != table.value(n, k):
        raise ConsistencyError(
            f"simplified diagonal recurrence gives {value} for S({n},{k}), table has {table.value(n, k)}")
    return value


def s2_egf(k, n_max):
    """[S(n,k)] for n = k..n_max read off n! [x^n] (e^x-1)^k / k!"""
    if k < 0 or n_max < k:
        raise PreconditionError(f"need 0 <= k <= n_max, got k={k}, n_max={n_max}")
    series = (FormalSeries.exp_minus_one(n_max) ** k).scale(Fraction(1, factorial(k)))
    for n in range(k):
        if series.coefficient(n):
            raise ConsistencyError(f"coefficient of x^{n} in (e^x-1)^{k}/{k}! is {series.coefficient(n)}")
    return [_as_integer(series.derivative_at_zero(n), f"EGF value S({n},{k})") for n in range(k, n_max + 1)]


def s2_derivative_limit(k, n_max):
    """
    [S(n,k)] for n = k..n_max from S(n,k) = binom(n,k) * H_k^{(n-k)}(0),
    H_k(x) = ((e^x-1)/x)^k.
    """
    if k < 0 or n_max < k:
        raise PreconditionError(f"need 0 <= k <= n_max, got k={k}, n_max={n_max}")
    if k == 0:
        return [1] + [0] * n_max
    series = FormalSeries.exp_minus_one_over_x(n_max - k) ** k
    return [
        _as_integer(binom_conventional(n, k) * series.derivative_at_zero(n - k), f"derivative limit S({n},{k})")
        for n in range(k, n_max + 1)
    ]


def bell_numbers(n_max):
    """Bell numbers B_0..B_{n_max} from B_{n+1} = sum_i binom(n,i) B_i"""
    bells = [1]
    for n in range(n_max):
        bells.append(sum(binom_conventional(n, i) * bells[i] for i in range(n + 1)))
    return bells


def bell_number_rowsum(table, n):
    """Row sum of the second-kind triangle, checked against the Bell recurrence"""
    _require_second_kind(table)
    if n > table.max_n:
        raise IndexRangeError(f"row {n} is beyond the table (max_n={table.max_n})")
    total = sum(table.row(n))
    expected = bell_numbers(n)[n]
    if total != expected:
        raise ConsistencyError(f"row {n} sums to {total}, Bell recurrence gives {expected}")
    return total
