"""
Signed Stirling numbers of the first kind s(n,k)
[ln(1+x)]^k / k! = sum_n s(n,k) x^n / n!
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from combinatorics.arith import (
    BINOMIAL_CONVENTIONS, STRICT_EQ5, binom_conventional, binomial_for, factorial, sign,
)
from combinatorics.exceptions import (
    BinomialDomainError, ConsistencyError, IndexRangeError, PreconditionError,
)
from combinatorics.series import FormalSeries
from combinatorics.tables import StirlingKind

logger = logging.getLogger(__name__)


def _require_first_kind(table):
    if table.kind != StirlingKind.FIRST:
        raise PreconditionError(f"expected a first-kind table, got kind {int(table.kind)}")


def s1_triangular(table, n, k):
    """s(n,k) from s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)"""
    _require_first_kind(table)
    if not 0 <= k <= n:
        raise PreconditionError(f"need 0 <= k <= n, got n={n}, k={k}")
    if n > table.max_n:
        raise IndexRangeError(f"s({n},{k}) is beyond the table (max_n={table.max_n})")
    return table.value(n, k)


def s1_egf(k, n_max):
    """[s(n,k)] for n = k..n_max read off n! [x^n] [ln(1+x)]^k / k!"""
    if k < 0 or n_max < k:
        raise PreconditionError(f"need 0 <= k <= n_max, got k={k}, n_max={n_max}")
    series = (FormalSeries.log_one_plus(n_max) ** k).scale(Fraction(1, factorial(k)))
    values = []
    for n in range(n_max + 1):
        coefficient = series.coefficient(n)
        if n < k:
            if coefficient:
                raise ConsistencyError(f"coefficient of x^{n} in [ln(1+x)]^{k}/{k}! is {coefficient}")
            continue
        scaled = factorial(n) * coefficient
        if scaled.denominator != 1:
            raise ConsistencyError(f"EGF value s({n},{k}) is non-integral: {scaled}")
        values.append(scaled.numerator)
    return values


def s1_diagonal_double(n, k, table):
    """
    Double-sum diagonal relation

        s(n,k) = sum_{m=1}^{n} sum_{l=k-m}^{k-1} (-1)^{k+m-l} binom(n,l) binom(l,k-m) s(n-l,k-l)

    evaluated verbatim. The l = 0, m = k term is s(n,k) itself, so the result
    is compared with the triangle instead of being used on its own.
    """
    _require_first_kind(table)
    if not n >= k >= 1:
        raise PreconditionError(f"need n >= k >= 1, got n={n}, k={k}")
    total = 0
    for m in range(1, n + 1):
        for ell in range(k - m, k):
            # binom(n, l) = 0 for l < 0
            if ell < 0:
                continue
            total += (sign(k + m - ell) * binom_conventional(n, ell) * binom_conventional(ell, k - m)
                      * table.value(n - ell, k - ell))
    expected = table.value(n, k)
    if total != expected:
        raise ConsistencyError(f"double diagonal sum gives {total} for s({n},{k}), table has {expected}")
    return total


@dataclass(frozen=True)
class CompactDiagonalReport:
    """Outcome of evaluating the compact first-kind diagonal form under one convention"""
    n: int
    k: int
    convention: str
    value: int
    expected: int
    undefined_binomials: tuple = field(default=())

    @property
    def matches(self):
        return self.value == self.expected

    def as_dict(self):
        return {
            'n': self.n,
            'k': self.k,
            'convention': self.convention,
            'value': str(self.value),
            'expected': str(self.expected),
            'matches': self.matches,
            'undefined_binomials': [list(pair) for pair in self.undefined_binomials],
        }


def s1_diagonal_compact(n, k, table, convention=STRICT_EQ5):
    """
    Evaluate (-1)^{n-k} sum_{l=0}^{k-1} (-1)^l binom(n,l) binom(l-1,k-n-1) s(n-l,k-l)
    under a binomial convention and compare with the triangle.

    For n > k the lower index k-n-1 is at most -2, which the strict
    conventions leave undefined at l = 0; strict mode counts such a
    binomial as 0 and lists it in the report.
    """
    _require_first_kind(table)
    if convention not in BINOMIAL_CONVENTIONS:
        raise PreconditionError(f"unknown binomial convention {convention!r}")
    if not n >= k >= 1:
        raise PreconditionError(f"need n >= k >= 1, got n={n}, k={k}")

    binom = binomial_for(convention)
    undefined = []
    total = 0
    for ell in range(k):
        try:
            collapsed = binom(ell - 1, k - n - 1)
        except BinomialDomainError:
            if convention != STRICT_EQ5:
                raise
            undefined.append((ell - 1, k - n - 1))
            collapsed = 0
        total += sign(ell) * binom_conventional(n, ell) * collapsed * table.value(n - ell, k - ell)
    value = sign(n - k) * total

    report = CompactDiagonalReport(n, k, convention, value, table.value(n, k), tuple(undefined))
    if not report.matches:
        logger.debug(f"Compact diagonal form under {convention} gives {value} for s({n},{k}), "
                     f"table has {report.expected}")
    return report
