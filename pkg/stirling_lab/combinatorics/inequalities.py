"""
Determinant, q-majorization product, log-convexity and Sibuya inequalities

Every quantity is built from r(l) = S(l+k,k)/binom(l+k,k), the value of
the l-th derivative of ((e^x-1)/x)^k at 0, and compared exactly.
"""
import logging
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from combinatorics.arith import RationalMatrix, binom_conventional, det_exact
from combinatorics.exceptions import PreconditionError, TupleValidationError
from combinatorics.report import VerificationReport, single_check
from combinatorics.tables import StirlingKind

logger = logging.getLogger(__name__)


def _require_second_kind(table, n):
    if table.kind != StirlingKind.SECOND or not table.covers(n):
        raise PreconditionError(f"need a second-kind table covering n={n}, got {table!r}")


def normalized(table, ell, k):
    """r(l) = S(l+k,k)/binom(l+k,k)"""
    _require_second_kind(table, ell + k)
    return Fraction(table.value(ell + k, k), binom_conventional(ell + k, k))


@dataclass(frozen=True)
class MajorizationInstance:
    """Weights q and non-increasing tuples a, b of non-negative integers"""
    q: tuple
    a: tuple
    b: tuple

    def __post_init__(self):
        if not len(self.q) == len(self.a) == len(self.b):
            raise TupleValidationError("q, a and b must have equal length")
        if not self.q:
            raise TupleValidationError("tuples must not be empty")
        for name, values in (('q', self.q), ('a', self.a), ('b', self.b)):
            if any(value < 0 for value in values):
                raise TupleValidationError(f"{name} has a negative entry: {values}")
        for name, values in (('a', self.a), ('b', self.b)):
            if any(left < right for left, right in zip(values, values[1:])):
                raise TupleValidationError(f"{name} is not non-increasing: {values}")

    def as_dict(self):
        return {'q': list(self.q), 'a': list(self.a), 'b': list(self.b)}


@dataclass(frozen=True)
class HankelSpec:
    """Indices a_1..a_m, the Stirling column k, and whether entries carry (-1)^{a_i+a_j}"""
    a: tuple
    k: int
    signed: bool = False

    def __post_init__(self):
        if len(self.a) < 1:
            raise TupleValidationError("Hankel order must be at least 1")
        if any(value < 0 for value in self.a):
            raise TupleValidationError(f"a has a negative entry: {self.a}")
        if self.k < 1:
            raise PreconditionError(f"k must be positive, got {self.k}")

    def as_dict(self):
        return {'a': list(self.a), 'k': self.k, 'signed': self.signed}


def check_q_majorization(inst):
    """a >=_q b: weighted prefix sums of a dominate those of b, with equal totals"""
    prefix_a = prefix_b = 0
    for q, a, b in zip(inst.q[:-1], inst.a[:-1], inst.b[:-1]):
        prefix_a += q * a
        prefix_b += q * b
        if prefix_a < prefix_b:
            return False
    total_a = sum(q * a for q, a in zip(inst.q, inst.a))
    total_b = sum(q * b for q, b in zip(inst.q, inst.b))
    return total_a == total_b


def hankel_matrix(spec, table):
    """Entry (i,j) = [(-1)^{a_i+a_j}] S(a_i+a_j+k,k)/binom(a_i+a_j+k,k)"""
    rows = []
    for ai in spec.a:
        row = []
        for aj in spec.a:
            value = normalized(table, ai + aj, spec.k)
            if spec.signed and (ai + aj) % 2:
                value = -value
            row.append(value)
        rows.append(tuple(row))
    return RationalMatrix(tuple(rows))


def check_det_nonneg(spec, table):
    determinant = det_exact(hankel_matrix(spec, table))
    return single_check('hankel-determinant', spec.as_dict(), determinant >= 0, {'det': determinant})


def product_sides(inst, k, table):
    left = Fraction(1)
    right = Fraction(1)
    for q, a, b in zip(inst.q, inst.a, inst.b):
        left *= normalized(table, a, k) ** q
        right *= normalized(table, b, k) ** q
    return left, right


def check_product_inequality(inst, k, table):
    """prod r(a_i)^{q_i} >= prod r(b_i)^{q_i} for a >=_q b"""
    if not check_q_majorization(inst):
        raise PreconditionError(f"a does not q-majorize b: {inst.as_dict()}")
    left, right = product_sides(inst, k, table)
    params = dict(inst.as_dict(), k=k)
    return single_check('product-inequality', params, left >= right, {'left': left, 'right': right})


def check_log_convexity(k, n_max, table):
    """
    r(l) r(l+2) >= r(l+1)^2 for 0 <= l <= n_max-2, checked directly, as the
    ratio chain r(l+1)/r(l) <= r(l+2)/r(l+1), and as the product inequality
    with q=(1,1), a=(l+2,l), b=(l+1,l+1). All three must agree.
    """
    if k < 1 or n_max < 2:
        raise PreconditionError(f"need k >= 1 and n_max >= 2, got k={k}, n_max={n_max}")
    report = VerificationReport(suite='log-convexity', config={'k': k, 'n_max': n_max}, keep_evidence=True)
    ratios = [normalized(table, ell, k) for ell in range(n_max + 1)]
    for ell in range(n_max - 1):
        direct = ratios[ell] * ratios[ell + 2] >= ratios[ell + 1] ** 2
        chained = ratios[ell + 1] / ratios[ell] <= ratios[ell + 2] / ratios[ell + 1]
        instance = MajorizationInstance(q=(1, 1), a=(ell + 2, ell), b=(ell + 1, ell + 1))
        left, right = product_sides(instance, k, table)
        via_product = left >= right
        report.record(
            direct and chained and via_product,
            {'k': k, 'ell': ell},
            {'r0': ratios[ell], 'r1': ratios[ell + 1], 'r2': ratios[ell + 2],
             'direct': direct, 'ratio_chain': chained, 'product_instance': via_product},
        )
    return report


def check_sibuya(n, k, table):
    """S(n+1,k-1) S(n+1,k+1) / S(n+1,k)^2 < (k-1)(n-k+1) / ((k+1)(n-k+2)), strictly"""
    if not 2 <= k <= n:
        raise PreconditionError(f"need 2 <= k <= n, got n={n}, k={k}")
    _require_second_kind(table, n + 1)
    ratio = Fraction(table.value(n + 1, k - 1) * table.value(n + 1, k + 1), table.value(n + 1, k) ** 2)
    bound = Fraction((k - 1) * (n - k + 1), (k + 1) * (n - k + 2))
    return single_check('sibuya', {'n': n, 'k': k}, ratio < bound, {'ratio': ratio, 'bound': bound})


def random_majorization_instance(rng, length, max_entry, max_weight, transfers=6):
    """
    Build a >=_q b constructively: draw a non-increasing b, then apply
    transfers that move weighted mass from a later index j to an earlier
    index i (q_i d_i = q_j d_j), keeping a non-increasing and in range.
    """
    q = tuple(rng.randint(0, max_weight) for _ in range(length))
    b = tuple(sorted((rng.randint(0, max_entry) for _ in range(length)), reverse=True))
    a = list(b)
    for _ in range(transfers):
        if length < 2:
            break
        i, j = sorted(rng.sample(range(length), 2))
        if q[i] == 0 and q[j] == 0:
            continue
        if q[i] == 0:
            # mass at i is free, the weighted totals cannot move
            up, down = 1, 0
        elif q[j] == 0:
            up, down = 0, 1
        else:
            g = math.gcd(q[i], q[j])
            up, down = q[j] // g, q[i] // g
        steps = rng.randint(1, 2)
        candidate = list(a)
        candidate[i] += up * steps
        candidate[j] -= down * steps
        if candidate[j] < 0 or candidate[i] > max_entry:
            continue
        if any(left < right for left, right in zip(candidate, candidate[1:])):
            continue
        a = candidate
    return MajorizationInstance(q=q, a=tuple(a), b=b)


def product_inequality_sweep(trials, seed, table, max_length=4, max_entry=8, max_weight=3, max_k=6):
    """Seeded sweep of constructively generated instances"""
    rng = random.Random(seed)
    report = VerificationReport(suite='product-inequality', config={
        'trials': trials, 'seed': seed, 'max_length': max_length,
        'max_entry': max_entry, 'max_weight': max_weight, 'max_k': max_k,
    })
    for trial in range(trials):
        length = rng.randint(1, max_length)
        instance = random_majorization_instance(rng, length, max_entry, max_weight)
        k = rng.randint(1, max_k)
        outcome = check_product_inequality(instance, k, table)
        report.record(outcome.passed, dict(instance.as_dict(), k=k, trial=trial), outcome.witness)
    return report
