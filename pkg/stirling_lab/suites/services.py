"""
Suite Services
Runs the named verification suites over exact Stirling tables and turns
their outcomes into VerificationReports
"""
import logging
import time
from itertools import combinations_with_replacement

from combinatorics.arith import BINOMIAL_CONVENTIONS
from combinatorics.bell import bell_partial, bell_special_rhs, faa_di_bruno_check, reciprocal_arguments
from combinatorics.exceptions import PreconditionError, StirlingLabError
from combinatorics.first_kind import s1_diagonal_compact, s1_diagonal_double, s1_egf, s1_triangular
from combinatorics.inequalities import (
    HankelSpec, check_det_nonneg, check_log_convexity, check_sibuya, product_inequality_sweep,
)
from combinatorics.monotonicity import check_suffice_inequality, check_theorem3, sweep_claim
from combinatorics.oracles import PERMUTATION_BOUND, SET_PARTITION_BOUND, s1_oracle, s2_oracle
from combinatorics.report import VerificationReport
from combinatorics.second_kind import (
    bell_number_rowsum, s2_derivative_limit, s2_diagonal_full, s2_diagonal_interchanged, s2_diagonal_simplified,
    s2_egf, s2_explicit, s2_triangular,
)
from combinatorics.tables import StirlingKind
from .utils import get_table

logger = logging.getLogger(__name__)

BELL_IDENTITY_MAX_N = 20
FAA_DI_BRUNO_MAX_M = 15
FAA_DI_BRUNO_MAX_K = 10
COMPACT_FORM_MAX_N = 8
PRODUCT_TABLE_N = 14
HANKEL_MAX_ENTRY = 6


def _check(report, params, compute):
    """Record one instance; library errors become failures carrying the message"""
    try:
        passed, witness = compute()
    except StirlingLabError as e:
        logger.error(f"Error in {report.suite} at {params}: {str(e)}")
        return report.fail(params, str(e))
    if not passed:
        logger.warning(f"{report.suite} failed at {params}: {witness}")
    return report.record(passed, params, witness)


def _agree(values):
    return len(set(values.values())) == 1, values


class _Columns:
    """Lazily computed Stirling columns keyed by k"""

    def __init__(self, engine, n_max):
        self.engine = engine
        self.n_max = n_max
        self._columns = {}

    def value(self, n, k):
        if k not in self._columns:
            self._columns[k] = self.engine(k, self.n_max)
        return self._columns[k][n - k]


class RecurrenceSuiteService:
    """Cross-engine, oracle, Bell-identity and first-kind diagonal suites"""

    @staticmethod
    def cross_engine(max_n, cache_dir=None):
        """Every second-kind engine against the triangle for 0 <= k <= n <= max_n"""
        table = get_table(StirlingKind.SECOND, max_n, cache_dir)
        egf = _Columns(s2_egf, max_n)
        limit = _Columns(s2_derivative_limit, max_n)
        report = VerificationReport(suite='cross-engine', config={'max_n': max_n})

        for n in range(max_n + 1):
            for k in range(n + 1):
                def compute(n=n, k=k):
                    values = {
                        'triangular': s2_triangular(table, n, k),
                        'explicit': s2_explicit(n, k),
                        'egf': egf.value(n, k),
                        'derivative_limit': limit.value(n, k),
                    }
                    if k < n:
                        values['diagonal_full'] = s2_diagonal_full(n, k, table)
                        values['diagonal_interchanged'] = s2_diagonal_interchanged(n, k, table)
                    if 1 <= k < n:
                        values['diagonal_simplified'] = s2_diagonal_simplified(n, k, table)
                    return _agree(values)

                _check(report, {'n': n, 'k': k}, compute)
        return report

    @staticmethod
    def enumeration_oracle(max_n, cache_dir=None):
        """Engines against set-partition and permutation-cycle counts inside the enumeration bounds"""
        second_top = min(max_n, SET_PARTITION_BOUND)
        first_top = min(max_n, PERMUTATION_BOUND)
        second = get_table(StirlingKind.SECOND, second_top, cache_dir)
        first = get_table(StirlingKind.FIRST, first_top, cache_dir)
        first_egf = _Columns(s1_egf, first_top)
        report = VerificationReport(suite='enumeration-oracle', config={
            'max_n': max_n, 'set_partition_max_n': second_top, 'permutation_max_n': first_top,
        })

        for n in range(second_top + 1):
            for k in range(n + 1):
                def compute(n=n, k=k):
                    values = {
                        'oracle': s2_oracle(n, k),
                        'triangular': s2_triangular(second, n, k),
                        'explicit': s2_explicit(n, k),
                    }
                    if k < n:
                        values['diagonal_full'] = s2_diagonal_full(n, k, second)
                        values['diagonal_interchanged'] = s2_diagonal_interchanged(n, k, second)
                    if 1 <= k < n:
                        values['diagonal_simplified'] = s2_diagonal_simplified(n, k, second)
                    return _agree(values)

                _check(report, {'kind': 2, 'n': n, 'k': k}, compute)

        for n in range(first_top + 1):
            for k in range(n + 1):
                def compute(n=n, k=k):
                    values = {
                        'oracle': s1_oracle(n, k),
                        'triangular': s1_triangular(first, n, k),
                        'egf': first_egf.value(n, k),
                    }
                    if k >= 1:
                        values['diagonal_double'] = s1_diagonal_double(n, k, first)
                    return _agree(values)

                _check(report, {'kind': 1, 'n': n, 'k': k}, compute)
        return report

    @staticmethod
    def bell_identity(max_n, cache_dir=None):
        """Special Bell values, Bell row sums and the derivative-limit evaluations"""
        bell_top = min(max_n, BELL_IDENTITY_MAX_N)
        m_top = min(max_n, FAA_DI_BRUNO_MAX_M)
        k_top = min(max_n, FAA_DI_BRUNO_MAX_K)
        table = get_table(StirlingKind.SECOND, max(max_n, 2 * m_top, 2 * bell_top), cache_dir)
        report = VerificationReport(suite='bell-identity', config={
            'max_n': max_n, 'bell_max_n': bell_top, 'faa_di_bruno_max_m': m_top, 'faa_di_bruno_max_k': k_top,
        })

        for n in range(bell_top + 1):
            for k in range(n + 1):
                def compute(n=n, k=k):
                    return _agree({
                        'bell_partial': bell_partial(n, k, reciprocal_arguments(n, k)),
                        'stirling_sum': bell_special_rhs(n, k, table),
                    })

                _check(report, {'identity': 'special-bell-value', 'n': n, 'k': k}, compute)

        for n in range(max_n + 1):
            _check(report, {'identity': 'bell-row-sum', 'n': n},
                   lambda n=n: (True, {'bell': bell_number_rowsum(table, n)}))

        for k in range(1, k_top + 1):
            for m in range(1, m_top + 1):
                def compute(k=k, m=m):
                    outcome = faa_di_bruno_check(k, m, table)
                    return outcome.passed, outcome.witness

                _check(report, {'identity': 'faa-di-bruno', 'k': k, 'm': m}, compute)
        return report

    @staticmethod
    def first_kind_diagonal(max_n, cache_dir=None):
        """First-kind EGF and the double diagonal sum against the signed triangle"""
        table = get_table(StirlingKind.FIRST, max_n, cache_dir)
        egf = _Columns(s1_egf, max_n)
        report = VerificationReport(suite='first-kind-diagonal', config={'max_n': max_n})

        for n in range(max_n + 1):
            for k in range(n + 1):
                def compute(n=n, k=k):
                    values = {'triangular': s1_triangular(table, n, k), 'egf': egf.value(n, k)}
                    if k >= 1:
                        values['diagonal_double'] = s1_diagonal_double(n, k, table)
                    return _agree(values)

                _check(report, {'n': n, 'k': k}, compute)
        return report

    @staticmethod
    def compact_form_reports(max_n, cache_dir=None):
        """Compact first-kind diagonal form under every convention; reported, never asserted"""
        top = min(max_n, COMPACT_FORM_MAX_N)
        table = get_table(StirlingKind.FIRST, top, cache_dir)
        reports = []
        for n in range(1, top + 1):
            for k in range(1, n + 1):
                for convention in BINOMIAL_CONVENTIONS:
                    try:
                        reports.append(s1_diagonal_compact(n, k, table, convention).as_dict())
                    except StirlingLabError as e:
                        logger.error(f"Error evaluating compact form at n={n}, k={k}, {convention}: {str(e)}")
        return reports


class InequalitySuiteService:
    """Determinant, product, log-convexity and Sibuya suites"""

    @staticmethod
    def hankel_determinants(det_order, max_k, max_entry=HANKEL_MAX_ENTRY, cache_dir=None):
        """Signed and unsigned determinants are each non-negative, and they are equal"""
        table = get_table(StirlingKind.SECOND, 2 * max_entry + max_k, cache_dir)
        report = VerificationReport(suite='hankel-determinant', config={
            'det_order': det_order, 'max_k': max_k, 'max_entry': max_entry,
        })
        for k in range(1, max_k + 1):
            for order in range(1, det_order + 1):
                # permuting a leaves the determinant unchanged
                for a in combinations_with_replacement(range(max_entry + 1), order):
                    def compute(a=a, k=k):
                        unsigned = check_det_nonneg(HankelSpec(a=a, k=k), table)
                        signed = check_det_nonneg(HankelSpec(a=a, k=k, signed=True), table)
                        witness = dict(unsigned.witness, signed_det=signed.witness['det'])
                        agree = signed.witness['det'] == unsigned.witness['det']
                        return unsigned.passed and signed.passed and agree, witness

                    _check(report, {'a': list(a), 'k': k}, compute)
        return report

    @staticmethod
    def product_inequality(trials, seed, cache_dir=None):
        table = get_table(StirlingKind.SECOND, PRODUCT_TABLE_N, cache_dir)
        try:
            return product_inequality_sweep(trials, seed, table)
        except StirlingLabError as e:
            logger.error(f"Error in product inequality sweep (seed={seed}): {str(e)}")
            report = VerificationReport(suite='product-inequality', config={'trials': trials, 'seed': seed})
            report.fail({'seed': seed}, str(e))
            return report

    @staticmethod
    def log_convexity(max_n, max_k, cache_dir=None):
        """r(l) log-convex in l for 1 <= k <= max_k, 0 <= l <= max_n"""
        table = get_table(StirlingKind.SECOND, max_n + max_k, cache_dir)
        report = VerificationReport(suite='log-convexity', config={'max_n': max_n, 'max_k': max_k})
        if max_n < 2:
            return report
        for k in range(1, max_k + 1):
            try:
                report.merge(check_log_convexity(k, max_n, table))
            except StirlingLabError as e:
                logger.error(f"Error checking log-convexity for k={k}: {str(e)}")
                report.fail({'k': k}, str(e))
        return report

    @staticmethod
    def sibuya(max_n, cache_dir=None):
        table = get_table(StirlingKind.SECOND, max_n + 1, cache_dir)
        report = VerificationReport(suite='sibuya', config={'max_n': max_n})
        for n in range(2, max_n + 1):
            for k in range(2, n + 1):
                def compute(n=n, k=k):
                    outcome = check_sibuya(n, k, table)
                    return outcome.passed, outcome.witness

                _check(report, {'n': n, 'k': k}, compute)
        return report


class ConjectureService:
    """Asserted monotonicity suites and the conjecture sweep"""

    @staticmethod
    def theorem3(max_n, cache_dir=None):
        """Strict increase of frak_S_1 along every diagonal inside 2 <= k <= n <= max_n"""
        table = get_table(StirlingKind.SECOND, max_n, cache_dir)
        report = VerificationReport(suite='theorem3', config={'max_n': max_n})
        for n in range(2, max_n + 1):
            for k in range(2, n + 1):
                try:
                    report.merge(check_theorem3(n, k, max_n - n, table))
                except StirlingLabError as e:
                    logger.error(f"Error checking the diagonal from ({n}, {k}): {str(e)}")
                    report.fail({'n': n, 'k': k}, str(e))
        return report

    @staticmethod
    def suffice_inequality(max_n, cache_dir=None):
        table = get_table(StirlingKind.SECOND, max_n, cache_dir)
        report = VerificationReport(suite='suffice-inequality', config={'max_n': max_n})
        for n in range(2, max_n):
            for k in range(2, n + 1):
                def compute(n=n, k=k):
                    outcome = check_suffice_inequality(n, k, table)
                    return outcome.passed, outcome.witness

                _check(report, {'n': n, 'k': k}, compute)
        return report

    @staticmethod
    def claim_part(claim, max_n, max_k, ell_min, ell_max, max_findings, cache_dir=None):
        """One level slice of one claim; merged by the caller in level order"""
        table = get_table(StirlingKind.SECOND, max_n, cache_dir)
        return sweep_claim(claim, max_n, max_k, ell_max, table, max_findings=max_findings, ell_min=ell_min)


SUITES = {
    'cross-engine': RecurrenceSuiteService.cross_engine,
    'enumeration-oracle': RecurrenceSuiteService.enumeration_oracle,
    'bell-identity': RecurrenceSuiteService.bell_identity,
    'first-kind-diagonal': RecurrenceSuiteService.first_kind_diagonal,
    'hankel-determinant': InequalitySuiteService.hankel_determinants,
    'product-inequality': InequalitySuiteService.product_inequality,
    'log-convexity': InequalitySuiteService.log_convexity,
    'sibuya': InequalitySuiteService.sibuya,
    'theorem3': ConjectureService.theorem3,
    'suffice-inequality': ConjectureService.suffice_inequality,
    'conjecture-claim': ConjectureService.claim_part,
}


class SuiteRunner:
    """Entry point shared by the celery task and in-process runs"""

    @staticmethod
    def run(name, params, timing=False):
        """Run one named suite and return its JSON-ready dict"""
        suite = SUITES.get(name)
        if suite is None:
            raise PreconditionError(f"unknown suite {name!r}")
        started = time.perf_counter()
        result = suite(**params)
        elapsed_ms = int(round((time.perf_counter() - started) * 1000))
        if isinstance(result, VerificationReport):
            if timing:
                result.wall_time_ms = elapsed_ms
            logger.info(f"Suite {name}: {result.passes}/{result.instances} passed in {elapsed_ms} ms")
        return result.as_dict()
