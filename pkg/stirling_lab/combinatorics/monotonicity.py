"""
Nested log-concavity defects of Stirling numbers of the second kind

    frak_S_1(n,k)     = S(n,k-1)^2 - S(n,k-2) S(n,k)
    frak_S_{l+1}(n,k) = frak_S_l(n,k-1)^2 - frak_S_l(n,k-2) frak_S_l(n,k)
    script_S_l(n,k)   = frak_S_{l+1}(n,k) / frak_S_l(n,k)

S(n,j) is taken as 0 for j < 0, which makes every level total on n >= k >= 0.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from combinatorics.exceptions import IndexRangeError, PreconditionError, ZeroDenominatorError
from combinatorics.report import VerificationReport, render, single_check
from combinatorics.tables import StirlingKind

logger = logging.getLogger(__name__)

CLAIM_IDS = (1, 2, 3, 4, 5, 6)
VERIFIED = 'verified-in-range'
COUNTEREXAMPLE = 'counterexample'


class FrakS:
    """Memoized evaluator of frak_S_l(n,k) over a read-only second-kind table"""

    def __init__(self, table):
        if table.kind != StirlingKind.SECOND:
            raise PreconditionError("nested differences need a second-kind table")
        self.table = table
        self._cache = {}

    def stirling(self, n, j):
        if j < 0:
            return 0
        return self.table.value(n, j)

    def __call__(self, ell, n, k):
        if ell < 1:
            raise PreconditionError(f"level must be positive, got {ell}")
        if n > self.table.max_n:
            raise IndexRangeError(f"row {n} is beyond the table (max_n={self.table.max_n})")
        if k < 0:
            return 0
        key = (ell, n, k)
        if key not in self._cache:
            if ell == 1:
                value = self.stirling(n, k - 1) ** 2 - self.stirling(n, k - 2) * self.stirling(n, k)
            else:
                value = self(ell - 1, n, k - 1) ** 2 - self(ell - 1, n, k - 2) * self(ell - 1, n, k)
            self._cache[key] = value
        return self._cache[key]


def frak_s(ell, n, k, table):
    if not n >= k >= 0:
        raise PreconditionError(f"need n >= k >= 0, got n={n}, k={k}")
    return FrakS(table)(ell, n, k)


def _script(frak, ell, n, k):
    denominator = frak(ell, n, k)
    if denominator == 0:
        raise ZeroDenominatorError(ell, n, k)
    return Fraction(frak(ell + 1, n, k), denominator)


def script_s(ell, n, k, table):
    """Ratio frak_S_{l+1}(n,k) / frak_S_l(n,k); a zero denominator raises ZeroDenominatorError"""
    if not n >= k >= ell + 2:
        raise PreconditionError(f"need n >= k >= ell + 2, got ell={ell}, n={n}, k={k}")
    return _script(FrakS(table), ell, n, k)


def check_theorem3(n, k, m_max, table):
    """frak_S_1(n+m,k+m) < frak_S_1(n+m+1,k+m+1) for 0 <= m < m_max"""
    if not n >= k >= 2:
        raise PreconditionError(f"need n >= k >= 2, got n={n}, k={k}")
    if n + m_max > table.max_n:
        raise IndexRangeError(f"table must cover n + m_max = {n + m_max}")
    frak = FrakS(table)
    report = VerificationReport(suite='theorem3', config={'n': n, 'k': k, 'm_max': m_max}, keep_evidence=True)
    for m in range(m_max):
        current = frak(1, n + m, k + m)
        following = frak(1, n + m + 1, k + m + 1)
        report.record(current < following, {'n': n, 'k': k, 'm': m}, {'current': current, 'next': following})
    return report


def check_suffice_inequality(n, k, table):
    """
    [S(n+1,k-1) S(n+1,k+1) - S(n,k-1) S(n,k)] / S(n+1,k)^2
        <= (n+2)(n-k+1) / ((n+1)(n-k+2))
    """
    if not 2 <= k <= n:
        raise PreconditionError(f"need 2 <= k <= n, got n={n}, k={k}")
    if n + 1 > table.max_n:
        raise IndexRangeError(f"table must cover n + 1 = {n + 1}")
    S = table.value
    left = Fraction(S(n + 1, k - 1) * S(n + 1, k + 1) - S(n, k - 1) * S(n, k), S(n + 1, k) ** 2)
    bound = Fraction((n + 2) * (n - k + 1), (n + 1) * (n - k + 2))
    return single_check('suffice-inequality', {'n': n, 'k': k}, left <= bound, {'left': left, 'bound': bound})


@dataclass
class ClaimResult:
    """Outcome of sweeping one conjecture claim over a finite range"""
    claim: int
    range: dict
    status: str = VERIFIED
    checks: int = 0
    violations: int = 0
    witness: dict = None
    findings: list = field(default_factory=list)
    zero_denominators: list = field(default_factory=list)

    def as_dict(self):
        return {
            'claim': self.claim,
            'range': self.range,
            'status': self.status,
            'checks': self.checks,
            'violations': self.violations,
            'witness': self.witness,
            'findings': self.findings,
            'zero_denominators': self.zero_denominators,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(**dict(data, findings=list(data['findings']), zero_denominators=list(data['zero_denominators'])))


def _claim_checks(claim, frak, n_max, k_max, ell_max, ell_min=1):
    """
    Yield (key, description, left, right, relation) for one claim in
    lexicographic (l, n, k, m) order. relation is '<' (strict increase
    from left to right) or '>=' (log-concavity: left^2 >= product).
    """
    if claim == 1:
        for ell in range(ell_min, ell_max + 1):
            for n in range(ell + 3, n_max + 1):
                for k in range(ell + 2, min(n, k_max)):
                    centre = frak(ell, n, k)
                    yield ((ell, n, k, 0), 'log-concave in k',
                           centre * centre, frak(ell, n, k - 1) * frak(ell, n, k + 1), '>=')
    elif claim == 2:
        for ell in range(ell_min, ell_max):
            for n in range(3, n_max + 1):
                for k in range(max(3, ell + 2), min(n, k_max) + 1):
                    yield ((ell, n, k, 0), 'increasing in l', frak(ell, n, k), frak(ell + 1, n, k), '<')
    elif claim in (3, 5):
        first_k = 1 if claim == 3 else 2
        for ell in range(ell_min, ell_max + 1):
            start_k = ell + first_k
            # one diagonal per offset d = n - k, started at its smallest k
            for offset in range(0, n_max - start_k + 1):
                n0 = start_k + offset
                for m in range(0, min(n_max - n0, k_max - start_k)):
                    yield ((ell, n0, start_k, m), 'increasing in m',
                           (ell, n0 + m, start_k + m), (ell, n0 + m + 1, start_k + m + 1), '<')
    elif claim in (4, 6):
        first_k = 1 if claim == 4 else 2
        for ell in range(ell_min, ell_max + 1):
            for n in range(ell + first_k, n_max):
                for k in range(ell + first_k, min(n, k_max) + 1):
                    yield ((ell, n, k, 0), 'increasing in n', (ell, n, k), (ell, n + 1, k), '<')
    else:
        raise PreconditionError(f"unknown conjecture claim {claim}")


def _resolve(claim, frak, point):
    """Turn an (l, n, k) point into frak_S (claims 3, 4) or script_S (claims 5, 6)"""
    if not isinstance(point, tuple):
        return point
    ell, n, k = point
    if claim in (3, 4):
        return frak(ell, n, k)
    return _script(frak, ell, n, k)


def sweep_claim(claim, n_max, k_max, ell_max, table, max_findings=50, ell_min=1):
    """
    Check one claim over its index domain intersected with the range. The
    result is a finding either way; nothing here asserts the claim.
    """
    if n_max > table.max_n:
        raise IndexRangeError(f"table must cover n_max = {n_max}")
    frak = FrakS(table)
    result = ClaimResult(claim=claim, range={
        'n_max': n_max, 'k_max': k_max, 'ell_min': ell_min, 'ell_max': ell_max})
    for key, description, left, right, relation in _claim_checks(claim, frak, n_max, k_max, ell_max, ell_min):
        params = dict(zip(('ell', 'n', 'k', 'm'), key))
        try:
            left_value = _resolve(claim, frak, left)
            right_value = _resolve(claim, frak, right)
        except ZeroDenominatorError as exc:
            result.zero_denominators.append(dict(params, at={'ell': exc.ell, 'n': exc.n, 'k': exc.k}))
            continue
        result.checks += 1
        holds = left_value >= right_value if relation == '>=' else left_value < right_value
        if holds:
            continue
        result.violations += 1
        finding = {'params': params, 'property': description,
                   'values': render({'left': left_value, 'right': right_value})}
        if result.witness is None:
            result.status = COUNTEREXAMPLE
            result.witness = finding
        if len(result.findings) < max_findings:
            result.findings.append(finding)
    logger.info(f"Claim {claim}: {result.status}, {result.checks} checks, {result.violations} violations")
    return result


def sweep_conjecture(claims, n_max, k_max, ell_max, table, max_findings=50):
    """Sweep the selected claims in claim-id order"""
    unknown = sorted(set(claims) - set(CLAIM_IDS))
    if unknown:
        raise PreconditionError(f"unknown conjecture claims {unknown}")
    return [sweep_claim(claim, n_max, k_max, ell_max, table, max_findings) for claim in sorted(set(claims))]


def level_slices(claim, ell_max):
    """(ell_min, ell_max) pairs splitting a sweep into one part per level"""
    if claim == 2:
        # a level-l check reaches level l + 1
        slices = [(ell, ell + 1) for ell in range(1, ell_max)]
    else:
        slices = [(ell, ell) for ell in range(1, ell_max + 1)]
    return slices or [(1, ell_max)]


def merge_claim_results(parts, max_findings=50):
    """
    Merge per-level partial sweeps of one claim. Parts must be in increasing
    level order, which keeps the merged witness lexicographically first.
    """
    if not parts:
        raise PreconditionError("nothing to merge")
    claims = {part.claim for part in parts}
    if len(claims) != 1:
        raise PreconditionError(f"cannot merge results of different claims {sorted(claims)}")
    merged = ClaimResult(claim=parts[0].claim, range=dict(parts[0].range, ell_max=parts[-1].range['ell_max']))
    for part in parts:
        merged.checks += part.checks
        merged.violations += part.violations
        if merged.witness is None and part.witness is not None:
            merged.witness = part.witness
            merged.status = COUNTEREXAMPLE
        merged.findings.extend(part.findings)
        merged.zero_denominators.extend(part.zero_denominators)
    del merged.findings[max_findings:]
    return merged


def recheck_finding(claim, finding, table):
    """Re-evaluate a reported violation from the table; True when it still violates"""
    params = finding['params']
    ell, n, k, m = params['ell'], params['n'], params['k'], params['m']
    frak = FrakS(table)
    if claim == 1:
        return frak(ell, n, k) ** 2 < frak(ell, n, k - 1) * frak(ell, n, k + 1)
    if claim == 2:
        return not frak(ell, n, k) < frak(ell + 1, n, k)
    if claim in (3, 5):
        left, right = (ell, n + m, k + m), (ell, n + m + 1, k + m + 1)
    else:
        left, right = (ell, n, k), (ell, n + 1, k)
    return not _resolve(claim, frak, left) < _resolve(claim, frak, right)
