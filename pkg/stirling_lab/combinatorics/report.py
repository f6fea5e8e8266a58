"""
Structured pass/fail records shared by every checker and suite
"""
from dataclasses import dataclass, field
from fractions import Fraction


def render(value):
    """Render exact values as decimal strings (recursively for containers)"""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, dict):
        return {key: render(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [render(item) for item in value]
    return value


@dataclass
class VerificationReport:
    """
    Outcome of one suite: instance count, pass count and one failure entry
    (parameters plus exact witness values) per failed instance.

    `evidence` holds the witness of every recorded instance while
    keep_evidence is set; it is never serialized.
    """
    suite: str
    config: dict = field(default_factory=dict)
    instances: int = 0
    passes: int = 0
    failures: list = field(default_factory=list)
    wall_time_ms: int = None
    keep_evidence: bool = False
    evidence: list = field(default_factory=list, repr=False)

    def record(self, passed, params, witness=None):
        self.instances += 1
        witness = render(witness or {})
        if passed:
            self.passes += 1
        else:
            self.failures.append({'params': render(params), 'witness': witness})
        if self.keep_evidence:
            self.evidence.append(witness)
        return passed

    def fail(self, params, message):
        return self.record(False, params, {'error': message})

    def merge(self, other):
        self.instances += other.instances
        self.passes += other.passes
        self.failures.extend(other.failures)
        return self

    @property
    def passed(self):
        return not self.failures and self.passes == self.instances

    @property
    def witness(self):
        """Witness of the most recent instance (single-check reports)"""
        return self.evidence[-1] if self.evidence else None

    def as_dict(self):
        return {
            'suite': self.suite,
            'config': self.config,
            'instances': self.instances,
            'passes': self.passes,
            'failures': self.failures,
            'wall_time_ms': self.wall_time_ms,
        }


def single_check(suite, params, passed, witness):
    """Report holding exactly one instance, with its witness kept as evidence"""
    report = VerificationReport(suite=suite, config=dict(params), keep_evidence=True)
    report.record(passed, params, witness)
    return report
