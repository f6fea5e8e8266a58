"""
Utility functions for suite runs
Resolves the cache directory, loads or builds Stirling tables, and turns
command options into a validated RunConfig.
"""
import os
import logging
from dataclasses import asdict, dataclass
from pathlib import Path

from django.conf import settings
from django.core.management.base import CommandError

from combinatorics.exceptions import ConsistencyError
from combinatorics.monotonicity import CLAIM_IDS
from combinatorics.tables import StirlingKind, StirlingTable

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ('text', 'csv', 'json')
USAGE_ERROR = 2
POSITIVE_OPTIONS = {'max_k': '--max-k', 'ell_max': '--max-ell', 'det_order': '--det-order', 'trials': '--trials'}


def resolve_cache_dir(flag=None):
    """Flag, then STIRLING_CACHE_DIR, then the platform cache directory"""
    if flag:
        return Path(flag)
    configured = settings.STIRLING.get('CACHE_DIR')
    if configured:
        return Path(configured)
    base = os.getenv('XDG_CACHE_HOME') or os.path.join(Path.home(), '.cache')
    return Path(base) / 'stirling_lab'


def cache_path(cache_dir, kind):
    return Path(cache_dir) / f"stirling_kind{int(kind)}.txt"


def get_table(kind, max_n, cache_dir=None):
    """Return a table covering max_n, reusing the cache file when it is large enough"""
    kind = StirlingKind(kind)
    path = cache_path(resolve_cache_dir(cache_dir), kind)
    if path.exists():
        try:
            cached = StirlingTable.load(path, kind=kind)
            if cached.covers(max_n):
                logger.debug(f"Loaded kind {int(kind)} table up to {cached.max_n} from {path}")
                return cached
        except ConsistencyError as e:
            logger.warning(f"Ignoring broken cache file {path}: {str(e)}")

    table = StirlingTable(kind, max_n).build()
    try:
        table.dump(path)
    except OSError as e:
        logger.warning(f"Could not write cache file {path}: {str(e)}")
    return table


def parse_claims(value):
    """'1,3,5' -> (1, 3, 5)"""
    try:
        claims = sorted({int(part) for part in str(value).split(',') if part.strip()})
    except ValueError:
        raise CommandError(f"claims must be a comma separated list of integers, got {value!r}",
                           returncode=USAGE_ERROR)
    unknown = [claim for claim in claims if claim not in CLAIM_IDS]
    if not claims or unknown:
        raise CommandError(f"claims must be chosen from {list(CLAIM_IDS)}, got {value!r}", returncode=USAGE_ERROR)
    return tuple(claims)


@dataclass(frozen=True)
class RunConfig:
    """Validated options of one command run"""
    command: str
    max_n: int = 0
    max_k: int = None
    ell_max: int = None
    det_order: int = None
    trials: int = None
    seed: int = None
    kind: int = None
    claims: tuple = None
    output_format: str = 'text'
    cache_dir: str = None
    output: str = None
    timing: bool = False
    record: bool = False

    def __post_init__(self):
        if self.output_format not in OUTPUT_FORMATS:
            raise CommandError(f"format must be one of {', '.join(OUTPUT_FORMATS)}, got {self.output_format!r}",
                               returncode=USAGE_ERROR)
        if self.max_n is None or self.max_n < 0:
            raise CommandError(f"--max-n must be non-negative, got {self.max_n}", returncode=USAGE_ERROR)
        for name, flag in POSITIVE_OPTIONS.items():
            value = getattr(self, name)
            if value is not None and value < 1:
                raise CommandError(f"{flag} must be positive, got {value}", returncode=USAGE_ERROR)
        if self.kind is not None and self.kind not in (StirlingKind.FIRST, StirlingKind.SECOND):
            raise CommandError(f"--kind must be 1 or 2, got {self.kind}", returncode=USAGE_ERROR)

    @classmethod
    def from_options(cls, command, options, **fields):
        """Merge parsed command options with the settings defaults"""
        return cls(
            command=command,
            max_n=options.get('max_n'),
            output_format=options.get('format') or settings.STIRLING['DEFAULT_FORMAT'],
            cache_dir=options.get('cache_dir'),
            output=options.get('output'),
            timing=bool(options.get('timing')),
            record=bool(options.get('record')),
            **fields,
        )

    def as_dict(self):
        """Report-facing configuration; output plumbing is left out"""
        hidden = ('output_format', 'cache_dir', 'output', 'timing', 'record')
        data = {key: value for key, value in asdict(self).items() if key not in hidden and value is not None}
        if 'claims' in data:
            data['claims'] = list(data['claims'])
        return data
