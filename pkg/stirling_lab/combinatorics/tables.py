"""
Memoized Stirling triangles and their plain-text cache
"""
import logging
import os
from enum import IntEnum
from pathlib import Path

from combinatorics.exceptions import ConsistencyError, IndexRangeError

logger = logging.getLogger(__name__)


class StirlingKind(IntEnum):
    FIRST = 1   # signed first kind s(n,k)
    SECOND = 2  # second kind S(n,k)


class StirlingTable:
    """
    Triangle of Stirling values of one kind for 0 <= k <= n <= max_n.

    Rows are built lazily by the triangular recurrence and kept, so a
    query for a row already built is a lookup. Values outside 0 <= k <= n
    read as 0.
    """

    def __init__(self, kind, max_n):
        if max_n < 0:
            raise IndexRangeError(f"max_n must be non-negative, got {max_n}")
        self.kind = StirlingKind(kind)
        self.max_n = max_n
        self._rows = [(1,)]

    def __repr__(self):
        return f"StirlingTable(kind={int(self.kind)}, max_n={self.max_n}, built={self.built_rows})"

    @property
    def built_rows(self):
        return len(self._rows) - 1

    def _next_row(self, previous, n):
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            above = previous[k] if k < n else 0
            if self.kind == StirlingKind.SECOND:
                row[k] = k * above + previous[k - 1]
            else:
                row[k] = previous[k - 1] - (n - 1) * above
        return tuple(row)

    def _extend_to(self, n):
        while len(self._rows) <= n:
            self._rows.append(self._next_row(self._rows[-1], len(self._rows)))

    def build(self):
        self._extend_to(self.max_n)
        logger.debug(f"Built {self!r}")
        return self

    def value(self, n, k):
        if n < 0 or n > self.max_n:
            raise IndexRangeError(f"row {n} outside table 0..{self.max_n}")
        if k < 0 or k > n:
            return 0
        self._extend_to(n)
        return self._rows[n][k]

    def __call__(self, n, k):
        return self.value(n, k)

    def row(self, n):
        if n < 0 or n > self.max_n:
            raise IndexRangeError(f"row {n} outside table 0..{self.max_n}")
        self._extend_to(n)
        return self._rows[n]

    def cells(self):
        """Yield (n, k, value) ordered by n then k"""
        for n in range(self.max_n + 1):
            for k, value in enumerate(self.row(n)):
                yield n, k, value

    def covers(self, n):
        return 0 <= n <= self.max_n

    def dump(self, path):
        """Write one 'kind n k value' record per line"""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        lines = [f"{int(self.kind)} {n} {k} {value}" for n, k, value in self.cells()]
        # readers only ever see a complete file
        scratch = path.with_name(f"{path.name}.{os.getpid()}.tmp")
        scratch.write_text('\n'.join(lines) + '\n', encoding='utf-8')
        scratch.replace(path)
        logger.info(f"Saved {len(lines)} cells of kind {int(self.kind)} to {path}")
        return path

    @classmethod
    def load(cls, path, kind=None):
        """Read a cache file; the triangle must be complete and of a single kind"""
        cells = {}
        file_kind = None
        for number, line in enumerate(Path(path).read_text(encoding='utf-8').splitlines(), start=1):
            if not line.strip():
                continue
            try:
                record_kind, n, k, value = (int(field) for field in line.split())
            except ValueError:
                raise ConsistencyError(f"{path}:{number}: malformed record {line!r}")
            if file_kind is None:
                file_kind = record_kind
            elif record_kind != file_kind:
                raise ConsistencyError(f"{path}:{number}: mixed kinds in cache")
            cells[(n, k)] = value

        if file_kind is None:
            raise ConsistencyError(f"{path}: empty cache file")
        try:
            file_kind = StirlingKind(file_kind)
        except ValueError:
            raise ConsistencyError(f"{path}: unknown kind {file_kind} in cache")
        if kind is not None and StirlingKind(kind) != file_kind:
            raise ConsistencyError(f"{path}: holds kind {int(file_kind)}, expected {int(kind)}")

        max_n = max(n for n, _ in cells)
        rows = []
        for n in range(max_n + 1):
            try:
                rows.append(tuple(cells[(n, k)] for k in range(n + 1)))
            except KeyError:
                raise ConsistencyError(f"{path}: row {n} is incomplete")

        table = cls(file_kind, max_n)
        table._rows = rows
        return table
