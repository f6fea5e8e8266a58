"""
Exceptions raised by the combinatorics package
"""


class StirlingLabError(Exception):
    """Base class for every error raised by the combinatorics package"""


class BinomialDomainError(StirlingLabError, ValueError):
    """Binomial coefficient requested outside the supported conventions"""

    def __init__(self, p, q, convention='strict-eq5'):
        self.p = p
        self.q = q
        self.convention = convention
        super().__init__(f"binom({p}, {q}) is not defined under convention {convention}")


class IndexRangeError(StirlingLabError, IndexError):
    """Index outside a table or an enumeration bound"""


class ConsistencyError(StirlingLabError, ArithmeticError):
    """An exact computation produced a value that contradicts a proven identity"""


class PreconditionError(StirlingLabError, ValueError):
    """Arguments violate a documented precondition"""


class TupleValidationError(StirlingLabError, ValueError):
    """Tuple arguments are malformed (wrong length, negative or not non-increasing)"""


class ZeroDenominatorError(StirlingLabError, ZeroDivisionError):
    """The nested difference used as a denominator vanished"""

    def __init__(self, ell, n, k):
        self.ell = ell
        self.n = n
        self.k = k
        super().__init__(f"frak_S_{ell}({n}, {k}) = 0, ratio undefined")
