"""
Truncated formal power series over exact rationals
"""
from dataclasses import dataclass
from fractions import Fraction

from combinatorics.arith import factorial
from combinatorics.exceptions import PreconditionError


@dataclass(frozen=True)
class FormalSeries:
    """Coefficients c_0..c_N of x^j; every product is truncated at order N"""
    order: int
    coefficients: tuple

    def __post_init__(self):
        if self.order < 0:
            raise PreconditionError(f"series order must be non-negative, got {self.order}")
        if len(self.coefficients) != self.order + 1:
            raise PreconditionError("coefficient count must equal order + 1")

    @classmethod
    def from_coefficients(cls, coefficients, order):
        padded = [Fraction(c) for c in list(coefficients)[:order + 1]]
        padded += [Fraction(0)] * (order + 1 - len(padded))
        return cls(order, tuple(padded))

    @classmethod
    def one(cls, order):
        return cls.from_coefficients([1], order)

    @classmethod
    def exp_minus_one(cls, order):
        """e^x - 1"""
        return cls.from_coefficients(
            [0] + [Fraction(1, factorial(j)) for j in range(1, order + 1)], order)

    @classmethod
    def exp_minus_one_over_x(cls, order):
        """(e^x - 1)/x = sum x^j/(j+1)!"""
        return cls.from_coefficients(
            [Fraction(1, factorial(j + 1)) for j in range(order + 1)], order)

    @classmethod
    def log_one_plus(cls, order):
        """ln(1 + x), taken formally"""
        return cls.from_coefficients(
            [0] + [Fraction(-1 if j % 2 == 0 else 1, j) for j in range(1, order + 1)], order)

    def coefficient(self, j):
        if j < 0 or j > self.order:
            return Fraction(0)
        return self.coefficients[j]

    def derivative_at_zero(self, j):
        """j-th derivative at x = 0, i.e. j! * c_j"""
        return factorial(j) * self.coefficient(j)

    def scale(self, factor):
        return FormalSeries(self.order, tuple(factor * c for c in self.coefficients))

    def __add__(self, other):
        order = min(self.order, other.order)
        return FormalSeries(order, tuple(
            self.coefficients[j] + other.coefficients[j] for j in range(order + 1)))

    def __mul__(self, other):
        order = min(self.order, other.order)
        product = [Fraction(0)] * (order + 1)
        for i, left in enumerate(self.coefficients[:order + 1]):
            if not left:
                continue
            for j in range(order + 1 - i):
                right = other.coefficients[j]
                if right:
                    product[i + j] += left * right
        return FormalSeries(order, tuple(product))

    def __pow__(self, exponent):
        if exponent < 0:
            raise PreconditionError("formal series power must be non-negative")
        result = FormalSeries.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result
