"""
Series data of the B, C and D vector representations.

Letters are the signed integers -n..n (B) or -n..n without 0 (C, D).
The contraction operator pairs |k,-k> kets with weights w_k; ``literal``
uses w_k = q^k, ``balanced`` spreads the monomials of
1 + (r - r^-1)/(q - q^-1) over the index set in ascending order.
"""

from dataclasses import dataclass

from apps.core.exceptions import SeriesError
from apps.scalar.scalar import ONE, ZERO, Scalar, qnum
from apps.tensor.state import Space

SERIES = ('B', 'C', 'D')
WEIGHTS = ('literal', 'balanced')


def _sign(k):
    return (k > 0) - (k < 0)


def parity(k):
    """(-)^k for a signed integer k."""
    return -1 if k % 2 else 1


@dataclass(frozen=True)
class SeriesParams:
    series: str
    n: int
    weights: str = 'literal'

    def __post_init__(self):
        if self.series not in SERIES:
            raise SeriesError(f"Unknown series {self.series!r}; expected one of {SERIES}.")
        if not isinstance(self.n, int) or self.n < 1:
            raise SeriesError(f"Rank must be a positive integer, got {self.n!r}.")
        if self.weights not in WEIGHTS:
            raise SeriesError(f"Unknown weights {self.weights!r}; expected one of {WEIGHTS}.")

    @property
    def label(self):
        return f"{self.series}{self.n}"

    @property
    def has_zero(self):
        return self.series == 'B'

    @property
    def r(self):
        if self.series == 'B':
            return Scalar.q_power(2 * self.n)
        if self.series == 'D':
            return Scalar.q_power(2 * self.n - 1)
        return Scalar.q_power(-2 * self.n - 1)

    @property
    def rinv(self):
        return ONE / self.r

    @property
    def index_set(self):
        return tuple(k for k in range(-self.n, self.n + 1) if k or self.has_zero)

    def space(self, sites=2):
        return Space.signed(self.n, sites, with_zero=self.has_zero)

    def weight(self, k):
        if k not in self.index_set:
            raise SeriesError(f"Letter {k} is not in the {self.label} index set.")
        if self.weights == 'literal':
            return Scalar.q_power(k)
        if self.series == 'B':
            return Scalar.q_power(_sign(k) * (2 * abs(k) - 1)) if k else ONE
        if self.series == 'D':
            return Scalar.q_power(_sign(k) * 2 * (abs(k) - 1))
        return -Scalar.q_power(2 * k)

    @property
    def x(self):
        """Eigenvalue of e on its image: sum of the weights."""
        total = ZERO
        for k in self.index_set:
            total = total + self.weight(k)
        return total

    @property
    def standard_x(self):
        """1 + (r - r^-1)/(q - q^-1), written with q-numbers."""
        if self.series == 'B':
            return ONE + qnum(2 * self.n)
        if self.series == 'D':
            return ONE + qnum(2 * self.n - 1)
        return ONE - qnum(2 * self.n + 1)

    def opposite_pairs(self):
        """Kets |k,-k> in index order."""
        return [(k, -k) for k in self.index_set]
