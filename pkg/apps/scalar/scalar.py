"""
Exact coefficients of the R-matrix computations.

A Scalar is a Laurent polynomial in s = q^{1/2}, linear in the formal
radicals r2 = sqrt([2]) and r3 = sqrt([3]), divided by a product of
q-numbers [m]^p.  The numerator is stored as a mapping
(spow, a2, a3) -> Fraction with a2, a3 in {0, 1}.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from apps.core.exceptions import (
    EvaluationPointError,
    ScalarError,
    UnsupportedDivision,
)

# q-number factors tried when a numerator has to be split into a monomial
# times q-numbers (division, square roots).
QNUM_SEARCH_LIMIT = 8

# [2] and [3] written in powers of s
_RADICAL_SQUARES = {
    2: {2: 1, -2: 1},
    3: {4: 1, 0: 1, -4: 1},
}


@dataclass(frozen=True)
class Term:
    coeff: Fraction
    spow: int
    a2: int = 0
    a3: int = 0

    @property
    def key(self):
        return (self.spow, self.a2, self.a3)


def _qnum_spoly(m):
    """[m] as {s-exponent: coefficient}."""
    return {2 * (m - 1 - 2 * j): 1 for j in range(m)}


def _add_into(acc, key, value):
    total = acc.get(key, 0) + value
    if total:
        acc[key] = total
    else:
        acc.pop(key, None)


def _mul_num(left, right):
    out = {}
    for (sa, a2, a3), ca in left.items():
        for (sb, b2, b3), cb in right.items():
            coeff = ca * cb
            r2, r3 = a2 + b2, a3 + b3
            shifts = [(sa + sb, coeff)]
            if r2 == 2:
                shifts = [(s + d, c * k) for s, c in shifts for d, k in _RADICAL_SQUARES[2].items()]
                r2 = 0
            if r3 == 2:
                shifts = [(s + d, c * k) for s, c in shifts for d, k in _RADICAL_SQUARES[3].items()]
                r3 = 0
            for spow, c in shifts:
                _add_into(out, (spow, r2, r3), c)
    return out


def _scale_num(num, factor):
    return {key: c * factor for key, c in num.items()} if factor else {}


def _divide_spoly(poly, m):
    """Exact division of an s-polynomial by [m]; None when not divisible."""
    if m == 1:
        return dict(poly)
    divisor = _qnum_spoly(m)
    top = 2 * (m - 1)
    rem = dict(poly)
    low = min(rem) + top
    quotient = {}
    while rem:
        lead = max(rem)
        qexp = lead - top
        if qexp < low:
            return None
        c = rem[lead]
        quotient[qexp] = c
        for dexp, dc in divisor.items():
            _add_into(rem, qexp + dexp, -c * dc)
    return quotient


def _divide_num(num, m):
    groups = {}
    for (spow, a2, a3), c in num.items():
        groups.setdefault((a2, a3), {})[spow] = c
    out = {}
    for (a2, a3), poly in groups.items():
        quotient = _divide_spoly(poly, m)
        if quotient is None:
            return None
        for spow, c in quotient.items():
            out[(spow, a2, a3)] = Fraction(c)
    return out


def _qnum_product_num(den):
    num = {(0, 0, 0): Fraction(1)}
    for m, power in den.items():
        qn = {(e, 0, 0): Fraction(c) for e, c in _qnum_spoly(m).items()}
        for _ in range(power):
            num = _mul_num(num, qn)
    return num


class Scalar:
    """Immutable exact coefficient; see the module docstring for the layout."""

    __slots__ = ('_num', '_den')

    def __init__(self, num=None, den=None):
        num = {k: Fraction(v) for k, v in (num or {}).items() if v}
        den = {m: p for m, p in (den or {}).items() if p}
        for m in den:
            if m < 2:
                raise ScalarError(f"Denominator factor [{m}] is not allowed.")
        for _, a2, a3 in num:
            if a2 not in (0, 1) or a3 not in (0, 1):
                raise ScalarError('Radical exponents must be 0 or 1.')
        if not num:
            den = {}
        else:
            for m in sorted(den, reverse=True):
                while den.get(m):
                    reduced = _divide_num(num, m)
                    if reduced is None:
                        break
                    num = reduced
                    den[m] -= 1
                    if not den[m]:
                        del den[m]
        self._num = num
        self._den = den

    # -- construction ----------------------------------------------------

    @classmethod
    def from_int(cls, value):
        return cls({(0, 0, 0): Fraction(value)})

    @classmethod
    def monomial(cls, coeff=1, spow=0, a2=0, a3=0):
        return cls({(spow, a2, a3): Fraction(coeff)})

    @classmethod
    def q_power(cls, exponent):
        """q^exponent for an integer or half-integer exponent."""
        doubled = Fraction(exponent) * 2
        if doubled.denominator != 1:
            raise ScalarError(f"q^{exponent} is not a power of q^(1/2).")
        return cls.monomial(1, int(doubled))

    # -- structure -------------------------------------------------------

    @property
    def num(self):
        return tuple(
            Term(c, *key) for key, c in sorted(self._num.items())
        )

    @property
    def den(self):
        return tuple(sorted(self._den.items()))

    def is_zero(self):
        return not self._num

    def __bool__(self):
        return bool(self._num)

    def is_laurent(self):
        """True when there is no denominator and no radical."""
        return not self._den and all(a2 == 0 and a3 == 0 for _, a2, a3 in self._num)

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(value):
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return Scalar.from_int(value) if isinstance(value, int) else Scalar({(0, 0, 0): value})
        return None

    def _lift(self, den):
        missing = {m: p - self._den.get(m, 0) for m, p in den.items()}
        return _mul_num(self._num, _qnum_product_num(missing))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._num:
            return self
        if not self._num:
            return other
        if self._den == other._den:
            num = dict(self._num)
            for key, c in other._num.items():
                _add_into(num, key, c)
            return Scalar(num, self._den)
        den = {m: max(self._den.get(m, 0), other._den.get(m, 0))
               for m in set(self._den) | set(other._den)}
        num = self._lift(den)
        for key, c in other._lift(den).items():
            _add_into(num, key, c)
        return Scalar(num, den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(_scale_num(self._num, -1), self._den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Scalar(_scale_num(self._num, Fraction(other)), self._den)
        if not isinstance(other, Scalar):
            return NotImplemented
        if not self._num or not other._num:
            return ZERO
        den = dict(self._den)
        for m, p in other._den.items():
            den[m] = den.get(m, 0) + p
        return Scalar(_mul_num(self._num, other._num), den)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ScalarError('Only non-negative integer powers are supported.')
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def div_qnum(self, *factors):
        """Divide by [m1][m2]... (factors given as m or (m, power))."""
        if not factors:
            raise UnsupportedDivision('Empty q-number divisor.')
        den = dict(self._den)
        for factor in factors:
            m, power = factor if isinstance(factor, tuple) else (factor, 1)
            if m == 1 and power >= 0:
                continue
            if m < 2 or power < 1:
                raise UnsupportedDivision(f"[{m}]^{power} is not a q-number factor.")
            den[m] = den.get(m, 0) + power
        return Scalar(self._num, den)

    def _split_monomial(self, allowed=range(2, QNUM_SEARCH_LIMIT + 1)):
        """
        Write the numerator as c * s^k * r2^a2 * r3^a3 * prod [m]^p.

        Returns (Term, {m: p}) or None.
        """
        num = dict(self._num)
        factors = {}
        changed = True
        while len(num) > 1 and changed:
            changed = False
            for m in sorted(allowed, reverse=True):
                reduced = _divide_num(num, m)
                if reduced is not None:
                    num = reduced
                    factors[m] = factors.get(m, 0) + 1
                    changed = True
                    break
        if len(num) != 1:
            return None
        (spow, a2, a3), c = next(iter(num.items()))
        return Term(c, spow, a2, a3), factors

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                raise ZeroDivisionError('Scalar division by zero.')
            return Scalar(_scale_num(self._num, 1 / Fraction(other)), self._den)
        if not isinstance(other, Scalar):
            return NotImplemented
        if not other._num:
            raise ZeroDivisionError('Scalar division by zero.')
        split = other._split_monomial()
        if split is None:
            raise UnsupportedDivision(f"Cannot divide by {other}.")
        term, factors = split
        # 1/(c s^k r2^a r3^b) = s^-k r2^a r3^b / (c [2]^a [3]^b)
        inverse = {(-term.spow, term.a2, term.a3): 1 / term.coeff}
        den = dict(self._den)
        for m, p in factors.items():
            den[m] = den.get(m, 0) + p
        if term.a2:
            den[2] = den.get(2, 0) + 1
        if term.a3:
            den[3] = den.get(3, 0) + 1
        numerator = _mul_num(_mul_num(self._num, inverse), _qnum_product_num(other._den))
        return Scalar(numerator, den)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return not (self - other)

    __hash__ = None

    def sqrt(self):
        """Exact square root of a q-power times [2]- and [3]-powers."""
        if not self._num:
            return ZERO
        bad = [m for m in self._den if m not in (2, 3)]
        if bad:
            raise ScalarError(f"No square root for denominator [{bad[0]}] in {self}.")
        split = self._split_monomial(allowed=(2, 3))
        if split is None:
            raise ScalarError(f"{self} is not a monomial in q, [2] and [3].")
        term, factors = split
        if term.a2 or term.a3:
            raise ScalarError(f"{self} carries a radical; its square root is not representable.")
        if term.spow % 2:
            raise ScalarError(f"{self} has a half-integer q power; its square root needs q^(1/4).")
        root = _rational_sqrt(term.coeff)
        if root is None:
            raise ScalarError(f"Coefficient {term.coeff} of {self} is not a rational square.")
        n2 = factors.get(2, 0) - self._den.get(2, 0)
        n3 = factors.get(3, 0) - self._den.get(3, 0)
        return sqrt_monomial(term.spow // 2, n2, n3) * root

    # -- presentation ----------------------------------------------------

    def __str__(self):
        from .parsing import format_scalar
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar('{self}')"

    def to_latex(self):
        from .parsing import latex_scalar
        return latex_scalar(self)


def _rational_sqrt(value):
    value = Fraction(value)
    if value < 0:
        return None
    num, den = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if num * num != value.numerator or den * den != value.denominator:
        return None
    return Fraction(num, den)


ZERO = Scalar()
ONE = Scalar.from_int(1)
Q = Scalar.q_power(1)
QINV = Scalar.q_power(-1)
# q - q^-1, the Hecke mixing coefficient
T = Q - QINV
SQRT2 = Scalar.monomial(1, 0, 1, 0)
SQRT3 = Scalar.monomial(1, 0, 0, 1)


def qnum(k):
    """[k] = sum_{j=0}^{k-1} q^{k-1-2j}; [0] = 0, [-k] = -[k]."""
    if k == 0:
        return ZERO
    if k < 0:
        return -qnum(-k)
    return Scalar({(e, 0, 0): c for e, c in _qnum_spoly(k).items()})


def qfactorial(k):
    result = ONE
    for m in range(2, k + 1):
        result = result * qnum(m)
    return result


def arith(op, x, y):
    """Dispatch on {add, sub, mul, div_by_qnum_product}."""
    if op == 'add':
        return x + y
    if op == 'sub':
        return x - y
    if op == 'mul':
        return x * y
    if op == 'div_by_qnum_product':
        factors = y if isinstance(y, (list, tuple)) else [y]
        return x.div_qnum(*factors)
    raise ScalarError(f"Unknown operation {op!r}.")


def sqrt_monomial(spow2, n2=0, n3=0, inverted=False):
    """
    Square root of q^spow2 * [2]^n2 * [3]^n3 (or of its reciprocal).

    Negative n2/n3 stand for denominators. Reciprocals are rationalised,
    e.g. 1/sqrt([2]) = r2/[2].
    """
    if inverted:
        spow2, n2, n3 = -spow2, -n2, -n3
    num = {(spow2, n2 % 2, n3 % 2): Fraction(1)}
    den = {}
    # n = 2h + parity with parity in {0,1}: sqrt([m]^n) = r_m^parity [m]^h
    for m, n in ((2, n2), (3, n3)):
        half = n // 2
        if half > 0:
            num = _mul_num(num, _qnum_product_num({m: half}))
        elif half < 0:
            den[m] = -half
    return Scalar(num, den)


def eval_float(x, q):
    """Numeric value at a real q > 0, q != 1, principal square roots."""
    if q <= 0 or q == 1:
        raise EvaluationPointError(f"Cannot evaluate at q={q}.")
    s = math.sqrt(q)
    r2 = math.sqrt(q + 1 / q)
    r3 = math.sqrt(q * q + 1 + 1 / (q * q))
    total = 0.0
    for (spow, a2, a3), c in x._num.items():
        term = float(c) * s ** spow
        if a2:
            term *= r2
        if a3:
            term *= r3
        total += term
    for m, power in x._den.items():
        total /= qnum_float(m, q) ** power
    return total


def qnum_float(m, q):
    return (q ** m - q ** -m) / (q - 1 / q)
