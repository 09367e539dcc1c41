"""
Letter kets and their linear combinations.

A ket is a tuple of integer letters, one per site, in natural slot order.
A ``State`` maps kets of one ``Space`` to coefficients, which are either
exact Scalars or floats; ``State.exact`` tells which.
"""

import itertools
from dataclasses import dataclass
from typing import Tuple

from apps.core.exceptions import SpaceMismatchError
from apps.scalar.scalar import ONE, ZERO, Scalar, eval_float

Ket = Tuple[int, ...]


@dataclass(frozen=True)
class Space:
    sites: int
    alphabet: Tuple[int, ...]

    @classmethod
    def a_series(cls, n, sites):
        """Letters 1..n, as used by the Hecke (A series) computations."""
        return cls(sites, tuple(range(1, n + 1)))

    @classmethod
    def signed(cls, n, sites, with_zero):
        """Letters -n..n, with 0 only when ``with_zero`` (B series)."""
        letters = [k for k in range(-n, n + 1) if k or with_zero]
        return cls(sites, tuple(letters))

    @property
    def dimension(self):
        return len(self.alphabet) ** self.sites

    def kets(self):
        return itertools.product(self.alphabet, repeat=self.sites)

    def contains(self, ket):
        return len(ket) == self.sites and all(a in self.alphabet for a in ket)

    def check(self, ket):
        if not self.contains(ket):
            raise SpaceMismatchError(f"Ket {ket} is not in {self}.")
        return tuple(ket)

    def __str__(self):
        return f"{self.sites} sites over {list(self.alphabet)}"


def format_coefficient(c):
    if isinstance(c, Scalar):
        return str(c)
    return f"{c:.12g}"


class State:
    """Finitely supported ket -> coefficient map with zero pruning."""

    __slots__ = ('space', 'exact', '_entries')

    def __init__(self, space, entries=None, exact=True, check=True):
        self.space = space
        self.exact = exact
        self._entries = {}
        for ket, c in (entries or {}).items():
            if check:
                ket = space.check(ket)
            if c:
                self._entries[ket] = c

    @classmethod
    def basis(cls, space, ket, coeff=None, exact=True):
        if coeff is None:
            coeff = ONE if exact else 1.0
        return cls(space, {tuple(ket): coeff}, exact=exact)

    @classmethod
    def zero(cls, space, exact=True):
        return cls(space, exact=exact)

    @classmethod
    def _raw(cls, space, entries, exact):
        state = cls.__new__(cls)
        state.space = space
        state.exact = exact
        state._entries = entries
        return state

    # -- access ------------------------------------------------------------

    @property
    def zero_coefficient(self):
        return ZERO if self.exact else 0.0

    def items(self):
        return self._entries.items()

    def kets(self):
        return self._entries.keys()

    def coefficient(self, ket):
        return self._entries.get(tuple(ket), self.zero_coefficient)

    def __len__(self):
        return len(self._entries)

    def __bool__(self):
        return bool(self._entries)

    def is_zero(self):
        return not self._entries

    def content(self):
        """Sorted letter multiset shared by every ket, or None if mixed."""
        contents = {tuple(sorted(ket)) for ket in self._entries}
        return contents.pop() if len(contents) == 1 else None

    # -- arithmetic --------------------------------------------------------

    def _same_space(self, other):
        if not isinstance(other, State):
            raise TypeError(f"Expected a State, got {type(other).__name__}.")
        if other.space != self.space:
            raise SpaceMismatchError(f"{self.space} vs {other.space}.")
        if other.exact != self.exact:
            raise SpaceMismatchError('Cannot mix exact and float states.')

    def add_scaled(self, c, src):
        self._same_space(src)
        entries = dict(self._entries)
        if c:
            for ket, value in src._entries.items():
                total = entries.get(ket, self.zero_coefficient) + c * value
                if total:
                    entries[ket] = total
                else:
                    entries.pop(ket, None)
        return State._raw(self.space, entries, self.exact)

    def __add__(self, other):
        return self.add_scaled(ONE if self.exact else 1.0, other)

    def __sub__(self, other):
        return self.add_scaled(-ONE if self.exact else -1.0, other)

    def __neg__(self):
        return self * (-ONE if self.exact else -1.0)

    def __mul__(self, c):
        if not c:
            return State.zero(self.space, self.exact)
        entries = {}
        for ket, value in self._entries.items():
            product = value * c
            if product:
                entries[ket] = product
        return State._raw(self.space, entries, self.exact)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, State):
            return NotImplemented
        return other.space == self.space and (self - other).is_zero()

    __hash__ = None

    def map_coefficients(self, fn, exact=False):
        entries = {}
        for ket, value in self._entries.items():
            mapped = fn(value)
            if mapped:
                entries[ket] = mapped
        return State._raw(self.space, entries, exact)

    def to_float(self, q):
        if not self.exact:
            return self
        return self.map_coefficients(lambda c: eval_float(c, q))

    def max_abs(self):
        """Largest |coefficient| of a float state; 0.0 when empty."""
        return max((abs(c) for c in self._entries.values()), default=0.0)

    def __repr__(self):
        terms = ' + '.join(
            f"({format_coefficient(c)})|{','.join(map(str, ket))}>"
            for ket, c in sorted(self._entries.items())
        )
        return f"State({terms or '0'})"


def add_scaled(dst, c, src):
    return dst.add_scaled(c, src)


def inner(u, v):
    """Bilinear pairing: distinct kets are orthonormal, no conjugation."""
    u._same_space(v)
    if len(v) < len(u):
        u, v = v, u
    total = u.zero_coefficient
    for ket, value in u.items():
        other = v._entries.get(ket)
        if other is not None:
            total = total + value * other
    return total
