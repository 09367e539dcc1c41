"""
Hecke algebra action on letter states.

For the letters (a, b) at sites (i, i+1):

    a == b : g_i |..a,a..>  = q |..a,a..>
    a <  b : g_i |..a,b..>  = |..b,a..>
    a >  b : g_i |..a,b..>  = (q - q^-1) |..a,b..> + |..b,a..>

and g_i^-1 = g_i - (q - q^-1).
"""

from apps.core.exceptions import IndexRangeError, SpaceMismatchError
from apps.scalar.scalar import ONE, Q, QINV, T, Scalar, eval_float
from apps.tensor.state import State


def _natural(letter):
    return letter


class HeckeAction:
    """
    Constants and ordering for the local rules.

    ``q=None`` gives the exact action on Scalar states; a float q gives the
    float action. ``key`` orders letters (identity by default).
    """

    def __init__(self, q=None, key=None):
        self.q = q
        self.exact = q is None
        self.key = key or _natural
        if self.exact:
            self.qc, self.qinv, self.t, self.one = Q, QINV, T, ONE
        else:
            self.qc = eval_float(Q, q)
            self.qinv = 1.0 / self.qc
            self.t = self.qc - self.qinv
            self.one = 1.0

    def coefficient(self, c):
        """Lower an exact Scalar to this action's coefficient field."""
        if self.exact or not isinstance(c, Scalar):
            return c
        return eval_float(c, self.q)

    def check(self, i, v):
        if not 1 <= i < v.space.sites:
            raise IndexRangeError(f"g{i} does not act on {v.space.sites} sites.")
        if v.exact != self.exact:
            raise SpaceMismatchError('State and action disagree on exactness.')

    def apply_g(self, i, v, inverse=False):
        self.check(i, v)
        key, t = self.key, self.t
        lo = i - 1
        out = {}

        def add(ket, c):
            out[ket] = out[ket] + c if ket in out else c

        for ket, c in v.items():
            a, b = ket[lo], ket[i]
            ka, kb = key(a), key(b)
            if ka == kb:
                add(ket, c * (self.qinv if inverse else self.qc))
                continue
            add(ket[:lo] + (b, a) + ket[i + 1:], c)
            if ka < kb:
                if inverse:
                    add(ket, -(t * c))
            elif not inverse:
                add(ket, t * c)
        return State._raw(v.space, {k: c for k, c in out.items() if c}, v.exact)

    def apply_g_inv(self, i, v):
        return self.apply_g(i, v, inverse=True)


EXACT = HeckeAction()


def apply_g(i, v):
    return EXACT.apply_g(i, v)


def apply_g_inv(i, v):
    return EXACT.apply_g_inv(i, v)
