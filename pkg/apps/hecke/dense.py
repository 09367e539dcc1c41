"""
Float Hecke generators on the full letter basis of a space.

Each g_i is stored as (diagonal, swap index, swap mask), so applying it to
a dense matrix costs one gather and two multiplies.
"""

import numpy as np

from apps.core.exceptions import IndexRangeError
from apps.scalar.scalar import Scalar, eval_float


class DenseHecke:

    def __init__(self, space, q, key=None):
        key = key or (lambda a: a)
        self.space = space
        self.q = q
        qf = eval_float(Scalar.q_power(1), q)
        self.t = qf - 1.0 / qf
        self.kets = list(space.kets())
        self.index = {ket: pos for pos, ket in enumerate(self.kets)}
        self._generators = {}
        for i in range(1, space.sites):
            diag = np.zeros(len(self.kets))
            swap = np.arange(len(self.kets))
            mask = np.zeros(len(self.kets))
            for pos, ket in enumerate(self.kets):
                a, b = ket[i - 1], ket[i]
                ka, kb = key(a), key(b)
                if ka == kb:
                    diag[pos] = qf
                    continue
                swap[pos] = self.index[ket[:i - 1] + (b, a) + ket[i + 1:]]
                mask[pos] = 1.0
                if ka > kb:
                    diag[pos] = self.t
            self._generators[i] = (diag, swap, mask)

    @property
    def dimension(self):
        return len(self.kets)

    def identity(self):
        return np.eye(self.dimension)

    def apply(self, i, matrix, inverse=False):
        """g_i @ matrix (or g_i^-1 @ matrix)."""
        if i not in self._generators:
            raise IndexRangeError(f"g{i} does not act on {self.space.sites} sites.")
        diag, swap, mask = self._generators[i]
        if inverse:
            diag = diag - self.t
        return diag[:, None] * matrix + mask[:, None] * matrix[swap, :]

    def word(self, word, matrix=None):
        result = self.identity() if matrix is None else matrix
        for index, inverse in reversed(word.gens):
            result = self.apply(index, result, inverse)
        return result

    def word_sum(self, ws, matrix=None):
        """
        Sum of c * word @ matrix; words sharing their rightmost factors
        reuse the partial products.
        """
        base = self.identity() if matrix is None else matrix
        total = np.zeros_like(base)
        stack = [((), base)]
        terms = sorted(ws, key=lambda term: tuple(reversed(term[1].gens)))
        for coeff, word in terms:
            path = tuple(reversed(word.gens))
            while path[:len(stack[-1][0])] != stack[-1][0]:
                stack.pop()
            prefix, current = stack[-1]
            for step in path[len(prefix):]:
                current = self.apply(step[0], current, step[1])
                prefix = prefix + (step,)
                stack.append((prefix, current))
            c = eval_float(coeff, self.q) if isinstance(coeff, Scalar) else coeff
            total += c * current
        return total
