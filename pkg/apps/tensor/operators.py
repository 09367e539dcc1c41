"""
Linear operators on States.

An operator is any callable ``State -> State``.  Products follow the
operator convention: ``compose(a, b)(v) == a(b(v))``.
"""

from functools import reduce

from apps.core.exceptions import IndexRangeError

from .state import Space, State


def identity(v):
    return v


def compose(*ops):
    """Product of operators; the rightmost factor applies first."""
    if not ops:
        return identity

    def product(v):
        return reduce(lambda acc, op: op(acc), reversed(ops), v)
    return product


def scaled_sum(terms):
    """Operator v -> sum of c * op(v) over (c, op) pairs."""
    terms = list(terms)

    def combined(v):
        result = State.zero(v.space, v.exact)
        for c, op in terms:
            result = result.add_scaled(c, op(v))
        return result
    return combined


def apply_on_sites(local_op, offset, width):
    """
    Lift an operator on ``width``-site states to sites offset..offset+width-1
    (1-based) of a larger state, letter by letter of the remaining sites.
    """
    def lifted(v):
        if offset < 1 or offset + width - 1 > v.space.sites:
            raise IndexRangeError(
                f"Sites {offset}..{offset + width - 1} outside {v.space.sites} sites."
            )
        local_space = Space(width, v.space.alphabet)
        start, stop = offset - 1, offset - 1 + width
        result = State.zero(v.space, v.exact)
        for ket, c in v.items():
            image = local_op(State.basis(local_space, ket[start:stop], c, exact=v.exact))
            entries = {
                ket[:start] + local_ket + ket[stop:]: value
                for local_ket, value in image.items()
            }
            result = result.add_scaled(
                1 if v.exact else 1.0, State(v.space, entries, v.exact, check=False)
            )
        return result
    return lifted
