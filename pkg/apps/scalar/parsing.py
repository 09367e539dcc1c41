"""
Canonical text form of Scalars.

Printing emits terms in descending powers of q, for example
``q^2 + 1 + q^-2`` or ``(q^{3/2}*r2 - q^{-1/2}*r2) / [2]^2*[3]``.
Parsing accepts that form plus products, parentheses and integer powers,
which is what the golden tables are written in.
"""

import re
from fractions import Fraction

from apps.core.exceptions import ScalarParseError

from .scalar import ONE, Scalar, qnum


def _q_factor(spow):
    if spow % 2:
        return f"q^{{{spow}/2}}"
    power = spow // 2
    if power == 0:
        return ''
    if power == 1:
        return 'q'
    return f"q^{power}"


def _format_term(coeff, spow, a2, a3):
    factors = [f for f in (_q_factor(spow), 'r2' if a2 else '', 'r3' if a3 else '') if f]
    magnitude = abs(coeff)
    if magnitude != 1 or not factors:
        factors.insert(0, str(magnitude))
    return '-' if coeff < 0 else '+', '*'.join(factors)


def _ordered_terms(x):
    return sorted(x.num, key=lambda t: (-t.spow, t.a2, t.a3))


def format_scalar(x):
    if x.is_zero():
        return '0'
    pieces = []
    for index, term in enumerate(_ordered_terms(x)):
        sign, body = _format_term(term.coeff, term.spow, term.a2, term.a3)
        if index == 0:
            pieces.append(body if sign == '+' else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    numerator = ''.join(pieces)
    if not x.den:
        return numerator
    if len(x.num) > 1:
        numerator = f"({numerator})"
    den = '*'.join(f"[{m}]" if p == 1 else f"[{m}]^{p}" for m, p in x.den)
    return f"{numerator} / {den}"


def latex_scalar(x):
    if x.is_zero():
        return '0'
    pieces = []
    for index, term in enumerate(_ordered_terms(x)):
        factors = []
        if term.spow % 2:
            factors.append(f"q^{{{term.spow}/2}}")
        elif term.spow:
            factors.append('q' if term.spow == 2 else f"q^{{{term.spow // 2}}}")
        if term.a2:
            factors.append(r'\sqrt{[2]}')
        if term.a3:
            factors.append(r'\sqrt{[3]}')
        magnitude = abs(term.coeff)
        if magnitude != 1 or not factors:
            if magnitude.denominator == 1:
                factors.insert(0, str(magnitude.numerator))
            else:
                factors.insert(0, rf"\frac{{{magnitude.numerator}}}{{{magnitude.denominator}}}")
        body = ' '.join(factors)
        sign = '-' if term.coeff < 0 else '+'
        if index == 0:
            pieces.append(body if sign == '+' else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    numerator = ''.join(pieces)
    if not x.den:
        return numerator
    den = ''.join(f"[{m}]" if p == 1 else f"[{m}]^{{{p}}}" for m, p in x.den)
    return rf"\frac{{{numerator}}}{{{den}}}"


_TOKEN = re.compile(r"""
    (?P<space>\s+)
  | (?P<number>\d+)
  | (?P<q>q)
  | (?P<radical>r[23])
  | (?P<punct>[-+*/^(){}\[\]])
""", re.VERBOSE)


class _Parser:
    """Recursive descent over the token stream."""

    def __init__(self, text):
        self.text = text
        self.tokens = []
        position = 0
        while position < len(text):
            match = _TOKEN.match(text, position)
            if match is None:
                raise ScalarParseError('Unexpected character', position, text)
            if match.lastgroup != 'space':
                self.tokens.append((match.lastgroup, match.group(), position))
            position = match.end()
        self.index = 0

    # -- token helpers ---------------------------------------------------

    def peek(self, offset=0):
        i = self.index + offset
        return self.tokens[i] if i < len(self.tokens) else (None, None, len(self.text))

    def at(self, value, offset=0):
        return self.peek(offset)[1] == value

    def advance(self):
        token = self.peek()
        self.index += 1
        return token

    def expect(self, value):
        kind, text, position = self.peek()
        if text != value:
            raise ScalarParseError(f"Expected {value!r}", position, self.text)
        return self.advance()

    def integer(self):
        sign = 1
        if self.at('-'):
            self.advance()
            sign = -1
        kind, text, position = self.peek()
        if kind != 'number':
            raise ScalarParseError('Expected an integer', position, self.text)
        self.advance()
        return sign * int(text)

    # -- grammar ---------------------------------------------------------

    def parse(self):
        if not self.tokens:
            raise ScalarParseError('Empty scalar text', 0, self.text)
        value = self.expr()
        kind, text, position = self.peek()
        if kind is not None:
            raise ScalarParseError(f"Unexpected {text!r}", position, self.text)
        return value

    def expr(self):
        value = self.term()
        while self.at('+') or self.at('-'):
            op = self.advance()[1]
            rhs = self.term()
            value = value + rhs if op == '+' else value - rhs
        return value

    def term(self):
        sign = 1
        while self.at('+') or self.at('-'):
            if self.advance()[1] == '-':
                sign = -sign
        value = self.power()
        while self.at('*') or self.at('/'):
            if self.advance()[1] == '*':
                value = value * self.power()
            elif self.at('['):
                value = self.qnum_denominator(value)
            else:
                value = value / self.power()
        return -value if sign < 0 else value

    def qnum_denominator(self, value):
        factors = []
        while True:
            self.expect('[')
            m = self.integer()
            self.expect(']')
            power = self.integer() if self.at('^') and self.advance() else 1
            factors.append((m, power))
            if self.at('*') and self.at('[', 1):
                self.advance()
                continue
            return value.div_qnum(*factors)

    def power(self):
        value = self.atom()
        if self.at('^'):
            self.advance()
            braced = self.at('{')
            if braced:
                self.advance()
            exponent = self.integer()
            if braced:
                self.expect('}')
            if exponent < 0:
                value = ONE / value
                exponent = -exponent
            value = value ** exponent
        return value

    def atom(self):
        kind, text, position = self.peek()
        if kind == 'number':
            self.advance()
            number = Fraction(int(text))
            if self.at('/') and self.peek(1)[0] == 'number':
                self.advance()
                number /= int(self.advance()[1])
            return Scalar({(0, 0, 0): number})
        if kind == 'q':
            self.advance()
            if not self.at('^'):
                return Scalar.q_power(1)
            self.advance()
            return Scalar.q_power(self.q_exponent())
        if kind == 'radical':
            self.advance()
            return Scalar.monomial(1, 0, int(text == 'r2'), int(text == 'r3'))
        if text == '[':
            self.advance()
            m = self.integer()
            self.expect(']')
            return qnum(m)
        if text == '(':
            self.advance()
            value = self.expr()
            self.expect(')')
            return value
        raise ScalarParseError('Expected a factor', position, self.text)

    def q_exponent(self):
        if not self.at('{'):
            return self.integer()
        self.advance()
        numerator = self.integer()
        denominator = 1
        if self.at('/'):
            self.advance()
            denominator = self.integer()
        self.expect('}')
        exponent = Fraction(numerator, denominator)
        if (exponent * 2).denominator != 1:
            _, _, position = self.peek()
            raise ScalarParseError('Exponent must be a multiple of 1/2', position, self.text)
        return exponent


def parse_scalar(text):
    """Parse canonical (or extended) scalar text."""
    return _Parser(text).parse()
