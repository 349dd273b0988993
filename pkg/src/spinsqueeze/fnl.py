"""Parser for nonlinear Hamiltonians F(N) written as text.

Grammar (versioned public contract, v1)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := 'N' | number | 'sin' '(' expr ')' | 'cos' '(' expr ')'
            | '(' expr ')' | '-' base

Numbers are plain decimal literals.  Whitespace is ignored.  There is no
division and exponents are nonnegative integers, so every expression is
total on the nonnegative integers (up to float overflow, which
:func:`evaluate` reports).

Note that ``-`` inside ``base`` binds tighter than ``^``: ``-N^2`` is
``(-N)^2``.  Write ``0-N^2`` or ``-(N^2)`` for the other reading.
"""

import math
import re
from dataclasses import dataclass, field

import numpy as np

from .errors import ArgumentError, EvaluationError, ParseError

GRAMMAR_VERSION = 1

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>\d+\.\d*|\.\d+|\d+)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*^()])
    """,
    re.VERBOSE,
)

_FUNCTIONS = {"sin": math.sin, "cos": math.cos}


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(source):
    tokens = []
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise ParseError(f"unexpected character {source[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(_Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(_Token("end", "", len(source)))
    return tokens


class _Parser:
    """Recursive descent over the token list; each rule returns a closure n -> float."""

    def __init__(self, source):
        self.source = source
        self.tokens = _tokenize(source)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text):
        if self.tok.text != text:
            raise ParseError(f"expected {text!r}, found {self._describe(self.tok)}", self.tok.pos)
        return self.advance()

    @staticmethod
    def _describe(tok):
        return "end of input" if tok.kind == "end" else repr(tok.text)

    def parse(self):
        if self.tok.kind == "end":
            raise ParseError("empty expression", 0)
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self._describe(self.tok)}", self.tok.pos)
        return node

    def expr(self):
        node = self.term()
        while self.tok.text in ("+", "-"):
            op = self.advance().text
            rhs = self.term()
            if op == "+":
                node = (lambda a, b: lambda n: a(n) + b(n))(node, rhs)
            else:
                node = (lambda a, b: lambda n: a(n) - b(n))(node, rhs)
        return node

    def term(self):
        node = self.factor()
        while self.tok.text == "*":
            self.advance()
            rhs = self.factor()
            node = (lambda a, b: lambda n: a(n) * b(n))(node, rhs)
        return node

    def factor(self):
        node = self.base()
        if self.tok.text == "^":
            self.advance()
            tok = self.tok
            if tok.kind != "number":
                raise ParseError(f"expected integer exponent, found {self._describe(tok)}", tok.pos)
            if not tok.text.isdigit():
                raise ParseError(f"non-integer exponent {tok.text!r}", tok.pos)
            self.advance()
            k = int(tok.text)
            node = (lambda a: lambda n: a(n) ** k)(node)
        return node

    def base(self):
        tok = self.tok
        if tok.kind == "number":
            self.advance()
            value = float(tok.text)
            return lambda n: value
        if tok.kind == "ident":
            self.advance()
            if tok.text == "N":
                return lambda n: float(n)
            fn = _FUNCTIONS.get(tok.text)
            if fn is None:
                raise ParseError(f"unknown identifier {tok.text!r}", tok.pos)
            self.expect("(")
            arg = self.expr()
            self.expect(")")
            return lambda n: fn(arg(n))
        if tok.text == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        if tok.text == "-":
            self.advance()
            inner = self.base()
            return lambda n: -inner(n)
        raise ParseError(f"unexpected {self._describe(tok)}", tok.pos)


@dataclass(frozen=True)
class NonlinearFunction:
    """Real map n -> F(n) on the nonnegative integers, with its source text."""

    source: str
    func: object = field(repr=False, compare=False)

    def __call__(self, n):
        return evaluate(self, n)

    def values(self, two_j, extra=0):
        """F(0), ..., F(two_j + extra) as a float array; raises on non-finite values."""
        return np.array([evaluate(self, n) for n in range(two_j + 1 + extra)])

    @classmethod
    def from_callable(cls, func, source=None):
        """Wrap a Python callable (builtin Hamiltonians, tests)."""
        return cls(source or getattr(func, "__name__", "<callable>"), func)

    @classmethod
    def polynomial(cls, coeffs):
        """F(n) = sum_i coeffs[i] * n**i."""
        coeffs = tuple(float(c) for c in coeffs)
        terms = [f"{c:g}*N^{i}" for i, c in enumerate(coeffs) if c != 0.0]
        source = " + ".join(terms) or "0"

        def poly(n):
            acc = 0.0
            for c in reversed(coeffs):
                acc = acc * n + c
            return acc

        return cls(source, poly)


def parse(expr):
    """Parse ``expr`` into a :class:`NonlinearFunction`.

    Raises
    ------
    ParseError
        With the offending character offset on syntax errors, unknown
        identifiers, and non-integer exponents.
    """
    if not isinstance(expr, str):
        raise ArgumentError(f"expression must be a string, got {type(expr).__name__}")
    return NonlinearFunction(expr, _Parser(expr).parse())


def evaluate(f, n):
    """F(n) as a finite float."""
    if n < 0:
        raise ArgumentError(f"F(N) is defined on n >= 0, got {n}")
    try:
        value = float(f.func(n))
    except (OverflowError, ValueError):
        # float ** int overflow, or sin/cos of an infinite argument
        raise EvaluationError(f.source, n) from None
    if not math.isfinite(value):
        raise EvaluationError(f.source, n, value)
    return value


def builtin(name):
    """Named Hamiltonians: the Kerr-type powers, N^2-N, and sin(2N)."""
    return parse(BUILTINS[name])


BUILTINS = {
    "kerr2": "N^2",
    "kerr3": "N^3",
    "kerr4": "N^4",
    "parity": "N^2-N",
    "sin2": "sin(2*N)",
}
