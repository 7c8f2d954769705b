"""Parsing and evaluation of sequence-term expressions.

A term expression describes the general term of a sequence in the free
variable ``n`` (1-based). The grammar, loosest binding first:

    expr    :=  term (('+' | '-') term)*
    term    :=  factor (('*' | '/') factor)*
    factor  :=  '-' factor | power
    power   :=  atom ['^' ['-'] integer]
    atom    :=  number | 'n' | constant | func '(' expr ')'
             |  '(' expr ')' | '[' expr '|' expr ']'

Constants: i1, i2, j, e1, e2, pi. Functions: exp, log, sqrt (log is the
componentwise principal branch). The bracket atom builds a value from
its two idempotent components; each component expression must evaluate
to a value with no second complex part.

``parse`` produces an immutable AST, ``render`` turns an AST back into
canonical text (round-trips through ``parse``), ``eval_term``
substitutes a concrete index. Numeric failures during evaluation carry
the term index that produced them.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import NamedTuple

from . import transcendental
from .core import E1, E2, I1, I2, J, Bicomplex, NonFiniteError, SingularOperand

__all__ = [
    "ParseError",
    "Num", "Const", "Var", "Neg", "Add", "Sub", "Mul", "Div", "Pow",
    "Call", "Idem",
    "parse", "render", "eval_term", "term_generator",
    "CONSTANT_NAMES", "FUNCTION_NAMES",
]

CONSTANT_NAMES = ("i1", "i2", "j", "e1", "e2", "pi")
FUNCTION_NAMES = ("exp", "log", "sqrt")


class ParseError(ValueError):
    """Syntax error with the character offset and the expected tokens."""

    def __init__(self, message: str, position: int, expected=None):
        self.position = position
        self.expected = frozenset(expected) if expected else frozenset()
        detail = f"{message} at offset {position}"
        if self.expected:
            detail += " (expected: " + ", ".join(sorted(self.expected)) + ")"
        super().__init__(detail)


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Div:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Call:
    func: str
    arg: object


@dataclass(frozen=True)
class Idem:
    first: object
    second: object


class _Token(NamedTuple):
    kind: str     # "num", "name", "end", or the operator character
    text: str
    position: int


_TOKEN_RE = re.compile(
    r"(?P<num>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[+\-*/^()\[\]|])"
)


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", i)
        kind = m.lastgroup
        if kind == "op":
            kind = m.group()
        tokens.append(_Token(kind, m.group(), i))
        i = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


_ATOM_EXPECTED = ("number", "name", "n", "'('", "'['", "'-'")


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(
                f"unexpected {tok.text!r}" if tok.kind != "end" else "unexpected end of input",
                tok.position,
                expected={f"'{kind}'"},
            )
        return self.advance()

    def parse_expr(self):
        node = self.parse_term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            right = self.parse_term()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def parse_term(self):
        node = self.parse_factor()
        while self.peek().kind in ("*", "/"):
            op = self.advance().kind
            right = self.parse_factor()
            node = Mul(node, right) if op == "*" else Div(node, right)
        return node

    def parse_factor(self):
        if self.peek().kind == "-":
            self.advance()
            return Neg(self.parse_factor())
        return self.parse_power()

    def parse_power(self):
        base = self.parse_atom()
        if self.peek().kind != "^":
            return base
        self.advance()
        negative = False
        if self.peek().kind == "-":
            self.advance()
            negative = True
        tok = self.expect("num")
        if not tok.text.isdigit():
            raise ParseError(
                "exponent must be an integer literal", tok.position,
                expected={"integer"},
            )
        k = int(tok.text)
        return Pow(base, -k if negative else k)

    def parse_atom(self):
        tok = self.peek()
        if tok.kind == "num":
            self.advance()
            return Num(float(tok.text))
        if tok.kind == "name":
            self.advance()
            if tok.text in FUNCTION_NAMES:
                self.expect("(")
                arg = self.parse_expr()
                self.expect(")")
                return Call(tok.text, arg)
            if tok.text == "n":
                return Var()
            if tok.text in CONSTANT_NAMES:
                return Const(tok.text)
            raise ParseError(
                f"unknown name {tok.text!r}", tok.position,
                expected=set(CONSTANT_NAMES) | set(FUNCTION_NAMES) | {"n"},
            )
        if tok.kind == "(":
            self.advance()
            node = self.parse_expr()
            self.expect(")")
            return node
        if tok.kind == "[":
            self.advance()
            first = self.parse_expr()
            self.expect("|")
            second = self.parse_expr()
            self.expect("]")
            return Idem(first, second)
        raise ParseError(
            f"unexpected {tok.text!r}" if tok.kind != "end" else "unexpected end of input",
            tok.position,
            expected=set(_ATOM_EXPECTED),
        )


def parse(text: str):
    """Parse a term expression into an AST. Raises ParseError."""
    parser = _Parser(_tokenize(text))
    node = parser.parse_expr()
    tail = parser.peek()
    if tail.kind != "end":
        raise ParseError(
            f"unexpected trailing {tail.text!r}", tail.position,
            expected={"end of input"},
        )
    return node


def _fmt_number(value: float) -> str:
    text = repr(value)
    return text[:-2] if text.endswith(".0") else text


# binding strength per node type; atoms bind tightest
_PRECEDENCE = {
    Add: 1, Sub: 1, Mul: 2, Div: 2, Neg: 3, Pow: 4,
    Num: 9, Const: 9, Var: 9, Call: 9, Idem: 9,
}


def render(node) -> str:
    """Canonical text for an AST; ``parse(render(node))`` recovers it.

    Canonical form keeps numeric literals nonnegative (the parser never
    produces a negative literal; negation is an explicit node).
    """
    return _render(node, 0)


def _render(node, context: int) -> str:
    if isinstance(node, Num):
        text = _fmt_number(node.value)
    elif isinstance(node, Const):
        text = node.name
    elif isinstance(node, Var):
        text = "n"
    elif isinstance(node, Add):
        text = f"{_render(node.left, 1)} + {_render(node.right, 2)}"
    elif isinstance(node, Sub):
        text = f"{_render(node.left, 1)} - {_render(node.right, 2)}"
    elif isinstance(node, Mul):
        text = f"{_render(node.left, 2)}*{_render(node.right, 3)}"
    elif isinstance(node, Div):
        text = f"{_render(node.left, 2)}/{_render(node.right, 3)}"
    elif isinstance(node, Neg):
        text = f"-{_render(node.operand, 3)}"
    elif isinstance(node, Pow):
        text = f"{_render(node.base, 9)}^{node.exponent}"
    elif isinstance(node, Call):
        text = f"{node.func}({_render(node.arg, 0)})"
    elif isinstance(node, Idem):
        text = f"[{_render(node.first, 0)} | {_render(node.second, 0)}]"
    else:
        raise TypeError(f"not an expression node: {node!r}")
    if _PRECEDENCE[type(node)] < context:
        return f"({text})"
    return text


_CONSTANTS = {
    "i1": I1,
    "i2": I2,
    "j": J,
    "e1": E1,
    "e2": E2,
    "pi": Bicomplex(math.pi),
}

_FUNCTIONS = {
    "exp": transcendental.exp,
    "log": transcendental.log_principal,
    "sqrt": transcendental.sqrt,
}


def _eval(node, n: int) -> Bicomplex:
    if isinstance(node, Num):
        return Bicomplex(node.value)
    if isinstance(node, Const):
        return _CONSTANTS[node.name]
    if isinstance(node, Var):
        return Bicomplex(float(n))
    if isinstance(node, Neg):
        return -_eval(node.operand, n)
    if isinstance(node, Add):
        return _eval(node.left, n) + _eval(node.right, n)
    if isinstance(node, Sub):
        return _eval(node.left, n) - _eval(node.right, n)
    if isinstance(node, Mul):
        return _eval(node.left, n) * _eval(node.right, n)
    if isinstance(node, Div):
        return _eval(node.left, n) / _eval(node.right, n)
    if isinstance(node, Pow):
        return _eval(node.base, n) ** node.exponent
    if isinstance(node, Call):
        return _FUNCTIONS[node.func](_eval(node.arg, n))
    if isinstance(node, Idem):
        first = _eval(node.first, n)
        second = _eval(node.second, n)
        if first.z2 != 0 or second.z2 != 0:
            raise ValueError(
                "idempotent slot values must have no second complex part"
            )
        return Bicomplex.from_idempotent(first.z1, second.z1)
    raise TypeError(f"not an expression node: {node!r}")


def eval_term(node, n: int) -> Bicomplex:
    """Evaluate the term expression at index ``n`` (a 1-based integer).

    SingularOperand and NonFiniteError raised during evaluation are
    re-raised carrying ``term_index=n``.
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError("term index must be an integer")
    if n < 1:
        raise ValueError("term index must be at least 1")
    try:
        return _eval(node, n)
    except SingularOperand as err:
        raise SingularOperand(str(err), term_index=n) from None
    except NonFiniteError as err:
        raise NonFiniteError(str(err), term_index=n) from None


def term_generator(source, start: int = 1):
    """Yield eval_term(source, n) for n = start, start+1, ...

    ``source`` may be an AST or expression text (parsed once up front).
    """
    node = parse(source) if isinstance(source, str) else source
    if start < 1:
        raise ValueError("start index must be at least 1")
    n = start
    while True:
        yield eval_term(node, n)
        n += 1
