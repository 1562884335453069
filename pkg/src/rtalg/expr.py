"""Tokenizer and Pratt parser shared by scalar literals and algebra expressions.

Grammar (loosest to tightest binding)::

    expr   := expr ('+' | '-') expr
            | expr '@' expr              tensor product (Hopf data only)
            | expr ('*' | '/') expr
            | '-' expr
            | atom '^' integer           right associative, sign allowed
    atom   := integer | identifier | '(' expr ')' | '[' expr ',' expr ']'

Parsing produces a small tuple AST that :func:`evaluate` folds with a caller
supplied environment, so the same grammar drives scalars, relations and
coproduct formulas.
"""
from __future__ import annotations

import re
from fractions import Fraction

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_.']*)|(?P<op>[-+*/^@()\[\],]))"
)


class ParseError(ValueError):
    """Malformed expression; ``token`` names the offending piece of text."""

    def __init__(self, message, token=None):
        super().__init__(message)
        self.token = token


def tokenize(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            bad = text[pos:].strip().split()[0] if text[pos:].strip() else text[pos:]
            raise ParseError(f"unexpected token {bad!r} in {text!r}", bad)
        if m.group("num") is not None:
            out.append(("num", int(m.group("num"))))
        elif m.group("ident") is not None:
            out.append(("ident", m.group("ident")))
        else:
            out.append(("op", m.group("op")))
        pos = m.end()
    out.append(("end", None))
    return out


_BINARY = {"+": 10, "-": 10, "@": 15, "*": 20, "/": 20}
_UNARY_BP = 25
_POW_BP = 30


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, op):
        t = self.take()
        if t != ("op", op):
            shown = t[1] if t[0] != "end" else "end of input"
            raise ParseError(f"expected {op!r} but found {shown!r} in {self.text!r}", str(shown))

    def parse(self):
        node = self.expr(0)
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"unexpected token {t[1]!r} in {self.text!r}", str(t[1]))
        return node

    def expr(self, min_bp):
        lhs = self.prefix()
        while True:
            kind, val = self.peek()
            if kind != "op" or val not in _BINARY:
                break
            bp = _BINARY[val]
            if bp <= min_bp:
                break
            self.take()
            rhs = self.expr(bp)
            lhs = (val, lhs, rhs)
        return lhs

    def prefix(self):
        kind, val = self.take()
        if kind == "op" and val == "-":
            return ("neg", self.expr(_UNARY_BP))
        if kind == "op" and val == "+":
            return self.expr(_UNARY_BP)
        if kind == "num":
            node = ("num", val)
        elif kind == "ident":
            node = ("sym", val)
        elif kind == "op" and val == "(":
            node = self.expr(0)
            self.expect(")")
        elif kind == "op" and val == "[":
            a = self.expr(0)
            self.expect(",")
            b = self.expr(0)
            self.expect("]")
            node = ("comm", a, b)
        else:
            shown = val if kind != "end" else "end of input"
            raise ParseError(f"unexpected token {shown!r} in {self.text!r}", str(shown))
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            k, v = self.take()
            if k != "num":
                raise ParseError(f"exponent must be an integer in {self.text!r}", str(v))
            node = ("pow", node, sign * v)
        return node


def parse(text: str):
    return _Parser(text).parse()


def free_symbols(node) -> set:
    tag = node[0]
    if tag == "sym":
        return {node[1]}
    if tag == "num":
        return set()
    out = set()
    for child in node[1:]:
        if isinstance(child, tuple):
            out |= free_symbols(child)
    return out


class Env:
    """Default evaluation environment; subclasses override ``symbol``."""

    def number(self, n: int):
        return Fraction(n)

    def symbol(self, name: str):
        raise ParseError(f"unknown symbol {name!r}", name)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def neg(self, a):
        return -a

    def power(self, a, k):
        return a ** k

    def tensor(self, a, b):
        raise ParseError("tensor product '@' is not allowed here", "@")

    def commutator(self, a, b):
        return self.sub(self.mul(a, b), self.mul(b, a))


def evaluate(node, env: Env):
    tag = node[0]
    if tag == "num":
        return env.number(node[1])
    if tag == "sym":
        return env.symbol(node[1])
    if tag == "neg":
        return env.neg(evaluate(node[1], env))
    if tag == "pow":
        return env.power(evaluate(node[1], env), node[2])
    if tag == "comm":
        return env.commutator(evaluate(node[1], env), evaluate(node[2], env))
    a = evaluate(node[1], env)
    b = evaluate(node[2], env)
    if tag == "+":
        return env.add(a, b)
    if tag == "-":
        return env.sub(a, b)
    if tag == "*":
        return env.mul(a, b)
    if tag == "/":
        return env.div(a, b)
    if tag == "@":
        return env.tensor(a, b)
    raise ParseError(f"bad node {tag!r}")


class ScalarEnv(Env):
    def __init__(self, field, params=None):
        self.field = field
        self.params = dict(params or {})

    def number(self, n):
        return self.field(n)

    def symbol(self, name):
        if name in self.params:
            return self.field(self.params[name])
        if name == "q" and self.field.has_q:
            return self.field.q
        raise ParseError(f"unknown scalar symbol {name!r}", name)

    def div(self, a, b):
        if not b:
            raise ParseError("division by zero", "/")
        return a / b


def parse_scalar(text: str, field, params=None):
    return evaluate(parse(text), ScalarEnv(field, params))
