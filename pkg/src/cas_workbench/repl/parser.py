"""Recursive-descent parser producing one Statement per ``;``-terminated input."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .lexer import ReplSyntaxError, Token

MAX_NESTING = 100
GAP_KINDS = frozenset({"groupDecl", "sizeCall", "elementsCall", "orbitCall"})

# expression AST nodes are tuples:
#   ("num", Fraction) ("var", index, exp) ("name", str, token)
#   ("add"|"sub"|"mul"|"div", lhs, rhs, token) ("neg", operand) ("pow", base, n, token)


@dataclass(frozen=True)
class Statement:
    kind: str
    payload: dict = field(default_factory=dict)
    line: int = 1
    col: int = 1

    @property
    def is_gap(self) -> bool:
        return self.kind in GAP_KINDS


class _Parser:
    def __init__(self, tokens):
        self.tokens = list(tokens)
        if self.tokens:
            last = self.tokens[-1]
            eof = Token("EOF", "", last.line, last.col + len(last.text))
        else:
            eof = Token("EOF", "", 1, 1)
        self.tokens.append(eof)
        self.pos = 0
        self.depth = 0

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def next(self) -> Token:
        tok = self.peek()
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.peek()
        return ReplSyntaxError(message, tok.line, tok.col)

    def at(self, text: str, offset: int = 0) -> bool:
        tok = self.peek(offset)
        return tok.kind in ("OP", "NAME") and tok.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            tok = self.peek()
            found = "end of input" if tok.kind == "EOF" else repr(tok.text)
            raise self.error(f"expected {text!r}, found {found}")
        return self.next()

    def expect_int(self) -> Token:
        tok = self.peek()
        if tok.kind != "INT":
            raise self.error("expected an integer")
        return self.next()

    def expect_name(self, allow_var: bool = False) -> Token:
        tok = self.peek()
        if tok.kind == "NAME" or (allow_var and tok.kind == "VAR"):
            return self.next()
        raise self.error("expected an identifier")

    # -- statements --------------------------------------------------------

    def statement(self) -> Statement:
        first = self.peek()
        stmt = self._statement_body(first)
        self.expect(";")
        if self.peek().kind != "EOF":
            raise self.error("unexpected input after ';'")
        return stmt

    def _statement_body(self, first: Token) -> Statement:
        pos = {"line": first.line, "col": first.col}
        if self.at(";"):
            return Statement("empty", {}, **pos)
        if first.kind == "NAME":
            word = first.text
            if word == "ring":
                return self.ring_decl(pos)
            if word == "ideal":
                self.next()
                name = self.expect_name().text
                self.expect("=")
                exprs = [self.expr()]
                while self.at(","):
                    self.next()
                    exprs.append(self.expr())
                return Statement("idealDecl", {"name": name, "exprs": exprs}, **pos)
            if word == "poly":
                self.next()
                name = self.expect_name().text
                self.expect("=")
                return Statement("assignment", {"name": name, "expr": self.expr()}, **pos)
            calls = {
                "groebner": "groebnerCall",
                "solve": "solveCall",
                "Size": "sizeCall",
                "Elements": "elementsCall",
                "Orbit": "orbitCall",
            }
            if word in calls and self.at("(", 1):
                self.next()
                self.expect("(")
                target = self.expect_name().text
                payload = {"name": target}
                if word == "Orbit":
                    self.expect(",")
                    payload["point"] = self.expect_int().value
                self.expect(")")
                return Statement(calls[word], payload, **pos)
            if self.at(":=", 1) or (self.at("=", 1) and self.at("Group", 2)):
                self.next()
                self.next()
                return self.group_rhs(first.text, pos)
            if self.at("=", 1):
                self.next()
                self.next()
                return Statement("assignment", {"name": first.text, "expr": self.expr()}, **pos)
        return Statement("expression", {"expr": self.expr()}, **pos)

    def ring_decl(self, pos) -> Statement:
        self.expect("ring")
        name = self.expect_name().text
        self.expect("=")
        char_tok = self.expect_int()
        if char_tok.value != 0:
            raise self.error(
                f"characteristic {char_tok.value} is not supported; only 0 (rational coefficients) is available",
                char_tok,
            )
        self.expect(",")
        self.expect("(")
        names = [self.expect_name(allow_var=True).text]
        while self.at(","):
            self.next()
            names.append(self.expect_name(allow_var=True).text)
        self.expect(")")
        self.expect(",")
        order_tok = self.expect_name()
        if order_tok.text != "lp":
            raise self.error(f"unknown monomial order {order_tok.text!r}; only lp (lexicographic) is supported", order_tok)
        if len(set(names)) != len(names):
            raise self.error("ring variables must be distinct")
        return Statement("ringDecl", {"name": name, "vars": tuple(names), "order": "lp"}, **pos)

    def group_rhs(self, name: str, pos) -> Statement:
        self.expect("Group")
        self.expect("(")
        gens = []
        if not self.at(")"):
            gens.append(self.cycle_product())
            while self.at(","):
                self.next()
                gens.append(self.cycle_product())
        self.expect(")")
        return Statement("groupDecl", {"name": name, "generators": gens}, **pos)

    def cycle_product(self) -> list:
        """One generator: adjacent cycles, e.g. ``(1,3)(2,4)``; ``()`` is identity."""
        cycles = [self.cycle()]
        while self.at("("):
            cycles.append(self.cycle())
        return [c for c in cycles if c]

    def cycle(self) -> list:
        self.expect("(")
        points = []
        if not self.at(")"):
            points.append(self.expect_int())
            while self.at(","):
                self.next()
                points.append(self.expect_int())
        self.expect(")")
        values = [t.value for t in points]
        for t in points:
            if t.value < 1:
                raise self.error("cycle points start at 1", t)
        if len(set(values)) != len(values):
            raise self.error("point repeated within a cycle", points[0])
        return values

    # -- polynomial expressions --------------------------------------------

    def expr(self):
        if self.at("-") or self.at("+"):
            tok = self.next()
            node = self.term()
            if tok.text == "-":
                node = ("neg", node)
        else:
            node = self.term()
        while self.at("+") or self.at("-"):
            tok = self.next()
            node = ("add" if tok.text == "+" else "sub", node, self.term(), tok)
        return node

    def _starts_implicit_factor(self) -> bool:
        tok = self.peek()
        return tok.kind in ("VAR", "NAME") or (tok.kind == "OP" and tok.text == "(")

    def term(self):
        node = self.power()
        while True:
            if self.at("*") or self.at("/"):
                tok = self.next()
                node = ("mul" if tok.text == "*" else "div", node, self.power(), tok)
            elif self._starts_implicit_factor():
                tok = self.peek()
                node = ("mul", node, self.power(), tok)
            else:
                return node

    def power(self):
        node = self.atom()
        if self.at("^"):
            tok = self.next()
            node = ("pow", node, self.expect_int().value, tok)
        return node

    def atom(self):
        tok = self.peek()
        if tok.kind == "INT":
            self.next()
            return ("num", Fraction(tok.value))
        if tok.kind == "VAR":
            self.next()
            return ("var",) + tok.value
        if tok.kind == "NAME":
            if tok.text in ("ring", "ideal", "poly"):
                raise self.error(f"keyword {tok.text!r} cannot appear in an expression")
            self.next()
            return ("name", tok.text, tok)
        if self.at("("):
            if self.depth >= MAX_NESTING:
                raise self.error("parentheses nested too deeply")
            self.next()
            self.depth += 1
            node = self.expr()
            self.depth -= 1
            self.expect(")")
            return node
        found = "end of input" if tok.kind == "EOF" else repr(tok.text)
        raise self.error(f"unexpected {found}")


def parse_statement(tokens) -> Statement:
    """Parse the tokens of exactly one statement, including its ``;``."""
    return _Parser(tokens).statement()


def parse_expression(tokens):
    """Parse a bare polynomial expression (no trailing ``;``)."""
    p = _Parser(tokens)
    node = p.expr()
    if p.peek().kind != "EOF":
        raise p.error(f"unexpected {p.peek().text!r}")
    return node
