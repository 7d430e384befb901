"""Session state, statement evaluation and script transcripts."""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from ..errors import WorkbenchError
from ..groebner import GroebnerBasis, Ideal, format_basis
from ..permgroup import Group, format_elements
from ..poly import Polynomial, Ring, format_poly
from ..solve import DEFAULT_WIDTH, dumps_boxes, format_boxes, solve_system
from .lexer import ReplError, ReplSyntaxError, tokenize
from .parser import Statement, parse_statement

MAX_POWER = 256

POLY_PROMPT = "> "
GAP_PROMPT = "gap> "


@dataclass(frozen=True)
class SessionState:
    ring: Ring | None = None
    bindings: Mapping = field(default_factory=lambda: MappingProxyType({}))

    def bind(self, name: str, value) -> "SessionState":
        new = dict(self.bindings)
        new[name] = value
        return replace(self, bindings=MappingProxyType(new))

    @property
    def variables(self) -> tuple:
        return self.ring.names if self.ring is not None else ()


def _require_ring(state: SessionState, stmt) -> Ring:
    if state.ring is None:
        raise ReplError("no ring declared; start with e.g. ring R=0,(y,x),lp;", stmt.line, stmt.col)
    return state.ring


def _lookup(state: SessionState, name: str, kind, what: str, line, col):
    if name not in state.bindings:
        raise ReplError(f"unknown identifier {name!r}", line, col)
    value = state.bindings[name]
    if not isinstance(value, kind):
        raise ReplError(f"{name!r} is not {what}", line, col)
    return value


def eval_poly(node, ring: Ring, state: SessionState) -> Polynomial:
    """Evaluate an expression AST to a polynomial in ``ring``."""
    tag = node[0]
    if tag == "num":
        return ring.constant(node[1])
    if tag == "var":
        _, index, exp = node
        exps = [0] * ring.arity
        exps[index] = exp
        return ring.monomial(exps)
    if tag == "name":
        tok = node[2]
        value = _lookup(state, node[1], Polynomial, "a polynomial", tok.line, tok.col)
        if value.ring != ring:
            raise ReplError(f"{node[1]!r} belongs to a different ring", tok.line, tok.col)
        return value
    if tag == "neg":
        return -eval_poly(node[1], ring, state)
    if tag == "pow":
        _, base_node, n, tok = node
        base = eval_poly(base_node, ring, state)
        if len(base) > 1 and n > MAX_POWER:
            raise ReplError(f"exponent {n} too large (limit {MAX_POWER})", tok.line, tok.col)
        return base**n
    lhs = eval_poly(node[1], ring, state)
    rhs = eval_poly(node[2], ring, state)
    if tag == "add":
        return lhs + rhs
    if tag == "sub":
        return lhs - rhs
    if tag == "mul":
        return lhs * rhs
    if tag == "div":
        tok = node[3]
        if not rhs.is_constant() or rhs.is_zero():
            raise ReplError("can only divide by a nonzero constant", tok.line, tok.col)
        return lhs.scale(1 / rhs.lead_coefficient())
    raise AssertionError(f"unknown node {tag}")


def _show(name: str, value) -> str:
    if isinstance(value, Polynomial):
        return format_poly(value)
    if isinstance(value, Ideal):
        return "\n".join(f"{name}[{k}]={format_poly(g)}" for k, g in enumerate(value.generators, 1))
    if isinstance(value, GroebnerBasis):
        return format_basis(value)
    if isinstance(value, Ring):
        return "\n".join(
            [
                "// coefficients: QQ",
                f"// number of vars : {value.arity}",
                "//        block   1 : ordering lp",
                "//                  : names    " + " ".join(value.names),
            ]
        )
    return str(value)


def eval_statement(state: SessionState, stmt: Statement, width=DEFAULT_WIDTH, fmt: str = "text"):
    """Return ``(new_state, output_text)``; the input state is never modified."""
    try:
        return _eval(state, stmt, Fraction(width), fmt)
    except ReplError:
        raise
    except WorkbenchError as exc:
        raise ReplError(str(exc), stmt.line, stmt.col) from exc


def _eval(state: SessionState, stmt: Statement, width: Fraction, fmt: str):
    kind, p = stmt.kind, stmt.payload
    if kind == "empty":
        return state, ""
    if kind == "ringDecl":
        ring = Ring(p["vars"], p["order"])
        return replace(state.bind(p["name"], ring), ring=ring), ""
    if kind == "idealDecl":
        ring = _require_ring(state, stmt)
        gens = [eval_poly(e, ring, state) for e in p["exprs"]]
        return state.bind(p["name"], Ideal(ring, gens)), ""
    if kind == "assignment":
        ring = _require_ring(state, stmt)
        return state.bind(p["name"], eval_poly(p["expr"], ring, state)), ""
    if kind == "groebnerCall":
        ideal = _lookup(state, p["name"], Ideal, "an ideal", stmt.line, stmt.col)
        return state, format_basis(ideal.basis)
    if kind == "solveCall":
        ideal = _lookup(state, p["name"], Ideal, "an ideal", stmt.line, stmt.col)
        boxes = solve_system(ideal, width)
        if fmt == "json":
            return state, dumps_boxes(boxes, ideal.ring.names)
        return state, format_boxes(boxes, ideal.ring.names)
    if kind == "groupDecl":
        return state.bind(p["name"], Group.from_cycle_lists(p["generators"])), ""
    if kind == "sizeCall":
        group = _lookup(state, p["name"], Group, "a group", stmt.line, stmt.col)
        return state, str(group.order())
    if kind == "elementsCall":
        group = _lookup(state, p["name"], Group, "a group", stmt.line, stmt.col)
        return state, format_elements(group.elements())
    if kind == "orbitCall":
        group = _lookup(state, p["name"], Group, "a group", stmt.line, stmt.col)
        return state, "[ " + ", ".join(map(str, group.orbit_transversal(p["point"]))) + " ]"
    if kind == "expression":
        expr = p["expr"]
        if expr[0] == "name" and expr[1] in state.bindings:
            value = state.bindings[expr[1]]
            if not isinstance(value, Polynomial):
                return state, _show(expr[1], value)
        ring = _require_ring(state, stmt)
        return state, format_poly(eval_poly(expr, ring, state))
    raise ReplError(f"unsupported statement kind {kind!r}", stmt.line, stmt.col)


# -- scripts ----------------------------------------------------------------


@dataclass(frozen=True)
class Chunk:
    """Source text of one statement, ``;`` included, with its start position."""

    text: str
    line: int
    col: int
    complete: bool


def split_statements(text: str, line: int = 1, col: int = 1) -> list:
    """Cut source into ``;``-terminated chunks, ignoring ``//`` comments."""
    chunks = []
    start = 0
    start_pos = (line, col)
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if text.startswith("//", i):
            while i < n and text[i] != "\n":
                i += 1
                col += 1
            continue
        i += 1
        if ch == "\n":
            line += 1
            col = 1
        else:
            col += 1
        if ch == ";":
            chunks.append(Chunk(text[start:i], *start_pos, True))
            start = i
            start_pos = (line, col)
    rest = text[start:]
    if _strip_comments(rest):
        chunks.append(Chunk(rest, *start_pos, False))
    return chunks


_COMMENT = re.compile(r"//[^\n]*")


def _strip_comments(text: str) -> str:
    return "\n".join(l.rstrip() for l in _COMMENT.sub("", text).strip().splitlines() if l.strip())


@dataclass
class Transcript:
    """Echoed input and output lines; ``outputs`` holds the output lines only."""

    lines: list = field(default_factory=list)
    outputs: list = field(default_factory=list)
    error: ReplError | None = None

    def emit(self, line: str):
        self.lines.append(line)
        self.outputs.append(line)

    @property
    def ok(self) -> bool:
        return self.error is None

    @property
    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines)


class Session:
    """One interpreter instance with its own state."""

    def __init__(self, width=DEFAULT_WIDTH, fmt: str = "text", echo: bool = True,
                 poly_prompt: str = POLY_PROMPT, gap_prompt: str = GAP_PROMPT):
        if fmt not in ("text", "json"):
            raise ValueError(f"unknown output format {fmt!r}")
        self.state = SessionState()
        self.width = Fraction(width)
        self.fmt = fmt
        self.echo = echo
        self.poly_prompt = poly_prompt
        self.gap_prompt = gap_prompt

    def parse(self, chunk: Chunk) -> Statement:
        if not chunk.complete:
            raise ReplSyntaxError("missing ';' at end of statement", chunk.line, chunk.col)
        tokens = tokenize(chunk.text, self.state.variables, chunk.line, chunk.col)
        return parse_statement(tokens)

    def execute(self, source: str) -> str:
        """Run the statements in ``source`` and return their joined output.

        Raises the first ReplError; statements before it keep their effect.
        """
        out = []
        for chunk in split_statements(source):
            stmt = self.parse(chunk)
            self.state, text = eval_statement(self.state, stmt, self.width, self.fmt)
            if text:
                out.append(text)
        return "\n".join(out)

    def run(self, source: str, stop_on_error: bool = True, transcript: Transcript | None = None,
            line: int = 1) -> Transcript:
        transcript = transcript if transcript is not None else Transcript()
        for chunk in split_statements(source, line):
            echo = _strip_comments(chunk.text)
            stmt = None
            try:
                stmt = self.parse(chunk)
                if self.echo and stmt.kind != "empty":
                    self._echo(transcript, stmt, echo)
                self.state, text = eval_statement(self.state, stmt, self.width, self.fmt)
            except ReplError as exc:
                if self.echo and stmt is None and echo:
                    self._echo(transcript, None, echo)
                transcript.emit(f"? {exc}")
                if transcript.error is None:
                    transcript.error = exc
                if stop_on_error:
                    break
                continue
            if text:
                for out in text.split("\n"):
                    transcript.emit(out)
        return transcript

    def _echo(self, transcript: Transcript, stmt, text: str):
        prompt = self.gap_prompt if stmt is not None and stmt.is_gap else self.poly_prompt
        first, *rest = text.split("\n")
        transcript.lines.append(prompt + first)
        transcript.lines.extend("  " + l for l in rest)


def run_script(source, **options) -> Transcript:
    """Run a script given as text or as a path (``os.PathLike``) in batch mode."""
    if isinstance(source, os.PathLike):
        with open(source, encoding="utf-8") as fh:
            source = fh.read()
    return Session(**options).run(source, stop_on_error=True)
