"""Tokenizer for the Singular/GAP-flavoured session language."""

from __future__ import annotations

from typing import NamedTuple, Sequence

from ..errors import WorkbenchError

KEYWORDS = frozenset(
    {"ring", "ideal", "poly", "groebner", "solve", "Group", "Size", "Elements", "Orbit", "lp"}
)
PUNCT = ("//", ":=", "(", ")", ",", ";", "=", "+", "-", "*", "/", "^")


class ReplError(WorkbenchError):
    """Error tied to a source position (1-based line and column)."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.message = message
        self.line = line
        self.col = col
        super().__init__(str(self))

    def __str__(self):
        if self.line is None:
            return self.message
        return f"line {self.line}, column {self.col}: {self.message}"


class ReplSyntaxError(ReplError):
    pass


class Token(NamedTuple):
    kind: str  # INT, NAME, VAR, OP, EOF
    text: str
    line: int
    col: int
    value: object = None


def split_word(word: str, variables: Sequence[str]):
    """Split Singular short notation like ``x2y`` into ``[(x, 2), (y, 1)]``.

    Variable names are matched greedily (longest declared name first) and
    digits that follow a name are its exponent.  Each item also carries its
    start/end offsets in ``word``.  Returns None when the word does not
    decompose into declared variables.
    """
    names = sorted(variables, key=len, reverse=True)
    out = []
    i = 0
    while i < len(word):
        start = i
        for name in names:
            if word.startswith(name, i):
                i += len(name)
                break
        else:
            return None
        j = i
        while j < len(word) and word[j].isdigit():
            j += 1
        out.append((name, int(word[i:j]) if j > i else 1, start, j))
        i = j
    return out


def tokenize(text: str, variables: Sequence[str] = (), line: int = 1, col: int = 1) -> list:
    """Tokenize ``text``; words made of declared ``variables`` become VAR tokens.

    A VAR token's value is ``(variable index, exponent)``, so ``2x2`` yields
    INT 2 and VAR x^2, and ``xy`` yields two VAR tokens.  Splitting is off for
    keywords and inside ``ring`` declarations.
    """
    variables = tuple(variables)
    index = {name: k for k, name in enumerate(variables)}
    tokens = []
    i = 0
    n = len(text)
    at_start = True
    in_ring = False
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r\f\v":
            i += 1
            col += 1
            continue
        if text.startswith("//", i):
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch.isdigit() and ch.isascii():
            j = i
            while j < n and text[j].isdigit() and text[j].isascii():
                j += 1
            tokens.append(Token("INT", text[i:j], line, col, int(text[i:j])))
            col += j - i
            i = j
            at_start = False
            continue
        if (ch.isalpha() or ch == "_") and ch.isascii():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_") and text[j].isascii():
                j += 1
            word = text[i:j]
            if at_start:
                in_ring = word == "ring"
            parts = None
            if variables and not in_ring and word not in KEYWORDS:
                parts = split_word(word, variables)
            if parts is None:
                tokens.append(Token("NAME", word, line, col))
            else:
                for name, exp, a, b in parts:
                    tokens.append(Token("VAR", word[a:b], line, col + a, (index[name], exp)))
            col += j - i
            i = j
            at_start = False
            continue
        for p in PUNCT[1:]:
            if text.startswith(p, i):
                tokens.append(Token("OP", p, line, col))
                i += len(p)
                col += len(p)
                if p == ";":
                    at_start = True
                    in_ring = False
                else:
                    at_start = False
                break
        else:
            raise ReplSyntaxError(f"illegal character {ch!r}", line, col)
    return tokens
