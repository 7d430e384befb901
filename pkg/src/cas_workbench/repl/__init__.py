"""Interpreter for the Singular-style polynomial and GAP-style group sub-languages."""

from .lexer import ReplError, ReplSyntaxError, Token, tokenize
from .parser import Statement, parse_expression, parse_statement
from .session import Session, SessionState, Transcript, eval_statement, run_script, split_statements

__all__ = [
    "ReplError",
    "ReplSyntaxError",
    "Session",
    "SessionState",
    "Statement",
    "Token",
    "Transcript",
    "eval_statement",
    "parse_expression",
    "parse_statement",
    "run_script",
    "split_statements",
    "tokenize",
]
