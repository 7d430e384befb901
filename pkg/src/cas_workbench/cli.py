"""``workbench`` command: run a script or an interactive session."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .repl.session import Session, Transcript
from .solve import DEFAULT_WIDTH


def _width(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid width {text!r}; use NUM/DEN, e.g. 1/1024") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("width must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="workbench",
        description="Groebner bases, certified real solving and permutation groups in one session.",
    )
    parser.add_argument("--script", metavar="FILE", help="run FILE in batch mode instead of reading stdin")
    parser.add_argument("--format", choices=("text", "json"), default="text", help="output format of solve()")
    parser.add_argument("--width", type=_width, default=DEFAULT_WIDTH, metavar="NUM/DEN",
                        help="maximal box width for solve() (default 1/1024)")
    parser.add_argument("--quiet", action="store_true", help="print outputs only, without echoing statements")
    return parser


def _interactive(session: Session, stdin, stdout, stderr) -> int:
    """Read statements from stdin; errors are reported and the session continues."""
    tty = stdin.isatty()
    buffer = ""
    buffer_line = 1
    while True:
        if tty:
            stdout.write(session.poly_prompt if not buffer.strip() else ". ")
            stdout.flush()
        line = stdin.readline()
        if not line:
            break
        buffer += line
        if ";" not in line:
            continue
        cut = buffer.rfind(";") + 1
        source, buffer = buffer[:cut], buffer[cut:]
        transcript = session.run(source, stop_on_error=False, line=buffer_line)
        buffer_line += source.count("\n")
        for out in transcript.outputs if tty else transcript.lines:
            (stderr if out.startswith("? ") else stdout).write(out + "\n")
    if buffer.strip():
        transcript = session.run(buffer, stop_on_error=False, line=buffer_line)
        for out in transcript.lines:
            (stderr if out.startswith("? ") else stdout).write(out + "\n")
    return 0


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    session = Session(width=args.width, fmt=args.format, echo=not args.quiet)
    if args.script is None:
        return _interactive(session, stdin, stdout, stderr)
    try:
        with open(args.script, encoding="utf-8") as fh:
            source = fh.read()
    except OSError as exc:
        stderr.write(f"workbench: cannot read {args.script}: {exc.strerror}\n")
        return 2
    transcript = session.run(source, stop_on_error=True)
    for line in transcript.lines:
        if line.startswith("? "):
            stderr.write(line + "\n")
        else:
            stdout.write(line + "\n")
    return 0 if transcript.ok else 1


if __name__ == "__main__":
    sys.exit(main())
