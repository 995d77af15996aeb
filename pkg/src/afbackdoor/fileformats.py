"""Parsing and serialization of the apx and tgf exchange formats.

apx: one statement per line, ``arg(<name>).`` or ``att(<a>,<b>).``. Blank
lines and lines starting with ``%`` are ignored. tgf: one node id per
line, a ``#`` separator, then ``src dst`` edge lines.

Both parsers are single-pass: an attack may only reference arguments
already declared above it.
"""

from __future__ import annotations

import re

from .framework import ArgumentationFramework, is_valid_name

__all__ = ["ParseError", "parse_apx", "parse_tgf", "serialize_apx"]

_ARG_RE = re.compile(r"arg\(([^\s(),]+)\)\.\Z")
_ATT_RE = re.compile(r"att\(([^\s(),]+),([^\s(),]+)\)\.\Z")


class ParseError(ValueError):
    """Malformed input; the message names the offending line."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_apx(text: str) -> ArgumentationFramework:
    """Read an apx document into a framework, preserving declaration order."""
    arguments: list[str] = []
    declared: set[str] = set()
    attacks: list[tuple[str, str]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if match := _ARG_RE.fullmatch(line):
            name = match.group(1)
            if name in declared:
                raise ParseError(line_no, f"duplicate argument declaration {name!r}")
            declared.add(name)
            arguments.append(name)
        elif match := _ATT_RE.fullmatch(line):
            source, target = match.group(1), match.group(2)
            for name in (source, target):
                if name not in declared:
                    raise ParseError(line_no, f"undeclared argument {name!r}")
            attacks.append((source, target))
        else:
            raise ParseError(line_no, f"malformed statement: {raw!r}")
    return ArgumentationFramework(arguments, attacks)


def parse_tgf(text: str) -> ArgumentationFramework:
    """Read a tgf document (node ids, ``#``, edge pairs) into a framework."""
    arguments: list[str] = []
    declared: set[str] = set()
    attacks: list[tuple[str, str]] = []
    in_edges = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line == "#":
            if in_edges:
                raise ParseError(line_no, "second '#' separator")
            in_edges = True
            continue
        if not in_edges:
            if not is_valid_name(line):
                raise ParseError(line_no, f"invalid node id {line!r}")
            if line in declared:
                raise ParseError(line_no, f"duplicate node {line!r}")
            declared.add(line)
            arguments.append(line)
        else:
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(line_no, f"malformed edge line: {raw!r}")
            source, target = parts
            for name in (source, target):
                if name not in declared:
                    raise ParseError(line_no, f"unknown endpoint {name!r}")
            attacks.append((source, target))
    if not in_edges:
        raise ParseError(len(text.splitlines()) + 1, "missing '#' separator")
    return ArgumentationFramework(arguments, attacks)


def serialize_apx(af: ArgumentationFramework) -> str:
    """Render ``af`` as apx text that parses back to an equal framework.

    Arguments come first, then attacks, each group in declaration order,
    LF line endings, one trailing newline unless the framework is empty.
    """
    lines = [f"arg({name})." for name in af.arguments]
    lines.extend(f"att({a},{b})." for a, b in af.attacks)
    if not lines:
        return ""
    return "\n".join(lines) + "\n"
