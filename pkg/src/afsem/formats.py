"""APX and TGF interchange formats.

Both serializers emit canonical declaration order, so parse(serialize(F))
reproduces the framework exactly and output is byte-stable across runs.
"""

from __future__ import annotations

import re

from .core import Framework

NAME_RE = r"[A-Za-z0-9_]+"
_ARG_RE = re.compile(r"\s*arg\(\s*(%s)\s*\)\s*\.\s*" % NAME_RE)
_ATT_RE = re.compile(r"\s*att\(\s*(%s)\s*,\s*(%s)\s*\)\s*\.\s*" % (NAME_RE, NAME_RE))


class ParseError(ValueError):
    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _decode(text):
    if isinstance(text, bytes):
        return text.decode("utf-8")
    return text


def parse_apx(text):
    """Parse ``arg(NAME).`` / ``att(A,B).`` statements, in any order.

    ``%`` starts a comment; attacks may only reference declared arguments.
    """
    names = []
    declared = set()
    atts = []  # (src, dst, line)
    for lineno, raw in enumerate(_decode(text).splitlines(), start=1):
        line = raw.split("%", 1)[0]
        pos = 0
        while pos < len(line) and line[pos:].strip():
            m = _ARG_RE.match(line, pos)
            if m:
                name = m.group(1)
                if name in declared:
                    raise ParseError(f"duplicate argument declaration: {name}", lineno)
                declared.add(name)
                names.append(name)
                pos = m.end()
                continue
            m = _ATT_RE.match(line, pos)
            if m:
                atts.append((m.group(1), m.group(2), lineno))
                pos = m.end()
                continue
            raise ParseError(f"malformed statement: {line[pos:].strip()!r}", lineno)
    for src, dst, lineno in atts:
        for name in (src, dst):
            if name not in declared:
                raise ParseError(f"undeclared argument in att: {name}", lineno)
    return Framework.of(names, [(s, t) for s, t, _ in atts])


def serialize_apx(F):
    lines = [f"arg({name})." for name in F.names]
    for s, t in sorted(F.attacks):
        lines.append(f"att({F.names[s]},{F.names[t]}).")
    return "".join(line + "\n" for line in lines)


def parse_tgf(text):
    """Parse node-id lines, a literal ``#`` separator, then SRC DST edges."""
    names = []
    declared = set()
    edges = []
    seen_sep = False
    for lineno, raw in enumerate(_decode(text).splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line == "#":
            if seen_sep:
                raise ParseError("duplicate separator", lineno)
            seen_sep = True
            continue
        if not seen_sep:
            name = line.split()[0]
            if not re.fullmatch(NAME_RE, name):
                raise ParseError(f"invalid node id: {name!r}", lineno)
            if name in declared:
                raise ParseError(f"duplicate node id: {name}", lineno)
            declared.add(name)
            names.append(name)
        else:
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(f"malformed edge line: {line!r}", lineno)
            for name in parts:
                if name not in declared:
                    raise ParseError(f"unknown edge endpoint: {name}", lineno)
            edges.append((parts[0], parts[1]))
    if not seen_sep and (names or edges):
        raise ParseError("missing '#' separator", lineno)
    return Framework.of(names, edges)


def serialize_tgf(F):
    lines = list(F.names)
    lines.append("#")
    for s, t in sorted(F.attacks):
        lines.append(f"{F.names[s]} {F.names[t]}")
    return "".join(line + "\n" for line in lines)


def serialize(F, fmt):
    if fmt == "apx":
        return serialize_apx(F)
    if fmt == "tgf":
        return serialize_tgf(F)
    raise ValueError(f"unknown format: {fmt!r}")


def parse(text, fmt):
    if fmt == "apx":
        return parse_apx(text)
    if fmt == "tgf":
        return parse_tgf(text)
    raise ValueError(f"unknown format: {fmt!r}")
