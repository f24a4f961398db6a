"""Text format for presentations and module literals.

::

    # A[2]
    vertices 3
    arrow b1 2 1
    arrow b2 3 2
    relation b1*b2
    max_path_length 8        # optional

    module M
      dims = [1, 1, 0]
      b1 = [[1]]
    end

A relation is ``TERM (+|-) TERM ...`` with ``TERM = [COEF[*]]NAME*NAME*...``
and ``COEF`` an integer or ``p/q``.  Words are read right to left ("b1*b2"
means b2 first) unless the ``left-to-right`` convention is requested, in
which case every word is reversed on input.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path as FsPath

from .algebra import Arrow, QuiverPresentation
from .errors import ParseError, PresentationError
from .linalg import fmt, qarray, to_strings

RIGHT_TO_LEFT = "right-to-left"
LEFT_TO_RIGHT = "left-to-right"

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*]))")
_FRACTION = re.compile(r"(?<![\w\"])(-?\d+/\d+)")


@dataclass
class ModuleBlock:
    name: str
    dims: list[int]
    action: dict[str, list[list[Fraction]]]
    line: int


@dataclass
class Document:
    presentation: QuiverPresentation
    modules: list[ModuleBlock] = field(default_factory=list)


def _tokens(text: str, line: int, offset: int):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos:].strip()[0]!r}", line,
                             offset + pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), offset + start + 1))
        pos = m.end()
    return out


def _parse_relation(text: str, line: int, offset: int):
    """Parse ``TERM (+|-) TERM ...`` into ``[(coef, word, columns)]``."""
    toks = _tokens(text, line, offset)
    if not toks:
        raise ParseError("empty relation", line, offset + 1)
    terms = []
    i = 0
    sign = 1
    first = True
    while i < len(toks):
        kind, val, col = toks[i]
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            raise ParseError(f"expected '+' or '-' before {val!r}", line, col)
        if i >= len(toks):
            raise ParseError("relation ends after a sign", line, col)
        coef = Fraction(1)
        kind, val, col = toks[i]
        if kind == "num":
            p, _, q = val.partition("/")
            if q and int(q) == 0:
                raise ParseError("zero denominator", line, col)
            coef = Fraction(int(p), int(q or 1))
            i += 1
            if i < len(toks) and toks[i][:2] == ("op", "*"):
                i += 1
        if i >= len(toks) or toks[i][0] != "name":
            where = toks[i][2] if i < len(toks) else col
            raise ParseError("expected an arrow name", line, where)
        word = [toks[i][1]]
        cols = [toks[i][2]]
        i += 1
        while i + 1 < len(toks) and toks[i][:2] == ("op", "*") and toks[i + 1][0] == "name":
            word.append(toks[i + 1][1])
            cols.append(toks[i + 1][2])
            i += 2
        if i < len(toks) and toks[i][:2] == ("op", "*"):
            raise ParseError("dangling '*'", line, toks[i][2])
        terms.append((sign * coef, tuple(word), tuple(cols)))
        sign = 1
        first = False
    return terms


def _parse_matrix(text: str, line: int, col: int) -> list[list[Fraction]]:
    try:
        data = json.loads(_FRACTION.sub(r'"\1"', text))
    except json.JSONDecodeError as e:
        raise ParseError(f"bad matrix literal: {e.msg}", line, col + e.pos) from None
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ParseError("matrix must be a list of rows", line, col)
    try:
        return [[Fraction(x) for x in r] for r in data]
    except (TypeError, ValueError, ZeroDivisionError):
        raise ParseError("matrix entries must be integers or p/q", line, col) from None


def _strip_comment(raw: str) -> str:
    return raw.split("#", 1)[0].rstrip()


def parse_document(text: str, convention: str = RIGHT_TO_LEFT) -> Document:
    if convention not in (RIGHT_TO_LEFT, LEFT_TO_RIGHT):
        raise ValueError(f"unknown convention {convention!r}")
    vertex_count = None
    max_len = None
    arrows: list[Arrow] = []
    relations = []
    modules: list[ModuleBlock] = []
    current: ModuleBlock | None = None

    for ln, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        if not body.strip():
            continue
        indent = len(body) - len(body.lstrip())
        head, _, rest = body.strip().partition(" ")
        rest_col = indent + len(head) + 2
        rest = rest.strip()

        if current is not None:
            if head == "end" and not rest:
                modules.append(current)
                current = None
                continue
            key, eq, value = body.strip().partition("=")
            key = key.strip()
            if not eq:
                raise ParseError("expected 'NAME = [...]' or 'end' inside a module block", ln, indent + 1)
            vcol = body.index("=") + 2
            if key == "dims":
                dims = _parse_matrix(f"[{value.strip()}]", ln, vcol)[0]
                if any(d.denominator != 1 or d < 0 for d in dims):
                    raise ParseError("dims must be non-negative integers", ln, vcol)
                current.dims = [int(d) for d in dims]
            else:
                if key in current.action:
                    raise ParseError(f"matrix for {key!r} given twice", ln, indent + 1)
                current.action[key] = _parse_matrix(value.strip(), ln, vcol)
            continue

        if head == "vertices":
            if vertex_count is not None:
                raise ParseError("'vertices' given twice", ln, indent + 1)
            if not rest.isdigit() or int(rest) < 1:
                raise ParseError("expected a positive vertex count", ln, rest_col)
            vertex_count = int(rest)
        elif head == "max_path_length":
            if not rest.isdigit() or int(rest) < 1:
                raise ParseError("expected a positive integer", ln, rest_col)
            max_len = int(rest)
        elif head == "arrow":
            if vertex_count is None:
                raise ParseError("'vertices' must come before arrows", ln, indent + 1)
            parts = rest.split()
            if len(parts) != 3:
                raise ParseError("expected 'arrow NAME SOURCE TARGET'", ln, rest_col)
            name, src, dst = parts
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                raise ParseError(f"invalid arrow name {name!r}", ln, rest_col)
            if any(a.name == name for a in arrows):
                raise ParseError(f"duplicate arrow name {name!r}", ln, rest_col)
            for tok in (src, dst):
                if not tok.isdigit() or not 1 <= int(tok) <= vertex_count:
                    raise ParseError(f"vertex {tok!r} outside 1..{vertex_count}", ln,
                                     body.index(tok, rest_col - 1 + len(name)) + 1)
            arrows.append(Arrow(name, int(src), int(dst)))
        elif head == "relation":
            if vertex_count is None:
                raise ParseError("'vertices' must come before relations", ln, indent + 1)
            terms = _parse_relation(rest, ln, rest_col - 1)
            known = {a.name for a in arrows}
            for _, word, cols in terms:
                for name, col in zip(word, cols):
                    if name not in known:
                        raise ParseError(f"unknown arrow {name!r}", ln, col)
            if convention == LEFT_TO_RIGHT:
                terms = [(c, w[::-1], col) for c, w, col in terms]
            merged: dict[tuple[str, ...], Fraction] = {}
            for c, w, _ in terms:
                merged[w] = merged.get(w, 0) + c
            rel = tuple((c, w) for w, c in merged.items() if c)
            if not rel:
                raise ParseError("relation cancels to zero", ln, rest_col)
            try:
                QuiverPresentation(vertex_count, tuple(arrows), (rel,))
            except PresentationError as e:
                raise type(e)(f"line {ln}, column {terms[0][2][0]}: {e}") from None
            relations.append(rel)
        elif head == "module":
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_()]*", rest):
                raise ParseError("expected 'module NAME'", ln, rest_col)
            if any(m.name == rest for m in modules):
                raise ParseError(f"module {rest!r} defined twice", ln, rest_col)
            current = ModuleBlock(rest, [], {}, ln)
        else:
            raise ParseError(f"unknown directive {head!r}", ln, indent + 1)

    if current is not None:
        raise ParseError(f"module {current.name!r} is missing 'end'", current.line, 1)
    if vertex_count is None:
        raise ParseError("missing 'vertices' directive", None)
    p = QuiverPresentation(vertex_count, tuple(arrows), tuple(relations), max_len)
    for block in modules:
        if len(block.dims) != vertex_count:
            raise ParseError(f"module {block.name!r}: dims needs {vertex_count} entries", block.line, 1)
        unknown = set(block.action) - {a.name for a in arrows}
        if unknown:
            raise ParseError(f"module {block.name!r}: unknown arrows {sorted(unknown)}", block.line, 1)
    return Document(p, modules)


def parse_text(text: str, convention: str = RIGHT_TO_LEFT) -> QuiverPresentation:
    return parse_document(text, convention).presentation


def parse_file(path, convention: str = RIGHT_TO_LEFT) -> QuiverPresentation:
    return parse_text(FsPath(path).read_text(encoding="utf-8"), convention)


def read_document(path, convention: str = RIGHT_TO_LEFT) -> Document:
    return parse_document(FsPath(path).read_text(encoding="utf-8"), convention)


def _format_term(c: Fraction, word: tuple[str, ...], first: bool) -> str:
    sign = "-" if c < 0 else "+"
    mag = abs(c)
    coef = "" if mag == 1 else f"{fmt(mag)}*"
    body = coef + "*".join(word)
    if first:
        return ("-" if c < 0 else "") + body
    return f"{sign} {body}"


def serialize(p: QuiverPresentation) -> str:
    """Canonical text of a presentation; ``parse_text(serialize(p)) == p``."""
    lines = [f"vertices {p.vertex_count}"]
    lines += [f"arrow {a.name} {a.source} {a.target}" for a in p.arrows]
    for rel in p.relations:
        parts = [_format_term(c, w, k == 0) for k, (c, w) in enumerate(rel)]
        lines.append("relation " + " ".join(parts))
    if p.max_path_length is not None:
        lines.append(f"max_path_length {p.max_path_length}")
    return "\n".join(lines) + "\n"


def serialize_module(name: str, m) -> str:
    """Module block for a :class:`~boundquiver.modules.Representation`."""
    lines = [f"module {name}", f"  dims = [{', '.join(str(d) for d in m.dims)}]"]
    for arr, mat in sorted(m.action.items()):
        if mat.size and any(x != 0 for x in mat.flat):
            rows = ", ".join("[" + ", ".join(r) + "]" for r in to_strings(mat))
            lines.append(f"  {arr} = [{rows}]")
    lines.append("end")
    return "\n".join(lines) + "\n"


def build_module(algebra, block: ModuleBlock):
    """Representation from a parsed module block."""
    from .modules import Representation

    action = {}
    for arr in algebra.arrows:
        if arr.name in block.action:
            shape = (block.dims[arr.target - 1], block.dims[arr.source - 1])
            rows = block.action[arr.name]
            if shape[0] == 0 and rows in ([], [[]]):
                rows = []
            try:
                action[arr.name] = qarray(rows, shape)
            except ValueError as e:
                raise ParseError(f"module {block.name!r}, arrow {arr.name}: {e}", block.line) from None
    try:
        return Representation(algebra, block.dims, action, label=block.name)
    except ValueError as e:
        raise ParseError(f"module {block.name!r}: {e}", block.line) from None
