"""Parser for a miniature generic class declaration language.

Grammar (whitespace insensitive)::

    program := decl*
    decl    := "class" IDENT ("<" IDENT ">")? ("extends" IDENT ("<" ARG ">")?)? "{" "}"
    ARG     := IDENT

``Object`` is implicit; a class without ``extends`` extends ``Object``.
Classes may refer to classes declared later in the same program.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from .graph import Digraph

OBJECT = "Object"
KEYWORDS = frozenset({"class", "extends"})

_TOKEN_RE = re.compile(r"(?P<ws>\s+)|(?P<ident>[A-Za-z_$][A-Za-z0-9_$]*)|(?P<sym>[<>{}])")


class DeclError(ValueError):
    """A syntax or semantic error, located by 1-based line and column."""

    def __init__(self, message: str, line: int, col: int):
        self.line = line
        self.col = col
        super().__init__(f"{line}:{col}: {message}")


@dataclass(frozen=True)
class ClassDecl:
    name: str
    type_param: Optional[str] = None
    superclass: Optional[str] = None
    super_arg: Optional[str] = None
    pos: Tuple[int, int] = field(default=(0, 0), compare=False, repr=False)

    @property
    def generic(self) -> bool:
        return self.type_param is not None


@dataclass(frozen=True)
class ClassTable:
    """Declared classes in source order; ``Object`` is always ``classes[0]``."""

    classes: Tuple[ClassDecl, ...]

    def __post_init__(self):
        object.__setattr__(self, "_by_name", {c.name: c for c in self.classes})

    def __getitem__(self, name: str) -> ClassDecl:
        return self._by_name[name]

    def __contains__(self, name: object) -> bool:
        return name in self._by_name

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def names(self) -> List[str]:
        return [c.name for c in self.classes]

    @property
    def generic(self) -> frozenset:
        return frozenset(c.name for c in self.classes if c.generic)

    @property
    def nongeneric(self) -> frozenset:
        return frozenset(c.name for c in self.classes if not c.generic)


@dataclass
class _Token:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(source: str) -> Iterator[_Token]:
    line, line_start, i = 1, 0, 0
    while i < len(source):
        m = _TOKEN_RE.match(source, i)
        if m is None:
            raise DeclError(f"unexpected character {source[i]!r}", line, i - line_start + 1)
        text = m.group()
        if m.lastgroup != "ws":
            kind = text if (m.lastgroup == "sym" or text in KEYWORDS) else "ident"
            yield _Token(kind, text, line, i - line_start + 1)
        else:
            nl = text.count("\n")
            if nl:
                line += nl
                line_start = i + text.rfind("\n") + 1
        i = m.end()
    yield _Token("eof", "", line, i - line_start + 1)


class _Parser:
    def __init__(self, source: str):
        # lazy so that errors surface in source order
        self.tokens = _tokenize(source)
        self.peek = next(self.tokens)

    def advance(self) -> _Token:
        tok = self.peek
        if tok.kind != "eof":
            self.peek = next(self.tokens)
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek
        if tok.kind != kind:
            found = "end of input" if tok.kind == "eof" else repr(tok.text)
            want = "identifier" if kind == "ident" else repr(kind)
            raise DeclError(f"expected {want}, found {found}", tok.line, tok.col)
        return self.advance()

    def accept(self, kind: str) -> Optional[_Token]:
        return self.advance() if self.peek.kind == kind else None

    def program(self) -> List[ClassDecl]:
        decls = []
        while self.peek.kind != "eof":
            decls.append(self.decl())
        return decls

    def decl(self) -> ClassDecl:
        self.expect("class")
        name = self.expect("ident")
        param = superclass = arg = None
        if self.accept("<"):
            param = self.expect("ident").text
            self.expect(">")
        if self.accept("extends"):
            superclass = self.expect("ident").text
            if self.accept("<"):
                arg = self.expect("ident").text
                self.expect(">")
        self.expect("{")
        self.expect("}")
        return ClassDecl(name.text, param, superclass, arg, pos=(name.line, name.col))


def _resolve(decls: List[ClassDecl]) -> ClassTable:
    by_name: Dict[str, ClassDecl] = {OBJECT: ClassDecl(OBJECT)}
    for d in decls:
        if d.name in by_name:
            raise DeclError(f"duplicate class name {d.name!r}", *d.pos)
        by_name[d.name] = d

    for d in decls:
        if d.superclass is None:
            continue
        sup = by_name.get(d.superclass)
        if sup is None:
            raise DeclError(f"unknown superclass {d.superclass!r} of {d.name!r}", *d.pos)
        if d.super_arg is None:
            continue
        if not sup.generic:
            raise DeclError(
                f"type argument given to non-generic superclass {sup.name!r} of {d.name!r}", *d.pos)
        if d.super_arg == d.type_param:
            continue
        target = by_name.get(d.super_arg)
        if target is None:
            raise DeclError(f"undeclared type parameter {d.super_arg!r} in {d.name!r}", *d.pos)
        if target.generic:
            raise DeclError(
                f"type argument {d.super_arg!r} of {d.name!r} must be a non-generic class", *d.pos)

    for d in decls:
        seen = {d.name}
        cur = d
        while cur.superclass is not None:
            if cur.superclass in seen:
                raise DeclError(f"cyclic inheritance involving {d.name!r}", *d.pos)
            seen.add(cur.superclass)
            cur = by_name[cur.superclass]

    return ClassTable((by_name[OBJECT], *decls))


def parse(source: str) -> ClassTable:
    return _resolve(_Parser(source).program())


def format_table(table: ClassTable) -> str:
    """Render a table back to source, one declaration per line."""
    out = []
    for c in table.classes:
        if c.name == OBJECT:
            continue
        s = f"class {c.name}"
        if c.type_param:
            s += f"<{c.type_param}>"
        if c.superclass:
            s += f" extends {c.superclass}"
            if c.super_arg:
                s += f"<{c.super_arg}>"
        out.append(s + " {}")
    return "".join(line + "\n" for line in out)


def subclassing_graph(table: ClassTable) -> Tuple[Digraph, frozenset]:
    """Subclass -> superclass graph over all classes, plus the generic subset."""
    edges = []
    for c in table.classes:
        if c.name == OBJECT:
            continue
        edges.append((c.name, c.superclass or OBJECT))
    return Digraph(table.names, edges), table.generic
