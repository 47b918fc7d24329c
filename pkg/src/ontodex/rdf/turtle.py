"""Recursive-descent Turtle parser producing a triple stream.

Covers the Turtle surface syntax used by published ontologies: prefix and
base directives (both @-style and SPARQL-style), prefixed names with local
escapes, all four string quoting forms, numeric and boolean literal
shorthand, language tags, datatyped literals, blank node property lists,
collections, and object/predicate-object lists.
"""

from __future__ import annotations

import re
from typing import Iterator, Optional
from urllib.parse import urljoin

from ontodex.namespaces import (
    RDF_FIRST,
    RDF_NIL,
    RDF_REST,
    RDF_TYPE,
    XSD_BOOLEAN,
    XSD_DECIMAL,
    XSD_DOUBLE,
    XSD_INTEGER,
    XSD_STRING,
)
from ontodex.rdf.model import (
    BlankNode,
    Iri,
    Literal,
    ParseError,
    Term,
    Triple,
    is_absolute_iri,
    lang_literal,
)

_WS_COMMENT = re.compile(r"(?:[ \t\r\n]+|#[^\n]*)+")
_IRIREF = re.compile(r"<([^<>\"{}|^`\\\x00-\x20]*)>")
_PNAME = re.compile(
    r"((?:[^\W\d_][\w.\-]*)?):"
    r"((?:[\w.\-:]|%[0-9A-Fa-f]{2}|\\[_~.\-!$&'()*+,;=/?#@%])*)",
    re.UNICODE,
)
_BLANK = re.compile(r"_:([^\W\d][\w.\-]*|\d[\w.\-]*)", re.UNICODE)
_LANGTAG = re.compile(r"@([A-Za-z]+(?:-[A-Za-z0-9]+)*)")
_DOUBLE = re.compile(r"[+-]?(?:\d+\.\d*|\.\d+|\d+)[eE][+-]?\d+")
_DECIMAL = re.compile(r"[+-]?(?:\d*\.\d+)")
_INTEGER = re.compile(r"[+-]?\d+")
_BOOLEAN = re.compile(r"(?:true|false)(?![\w.\-])")
_STRING_PATTERNS = (
    (re.compile(r'"""((?:\\.|"(?!"")|[^"\\])*)"""', re.S), True),
    (re.compile(r"'''((?:\\.|'(?!'')|[^'\\])*)'''", re.S), True),
    (re.compile(r'"((?:[^"\\\n\r]|\\.)*)"'), False),
    (re.compile(r"'((?:[^'\\\n\r]|\\.)*)'"), False),
)
_A_KEYWORD = re.compile(r"a(?=[ \t\r\n<\[#])")
_PREFIX_KW = re.compile(r"PREFIX(?=[ \t\r\n<])", re.I)
_BASE_KW = re.compile(r"BASE(?=[ \t\r\n<])", re.I)
_ESCAPE = re.compile(r"\\(?:u([0-9A-Fa-f]{4})|U([0-9A-Fa-f]{8})|(.))", re.S)
_PN_LOCAL_ESC = re.compile(r"\\([_~.\-!$&'()*+,;=/?#@%])")

_ECHAR = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f",
          '"': '"', "'": "'", "\\": "\\"}


class TurtleParser:
    def __init__(self, text: str, base_iri: Optional[str] = None, bnode_prefix: str = "b"):
        self.text = text
        self.pos = 0
        self.base = base_iri
        self.bnode_prefix = bnode_prefix
        self.prefixes: dict[str, str] = {}
        self._bnode_counter = 0
        self._bnode_labels: dict[str, BlankNode] = {}
        self._out: list[Triple] = []

    # -- error helpers ----------------------------------------------------

    def _linecol(self, pos: int) -> tuple[int, int]:
        line = self.text.count("\n", 0, pos) + 1
        last_nl = self.text.rfind("\n", 0, pos)
        return line, pos - last_nl

    def _error(self, message: str, pos: Optional[int] = None) -> ParseError:
        line, col = self._linecol(self.pos if pos is None else pos)
        return ParseError(message, line=line, column=col)

    # -- lexing helpers ----------------------------------------------------

    def _skip_ws(self) -> None:
        m = _WS_COMMENT.match(self.text, self.pos)
        if m:
            self.pos = m.end()

    def _at_end(self) -> bool:
        self._skip_ws()
        return self.pos >= len(self.text)

    def _expect(self, char: str) -> None:
        self._skip_ws()
        if not self.text.startswith(char, self.pos):
            raise self._error(f"expected '{char}'")
        self.pos += len(char)

    def _peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos : self.pos + 1]

    def _fresh_bnode(self) -> BlankNode:
        node = BlankNode(f"{self.bnode_prefix}{self._bnode_counter}")
        self._bnode_counter += 1
        return node

    def _labelled_bnode(self, label: str) -> BlankNode:
        node = self._bnode_labels.get(label)
        if node is None:
            node = self._fresh_bnode()
            self._bnode_labels[label] = node
        return node

    # -- term parsing ------------------------------------------------------

    def _unescape(self, raw: str, numeric_only: bool = False) -> str:
        def repl(m: re.Match) -> str:
            if m.group(1):
                return chr(int(m.group(1), 16))
            if m.group(2):
                return chr(int(m.group(2), 16))
            ch = m.group(3)
            if numeric_only or ch not in _ECHAR:
                raise self._error(f"invalid escape '\\{ch}'")
            return _ECHAR[ch]

        return _ESCAPE.sub(repl, raw) if "\\" in raw else raw

    def _resolve(self, iri: str) -> str:
        if is_absolute_iri(iri):
            return iri
        if self.base is None:
            raise self._error(f"relative IRI <{iri}> without a base")
        return urljoin(self.base, iri, allow_fragments=True)

    def _try_iriref(self) -> Optional[str]:
        m = _IRIREF.match(self.text, self.pos)
        if not m:
            return None
        self.pos = m.end()
        return self._resolve(self._unescape(m.group(1), numeric_only=True))

    def _try_pname(self, as_iri: bool = True) -> Optional[str]:
        m = _PNAME.match(self.text, self.pos)
        if not m:
            return None
        prefix, local = m.group(1), m.group(2)
        # A trailing unescaped dot terminates the statement, not the name.
        end = m.end()
        while local.endswith(".") and not local.endswith("\\."):
            local = local[:-1]
            end -= 1
        self.pos = end
        if prefix not in self.prefixes:
            raise self._error(f"undefined prefix '{prefix}:'", m.start())
        local = _PN_LOCAL_ESC.sub(r"\1", local)
        return self.prefixes[prefix] + local

    def _try_string(self) -> Optional[str]:
        for pattern, _long in _STRING_PATTERNS:
            m = pattern.match(self.text, self.pos)
            if m:
                self.pos = m.end()
                return self._unescape(m.group(1))
        return None

    def _parse_iri(self) -> Optional[str]:
        self._skip_ws()
        iri = self._try_iriref()
        if iri is not None:
            return iri
        return self._try_pname()

    def _parse_literal(self) -> Optional[Literal]:
        self._skip_ws()
        lexical = self._try_string()
        if lexical is not None:
            m = _LANGTAG.match(self.text, self.pos)
            if m:
                self.pos = m.end()
                return lang_literal(lexical, m.group(1))
            if self.text.startswith("^^", self.pos):
                self.pos += 2
                datatype = self._parse_iri()
                if datatype is None:
                    raise self._error("expected datatype IRI after '^^'")
                return Literal(lexical, datatype)
            return Literal(lexical, XSD_STRING)
        for pattern, datatype in ((_DOUBLE, XSD_DOUBLE), (_DECIMAL, XSD_DECIMAL),
                                  (_INTEGER, XSD_INTEGER)):
            m = pattern.match(self.text, self.pos)
            if m:
                self.pos = m.end()
                return Literal(m.group(0), datatype)
        m = _BOOLEAN.match(self.text, self.pos)
        if m:
            self.pos = m.end()
            return Literal(m.group(0), XSD_BOOLEAN)
        return None

    def _parse_collection(self) -> Term:
        # '(' was consumed. Expands to rdf:first/rdf:rest/rdf:nil triples.
        items: list[Term] = []
        while True:
            self._skip_ws()
            if self.pos >= len(self.text):
                raise self._error("unterminated collection")
            if self.text[self.pos] == ")":
                self.pos += 1
                break
            items.append(self._parse_object())
        if not items:
            return Iri(RDF_NIL)
        nodes = [self._fresh_bnode() for _ in items]
        for i, (node, item) in enumerate(zip(nodes, items)):
            self._out.append(Triple(node, RDF_FIRST, item))
            rest: Term = nodes[i + 1] if i + 1 < len(nodes) else Iri(RDF_NIL)
            self._out.append(Triple(node, RDF_REST, rest))
        return nodes[0]

    def _parse_object(self) -> Term:
        self._skip_ws()
        if self.pos >= len(self.text):
            raise self._error("unexpected end of document, expected object")
        ch = self.text[self.pos]
        if ch == "(":
            self.pos += 1
            return self._parse_collection()
        if ch == "[":
            self.pos += 1
            return self._parse_bnode_property_list()
        m = _BLANK.match(self.text, self.pos)
        if m:
            self.pos = m.end()
            return self._labelled_bnode(m.group(1))
        literal = self._parse_literal()
        if literal is not None:
            return literal
        iri = self._parse_iri()
        if iri is not None:
            return Iri(iri)
        raise self._error("expected object term")

    def _parse_bnode_property_list(self) -> BlankNode:
        # '[' was consumed.
        node = self._fresh_bnode()
        self._skip_ws()
        if self.text.startswith("]", self.pos):
            self.pos += 1
            return node
        self._parse_predicate_object_list(node)
        self._expect("]")
        return node

    def _parse_verb(self) -> str:
        self._skip_ws()
        m = _A_KEYWORD.match(self.text, self.pos)
        if m:
            self.pos = m.end()
            return RDF_TYPE
        iri = self._parse_iri()
        if iri is None:
            raise self._error("expected predicate")
        return iri

    def _parse_predicate_object_list(self, subject: Term) -> None:
        while True:
            predicate = self._parse_verb()
            while True:
                obj = self._parse_object()
                self._out.append(Triple(subject, predicate, obj))  # type: ignore[arg-type]
                self._skip_ws()
                if self.text.startswith(",", self.pos):
                    self.pos += 1
                    continue
                break
            self._skip_ws()
            if self.text.startswith(";", self.pos):
                self.pos += 1
                # Permit trailing semicolons before '.', ']' or another verb.
                self._skip_ws()
                if self.pos < len(self.text) and self.text[self.pos] in ".]":
                    return
                if self.pos < len(self.text):
                    continue
            return

    def _parse_subject(self) -> Term:
        self._skip_ws()
        ch = self.text[self.pos : self.pos + 1]
        if ch == "(":
            self.pos += 1
            return self._parse_collection()
        m = _BLANK.match(self.text, self.pos)
        if m:
            self.pos = m.end()
            return self._labelled_bnode(m.group(1))
        iri = self._parse_iri()
        if iri is not None:
            return Iri(iri)
        raise self._error("expected subject term")

    def _parse_directive(self) -> bool:
        if self.text.startswith("@prefix", self.pos):
            self.pos += len("@prefix")
            self._read_prefix_binding()
            self._expect(".")
            return True
        if self.text.startswith("@base", self.pos):
            self.pos += len("@base")
            self._read_base_binding()
            self._expect(".")
            return True
        m = _PREFIX_KW.match(self.text, self.pos)
        if m:
            self.pos = m.end()
            self._read_prefix_binding()
            return True
        m = _BASE_KW.match(self.text, self.pos)
        if m:
            self.pos = m.end()
            self._read_base_binding()
            return True
        return False

    def _read_prefix_binding(self) -> None:
        self._skip_ws()
        m = re.compile(r"((?:[^\W\d_][\w.\-]*)?):", re.UNICODE).match(self.text, self.pos)
        if not m:
            raise self._error("expected prefix name")
        self.pos = m.end()
        self._skip_ws()
        iri = self._try_iriref()
        if iri is None:
            raise self._error("expected namespace IRI")
        self.prefixes[m.group(1)] = iri

    def _read_base_binding(self) -> None:
        self._skip_ws()
        m = _IRIREF.match(self.text, self.pos)
        if not m:
            raise self._error("expected base IRI")
        self.pos = m.end()
        raw = self._unescape(m.group(1), numeric_only=True)
        self.base = raw if is_absolute_iri(raw) else self._resolve(raw)

    # -- driver -------------------------------------------------------------

    def parse(self) -> Iterator[Triple]:
        while not self._at_end():
            if self._parse_directive():
                yield from self._drain()
                continue
            ch = self.text[self.pos]
            if ch == "[":
                self.pos += 1
                subject = self._parse_bnode_property_list()
                self._skip_ws()
                if not self.text.startswith(".", self.pos):
                    self._parse_predicate_object_list(subject)
            else:
                subject = self._parse_subject()
                if isinstance(subject, Literal):
                    raise self._error("literal cannot be a subject")
                self._parse_predicate_object_list(subject)
            self._expect(".")
            yield from self._drain()

    def _drain(self) -> Iterator[Triple]:
        out, self._out = self._out, []
        return iter(out)


def parse_turtle(text: str, base_iri: Optional[str] = None,
                 bnode_prefix: str = "b") -> Iterator[Triple]:
    return TurtleParser(text, base_iri, bnode_prefix).parse()
