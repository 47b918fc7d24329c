"""Line-oriented N-Triples parser and serializer."""

from __future__ import annotations

import re
from typing import Iterable, Iterator

from ontodex.namespaces import RDF_LANG_STRING, XSD_STRING
from ontodex.rdf.model import (
    BlankNode,
    Iri,
    Literal,
    ParseError,
    Term,
    Triple,
    lang_literal,
)

_IRI = r"<([^<>\"{}|^`\\\x00-\x20]*)>"
_BNODE = r"_:([A-Za-z0-9][\w.\-]*)"
_LIT = r'"((?:[^"\\\n\r]|\\.)*)"(?:\^\^<([^<>\s]*)>|@([A-Za-z]+(?:-[A-Za-z0-9]+)*))?'
_LINE = re.compile(
    rf"\s*(?:{_IRI}|{_BNODE})\s*{_IRI}\s*(?:{_IRI}|{_BNODE}|{_LIT})\s*\.\s*(?:#.*)?$"
)
_BLANK_LINE = re.compile(r"\s*(?:#.*)?$")
_ESCAPE = re.compile(r"\\(?:u([0-9A-Fa-f]{4})|U([0-9A-Fa-f]{8})|(.))", re.S)

_ECHAR = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f",
          '"': '"', "'": "'", "\\": "\\"}


def _unescape(raw: str, lineno: int) -> str:
    if "\\" not in raw:
        return raw

    def repl(m: re.Match) -> str:
        if m.group(1):
            return chr(int(m.group(1), 16))
        if m.group(2):
            return chr(int(m.group(2), 16))
        ch = m.group(3)
        if ch not in _ECHAR:
            raise ParseError(f"invalid escape '\\{ch}'", line=lineno)
        return _ECHAR[ch]

    return _ESCAPE.sub(repl, raw)


def parse_ntriples(text: str, bnode_prefix: str = "b") -> Iterator[Triple]:
    labels: dict[str, BlankNode] = {}

    def bnode(label: str) -> BlankNode:
        node = labels.get(label)
        if node is None:
            node = BlankNode(f"{bnode_prefix}{len(labels)}")
            labels[label] = node
        return node

    for lineno, line in enumerate(text.splitlines(), start=1):
        if _BLANK_LINE.match(line):
            continue
        m = _LINE.match(line)
        if not m:
            raise ParseError("malformed N-Triples statement", line=lineno, column=1)
        s_iri, s_bnode, pred, o_iri, o_bnode, o_lex, o_dt, o_lang = m.groups()
        subject = Iri(_unescape(s_iri, lineno)) if s_iri is not None else bnode(s_bnode)
        if o_iri is not None:
            obj: Term = Iri(_unescape(o_iri, lineno))
        elif o_bnode is not None:
            obj = bnode(o_bnode)
        else:
            lexical = _unescape(o_lex, lineno)
            if o_lang:
                obj = lang_literal(lexical, o_lang)
            elif o_dt:
                obj = Literal(lexical, _unescape(o_dt, lineno))
            else:
                obj = Literal(lexical, XSD_STRING)
        yield Triple(subject, _unescape(pred, lineno), obj)


_CONTROL = {i: f"\\u{i:04X}" for i in range(0x20)}
_CONTROL.update({0x22: '\\"', 0x5C: "\\\\", 0x0A: "\\n", 0x0D: "\\r", 0x09: "\\t"})


def _escape_literal(value: str) -> str:
    return value.translate(_CONTROL)


def format_term(term: Term) -> str:
    if isinstance(term, Iri):
        return f"<{term.value}>"
    if isinstance(term, BlankNode):
        return f"_:{term.value}"
    lexical = _escape_literal(term.lexical)
    if term.language:
        return f'"{lexical}"@{term.language}'
    if term.datatype and term.datatype not in (XSD_STRING, RDF_LANG_STRING):
        return f'"{lexical}"^^<{term.datatype}>'
    return f'"{lexical}"'


def format_triple(triple: Triple) -> str:
    return (f"{format_term(triple.subject)} <{triple.predicate}> "
            f"{format_term(triple.object)} .")


def serialize_ntriples(triples: Iterable[Triple]) -> str:
    return "".join(format_triple(t) + "\n" for t in triples)
