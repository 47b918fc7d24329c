"""Core RDF data model: resources, literals, triples, parse errors."""

from __future__ import annotations

import re
from typing import NamedTuple, Optional, Union

from ontodex.namespaces import RDF_LANG_STRING, XSD_STRING

_SCHEME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.-]*:")


class Iri(NamedTuple):
    value: str


class BlankNode(NamedTuple):
    value: str


class Literal(NamedTuple):
    lexical: str
    datatype: str = XSD_STRING
    language: Optional[str] = None


Resource = Union[Iri, BlankNode]
Term = Union[Iri, BlankNode, Literal]


class Triple(NamedTuple):
    subject: Resource
    predicate: str
    object: Term


def lang_literal(lexical: str, language: str) -> Literal:
    """Language-tagged literal; tags are normalized to lowercase."""
    return Literal(lexical, RDF_LANG_STRING, language.lower())


def is_absolute_iri(iri: str) -> bool:
    return bool(_SCHEME_RE.match(iri))


class ParseError(Exception):
    """Syntax error with a source location: line/column for text formats,
    element path for RDF/XML."""

    def __init__(self, message: str, line: int | None = None,
                 column: int | None = None, path: str | None = None):
        self.message = message
        self.line = line
        self.column = column
        self.path = path
        where = ""
        if line is not None:
            where = f" at line {line}" + (f", column {column}" if column is not None else "")
        elif path is not None:
            where = f" at {path}"
        super().__init__(message + where)


class UnsupportedConstructError(ParseError):
    """An RDF/XML construct outside the supported subset."""

    def __init__(self, construct: str, path: str | None = None, line: int | None = None):
        self.construct = construct
        super().__init__(f"unsupported RDF/XML construct: {construct}", line=line, path=path)
