"""RDF document parsing: format detection and a uniform triple stream."""

from __future__ import annotations

from typing import Iterator, Optional

from ontodex.rdf.model import (
    BlankNode,
    Iri,
    Literal,
    ParseError,
    Resource,
    Term,
    Triple,
    UnsupportedConstructError,
    lang_literal,
)
from ontodex.rdf.ntriples import format_term, format_triple, parse_ntriples, serialize_ntriples
from ontodex.rdf.rdfxml import parse_rdfxml
from ontodex.rdf.turtle import parse_turtle

TURTLE = "turtle"
RDFXML = "rdfxml"
NTRIPLES = "ntriples"

_EXTENSIONS = {
    ".ttl": TURTLE,
    ".nt": NTRIPLES,
    ".owl": RDFXML,
    ".rdf": RDFXML,
    ".xml": RDFXML,
}


def detect_format(filename: str, leading_bytes: bytes = b"") -> str:
    """Pick a parser: the filename extension wins, else sniff the head,
    else fall back to turtle."""
    name = filename.lower()
    for ext, fmt in _EXTENSIONS.items():
        if name.endswith(ext):
            return fmt
    head = leading_bytes.lstrip(b"\xef\xbb\xbf \t\r\n")
    if head.startswith(b"<?xml") or head.startswith(b"<rdf:RDF"):
        return RDFXML
    return TURTLE


def parse(data: bytes | str, format: str, base_iri: Optional[str] = None,
          bnode_prefix: str = "b") -> Iterator[Triple]:
    if format == TURTLE:
        text = data.decode("utf-8") if isinstance(data, bytes) else data
        return parse_turtle(text, base_iri, bnode_prefix)
    if format == NTRIPLES:
        text = data.decode("utf-8") if isinstance(data, bytes) else data
        return parse_ntriples(text, bnode_prefix)
    if format == RDFXML:
        return parse_rdfxml(data, base_iri, bnode_prefix)
    raise ValueError(f"unknown RDF format: {format!r}")


__all__ = [
    "BlankNode",
    "Iri",
    "Literal",
    "NTRIPLES",
    "ParseError",
    "RDFXML",
    "Resource",
    "TURTLE",
    "Term",
    "Triple",
    "UnsupportedConstructError",
    "detect_format",
    "format_term",
    "format_triple",
    "lang_literal",
    "parse",
    "parse_ntriples",
    "parse_rdfxml",
    "parse_turtle",
    "serialize_ntriples",
]
