"""RDF/XML parser for the subset emitted by common ontology tooling.

Supported: rdf:about, rdf:resource, rdf:ID, rdf:nodeID, rdf:datatype,
xml:lang, xml:base, rdf:parseType="Collection", and nested resource
elements. Anything else (parseType="Literal"/"Resource", property
attributes, rdf:li containers, reification shorthand) raises an
UnsupportedConstructError naming the construct rather than guessing.
"""

from __future__ import annotations

import xml.parsers.expat
from typing import Iterator, Optional
from urllib.parse import urljoin

from ontodex.namespaces import (
    RDF_FIRST,
    RDF_NIL,
    RDF_NS,
    RDF_REST,
    RDF_TYPE,
    RDFS_NS,
    OWL_NS,
    XML_NS,
    XSD_NS,
    XSD_STRING,
)
from ontodex.rdf.model import (
    BlankNode,
    Iri,
    Literal,
    ParseError,
    Term,
    Triple,
    UnsupportedConstructError,
    is_absolute_iri,
    lang_literal,
)

_SEP = "\x01"
_RDF_RDF = RDF_NS + _SEP + "RDF"
_RDF_DESCRIPTION = RDF_NS + _SEP + "Description"
_RDF_LI = RDF_NS + _SEP + "li"
_PREFIX_DISPLAY = {RDF_NS: "rdf", RDFS_NS: "rdfs", OWL_NS: "owl",
                   XSD_NS: "xsd", XML_NS: "xml"}

ROOT, NODE, PROPERTY = "root", "node", "property"


def _display_name(expat_name: str) -> str:
    if _SEP not in expat_name:
        return expat_name
    ns, local = expat_name.split(_SEP, 1)
    prefix = _PREFIX_DISPLAY.get(ns)
    return f"{prefix}:{local}" if prefix else f"{{{ns}}}{local}"


def _expand(expat_name: str) -> str:
    return expat_name.replace(_SEP, "") if _SEP in expat_name else expat_name


class _Frame:
    __slots__ = ("kind", "name", "base", "lang", "subject", "predicate",
                 "object", "datatype", "collection", "text", "children",
                 "child_counts", "path_label")

    def __init__(self, kind: str, name: str, base: Optional[str], lang: Optional[str]):
        self.kind = kind
        self.name = name
        self.base = base
        self.lang = lang
        self.subject: Optional[Term] = None
        self.predicate: Optional[str] = None
        self.object: Optional[Term] = None
        self.datatype: Optional[str] = None
        self.collection: Optional[list[Term]] = None
        self.text: list[str] = []
        self.children = 0
        self.child_counts: dict[str, int] = {}
        self.path_label = ""


class RdfXmlParser:
    def __init__(self, data: bytes | str, base_iri: Optional[str] = None,
                 bnode_prefix: str = "b"):
        self.data = data if isinstance(data, bytes) else data.encode("utf-8")
        self.base = base_iri
        self.bnode_prefix = bnode_prefix
        self._bnode_counter = 0
        self._bnode_labels: dict[str, BlankNode] = {}
        self._stack: list[_Frame] = [_Frame(ROOT, "", base_iri, None)]
        self._triples: list[Triple] = []
        self._parser = xml.parsers.expat.ParserCreate(namespace_separator=_SEP)
        self._parser.StartElementHandler = self._start
        self._parser.EndElementHandler = self._end
        self._parser.CharacterDataHandler = self._chars

    # -- bookkeeping ---------------------------------------------------------

    def _path(self) -> str:
        return "/" + "/".join(f.path_label for f in self._stack[1:]) if len(self._stack) > 1 else "/"

    def _error(self, message: str) -> ParseError:
        return ParseError(message, line=self._parser.CurrentLineNumber, path=self._path())

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

    def _resolve(self, iri: str, base: Optional[str]) -> str:
        if is_absolute_iri(iri):
            return iri
        if base is None:
            raise self._error(f"relative reference '{iri}' without a base")
        return urljoin(base, iri)

    def _push(self, frame: _Frame, name: str) -> None:
        parent = self._stack[-1]
        parent.children += 1
        n = parent.child_counts.get(name, 0) + 1
        parent.child_counts[name] = n
        frame.path_label = _display_name(name) + (f"[{n}]" if n > 1 else "")
        self._stack.append(frame)

    # -- handlers --------------------------------------------------------------

    def _split_attrs(self, attrs: dict[str, str], frame: _Frame) -> dict[str, str]:
        """Pull xml:base / xml:lang into the frame, return remaining attrs."""
        rest: dict[str, str] = {}
        for key, value in attrs.items():
            if key == XML_NS + _SEP + "base":
                frame.base = self._resolve(value, frame.base) if not is_absolute_iri(value) else value
            elif key == XML_NS + _SEP + "lang":
                frame.lang = value.lower() if value else None
            else:
                rest[key] = value
        return rest

    def _start(self, name: str, attrs: dict[str, str]) -> None:
        parent = self._stack[-1]
        if parent.kind == PROPERTY and parent.collection is None:
            if parent.object is not None or parent.datatype is not None:
                raise self._error("property element with both an explicit object and element content")
            if "".join(parent.text).strip():
                raise self._error("property element mixes text and element content")

        if parent.kind == ROOT and name == _RDF_RDF and parent.children == 0 and self._stack[-1] is self._stack[0]:
            frame = _Frame(ROOT, name, parent.base, parent.lang)
            leftover = self._split_attrs(attrs, frame)
            if leftover:
                raise self._error(f"unexpected attribute on rdf:RDF: {_display_name(next(iter(leftover)))}")
            self._push(frame, name)
            return

        if parent.kind in (ROOT, PROPERTY):
            self._start_node(name, attrs, parent)
        elif parent.kind == NODE:
            self._start_property(name, attrs, parent)
        else:  # pragma: no cover - stack discipline guarantees the above
            raise self._error("unexpected element")

    def _start_node(self, name: str, attrs: dict[str, str], parent: _Frame) -> None:
        frame = _Frame(NODE, name, parent.base, parent.lang)
        rest = self._split_attrs(attrs, frame)
        about = rest.pop(RDF_NS + _SEP + "about", None)
        rdf_id = rest.pop(RDF_NS + _SEP + "ID", None)
        node_id = rest.pop(RDF_NS + _SEP + "nodeID", None)
        if sum(x is not None for x in (about, rdf_id, node_id)) > 1:
            self._push(frame, name)
            raise self._error("node element with more than one of rdf:about/rdf:ID/rdf:nodeID")
        if rest:
            self._push(frame, name)
            raise UnsupportedConstructError(
                f"attribute {_display_name(next(iter(rest)))} on a node element",
                path=self._path(), line=self._parser.CurrentLineNumber)

        if about is not None:
            frame.subject = Iri(self._resolve(about, frame.base))
        elif rdf_id is not None:
            frame.subject = Iri(self._resolve("#" + rdf_id, frame.base))
        elif node_id is not None:
            frame.subject = self._labelled_bnode(node_id)
        else:
            frame.subject = self._fresh_bnode()
        self._push(frame, name)

        if name != _RDF_DESCRIPTION:
            self._triples.append(Triple(frame.subject, RDF_TYPE, Iri(_expand(name))))  # type: ignore[arg-type]

        if parent.kind == PROPERTY:
            if parent.collection is not None:
                parent.collection.append(frame.subject)
            elif parent.object is None:
                parent.object = frame.subject
            else:
                raise self._error("property element with more than one child node")

    def _start_property(self, name: str, attrs: dict[str, str], parent: _Frame) -> None:
        frame = _Frame(PROPERTY, name, parent.base, parent.lang)
        rest = self._split_attrs(attrs, frame)
        frame.subject = parent.subject
        frame.predicate = _expand(name)
        self._push(frame, name)
        if name == _RDF_LI:
            raise UnsupportedConstructError("rdf:li container membership",
                                            path=self._path(), line=self._parser.CurrentLineNumber)

        parse_type = rest.pop(RDF_NS + _SEP + "parseType", None)
        resource = rest.pop(RDF_NS + _SEP + "resource", None)
        node_id = rest.pop(RDF_NS + _SEP + "nodeID", None)
        datatype = rest.pop(RDF_NS + _SEP + "datatype", None)
        if RDF_NS + _SEP + "ID" in rest:
            raise UnsupportedConstructError("rdf:ID reification shorthand on a property element",
                                            path=self._path(), line=self._parser.CurrentLineNumber)
        if rest:
            raise UnsupportedConstructError(
                f"attribute {_display_name(next(iter(rest)))} on a property element",
                path=self._path(), line=self._parser.CurrentLineNumber)

        if parse_type is not None:
            if parse_type != "Collection":
                raise UnsupportedConstructError(f'rdf:parseType="{parse_type}"',
                                                path=self._path(), line=self._parser.CurrentLineNumber)
            if resource is not None or node_id is not None or datatype is not None:
                raise self._error("rdf:parseType mixed with rdf:resource/rdf:nodeID/rdf:datatype")
            frame.collection = []
            return
        if resource is not None and node_id is not None:
            raise self._error("property element with both rdf:resource and rdf:nodeID")
        if resource is not None:
            frame.object = Iri(self._resolve(resource, frame.base))
        elif node_id is not None:
            frame.object = self._labelled_bnode(node_id)
        frame.datatype = datatype

    def _chars(self, data: str) -> None:
        frame = self._stack[-1]
        if frame.kind == PROPERTY:
            frame.text.append(data)
        elif data.strip():
            raise self._error("unexpected text content")

    def _end(self, name: str) -> None:
        frame = self._stack.pop()
        if frame.kind != PROPERTY:
            return
        subject, predicate = frame.subject, frame.predicate
        assert subject is not None and predicate is not None
        text = "".join(frame.text)

        if frame.collection is not None:
            if text.strip():
                raise self._error("collection property with text content")
            head: Term = Iri(RDF_NIL)
            nodes = [self._fresh_bnode() for _ in frame.collection]
            for i, (node, item) in enumerate(zip(nodes, frame.collection)):
                self._triples.append(Triple(node, RDF_FIRST, item))
                rest: Term = nodes[i + 1] if i + 1 < len(nodes) else Iri(RDF_NIL)
                self._triples.append(Triple(node, RDF_REST, rest))
            if nodes:
                head = nodes[0]
            self._triples.append(Triple(subject, predicate, head))  # type: ignore[arg-type]
            return

        if frame.object is not None:
            if text.strip():
                raise self._error("property element mixes an explicit object with text")
            self._triples.append(Triple(subject, predicate, frame.object))  # type: ignore[arg-type]
            return
        if frame.children:
            if frame.datatype is not None:
                raise self._error("rdf:datatype on a property element with a child node")
            return  # attaching triple was emitted when the child node started
        if frame.datatype is not None:
            obj: Term = Literal(text, frame.datatype)
        elif frame.lang:
            obj = lang_literal(text, frame.lang)
        else:
            obj = Literal(text, XSD_STRING)
        self._triples.append(Triple(subject, predicate, obj))  # type: ignore[arg-type]

    # -- driver ------------------------------------------------------------------

    def parse(self) -> Iterator[Triple]:
        try:
            self._parser.Parse(self.data, True)
        except xml.parsers.expat.ExpatError as exc:
            raise ParseError(f"malformed XML: {xml.parsers.expat.errors.messages[exc.code]}",
                             line=exc.lineno, column=exc.offset + 1) from exc
        return iter(self._triples)


def parse_rdfxml(data: bytes | str, base_iri: Optional[str] = None,
                 bnode_prefix: str = "b") -> Iterator[Triple]:
    return RdfXmlParser(data, base_iri, bnode_prefix).parse()
