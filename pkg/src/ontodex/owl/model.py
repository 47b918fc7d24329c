"""Interpreted OWL entity model: kinds, expression algebra, axioms.

Entity content is carried as JSON-ready "lossless values": plain strings
for simple literals, tagged wrappers for everything else, and nested
predicate-keyed maps for anonymous nodes. The same trees are stored in
records and re-read by the API layer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional, Union


class EntityKind(str, Enum):
    CLASS = "class"
    OBJECT_PROPERTY = "objectProperty"
    DATATYPE_PROPERTY = "datatypeProperty"
    ANNOTATION_PROPERTY = "annotationProperty"
    INDIVIDUAL = "individual"
    ONTOLOGY = "ontology"


PROPERTY_KINDS = (EntityKind.OBJECT_PROPERTY, EntityKind.DATATYPE_PROPERTY,
                  EntityKind.ANNOTATION_PROPERTY)

# JSON-ready lossless value (see module docstring); dicts are either
# reserved-key wrappers or predicate-keyed anonymous nodes.
JsonValue = Union[str, dict, list]

# Keys that mark a dict as a wrapper rather than an anonymous node. IRI
# predicate keys always contain ':' so the two cannot collide.
RESERVED_VALUE_KEYS = frozenset({"value", "lang", "datatype", "iri", "list", "bnodeRef"})
NODE_META_KEYS = frozenset({"@id", "reified"})


def is_anonymous_node(value: JsonValue) -> bool:
    return isinstance(value, dict) and not (RESERVED_VALUE_KEYS & value.keys())


class ExpressionError(Exception):
    """A blank-node expression that cannot be interpreted (malformed
    restriction, broken list, cycle). The load records it as dangling."""

    def __init__(self, message: str, node: Optional[str] = None):
        self.node = node
        super().__init__(message if node is None else f"{message} (node {node})")


@dataclass(frozen=True)
class PropertyExpression:
    pass


@dataclass(frozen=True)
class NamedProperty(PropertyExpression):
    iri: str

    def to_json(self) -> dict:
        return {"type": "named", "iri": self.iri}


@dataclass(frozen=True)
class InverseOf(PropertyExpression):
    iri: str

    def to_json(self) -> dict:
        return {"type": "inverseOf", "iri": self.iri}


@dataclass(frozen=True)
class PropertyChain(PropertyExpression):
    chain: tuple[PropertyExpression, ...]

    def to_json(self) -> dict:
        return {"type": "propertyChain", "chain": [p.to_json() for p in self.chain]}


@dataclass(frozen=True)
class ClassExpression:
    pass


@dataclass(frozen=True)
class Named(ClassExpression):
    iri: str

    def to_json(self) -> dict:
        return {"type": "named", "iri": self.iri}


@dataclass(frozen=True)
class SomeValuesFrom(ClassExpression):
    property: PropertyExpression
    filler: ClassExpression

    def to_json(self) -> dict:
        return {"type": "someValuesFrom", "property": self.property.to_json(),
                "filler": self.filler.to_json()}


@dataclass(frozen=True)
class AllValuesFrom(ClassExpression):
    property: PropertyExpression
    filler: ClassExpression

    def to_json(self) -> dict:
        return {"type": "allValuesFrom", "property": self.property.to_json(),
                "filler": self.filler.to_json()}


@dataclass(frozen=True)
class HasValue(ClassExpression):
    property: PropertyExpression
    value: Any  # literal or iri wrapper in lossless form

    def to_json(self) -> dict:
        return {"type": "hasValue", "property": self.property.to_json(),
                "value": self.value}


@dataclass(frozen=True)
class Intersection(ClassExpression):
    operands: tuple[ClassExpression, ...]

    def to_json(self) -> dict:
        return {"type": "intersection", "operands": [o.to_json() for o in self.operands]}


@dataclass(frozen=True)
class Union_(ClassExpression):
    operands: tuple[ClassExpression, ...]

    def to_json(self) -> dict:
        return {"type": "union", "operands": [o.to_json() for o in self.operands]}


@dataclass(frozen=True)
class Complement(ClassExpression):
    operand: ClassExpression

    def to_json(self) -> dict:
        return {"type": "complement", "operand": self.operand.to_json()}


@dataclass(frozen=True)
class OneOf(ClassExpression):
    members: tuple[str, ...]

    def to_json(self) -> dict:
        return {"type": "oneOf", "members": list(self.members)}


@dataclass(frozen=True)
class Cardinality(ClassExpression):
    restriction: str  # min | max | exact
    n: int
    property: PropertyExpression
    filler: Optional[ClassExpression] = None

    def to_json(self) -> dict:
        out = {"type": "cardinality", "restriction": self.restriction, "n": self.n,
               "property": self.property.to_json()}
        if self.filler is not None:
            out["filler"] = self.filler.to_json()
        return out


@dataclass
class LogicalAxiom:
    kind: str  # subClassOf | equivalentClass | disjointWith | subPropertyOf |
    #            propertyChain | inverseOf | domain | range | characteristic |
    #            typeAssertion | sameAs | differentFrom | allDisjointClasses
    class_expr: Optional[ClassExpression] = None
    property_expr: Optional[PropertyExpression] = None
    iri: Optional[str] = None
    members: tuple[str, ...] = ()
    characteristic: Optional[str] = None
    annotations: list = field(default_factory=list)  # reified payload maps
    source_triples: int = 1

    def to_json(self) -> dict:
        out: dict[str, Any] = {"type": self.kind}
        if self.class_expr is not None:
            out["target"] = self.class_expr.to_json()
        if self.property_expr is not None:
            out["target"] = self.property_expr.to_json()
        if self.iri is not None:
            out["target"] = {"type": "named", "iri": self.iri}
        if self.members:
            out["members"] = list(self.members)
        if self.characteristic is not None:
            out["characteristic"] = self.characteristic
        if self.annotations:
            out["annotations"] = self.annotations
        return out


@dataclass
class ReifiedAnnotation:
    annotated_subject: str
    annotated_property: str
    annotated_target: JsonValue
    payload: dict  # predicate IRI -> list of lossless values
    matched: bool = False


@dataclass
class OwlEntity:
    iri: str
    kind: EntityKind
    types: list[str] = field(default_factory=list)
    annotations: dict[str, list[JsonValue]] = field(default_factory=dict)
    logical_axioms: list[LogicalAxiom] = field(default_factory=list)
    reified: list[ReifiedAnnotation] = field(default_factory=list)
    # predicate -> values for logical assertions, mirroring source triples
    logical_values: dict[str, list[JsonValue]] = field(default_factory=dict)
    # whole-node subtrees owned by this entity but not attached to a value
    # (standalone owl:Axiom blocks, owl:AllDisjointClasses blocks)
    detached: list[JsonValue] = field(default_factory=list)
    consumed: list[int] = field(default_factory=list)
    is_stub: bool = False
