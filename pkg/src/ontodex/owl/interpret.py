"""Assemble a triple stream into interpreted OWL entities.

Interpretation is total: malformed structures never abort a load, they are
returned as dangling triples. Every input triple is either consumed into
exactly one entity or reported dangling, so the two counts always sum to
the input size.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from ontodex.namespaces import (
    CHARACTERISTIC_TYPES,
    OWL_ALL_DISJOINT_CLASSES,
    OWL_ALL_VALUES_FROM,
    OWL_ANNOTATED_PROPERTY,
    OWL_ANNOTATED_SOURCE,
    OWL_ANNOTATED_TARGET,
    OWL_ANNOTATION_PROPERTY,
    OWL_AXIOM,
    OWL_CARDINALITY,
    OWL_CLASS,
    OWL_COMPLEMENT_OF,
    OWL_DATATYPE_PROPERTY,
    OWL_DIFFERENT_FROM,
    OWL_DISJOINT_WITH,
    OWL_EQUIVALENT_CLASS,
    OWL_HAS_VALUE,
    OWL_INTERSECTION_OF,
    OWL_INVERSE_OF,
    OWL_MAX_CARDINALITY,
    OWL_MAX_QUALIFIED_CARDINALITY,
    OWL_MEMBERS,
    OWL_MIN_CARDINALITY,
    OWL_MIN_QUALIFIED_CARDINALITY,
    OWL_NAMED_INDIVIDUAL,
    OWL_OBJECT_PROPERTY,
    OWL_ON_CLASS,
    OWL_ON_PROPERTY,
    OWL_ONE_OF,
    OWL_ONTOLOGY,
    OWL_PROPERTY_CHAIN_AXIOM,
    OWL_QUALIFIED_CARDINALITY,
    OWL_RESTRICTION,
    OWL_SAME_AS,
    OWL_SOME_VALUES_FROM,
    OWL_UNION_OF,
    RDF_FIRST,
    RDF_NIL,
    RDF_PROPERTY,
    RDF_REST,
    RDF_TYPE,
    RDFS_CLASS,
    RDFS_DOMAIN,
    RDFS_RANGE,
    RDFS_SUBCLASS_OF,
    RDFS_SUBPROPERTY_OF,
    XSD_STRING,
    is_vocabulary_iri,
)
from ontodex.owl.model import (
    AllValuesFrom,
    Cardinality,
    ClassExpression,
    Complement,
    EntityKind,
    ExpressionError,
    HasValue,
    Intersection,
    InverseOf,
    JsonValue,
    LogicalAxiom,
    Named,
    NamedProperty,
    OneOf,
    OwlEntity,
    PropertyChain,
    PropertyExpression,
    ReifiedAnnotation,
    SomeValuesFrom,
    Union_,
    is_anonymous_node,
)
from ontodex.rdf.model import BlankNode, Iri, Literal, Term, Triple

LOGICAL_PREDICATES = frozenset({
    RDFS_SUBCLASS_OF, OWL_EQUIVALENT_CLASS, OWL_DISJOINT_WITH,
    RDFS_SUBPROPERTY_OF, OWL_PROPERTY_CHAIN_AXIOM, OWL_INVERSE_OF,
    RDFS_DOMAIN, RDFS_RANGE, OWL_SAME_AS, OWL_DIFFERENT_FROM,
})

_STRUCTURAL = frozenset({OWL_ANNOTATED_SOURCE, OWL_ANNOTATED_PROPERTY,
                         OWL_ANNOTATED_TARGET})

_DANGLING = "!dangling"

_KIND_PRECEDENCE = (
    (frozenset({OWL_ONTOLOGY}), EntityKind.ONTOLOGY),
    (frozenset({OWL_OBJECT_PROPERTY}) | frozenset(CHARACTERISTIC_TYPES),
     EntityKind.OBJECT_PROPERTY),
    (frozenset({OWL_DATATYPE_PROPERTY}), EntityKind.DATATYPE_PROPERTY),
    (frozenset({OWL_ANNOTATION_PROPERTY, RDF_PROPERTY}), EntityKind.ANNOTATION_PROPERTY),
    (frozenset({OWL_CLASS, RDFS_CLASS, OWL_RESTRICTION}), EntityKind.CLASS),
    (frozenset({OWL_NAMED_INDIVIDUAL}), EntityKind.INDIVIDUAL),
)

_CARDINALITY_PREDICATES = {
    OWL_MIN_CARDINALITY: ("min", False),
    OWL_MAX_CARDINALITY: ("max", False),
    OWL_CARDINALITY: ("exact", False),
    OWL_MIN_QUALIFIED_CARDINALITY: ("min", True),
    OWL_MAX_QUALIFIED_CARDINALITY: ("max", True),
    OWL_QUALIFIED_CARDINALITY: ("exact", True),
}


def term_to_json(term: Term) -> JsonValue:
    """Literal/IRI terms to their lossless form (blank nodes need a builder)."""
    if isinstance(term, Iri):
        return {"iri": term.value}
    if isinstance(term, Literal):
        if term.language:
            return {"value": term.lexical, "lang": term.language}
        if term.datatype and term.datatype != XSD_STRING:
            return {"value": term.lexical, "datatype": term.datatype}
        return term.lexical
    raise TypeError(f"cannot convert {term!r} directly")


def _term_key(term: Term):
    if isinstance(term, Iri):
        return ("iri", term.value)
    if isinstance(term, BlankNode):
        return ("bnode", term.value)
    return ("lit", term.lexical, term.datatype, term.language)


@dataclass
class AssemblyResult:
    entities: list[OwlEntity]
    header: Optional[OwlEntity]
    dangling: list[Triple]
    total_triples: int
    consumed_triples: int

    @property
    def by_iri(self) -> dict[str, OwlEntity]:
        return {e.iri: e for e in self.entities}


@dataclass
class _Slot:
    values: list
    index: int
    axiom: Optional[LogicalAxiom] = None

    def attach(self, payload: dict) -> None:
        value = self.values[self.index]
        if isinstance(value, str):
            value = {"value": value}
            self.values[self.index] = value
        value.setdefault("reified", []).append(payload)
        if self.axiom is not None:
            self.axiom.annotations.append(payload)


class _Assembler:
    def __init__(self, triples: Iterable[Triple]):
        self.triples: list[Triple] = []
        self.multiplicity: list[int] = []
        seen: dict[Triple, int] = {}
        for t in triples:
            tid = seen.get(t)
            if tid is None:
                seen[t] = len(self.triples)
                self.triples.append(t)
                self.multiplicity.append(1)
            else:
                self.multiplicity[tid] += 1
        self.total = sum(self.multiplicity)

        self.by_subject: dict[Term, list[int]] = {}
        for tid, t in enumerate(self.triples):
            self.by_subject.setdefault(t.subject, []).append(tid)

        self.owner: list[Optional[str]] = [None] * len(self.triples)
        self.bnode_owner: dict[str, str] = {}
        self.entities: dict[str, OwlEntity] = {}
        self.slots: dict[str, dict] = {}  # entity iri -> {(pred, termkey): _Slot}
        self.header_iri: Optional[str] = None
        self._local_ids: dict[str, int] = {}

    # -- ownership ---------------------------------------------------------

    def _claim(self, tid: int, owner: str) -> None:
        if self.owner[tid] is None:
            self.owner[tid] = owner

    def _types_of(self, subject: Term) -> list[str]:
        out = []
        for tid in self.by_subject.get(subject, ()):
            t = self.triples[tid]
            if t.predicate == RDF_TYPE and isinstance(t.object, Iri):
                out.append(t.object.value)
        return out

    def _next_local_id(self, entity_iri: str) -> str:
        n = self._local_ids.get(entity_iri, 0)
        self._local_ids[entity_iri] = n + 1
        return f"b{n}"

    # -- value building ------------------------------------------------------

    def _is_list_node(self, node: BlankNode) -> bool:
        preds = [self.triples[tid].predicate for tid in self.by_subject.get(node, ())]
        return sorted(preds) == [RDF_FIRST, RDF_REST]

    def _build_value(self, term: Term, ctx: "_BuildContext") -> JsonValue:
        if not isinstance(term, BlankNode):
            return term_to_json(term)
        node_id = term.value
        if node_id in ctx.in_progress or node_id in ctx.built:
            target = ctx.in_progress.get(node_id) or ctx.built.get(node_id)
            ref_id = target.get("@id")
            if ref_id is None:
                ref_id = self._next_local_id(ctx.entity_iri)
                target["@id"] = ref_id
            return {"bnodeRef": ref_id}
        if self.bnode_owner.get(node_id) not in (None, ctx.entity_iri):
            # Owned elsewhere (another entity, an axiom block, a dangling
            # structure): keep only an opaque local reference.
            return {"bnodeRef": self._next_local_id(ctx.entity_iri)}
        self.bnode_owner[node_id] = ctx.entity_iri
        ctx.claimed_bnodes.append(node_id)

        if self._is_list_node(term) and self._list_shape_ok(term, ctx):
            return self._build_list(term, ctx)
        return self._build_node(term, ctx)

    def _list_shape_ok(self, head: BlankNode, ctx: "_BuildContext") -> bool:
        node: Term = head
        seen = set()
        while True:
            if not isinstance(node, BlankNode):
                return isinstance(node, Iri) and node.value == RDF_NIL
            if node.value in seen:
                return False
            seen.add(node.value)
            if node is not head:
                if self.bnode_owner.get(node.value) not in (None, ctx.entity_iri):
                    return False
                if node.value in ctx.in_progress or node.value in ctx.built:
                    return False
                if not self._is_list_node(node):
                    return False
            rest = [self.triples[tid].object for tid in self.by_subject[node]
                    if self.triples[tid].predicate == RDF_REST]
            node = rest[0]

    def _build_list(self, head: BlankNode, ctx: "_BuildContext") -> JsonValue:
        items = []
        node: Term = head
        while isinstance(node, BlankNode):
            first_obj = rest_obj = None
            for tid in self.by_subject[node]:
                t = self.triples[tid]
                self._claim(tid, ctx.entity_iri)
                ctx.consumed.append(tid)
                if t.predicate == RDF_FIRST:
                    first_obj = t.object
                else:
                    rest_obj = t.object
            if node is not head:
                self.bnode_owner[node.value] = ctx.entity_iri
                ctx.claimed_bnodes.append(node.value)
            items.append(self._build_value(first_obj, ctx))
            node = rest_obj
        return {"list": items}

    def _build_node(self, node: BlankNode, ctx: "_BuildContext") -> JsonValue:
        out: dict = {}
        ctx.in_progress[node.value] = out
        for tid in self.by_subject.get(node, ()):
            t = self.triples[tid]
            self._claim(tid, ctx.entity_iri)
            ctx.consumed.append(tid)
            out.setdefault(t.predicate, []).append(self._build_value(t.object, ctx))
        del ctx.in_progress[node.value]
        ctx.built[node.value] = out
        return out

    # -- expression interpretation ---------------------------------------------

    def parse_property_expression(self, value: JsonValue) -> PropertyExpression:
        if isinstance(value, dict) and set(value) == {"iri"}:
            return NamedProperty(value["iri"])
        if is_anonymous_node(value):
            inv = value.get(OWL_INVERSE_OF)
            if inv and len(inv) == 1 and isinstance(inv[0], dict) and "iri" in inv[0]:
                return InverseOf(inv[0]["iri"])
        raise ExpressionError("not a property expression")

    def _named_list(self, value: JsonValue) -> list[JsonValue]:
        if not (isinstance(value, dict) and "list" in value):
            raise ExpressionError("expected an RDF list")
        return value["list"]

    def parse_class_expression(self, value: JsonValue) -> ClassExpression:
        if isinstance(value, dict) and set(value) == {"iri"}:
            return Named(value["iri"])
        if not is_anonymous_node(value):
            raise ExpressionError("not a class expression")

        if OWL_ON_PROPERTY in value:
            props = value[OWL_ON_PROPERTY]
            if len(props) != 1:
                raise ExpressionError("restriction needs exactly one owl:onProperty")
            prop = self.parse_property_expression(props[0])
            if OWL_SOME_VALUES_FROM in value:
                return SomeValuesFrom(prop, self.parse_class_expression(
                    self._single(value, OWL_SOME_VALUES_FROM)))
            if OWL_ALL_VALUES_FROM in value:
                return AllValuesFrom(prop, self.parse_class_expression(
                    self._single(value, OWL_ALL_VALUES_FROM)))
            if OWL_HAS_VALUE in value:
                return HasValue(prop, self._single(value, OWL_HAS_VALUE))
            for pred, (kind, qualified) in _CARDINALITY_PREDICATES.items():
                if pred in value:
                    n = self._cardinality_n(self._single(value, pred))
                    filler = None
                    if qualified and OWL_ON_CLASS in value:
                        filler = self.parse_class_expression(self._single(value, OWL_ON_CLASS))
                    return Cardinality(kind, n, prop, filler)
            raise ExpressionError("restriction without a recognized constraint")
        if OWL_INTERSECTION_OF in value:
            ops = self._named_list(self._single(value, OWL_INTERSECTION_OF))
            return Intersection(tuple(self.parse_class_expression(v) for v in ops))
        if OWL_UNION_OF in value:
            ops = self._named_list(self._single(value, OWL_UNION_OF))
            return Union_(tuple(self.parse_class_expression(v) for v in ops))
        if OWL_COMPLEMENT_OF in value:
            return Complement(self.parse_class_expression(
                self._single(value, OWL_COMPLEMENT_OF)))
        if OWL_ONE_OF in value:
            members = []
            for v in self._named_list(self._single(value, OWL_ONE_OF)):
                if not (isinstance(v, dict) and set(v) == {"iri"}):
                    raise ExpressionError("owl:oneOf members must be IRIs")
                members.append(v["iri"])
            return OneOf(tuple(members))
        if OWL_RESTRICTION in value.get(RDF_TYPE, []):
            raise ExpressionError("restriction missing owl:onProperty")
        raise ExpressionError("unrecognized class expression node")

    @staticmethod
    def _single(value: dict, key: str) -> JsonValue:
        items = value[key]
        if len(items) != 1:
            raise ExpressionError(f"expected exactly one value for {key}")
        return items[0]

    @staticmethod
    def _cardinality_n(value: JsonValue) -> int:
        lexical = value.get("value") if isinstance(value, dict) else value
        try:
            n = int(lexical)
        except (TypeError, ValueError):
            raise ExpressionError(f"cardinality is not an integer: {lexical!r}")
        if n < 0:
            raise ExpressionError("cardinality must be non-negative")
        return n

    # -- per-entity construction ---------------------------------------------

    def _determine_kind(self, types: list[str]) -> EntityKind:
        type_set = set(types)
        for recognized, kind in _KIND_PRECEDENCE:
            if type_set & recognized:
                return kind
        if any(not is_vocabulary_iri(t) for t in types):
            return EntityKind.INDIVIDUAL
        return EntityKind.CLASS

    def _build_entity(self, iri: str) -> None:
        subject = Iri(iri)
        types = self._types_of(subject)
        entity = OwlEntity(iri=iri, kind=self._determine_kind(types), types=types)
        self.entities[iri] = entity
        self.slots[iri] = {}
        type_values: list[JsonValue] = []

        for tid in self.by_subject.get(subject, ()):
            t = self.triples[tid]
            ctx = _BuildContext(iri)
            self._claim(tid, iri)
            ctx.consumed.append(tid)
            if t.predicate == RDF_TYPE:
                self._handle_type(entity, t, tid, ctx, type_values)
            elif t.predicate in LOGICAL_PREDICATES:
                self._handle_logical(entity, t, tid, ctx)
            else:
                value = self._build_value(t.object, ctx)
                values = entity.annotations.setdefault(t.predicate, [])
                values.append(value)
                self.slots[iri][(t.predicate, _term_key(t.object))] = _Slot(values, len(values) - 1)
        if type_values:
            entity.logical_values[RDF_TYPE] = type_values
        entity.consumed.extend(
            tid for tid, owner in enumerate(self.owner) if owner == iri)

        for char_type in types:
            name = CHARACTERISTIC_TYPES.get(char_type)
            if name:
                entity.logical_axioms.append(
                    LogicalAxiom("characteristic", characteristic=name))

    def _handle_type(self, entity: OwlEntity, t: Triple, tid: int,
                     ctx: "_BuildContext", type_values: list) -> None:
        if isinstance(t.object, Iri):
            value: JsonValue = {"iri": t.object.value}
            type_values.append(value)
            self.slots[entity.iri][(RDF_TYPE, _term_key(t.object))] = _Slot(
                type_values, len(type_values) - 1)
            if (entity.kind is EntityKind.INDIVIDUAL
                    and not is_vocabulary_iri(t.object.value)):
                axiom = LogicalAxiom("typeAssertion", class_expr=Named(t.object.value))
                entity.logical_axioms.append(axiom)
                self.slots[entity.iri][(RDF_TYPE, _term_key(t.object))].axiom = axiom
            return
        if isinstance(t.object, Literal):
            type_values.append(term_to_json(t.object))
            return
        # Blank-node type: a class expression assertion.
        value = self._build_value(t.object, ctx)
        try:
            expr = self.parse_class_expression(value)
        except ExpressionError:
            self._rollback(ctx, tid)
            return
        type_values.append(value)
        axiom = LogicalAxiom("typeAssertion", class_expr=expr,
                             source_triples=len(set(ctx.consumed)))
        entity.logical_axioms.append(axiom)
        self.slots[entity.iri][(RDF_TYPE, _term_key(t.object))] = _Slot(
            type_values, len(type_values) - 1, axiom)

    def _handle_logical(self, entity: OwlEntity, t: Triple, tid: int,
                        ctx: "_BuildContext") -> None:
        pred = t.predicate
        value = self._build_value(t.object, ctx)
        try:
            axiom = self._interpret_logical(pred, value)
        except ExpressionError:
            self._rollback(ctx, tid)
            return
        axiom.source_triples = len(set(ctx.consumed))
        entity.logical_axioms.append(axiom)
        values = entity.logical_values.setdefault(pred, [])
        values.append(value)
        self.slots[entity.iri][(pred, _term_key(t.object))] = _Slot(
            values, len(values) - 1, axiom)

    def _interpret_logical(self, pred: str, value: JsonValue) -> LogicalAxiom:
        if pred == RDFS_SUBCLASS_OF:
            return LogicalAxiom("subClassOf", class_expr=self.parse_class_expression(value))
        if pred == OWL_EQUIVALENT_CLASS:
            return LogicalAxiom("equivalentClass", class_expr=self.parse_class_expression(value))
        if pred == OWL_DISJOINT_WITH:
            return LogicalAxiom("disjointWith", class_expr=self.parse_class_expression(value))
        if pred == RDFS_SUBPROPERTY_OF:
            return LogicalAxiom("subPropertyOf", property_expr=self.parse_property_expression(value))
        if pred == OWL_PROPERTY_CHAIN_AXIOM:
            items = self._named_list(value)
            if len(items) < 2:
                raise ExpressionError("property chain must have at least 2 elements")
            chain = PropertyChain(tuple(self.parse_property_expression(v) for v in items))
            return LogicalAxiom("propertyChain", property_expr=chain)
        if pred == OWL_INVERSE_OF:
            if isinstance(value, dict) and set(value) == {"iri"}:
                return LogicalAxiom("inverseOf", iri=value["iri"])
            raise ExpressionError("owl:inverseOf target must be an IRI")
        if pred == RDFS_DOMAIN:
            return LogicalAxiom("domain", class_expr=self.parse_class_expression(value))
        if pred == RDFS_RANGE:
            return LogicalAxiom("range", class_expr=self.parse_class_expression(value))
        if pred in (OWL_SAME_AS, OWL_DIFFERENT_FROM):
            if isinstance(value, dict) and set(value) == {"iri"}:
                kind = "sameAs" if pred == OWL_SAME_AS else "differentFrom"
                return LogicalAxiom(kind, iri=value["iri"])
            raise ExpressionError(f"{pred} target must be an IRI")
        raise ExpressionError(f"unhandled logical predicate {pred}")  # pragma: no cover

    def _rollback(self, ctx: "_BuildContext", attaching_tid: int) -> None:
        for tid in ctx.consumed:
            self.owner[tid] = _DANGLING
        self.owner[attaching_tid] = _DANGLING
        for node_id in ctx.claimed_bnodes:
            self.bnode_owner[node_id] = _DANGLING

    # -- reification and disjointness blocks --------------------------------------

    def _collect_axiom_blocks(self) -> list[tuple[BlankNode, str]]:
        """Well-formed owl:Axiom blocks as (node, source iri); malformed ones
        are marked dangling here."""
        blocks = []
        for subject in list(self.by_subject):
            if not isinstance(subject, BlankNode):
                continue
            types = self._types_of(subject)
            if OWL_AXIOM not in types:
                continue
            self.bnode_owner[subject.value] = "@axiom"
            parts: dict[str, Term] = {}
            for tid in self.by_subject[subject]:
                t = self.triples[tid]
                if t.predicate in _STRUCTURAL:
                    parts.setdefault(t.predicate, t.object)
            source = parts.get(OWL_ANNOTATED_SOURCE)
            well_formed = (len(parts) == 3 and isinstance(source, Iri))
            if well_formed:
                blocks.append((subject, source.value))
            else:
                for tid in self.by_subject[subject]:
                    self.owner[tid] = _DANGLING
                self.bnode_owner[subject.value] = _DANGLING
        return blocks

    def _attach_axiom_block(self, node: BlankNode, source_iri: str) -> None:
        entity = self.entities[source_iri]
        self.bnode_owner[node.value] = source_iri
        ctx = _BuildContext(source_iri)
        prop: Optional[str] = None
        target_term: Optional[Term] = None
        payload: dict[str, list] = {}
        for tid in self.by_subject[node]:
            t = self.triples[tid]
            self._claim(tid, source_iri)
            ctx.consumed.append(tid)
            if t.predicate == OWL_ANNOTATED_PROPERTY:
                prop = t.object.value if isinstance(t.object, Iri) else None
            elif t.predicate == OWL_ANNOTATED_TARGET:
                target_term = t.object
            elif t.predicate == OWL_ANNOTATED_SOURCE:
                pass
            elif t.predicate == RDF_TYPE and isinstance(t.object, Iri) and t.object.value == OWL_AXIOM:
                pass
            else:
                payload.setdefault(t.predicate, []).append(self._build_value(t.object, ctx))
        entity.consumed.extend(ctx.consumed)

        target_json = (self._build_value(target_term, ctx)
                       if isinstance(target_term, BlankNode)
                       else term_to_json(target_term))
        record = ReifiedAnnotation(source_iri, prop, target_json, payload)
        slot = self.slots[source_iri].get((prop, _term_key(target_term)))
        if slot is not None:
            slot.attach(payload)
            record.matched = True
        else:
            entity.detached.append({
                RDF_TYPE: [{"iri": OWL_AXIOM}],
                OWL_ANNOTATED_SOURCE: [{"iri": source_iri}],
                OWL_ANNOTATED_PROPERTY: [{"iri": prop}],
                OWL_ANNOTATED_TARGET: [target_json],
                **payload,
            })
        entity.reified.append(record)

    def _process_all_disjoint(self) -> None:
        for subject in list(self.by_subject):
            if not isinstance(subject, BlankNode):
                continue
            if OWL_ALL_DISJOINT_CLASSES not in self._types_of(subject):
                continue
            if self.bnode_owner.get(subject.value) is not None:
                continue
            members = self._scan_member_list(subject)
            if not members:
                for tid in self.by_subject[subject]:
                    self.owner[tid] = _DANGLING
                self.bnode_owner[subject.value] = _DANGLING
                continue
            owner_iri = min(members)
            self._ensure_entity(owner_iri)
            owner = self.entities[owner_iri]
            ctx = _BuildContext(owner_iri)
            self.bnode_owner[subject.value] = owner_iri
            node_json = self._build_node(subject, ctx)
            for tid in ctx.consumed:
                self._claim(tid, owner_iri)
            owner.consumed.extend(ctx.consumed)
            owner.detached.append(node_json)
            axiom = LogicalAxiom("allDisjointClasses", members=tuple(members),
                                 source_triples=len(set(ctx.consumed)))
            for member in members:
                self._ensure_entity(member)
                self.entities[member].logical_axioms.append(axiom)

    def _scan_member_list(self, node: BlankNode) -> Optional[list[str]]:
        heads = [self.triples[tid].object for tid in self.by_subject[node]
                 if self.triples[tid].predicate == OWL_MEMBERS]
        if len(heads) != 1:
            return None
        members: list[str] = []
        current = heads[0]
        seen: set[str] = set()
        while isinstance(current, BlankNode) and current.value not in seen:
            seen.add(current.value)
            first = rest = None
            for tid in self.by_subject.get(current, ()):
                t = self.triples[tid]
                if t.predicate == RDF_FIRST:
                    first = t.object
                elif t.predicate == RDF_REST:
                    rest = t.object
            if not isinstance(first, Iri) or rest is None:
                return None
            members.append(first.value)
            current = rest
        if not (isinstance(current, Iri) and current.value == RDF_NIL):
            return None
        return members if len(members) >= 2 else None

    # -- stubs --------------------------------------------------------------------

    def _ensure_entity(self, iri: str) -> None:
        if iri not in self.entities:
            entity = OwlEntity(iri=iri, kind=EntityKind.CLASS, is_stub=True)
            self.entities[iri] = entity
            self.slots[iri] = {}

    def _referenced_iris(self) -> set[str]:
        refs: set[str] = set()

        def walk(value: JsonValue) -> None:
            if isinstance(value, dict):
                if "iri" in value and len(value.keys() - {"reified"}) == 1:
                    refs.add(value["iri"])
                    for payload in value.get("reified", ()):
                        for vs in payload.values():
                            for v in vs:
                                walk(v)
                    return
                if "list" in value:
                    for v in value["list"]:
                        walk(v)
                    return
                for key, vs in value.items():
                    if key in ("@id", "bnodeRef"):
                        continue
                    if key == "reified":
                        for payload in vs:
                            for pvs in payload.values():
                                for v in pvs:
                                    walk(v)
                        continue
                    if key in ("value", "lang", "datatype"):
                        continue
                    if isinstance(vs, list):
                        for v in vs:
                            walk(v)

        for entity in list(self.entities.values()):
            for values in entity.annotations.values():
                for v in values:
                    walk(v)
            for values in entity.logical_values.values():
                for v in values:
                    walk(v)
            for node in entity.detached:
                walk(node)
        return refs

    # -- driver ----------------------------------------------------------------------

    def run(self) -> AssemblyResult:
        axiom_blocks = self._collect_axiom_blocks()

        entity_iris = sorted({s.value for s in self.by_subject if isinstance(s, Iri)})
        for iri in entity_iris:
            self._build_entity(iri)

        for subject in self.by_subject:
            if isinstance(subject, Iri) and self.header_iri is None:
                pass
        for tid, t in enumerate(self.triples):
            if (t.predicate == RDF_TYPE and isinstance(t.subject, Iri)
                    and isinstance(t.object, Iri) and t.object.value == OWL_ONTOLOGY):
                self.header_iri = t.subject.value
                break

        for node, source_iri in axiom_blocks:
            self._ensure_entity(source_iri)
            self._attach_axiom_block(node, source_iri)

        self._process_all_disjoint()

        for iri in sorted(self._referenced_iris()):
            if not is_vocabulary_iri(iri):
                self._ensure_entity(iri)

        dangling: list[Triple] = []
        consumed = 0
        for tid, owner in enumerate(self.owner):
            if owner is None or owner == _DANGLING:
                dangling.extend([self.triples[tid]] * self.multiplicity[tid])
            else:
                consumed += self.multiplicity[tid]

        entities = [self.entities[iri] for iri in sorted(self.entities)]
        header = self.entities.get(self.header_iri) if self.header_iri else None
        return AssemblyResult(entities=entities, header=header, dangling=dangling,
                              total_triples=self.total, consumed_triples=consumed)


@dataclass
class _BuildContext:
    entity_iri: str
    consumed: list[int] = field(default_factory=list)
    claimed_bnodes: list[str] = field(default_factory=list)
    in_progress: dict[str, dict] = field(default_factory=dict)
    built: dict[str, dict] = field(default_factory=dict)


def assemble(triples: Iterable[Triple]) -> AssemblyResult:
    return _Assembler(triples).run()


def collect_languages(entities: Iterable[OwlEntity]) -> list[str]:
    """All language tags appearing on literal values, lowercased and sorted."""
    tags: set[str] = set()

    def walk(value: JsonValue) -> None:
        if isinstance(value, dict):
            lang = value.get("lang")
            if isinstance(lang, str):
                tags.add(lang.lower())
            for key, vs in value.items():
                if key in ("value", "lang", "datatype", "@id", "bnodeRef"):
                    continue
                if key == "iri":
                    continue
                if key == "list":
                    for v in vs:
                        walk(v)
                elif key == "reified":
                    for payload in vs:
                        for pvs in payload.values():
                            for v in pvs:
                                walk(v)
                elif isinstance(vs, list):
                    for v in vs:
                        walk(v)

    for entity in entities:
        for values in entity.annotations.values():
            for v in values:
                walk(v)
        for values in entity.logical_values.values():
            for v in values:
                walk(v)
        for node in entity.detached:
            walk(node)
    return sorted(tags)
