"""Vocabulary IRIs used throughout parsing and interpretation."""

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"
XML_NS = "http://www.w3.org/XML/1998/namespace"

RDF_TYPE = RDF_NS + "type"
RDF_FIRST = RDF_NS + "first"
RDF_REST = RDF_NS + "rest"
RDF_NIL = RDF_NS + "nil"
RDF_PROPERTY = RDF_NS + "Property"
RDF_LANG_STRING = RDF_NS + "langString"

RDFS_CLASS = RDFS_NS + "Class"
RDFS_LABEL = RDFS_NS + "label"
RDFS_COMMENT = RDFS_NS + "comment"
RDFS_SUBCLASS_OF = RDFS_NS + "subClassOf"
RDFS_SUBPROPERTY_OF = RDFS_NS + "subPropertyOf"
RDFS_DOMAIN = RDFS_NS + "domain"
RDFS_RANGE = RDFS_NS + "range"

OWL_ONTOLOGY = OWL_NS + "Ontology"
OWL_CLASS = OWL_NS + "Class"
OWL_OBJECT_PROPERTY = OWL_NS + "ObjectProperty"
OWL_DATATYPE_PROPERTY = OWL_NS + "DatatypeProperty"
OWL_ANNOTATION_PROPERTY = OWL_NS + "AnnotationProperty"
OWL_NAMED_INDIVIDUAL = OWL_NS + "NamedIndividual"
OWL_RESTRICTION = OWL_NS + "Restriction"
OWL_AXIOM = OWL_NS + "Axiom"
OWL_THING = OWL_NS + "Thing"

OWL_IMPORTS = OWL_NS + "imports"
OWL_ON_PROPERTY = OWL_NS + "onProperty"
OWL_ON_CLASS = OWL_NS + "onClass"
OWL_SOME_VALUES_FROM = OWL_NS + "someValuesFrom"
OWL_ALL_VALUES_FROM = OWL_NS + "allValuesFrom"
OWL_HAS_VALUE = OWL_NS + "hasValue"
OWL_INTERSECTION_OF = OWL_NS + "intersectionOf"
OWL_UNION_OF = OWL_NS + "unionOf"
OWL_COMPLEMENT_OF = OWL_NS + "complementOf"
OWL_ONE_OF = OWL_NS + "oneOf"
OWL_MIN_CARDINALITY = OWL_NS + "minCardinality"
OWL_MAX_CARDINALITY = OWL_NS + "maxCardinality"
OWL_CARDINALITY = OWL_NS + "cardinality"
OWL_MIN_QUALIFIED_CARDINALITY = OWL_NS + "minQualifiedCardinality"
OWL_MAX_QUALIFIED_CARDINALITY = OWL_NS + "maxQualifiedCardinality"
OWL_QUALIFIED_CARDINALITY = OWL_NS + "qualifiedCardinality"
OWL_EQUIVALENT_CLASS = OWL_NS + "equivalentClass"
OWL_DISJOINT_WITH = OWL_NS + "disjointWith"
OWL_ALL_DISJOINT_CLASSES = OWL_NS + "AllDisjointClasses"
OWL_MEMBERS = OWL_NS + "members"
OWL_PROPERTY_CHAIN_AXIOM = OWL_NS + "propertyChainAxiom"
OWL_INVERSE_OF = OWL_NS + "inverseOf"
OWL_SAME_AS = OWL_NS + "sameAs"
OWL_DIFFERENT_FROM = OWL_NS + "differentFrom"
OWL_DEPRECATED = OWL_NS + "deprecated"
OWL_ANNOTATED_SOURCE = OWL_NS + "annotatedSource"
OWL_ANNOTATED_PROPERTY = OWL_NS + "annotatedProperty"
OWL_ANNOTATED_TARGET = OWL_NS + "annotatedTarget"

XSD_STRING = XSD_NS + "string"
XSD_BOOLEAN = XSD_NS + "boolean"
XSD_INTEGER = XSD_NS + "integer"
XSD_DECIMAL = XSD_NS + "decimal"
XSD_DOUBLE = XSD_NS + "double"
XSD_NON_NEGATIVE_INTEGER = XSD_NS + "nonNegativeInteger"

# Property characteristics asserted through rdf:type.
CHARACTERISTIC_TYPES = {
    OWL_NS + "TransitiveProperty": "transitive",
    OWL_NS + "SymmetricProperty": "symmetric",
    OWL_NS + "AsymmetricProperty": "asymmetric",
    OWL_NS + "ReflexiveProperty": "reflexive",
    OWL_NS + "IrreflexiveProperty": "irreflexive",
    OWL_NS + "FunctionalProperty": "functional",
    OWL_NS + "InverseFunctionalProperty": "inverse-functional",
}

# IRIs under these prefixes are vocabulary, never promoted to entity stubs.
VOCABULARY_PREFIXES = (RDF_NS, RDFS_NS, OWL_NS, XSD_NS)

# Default extraction properties (OBO community conventions).
IAO_DEFINITION = "http://purl.obolibrary.org/obo/IAO_0000115"
OIO_EXACT_SYNONYM = "http://www.geneontology.org/formats/oboInOwl#hasExactSynonym"
OIO_HAS_DBXREF = "http://www.geneontology.org/formats/oboInOwl#hasDbXref"
BFO_PART_OF = "http://purl.obolibrary.org/obo/BFO_0000050"


def is_vocabulary_iri(iri: str) -> bool:
    return iri.startswith(VOCABULARY_PREFIXES)
