"""ontodex: a self-contained ontology lookup service.

Loads OWL2 ontologies from RDF documents into a lossless record model with
extracted queryable fields, and serves them through a paginated HTTP API
with hierarchy traversal, multilingual search, and registry-based
cross-linking.
"""

__version__ = "0.1.0"
