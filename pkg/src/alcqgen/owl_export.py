"""OWL 2 functional-style syntax export.

Knowledge bases map onto the OWL constructs directly: atomic concepts
become classes, roles become object properties, quantified restrictions
become SomeValuesFrom/AllValuesFrom/Min/MaxCardinality.  The output carries
declarations for every name so standard reasoners accept it in strict
parsing modes.
"""

from __future__ import annotations

from .syntax import (
    And,
    AtLeast,
    AtMost,
    Atomic,
    Axiom,
    Bottom,
    ConceptAssertion,
    ConceptExpr,
    Exists,
    Forall,
    KnowledgeBase,
    Not,
    Or,
    RoleAssertion,
    Subsumption,
    Top,
)

DEFAULT_IRI = "http://example.org/generated"


def _owl_concept(c: ConceptExpr) -> str:
    if isinstance(c, Atomic):
        return f":{c.name}"
    if isinstance(c, Top):
        return "owl:Thing"
    if isinstance(c, Bottom):
        return "owl:Nothing"
    if isinstance(c, Not):
        return f"ObjectComplementOf({_owl_concept(c.inner)})"
    if isinstance(c, And):
        return f"ObjectIntersectionOf({_owl_concept(c.left)} {_owl_concept(c.right)})"
    if isinstance(c, Or):
        return f"ObjectUnionOf({_owl_concept(c.left)} {_owl_concept(c.right)})"
    if isinstance(c, Exists):
        return f"ObjectSomeValuesFrom(:{c.role} {_owl_concept(c.filler)})"
    if isinstance(c, Forall):
        return f"ObjectAllValuesFrom(:{c.role} {_owl_concept(c.filler)})"
    if isinstance(c, AtLeast):
        return f"ObjectMinCardinality({c.n} :{c.role} {_owl_concept(c.filler)})"
    if isinstance(c, AtMost):
        return f"ObjectMaxCardinality({c.n} :{c.role} {_owl_concept(c.filler)})"
    raise ValueError(f"no OWL form for {type(c).__name__}")


def owl_axiom(axiom: Axiom) -> str:
    if isinstance(axiom, Subsumption):
        return f"SubClassOf({_owl_concept(axiom.lhs)} {_owl_concept(axiom.rhs)})"
    if isinstance(axiom, ConceptAssertion):
        return f"ClassAssertion({_owl_concept(axiom.concept)} :{axiom.individual})"
    if isinstance(axiom, RoleAssertion):
        return f"ObjectPropertyAssertion(:{axiom.role} :{axiom.subject} :{axiom.object})"
    raise ValueError(f"no OWL form for {type(axiom).__name__}")


def to_owl_functional(kb: KnowledgeBase, iri: str = DEFAULT_IRI) -> str:
    lines = [
        f"Prefix(:=<{iri}#>)",
        "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)",
        f"Ontology(<{iri}>",
    ]
    for name in sorted(kb.atomic_concepts()):
        lines.append(f"Declaration(Class(:{name}))")
    for name in sorted(kb.roles()):
        lines.append(f"Declaration(ObjectProperty(:{name}))")
    for name in sorted(kb.individuals()):
        lines.append(f"Declaration(NamedIndividual(:{name}))")
    for axiom in kb.axioms:
        lines.append(owl_axiom(axiom))
    lines.append(")")
    return "\n".join(lines) + "\n"
