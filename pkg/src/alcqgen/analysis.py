"""Structural measures over concepts and knowledge bases."""

from __future__ import annotations

from .nnf import nnf
from .syntax import (
    And,
    AtLeast,
    AtMost,
    Atomic,
    Axiom,
    ConceptAssertion,
    ConceptExpr,
    Exists,
    Forall,
    KnowledgeBase,
    Not,
    Or,
    RoleAssertion,
    Subsumption,
    concept_subterms,
)

_QUANTIFIERS = (Exists, Forall, AtLeast, AtMost)


def linguistic_level(c: ConceptExpr) -> int:
    """Number of boolean connectives (``and``/``or``) in ``c``."""
    total = 0
    for sub in concept_subterms(c):
        if isinstance(sub, (And, Or)):
            total += 1
    return total


def quantifier_count(c: ConceptExpr) -> int:
    return sum(1 for sub in concept_subterms(c) if isinstance(sub, _QUANTIFIERS))


def quantifier_nesting(c: ConceptExpr) -> int:
    """Depth of the deepest chain of nested quantifiers."""
    if isinstance(c, _QUANTIFIERS):
        return 1 + quantifier_nesting(c.filler)
    if isinstance(c, (And, Or)):
        return max(quantifier_nesting(c.left), quantifier_nesting(c.right))
    if isinstance(c, Not):
        return quantifier_nesting(c.inner)
    return 0


def atom_names(c: ConceptExpr) -> frozenset[str]:
    return frozenset(sub.name for sub in concept_subterms(c) if isinstance(sub, Atomic))


def axiom_level(axiom: Axiom) -> int:
    if isinstance(axiom, Subsumption):
        return linguistic_level(axiom.lhs) + linguistic_level(axiom.rhs)
    if isinstance(axiom, ConceptAssertion):
        return linguistic_level(axiom.concept)
    return 0


def subterm_counts(axiom: Axiom) -> dict[str, int]:
    """Connective and quantifier counts across an axiom's concept sides."""
    counts = {"and": 0, "or": 0, "not": 0, "exists": 0, "forall": 0, "atleast": 0, "atmost": 0}
    if isinstance(axiom, Subsumption):
        parts: tuple[ConceptExpr, ...] = (axiom.lhs, axiom.rhs)
    elif isinstance(axiom, ConceptAssertion):
        parts = (axiom.concept,)
    else:
        parts = ()
    kinds = (
        (And, "and"), (Or, "or"), (Not, "not"), (Exists, "exists"),
        (Forall, "forall"), (AtLeast, "atleast"), (AtMost, "atmost"),
    )
    for part in parts:
        for sub in concept_subterms(part):
            for cls, name in kinds:
                if isinstance(sub, cls):
                    counts[name] += 1
                    break
    return counts


def subexpressions(kb: KnowledgeBase) -> tuple[ConceptExpr, ...]:
    """All NNF subexpressions occurring in ``kb``, plus its atomic concepts.

    Axiom sides are normalized before decomposition, so the result is closed
    under the forms the reasoner actually manipulates.  Order is deterministic:
    first occurrence during a left-to-right scan of ``kb.axioms``.
    """
    seen: dict[ConceptExpr, None] = {}
    for axiom in kb.axioms:
        if isinstance(axiom, Subsumption):
            parts = (axiom.lhs, axiom.rhs)
        elif isinstance(axiom, ConceptAssertion):
            parts = (axiom.concept,)
        else:
            parts = ()
        for part in parts:
            for sub in concept_subterms(nnf(part)):
                seen.setdefault(sub, None)
    for name in kb.atomic_concepts():
        seen.setdefault(Atomic(name), None)
    return tuple(seen)


def check_shape(
    c: ConceptExpr,
    level: int,
    max_quantifiers: int | None = None,
    max_nesting: int = 2,
    max_atoms: int = 7,
) -> bool:
    """True when ``c`` fits the sampling constraints for ``level``."""
    if max_quantifiers is None:
        max_quantifiers = level + 1
    return (
        linguistic_level(c) == level
        and quantifier_count(c) <= max_quantifiers
        and quantifier_nesting(c) <= max_nesting
        and len(atom_names(c)) <= max_atoms
    )
