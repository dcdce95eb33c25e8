"""Sampling whole knowledge bases.

A KB draw picks a vocabulary subset of its pool, samples facts first (their
concepts seed the anchor list), then subsumption axioms whose forms mix
uniformly over the form tables of all levels up to the KB's level.  Draws
failing the semantic gate, consistency plus satisfiability of every named
concept, are discarded; the caller retries with fresh randomness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .grammar import GrammarConfig, KBVocabulary, admissible_forms, sample_axiom, sample_concept
from .pools import VocabularyPool
from .reasoner import Budget, BudgetExceededError, EntailmentChecker, budget_from_secs
from .syntax import ConceptAssertion, ConceptExpr, KnowledgeBase, RoleAssertion, Subsumption


@dataclass(frozen=True)
class KBSizeRange:
    subsumptions: tuple[int, int]
    facts: tuple[int, int]


# Axiom count ranges keyed by the depth limit the KB must support; deeper
# inference needs more raw material.
SIZE_BY_DEPTH_LIMIT: dict[int, KBSizeRange] = {
    0: KBSizeRange((3, 8), (1, 5)),
    1: KBSizeRange((3, 8), (2, 6)),
    2: KBSizeRange((3, 8), (3, 8)),
    3: KBSizeRange((4, 8), (5, 10)),
    5: KBSizeRange((6, 14), (6, 12)),
}

ROLE_ASSERTION_SHARE = 0.25


def size_range_for(depth_limit: int) -> KBSizeRange:
    """The configured range for the limit, or the nearest one below it."""
    keys = [k for k in sorted(SIZE_BY_DEPTH_LIMIT) if k <= depth_limit]
    key = keys[-1] if keys else min(SIZE_BY_DEPTH_LIMIT)
    return SIZE_BY_DEPTH_LIMIT[key]


def sample_vocabulary(pool: VocabularyPool, rng: random.Random) -> KBVocabulary:
    n_concepts = rng.randint(min(4, len(pool.concepts)), min(8, len(pool.concepts)))
    n_roles = rng.randint(min(2, len(pool.roles)), min(4, len(pool.roles)))
    n_individuals = rng.randint(1, min(4, len(pool.individuals)))
    return KBVocabulary(
        concepts=tuple(rng.sample(pool.concepts, n_concepts)),
        roles=tuple(rng.sample(pool.roles, n_roles)),
        individuals=tuple(rng.sample(pool.individuals, n_individuals)),
    )


def sample_kb_once(
    level: int,
    size: KBSizeRange,
    pool: VocabularyPool,
    g: GrammarConfig,
    rng: random.Random,
    role_assertions: bool = False,
) -> KnowledgeBase:
    """One unchecked KB draw."""
    vocab = sample_vocabulary(pool, rng)
    n_subs = rng.randint(*size.subsumptions)
    n_facts = rng.randint(*size.facts)
    abox: list[ConceptAssertion | RoleAssertion] = []
    anchors: dict[ConceptExpr, None] = {}
    for _ in range(n_facts):
        if role_assertions and rng.random() < ROLE_ASSERTION_SHARE:
            role = rng.choice(vocab.roles)
            subject = rng.choice(vocab.individuals)
            obj = rng.choice(vocab.individuals)
            abox.append(RoleAssertion(role, subject, obj))
            continue
        fact_level = rng.randint(0, level)
        concept = sample_concept(fact_level, vocab, g, rng)
        abox.append(ConceptAssertion(concept, rng.choice(vocab.individuals)))
        anchors.setdefault(concept, None)
    forms = admissible_forms(level)
    tbox: list[Subsumption] = []
    for _ in range(n_subs):
        axiom_level, form = forms[rng.randrange(len(forms))]
        axiom = sample_axiom(axiom_level, vocab, g, rng, anchors=tuple(anchors), form=form)
        tbox.append(axiom)
        anchors.setdefault(axiom.rhs, None)
    return KnowledgeBase(tuple(tbox), tuple(abox), pool_id=pool.pool_id, level=level)


def sample_kb(
    level: int,
    size: KBSizeRange,
    pool: VocabularyPool,
    g: GrammarConfig,
    rng: random.Random,
    role_assertions: bool = False,
    budget: Budget | None = None,
) -> KnowledgeBase | None:
    """One KB draw gated on consistency and named-concept satisfiability;
    None when the draw fails the gate."""
    kb = sample_kb_once(level, size, pool, g, rng, role_assertions)
    checker = EntailmentChecker(kb, budget if budget is not None else budget_from_secs(5.0))
    try:
        if not checker.is_consistent():
            return None
        if not checker.all_concepts_satisfiable():
            return None
    except BudgetExceededError:
        # Draws the budget cannot decide are discarded like inconsistent ones.
        return None
    return kb
