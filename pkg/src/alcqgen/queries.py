"""Query generation: one true, false, and unknown statement per depth slot.

True queries are closure entries whose inference depth matches the slot.
False queries negate a closure entry of the right depth: for assertions the
negated fact itself, for subsumptions the axiom with a complemented RHS;
either way the result must be inconsistent with the KB through a minimum
axiom set of the same cardinality, which is verified, never assumed.
Unknown queries are freshly sampled statements the KB neither entails nor
refutes; they reuse the pool, not just the KB's vocabulary, so they can
mention symbols the context never constrains.

A KB that cannot fill every slot with distinct statements is rejected
(``build_query_set`` returns None) and the caller redraws the KB.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .closure import (
    INDUCES_INCONSISTENCY,
    SUPPORTS_TRUE,
    ClosureEntry,
    DepthCapError,
    min_justification,
)
from .grammar import GrammarConfig, KBVocabulary, sample_axiom, sample_concept
from .nnf import complement, negate_fact, nnf
from .pools import VocabularyPool
from .reasoner import EntailmentChecker, Verdict
from .syntax import (
    Axiom,
    ConceptAssertion,
    KnowledgeBase,
    Subsumption,
    render,
)


class NoCandidateAtDepthError(RuntimeError):
    """The closure offers no remaining statement at the requested depth."""


class SamplingExhaustedError(RuntimeError):
    """Bounded retries ran out while sampling an unknown query."""


@dataclass(frozen=True)
class Query:
    axiom: Axiom
    answer: Verdict
    depth: int | None  # None for unknown queries
    justification: tuple[int, ...]  # indices into kb.axioms; empty for unknown


def _false_candidate(entry: ClosureEntry) -> Axiom:
    if isinstance(entry.axiom, ConceptAssertion):
        return negate_fact(entry.axiom)
    lhs, rhs = entry.axiom.lhs, entry.axiom.rhs
    return Subsumption(nnf(lhs), complement(rhs))


def make_true_query(
    kb: KnowledgeBase,
    entries: tuple[ClosureEntry, ...],
    depth: int,
    checker: EntailmentChecker,
    cap: int | None = None,
    used: frozenset[str] = frozenset(),
) -> Query:
    """First closure entry of the requested depth, scanning in order."""
    cap = max(cap if cap is not None else depth + 1, depth + 1)
    for entry in entries:
        if render(entry.axiom) in used:
            continue
        try:
            just = min_justification(kb, entry.axiom, SUPPORTS_TRUE, cap=cap, checker=checker)
        except DepthCapError:
            continue
        if len(just) - 1 == depth:
            return Query(entry.axiom, Verdict.TRUE, depth, just)
    raise NoCandidateAtDepthError(f"no true statement of depth {depth} remains")


def make_false_query(
    kb: KnowledgeBase,
    entries: tuple[ClosureEntry, ...],
    depth: int,
    checker: EntailmentChecker,
    cap: int | None = None,
    used: frozenset[str] = frozenset(),
) -> Query:
    cap = max(cap if cap is not None else depth + 1, depth + 1)
    for entry in entries:
        query = _verified_false(kb, entry, depth, checker, cap, used)
        if query is not None:
            return query
    raise NoCandidateAtDepthError(f"no false statement of depth {depth} remains")


def _verified_false(
    kb: KnowledgeBase,
    entry: ClosureEntry,
    depth: int,
    checker: EntailmentChecker,
    cap: int,
    used: frozenset[str],
) -> Query | None:
    candidate = _false_candidate(entry)
    if render(candidate) in used:
        return None
    if checker.subset_holds(kb.axioms, candidate, SUPPORTS_TRUE):
        return None  # the "false" statement is itself entailed; unusable
    try:
        just = min_justification(
            kb, candidate, INDUCES_INCONSISTENCY, cap=cap, checker=checker
        )
    except (DepthCapError, ValueError):
        return None
    if len(just) - 1 != depth:
        return None
    return Query(candidate, Verdict.FALSE, depth, just)


def make_unknown_query(
    kb: KnowledgeBase,
    pool: VocabularyPool,
    g: GrammarConfig,
    rng: random.Random,
    checker: EntailmentChecker,
    used: frozenset[str] = frozenset(),
    max_tries: int = 100,
) -> Query:
    """A sampled statement the KB neither entails nor refutes."""
    vocab = KBVocabulary(pool.concepts, pool.roles, pool.individuals)
    for _ in range(max_tries):
        level = rng.randint(0, kb.level)
        if rng.random() < 0.5:
            concept = sample_concept(level, vocab, g, rng)
            candidate: Axiom = ConceptAssertion(concept, rng.choice(vocab.individuals))
        else:
            candidate = sample_axiom(level, vocab, g, rng)
        if render(candidate) in used:
            continue
        if checker.entails(candidate) is Verdict.UNKNOWN:
            return Query(candidate, Verdict.UNKNOWN, None, ())
    raise SamplingExhaustedError(f"no unknown statement found in {max_tries} tries")


def build_query_set(
    kb: KnowledgeBase,
    entries: tuple[ClosureEntry, ...],
    depth_slots: tuple[int, ...],
    pool: VocabularyPool,
    g: GrammarConfig,
    rng: random.Random,
    checker: EntailmentChecker,
    unknown_tries: int = 100,
) -> list[Query] | None:
    """Queries ordered (true, false, unknown) per ascending depth slot, or
    None when the KB cannot serve every slot."""
    slots = tuple(sorted(set(depth_slots)))
    cap = max(slots) + 1
    true_bucket: dict[int, tuple[Axiom, tuple[int, ...]]] = {}
    false_bucket: dict[int, tuple[Axiom, tuple[int, ...]]] = {}
    order = list(range(len(entries)))
    rng.shuffle(order)
    used: set[str] = set()
    for idx in order:
        if len(true_bucket) == len(slots) and len(false_bucket) == len(slots):
            break
        entry = entries[idx]
        key = render(entry.axiom)
        if key in used:
            continue
        try:
            just = min_justification(kb, entry.axiom, SUPPORTS_TRUE, cap=cap, checker=checker)
        except DepthCapError:
            continue
        depth = len(just) - 1
        if depth not in true_bucket and depth in slots:
            true_bucket[depth] = (entry.axiom, just)
            used.add(key)
            continue
        if depth not in false_bucket and depth in slots:
            if isinstance(entry.axiom, ConceptAssertion):
                # S ∪ {negate_fact(f)} is unsatisfiable exactly when S entails
                # f, so the true-side minimum justification transfers to the
                # negation unchanged, and a consistent KB entailing f cannot
                # also entail its negation.
                candidate = negate_fact(entry.axiom)
                if render(candidate) in used:
                    continue
                false_bucket[depth] = (candidate, just)
                used.add(key)
                used.add(render(candidate))
                continue
            query = _verified_false(kb, entry, depth, checker, cap, frozenset(used))
            if query is not None:
                false_bucket[depth] = (query.axiom, query.justification)
                used.add(key)
                used.add(render(query.axiom))
    if len(true_bucket) != len(slots) or len(false_bucket) != len(slots):
        return None
    queries: list[Query] = []
    for depth in slots:
        axiom, just = true_bucket[depth]
        queries.append(Query(axiom, Verdict.TRUE, depth, just))
        axiom, just = false_bucket[depth]
        queries.append(Query(axiom, Verdict.FALSE, depth, just))
        try:
            unknown = make_unknown_query(
                kb, pool, g, rng, checker, frozenset(used), unknown_tries
            )
        except SamplingExhaustedError:
            return None
        used.add(render(unknown.axiom))
        queries.append(unknown)
    return queries
