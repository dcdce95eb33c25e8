"""Deductive closure and minimum justifications.

The closure of a knowledge base is the set of entailed statements drawn from
a finite candidate space: concept assertions ``C(a)`` for every NNF
subexpression ``C`` and named individual ``a``, and subsumptions ``C
subclassof D`` over pairs of subexpressions (skipping the trivially true
shapes ``D = Thing``, ``C = Nothing``, ``C = D``, and ``Thing(a)``).

A justification for an entailed statement is a subset of KB axioms that
still entails it; the inference depth of a statement is the size of its
minimum justification minus one, so directly asserted facts sit at depth
zero.  ``min_justification`` also serves false statements, where the
defining property is that the subset becomes inconsistent when the
statement is added.

The search prunes with a relevance cone: only axioms reachable from the
query through shared symbols (concept names, role names, individuals) can
appear in a minimal justification.  Soundness of the pruning rests on two
facts about ALCQ: any model extends to every larger cardinality by
duplicating an element, and interpretations over the same domain combine
freely across disjoint signatures.  Together they let a model of the
connected part absorb a model of any disconnected axiom, so disconnected
axioms are never needed.  For supports-true subsumption queries the cone
further restricts to TBox axioms: ALCQ is invariant under disjoint unions,
so ABox facts cannot force a subsumption over a consistent KB.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .analysis import subexpressions
from .nnf import nnf
from .reasoner import (
    Budget,
    BudgetExceededError,
    EntailmentChecker,
    budget_from_secs,
    valid_subsumption,
)
from .syntax import (
    BOTTOM,
    TOP,
    Axiom,
    ConceptAssertion,
    KnowledgeBase,
    RoleAssertion,
    Subsumption,
    axiom_signature,
    render,
)

SUPPORTS_TRUE = "supports-true"
INDUCES_INCONSISTENCY = "induces-inconsistency"


class ClosureBudgetError(RuntimeError):
    """The per-KB closure budget ran out; the KB should be discarded."""


class DepthCapError(RuntimeError):
    """No justification within the cardinality cap exists."""


@dataclass(frozen=True)
class ClosureEntry:
    axiom: Axiom
    source: str  # "asserted" or "inferred"


def candidate_space(kb: KnowledgeBase) -> tuple[Axiom, ...]:
    """Candidate statements whose entailment the closure decides, in a
    canonical order (assertions before subsumptions, each sorted by their
    rendered text)."""
    subs = subexpressions(kb)
    assertions = []
    for individual in kb.individuals():
        for concept in subs:
            if concept == TOP:
                continue
            assertions.append(ConceptAssertion(concept, individual))
    subsumptions = []
    for lhs in subs:
        if lhs == BOTTOM:
            continue
        for rhs in subs:
            if rhs == TOP or lhs == rhs:
                continue
            subsumptions.append(Subsumption(lhs, rhs))
    assertions.sort(key=render)
    subsumptions.sort(key=render)
    return tuple(assertions) + tuple(subsumptions)


def _normalized(axiom: Axiom) -> Axiom:
    if isinstance(axiom, Subsumption):
        return Subsumption(nnf(axiom.lhs), nnf(axiom.rhs))
    if isinstance(axiom, ConceptAssertion):
        return ConceptAssertion(nnf(axiom.concept), axiom.individual)
    return axiom


class _Lattice:
    """Bookkeeping that lets the closure sweep skip tableau runs.

    Bitmask rows over the subexpression list record which subsumptions and
    memberships are already settled: entailed facts propagate (transitivity,
    instance inheritance) and refuted ones prune (an established instance of
    the lhs that is an established non-instance of the rhs refutes the
    pair).  Every recorded bit is a sound consequence of the knowledge base
    plus previous checker verdicts, so a sweep with the lattice returns
    exactly what checking every candidate directly would.
    """

    def __init__(self, kb: KnowledgeBase, checker: EntailmentChecker):
        self.checker = checker
        subs = subexpressions(kb)
        self.index = {c: i for i, c in enumerate(subs)}
        n = len(subs)
        self.yes_up: list[int] = [1 << i for i in range(n)]  # i -> mask of j with i <= j
        self.yes_down: list[int] = [1 << i for i in range(n)]  # j -> mask of i with i <= j
        self.no_up: list[int] = [0] * n  # i -> mask of j with "i <= j" refuted
        self.member: dict[str, int] = {}
        self.non_member: dict[str, int] = {}
        for i, c in enumerate(subs):
            for j, d in enumerate(subs):
                if i != j and valid_subsumption(Subsumption(c, d)):
                    self._record_yes(i, j)
        for axiom in kb.tbox:
            i = self.index.get(nnf(axiom.lhs))
            j = self.index.get(nnf(axiom.rhs))
            if i is not None and j is not None:
                self._record_yes(i, j)
        for axiom in kb.abox:
            if isinstance(axiom, ConceptAssertion):
                i = self.index.get(nnf(axiom.concept))
                if i is not None:
                    seen = self.member.get(axiom.individual, 0)
                    self.member[axiom.individual] = seen | self.yes_up[i]

    def _record_yes(self, i: int, j: int) -> None:
        if self.yes_up[i] >> j & 1:
            return
        below = self.yes_down[i]
        above = self.yes_up[j]
        rest = below
        while rest:
            low = rest & -rest
            rest ^= low
            self.yes_up[low.bit_length() - 1] |= above
        rest = above
        while rest:
            low = rest & -rest
            rest ^= low
            self.yes_down[low.bit_length() - 1] |= below

    def _record_no(self, i: int, j: int) -> None:
        # Anything above i cannot be below anything below j, else i <= j
        # would follow by transitivity.
        downs = self.yes_down[j]
        rest = self.yes_up[i]
        while rest:
            low = rest & -rest
            rest ^= low
            self.no_up[low.bit_length() - 1] |= downs

    def decide(self, candidate: Axiom) -> bool:
        if isinstance(candidate, ConceptAssertion):
            i = self.index[candidate.concept]
            name = candidate.individual
            if self.member.get(name, 0) >> i & 1:
                return True
            if self.non_member.get(name, 0) >> i & 1:
                return False
            if self.checker.holds(candidate):
                self.member[name] = self.member.get(name, 0) | self.yes_up[i]
                return True
            self.non_member[name] = self.non_member.get(name, 0) | self.yes_down[i]
            return False
        i = self.index[candidate.lhs]
        j = self.index[candidate.rhs]
        if self.yes_up[i] >> j & 1:
            return True
        if self.no_up[i] >> j & 1:
            return False
        for name, holds_mask in self.member.items():
            if holds_mask >> i & 1 and self.non_member.get(name, 0) >> j & 1:
                self._record_no(i, j)
                return False
        if self.checker.holds(candidate):
            self._record_yes(i, j)
            return True
        self._record_no(i, j)
        return False


def delta_closure(
    kb: KnowledgeBase,
    budget_secs: float | None = None,
    checker: EntailmentChecker | None = None,
) -> tuple[ClosureEntry, ...]:
    """All entailed candidate statements, tagged asserted or inferred.

    Raises :class:`ClosureBudgetError` when the deterministic work budget is
    exhausted, which callers treat as "discard this KB".  Requires a
    consistent KB.
    """
    if checker is None:
        budget = budget_from_secs(5.0 if budget_secs is None else budget_secs)
        checker = EntailmentChecker(kb, budget)
    try:
        if not checker.is_consistent():
            raise ValueError("the closure of an inconsistent knowledge base is undefined")
        asserted = {_normalized(a) for a in kb.axioms if not isinstance(a, RoleAssertion)}
        lattice = _Lattice(kb, checker)
        entries = []
        for candidate in candidate_space(kb):
            if lattice.decide(candidate):
                source = "asserted" if candidate in asserted else "inferred"
                entries.append(ClosureEntry(candidate, source))
        return tuple(entries)
    except BudgetExceededError as exc:
        raise ClosureBudgetError(str(exc)) from exc


def relevance_cone(kb: KnowledgeBase, query: Axiom, mode: str) -> tuple[int, ...]:
    """Indices of KB axioms symbol-reachable from the query."""
    axioms = kb.axioms
    if mode == SUPPORTS_TRUE and isinstance(query, Subsumption):
        pool = list(range(len(kb.tbox)))
    else:
        pool = list(range(len(axioms)))
    signatures = {i: axiom_signature(axioms[i]) for i in pool}
    reached = axiom_signature(query)
    cone: list[int] = []
    remaining = list(pool)
    grew = True
    while grew:
        grew = False
        still = []
        for i in remaining:
            if signatures[i] & reached:
                cone.append(i)
                reached |= signatures[i]
                grew = True
            else:
                still.append(i)
        remaining = still
    return tuple(sorted(cone))


def min_justification(
    kb: KnowledgeBase,
    query: Axiom,
    mode: str = SUPPORTS_TRUE,
    cap: int | None = None,
    checker: EntailmentChecker | None = None,
) -> tuple[int, ...]:
    """Indices of a minimum-cardinality axiom subset with the mode's
    property: entailing the query (supports-true) or being inconsistent
    with it (induces-inconsistency).

    Runs expand-and-shrink for an upper bound, then a staged exhaustive scan
    by cardinality (0, 1, 2, ...) over the relevance cone; the first hit is
    a global minimum.  ``cap`` bounds the scanned cardinality; if the true
    minimum exceeds it, :class:`DepthCapError` is raised.
    """
    if mode not in (SUPPORTS_TRUE, INDUCES_INCONSISTENCY):
        raise ValueError(f"unknown justification mode {mode!r}")
    if checker is None:
        checker = EntailmentChecker(kb)
    axioms = kb.axioms

    def prop(indices) -> bool:
        return checker.subset_holds(tuple(axioms[i] for i in indices), query, mode)

    cone = relevance_cone(kb, query, mode)
    if not prop(cone):
        raise ValueError(
            f"the query does not have the {mode} property over the knowledge base: "
            f"{render(query)}"
        )
    shrunk = list(cone)
    stable = False
    while not stable:
        stable = True
        for idx in list(shrunk):
            trial = [i for i in shrunk if i != idx]
            if prop(trial):
                shrunk = trial
                stable = False
    upper = len(shrunk)
    max_k = upper - 1 if cap is None else min(upper - 1, cap)
    # Axioms whose removal from the cone breaks the property appear in every
    # justification; fixing them shrinks the combination scan.  Only worth
    # the extra checks when the scan would otherwise be large.
    necessary: list[int] = []
    scan_size = sum(comb(len(cone), k) for k in range(max_k + 1))
    if scan_size > 4096:
        necessary = [i for i in cone if not prop([j for j in cone if j != i])]
    free = [i for i in cone if i not in necessary]
    for k in range(len(necessary), max_k + 1):
        for combo in combinations(free, k - len(necessary)):
            subset = tuple(sorted(necessary + list(combo)))
            if prop(subset):
                return subset
    if cap is not None and upper > cap:
        raise DepthCapError(
            f"no justification of cardinality <= {cap} exists (found one of {upper})"
        )
    return tuple(sorted(shrunk))


def check_minimal(kb: KnowledgeBase, indices, query: Axiom, mode: str, checker=None) -> bool:
    """The subset has the property and no single removal preserves it."""
    if checker is None:
        checker = EntailmentChecker(kb)
    axioms = kb.axioms

    def prop(ids) -> bool:
        return checker.subset_holds(tuple(axioms[i] for i in ids), query, mode)

    ids = tuple(indices)
    if not prop(ids):
        return False
    for drop in ids:
        if prop(tuple(i for i in ids if i != drop)):
            return False
    return True


def inference_depth(justification) -> int:
    """Depth of a statement given its minimum justification."""
    return len(tuple(justification)) - 1
