"""Tableau reasoner for ALCQ.

Satisfiability is decided by a standard completion-graph tableau:

* GCIs are internalized: for every ``C subclassof D`` the disjunction
  ``nnf(not C) or nnf(D)`` joins every node's label at creation.
* Deterministic rules (``and``, ``only``, single-live-disjunct propagation)
  run to a fixpoint before any branching.
* Branching rules: disjunction, the choose rule for ``atmost`` fillers, and
  merging of two atmost-successors (candidate pairs in creation order, the
  newer node merged into the older and its generated subtree pruned).
* Generating rules (``some``, ``atleast``) are gated by ancestor equality
  blocking; root nodes (named individuals) are never blocked.  Fresh
  ``atleast`` successors are recorded pairwise distinct.
* A clash is Nothing in a label, a concept together with its complement, or
  more than n pairwise-distinct counting successors for an ``atmost n``.

Named individuals are root nodes and may be merged (there is no unique-name
assumption).  Search is chronological backtracking over cloned states, so a
failed branch cannot leak constraints into its siblings.

Work is metered in deterministic units (rule firings and node creations)
rather than wall-clock time, so runs are reproducible regardless of machine
load; ``budget_from_secs`` converts a seconds-denominated limit using a
fixed calibration constant.

A completed, clash-free graph with no blocked nodes is itself a finite
model.  :class:`EntailmentChecker` caches such models and uses them to
short-circuit satisfiability checks (a cached model is always re-verified
against the exact axiom set in question by direct evaluation, so the cache
can never flip a verdict).  Unsatisfiability always comes from an exhausted
tableau search.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from itertools import combinations

from .interpretation import Interpretation, committed_individuals
from .nnf import complement, nnf, simplify
from .syntax import (
    BOTTOM,
    TOP,
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
    Or,
    RoleAssertion,
    Subsumption,
)

# Tableau work units one second of single-thread execution buys on a
# commodity desktop; used only to convert seconds-denominated budgets.
WORK_UNITS_PER_SECOND = 100_000
DEFAULT_BUDGET_SECS = 5.0

_GENERATING = (Exists, AtLeast)


class BudgetExceededError(RuntimeError):
    """The reasoning task ran out of its deterministic work budget."""


class InternalSoundnessError(RuntimeError):
    """Both an axiom and its refutation are inconsistent with a consistent
    knowledge base; indicates a reasoner defect, never user error."""


class Verdict(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"


class Budget:
    """Mutable work-unit counter shared by all tableau runs of one task."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def charge(self, units: int = 1) -> None:
        self.used += units
        if self.used > self.limit:
            raise BudgetExceededError(f"work budget of {self.limit} units exhausted")

    def remaining(self) -> int:
        return self.limit - self.used


def budget_from_secs(secs: float) -> Budget:
    return Budget(max(1, int(secs * WORK_UNITS_PER_SECOND)))


class _Node:
    __slots__ = ("nid", "label", "succ", "parent", "root")

    def __init__(self, nid: int, label: dict, parent: int | None, root: bool):
        self.nid = nid
        self.label = label  # dict[ConceptExpr, None], insertion ordered
        self.succ: dict[str, list[int]] = {}
        self.parent = parent
        self.root = root

    def copy(self) -> "_Node":
        dup = _Node(self.nid, dict(self.label), self.parent, self.root)
        dup.succ = {role: list(ys) for role, ys in self.succ.items()}
        return dup


class _Tableau:
    # ids are allocated ascending and nodes are only ever deleted, so the
    # nodes dict iterates in ascending id order without sorting.
    __slots__ = ("nodes", "named", "universal", "absorbed", "distinct", "next_id", "budget")

    def __init__(
        self,
        universal: tuple[ConceptExpr, ...],
        absorbed: dict[str, tuple[ConceptExpr, ...]],
        budget: Budget,
    ):
        self.nodes: dict[int, _Node] = {}
        self.named: dict[str, int] = {}
        self.universal = universal
        self.absorbed = absorbed  # shared, never mutated after construction
        self.distinct: set[frozenset[int]] = set()
        self.next_id = 0
        self.budget = budget

    def clone(self) -> "_Tableau":
        self.budget.charge(1 + len(self.nodes))
        dup = _Tableau(self.universal, self.absorbed, self.budget)
        dup.nodes = {nid: node.copy() for nid, node in self.nodes.items()}
        dup.named = dict(self.named)
        dup.distinct = set(self.distinct)
        dup.next_id = self.next_id
        return dup

    def new_node(self, parent: int | None, root: bool) -> _Node:
        self.budget.charge(1)
        node = _Node(self.next_id, dict.fromkeys(self.universal), parent, root)
        self.nodes[self.next_id] = node
        self.next_id += 1
        return node

    def successors(self, node: _Node, role: str) -> list[int]:
        ys = node.succ.get(role)
        if not ys:
            return []
        live = [y for y in ys if y in self.nodes]
        if len(live) != len(ys):
            node.succ[role] = live
        return live

    def add(self, node: _Node, concept: ConceptExpr) -> bool:
        if concept in node.label:
            return False
        node.label[concept] = None
        return True


def _counts(state: _Tableau, y: int, filler: ConceptExpr) -> bool:
    """Whether successor ``y`` counts toward a restriction on ``filler``."""
    return filler == TOP or filler in state.nodes[y].label


def _is_blocked(state: _Tableau, nid: int) -> bool:
    node = state.nodes[nid]
    if node.root:
        return False
    lab = frozenset(node.label)
    anc = node.parent
    while anc is not None and anc in state.nodes:
        anode = state.nodes[anc]
        if frozenset(anode.label) == lab:
            return True
        if not anode.root and _ancestor_blocked(state, anode):
            return True
        anc = anode.parent
    return False


def _ancestor_blocked(state: _Tableau, node: _Node) -> bool:
    lab = frozenset(node.label)
    anc = node.parent
    while anc is not None and anc in state.nodes:
        anode = state.nodes[anc]
        if frozenset(anode.label) == lab:
            return True
        anc = anode.parent
    return False


def _find_clash(state: _Tableau) -> bool:
    for nid in list(state.nodes):
        node = state.nodes[nid]
        label = node.label
        if BOTTOM in label:
            return True
        for c in label:
            if complement(c) in label:
                return True
        for c in label:
            if isinstance(c, AtMost):
                ys = [y for y in state.successors(node, c.role) if _counts(state, y, c.filler)]
                if len(ys) > c.n and all(
                    frozenset((a, b)) in state.distinct
                    for i, a in enumerate(ys)
                    for b in ys[i + 1 :]
                ):
                    return True
    return False


def _propagate_once(state: _Tableau) -> bool:
    changed = False
    absorbed = state.absorbed
    for nid in list(state.nodes):
        node = state.nodes.get(nid)
        if node is None:
            continue
        for c in list(node.label):
            if isinstance(c, And):
                changed |= state.add(node, c.left)
                changed |= state.add(node, c.right)
            elif isinstance(c, Atomic):
                for consequence in absorbed.get(c.name, ()):
                    changed |= state.add(node, consequence)
            elif isinstance(c, Forall):
                for y in state.successors(node, c.role):
                    changed |= state.add(state.nodes[y], c.filler)
            elif isinstance(c, Or):
                if c.left in node.label or c.right in node.label:
                    continue
                left_dead = c.left == BOTTOM or complement(c.left) in node.label
                right_dead = c.right == BOTTOM or complement(c.right) in node.label
                if left_dead and right_dead:
                    changed |= state.add(node, BOTTOM)
                elif left_dead:
                    changed |= state.add(node, c.right)
                elif right_dead:
                    changed |= state.add(node, c.left)
    return changed


def _branch_or(state: _Tableau) -> list[_Tableau] | None:
    for nid in list(state.nodes):
        node = state.nodes[nid]
        for c in node.label:
            if isinstance(c, Or) and c.left not in node.label and c.right not in node.label:
                # Semantic split: the second branch takes the complement of
                # the first disjunct, so no model is explored twice and unit
                # propagation fires on every other disjunction holding it.
                other = state.clone()
                other.add(other.nodes[nid], complement(c.left))
                state.add(node, c.left)
                return [state, other]
    return None


def _branch_choose(state: _Tableau) -> list[_Tableau] | None:
    for nid in list(state.nodes):
        node = state.nodes[nid]
        for c in node.label:
            if not isinstance(c, AtMost) or c.filler == TOP:
                continue
            comp = complement(c.filler)
            for y in state.successors(node, c.role):
                ylabel = state.nodes[y].label
                if c.filler in ylabel or comp in ylabel:
                    continue
                other = state.clone()
                other.add(other.nodes[y], comp)
                state.add(state.nodes[y], c.filler)
                return [state, other]
    return None


def _prune(state: _Tableau, nid: int) -> None:
    node = state.nodes.pop(nid, None)
    if node is None:
        return
    for role in node.succ:
        for y in list(node.succ[role]):
            if y in state.nodes and not state.nodes[y].root:
                _prune(state, y)


def _merge(state: _Tableau, target: int, source: int) -> None:
    state.budget.charge(1 + len(state.nodes))
    tnode = state.nodes[target]
    snode = state.nodes[source]
    for c in snode.label:
        tnode.label.setdefault(c, None)
    for role in snode.succ:
        for y in state.successors(snode, role):
            if state.nodes[y].root:
                ys = tnode.succ.setdefault(role, [])
                if y not in ys:
                    ys.append(y)
            else:
                _prune(state, y)
    del state.nodes[source]
    for nid in list(state.nodes):
        node = state.nodes[nid]
        for role, ys in node.succ.items():
            if source in ys:
                rewritten = []
                for y in ys:
                    y = target if y == source else y
                    if y not in rewritten:
                        rewritten.append(y)
                node.succ[role] = rewritten
    for name, ref in state.named.items():
        if ref == source:
            state.named[name] = target
    rewritten = set()
    for pair in state.distinct:
        if source in pair:
            (other,) = pair - {source}
            rewritten.add(frozenset((target, other)))
        else:
            rewritten.add(pair)
    state.distinct = rewritten


def _branch_merge(state: _Tableau) -> list[_Tableau] | None:
    for nid in list(state.nodes):
        node = state.nodes[nid]
        for c in node.label:
            if not isinstance(c, AtMost):
                continue
            ys = [y for y in state.successors(node, c.role) if _counts(state, y, c.filler)]
            if len(ys) <= c.n:
                continue
            alts = []
            for i, older in enumerate(ys):
                for newer in ys[i + 1 :]:
                    if frozenset((older, newer)) in state.distinct:
                        continue
                    alt = state.clone()
                    _merge(alt, older, newer)
                    alts.append(alt)
            if alts:
                return alts
            # all pairs distinct: clash, caught by _find_clash
    return None


def _generate_once(state: _Tableau) -> bool:
    for nid in list(state.nodes):
        node = state.nodes[nid]
        blocked: bool | None = None
        for c in node.label:
            if not isinstance(c, _GENERATING):
                continue
            if blocked is None:
                blocked = _is_blocked(state, nid)
            if blocked:
                break
            if isinstance(c, Exists):
                if any(
                    _counts(state, y, c.filler) for y in state.successors(node, c.role)
                ):
                    continue
                fresh = state.new_node(parent=nid, root=False)
                state.add(fresh, c.filler)
                node.succ.setdefault(c.role, []).append(fresh.nid)
                return True
            ys = [y for y in state.successors(node, c.role) if _counts(state, y, c.filler)]
            if _has_distinct_subset(state, ys, c.n):
                continue
            fresh_ids = []
            for _ in range(c.n):
                fresh = state.new_node(parent=nid, root=False)
                state.add(fresh, c.filler)
                node.succ.setdefault(c.role, []).append(fresh.nid)
                fresh_ids.append(fresh.nid)
            for i, a in enumerate(fresh_ids):
                for b in fresh_ids[i + 1 :]:
                    state.distinct.add(frozenset((a, b)))
            return True
    return False


def _has_distinct_subset(state: _Tableau, ys: list[int], n: int) -> bool:
    if len(ys) < n:
        return False
    if n <= 1:
        return True
    for combo in combinations(ys, n):
        state.budget.charge(1)
        if all(
            frozenset((a, b)) in state.distinct
            for i, a in enumerate(combo)
            for b in combo[i + 1 :]
        ):
            return True
    return False


def _run(state: _Tableau) -> _Tableau | None:
    """Depth-first search over completion states; a completed clash-free
    state or None."""
    stack = [state]
    while stack:
        st = stack.pop()
        outcome = None
        while outcome is None:
            # Charged per sweep, scaled by graph size: every phase below
            # scans all nodes, so budget use tracks actual work.
            st.budget.charge(1 + len(st.nodes))
            if _propagate_once(st):
                continue
            if _find_clash(st):
                outcome = "clash"
                break
            alts = _branch_or(st) or _branch_choose(st) or _branch_merge(st)
            if alts:
                stack.extend(reversed(alts))
                outcome = "branch"
                break
            if _generate_once(st):
                continue
            return st
    return None


@lru_cache(maxsize=8192)
def _gci_universal(axiom: Subsumption) -> ConceptExpr | None:
    lhs = simplify(complement(nnf(axiom.lhs)))
    rhs = simplify(nnf(axiom.rhs))
    if lhs == TOP or rhs == TOP:
        return None
    if lhs == BOTTOM:
        return rhs
    if rhs == BOTTOM:
        return lhs
    return simplify(Or(lhs, rhs))


def _conjuncts(c: ConceptExpr) -> list[ConceptExpr]:
    if isinstance(c, And):
        return _conjuncts(c.left) + _conjuncts(c.right)
    if c == TOP:
        return []
    return [c]


@lru_cache(maxsize=8192)
def _absorb(axiom: Subsumption) -> tuple[str, ConceptExpr] | None:
    """Turn ``A and Rest subclassof D`` into a rule fired only on nodes
    carrying the atom ``A``; GCIs without an atomic conjunct on the left
    stay universal.  Keeps the disjunction count per node down, which is
    what the branching cost is exponential in."""
    lhs = simplify(nnf(axiom.lhs))
    rhs = simplify(nnf(axiom.rhs))
    if rhs == TOP:
        return None
    conjuncts = _conjuncts(lhs)
    trigger = next((c for c in conjuncts if isinstance(c, Atomic)), None)
    if trigger is None:
        return None
    rest = [c for c in conjuncts if c is not trigger]
    if not rest:
        return trigger.name, rhs
    residual = rest[0]
    for c in rest[1:]:
        residual = And(residual, c)
    negated = simplify(complement(residual))
    if negated == TOP:
        return None
    if rhs == BOTTOM:
        return trigger.name, negated
    if negated == BOTTOM:
        return trigger.name, rhs
    return trigger.name, simplify(Or(negated, rhs))


@lru_cache(maxsize=8192)
def _assertion_concept(axiom: ConceptAssertion) -> ConceptExpr:
    return simplify(nnf(axiom.concept))


def _card_atleast(c: ConceptExpr) -> tuple[int, str, ConceptExpr] | None:
    if isinstance(c, Exists):
        return 1, c.role, c.filler
    if isinstance(c, AtLeast):
        return c.n, c.role, c.filler
    return None


@lru_cache(maxsize=65536)
def _implies(c: ConceptExpr, d: ConceptExpr) -> bool:
    """Sound, incomplete structural test for validity of ``c subclassof d``:
    True means valid in every interpretation, False means undecided.  Both
    sides must be NNF-simplified.  The Or-left and And-right cases are exact
    decompositions; the rest only ever confirm."""
    if c == BOTTOM or d == TOP or c == d:
        return True
    if isinstance(c, Or):
        return _implies(c.left, d) and _implies(c.right, d)
    if isinstance(d, And):
        return _implies(c, d.left) and _implies(c, d.right)
    if isinstance(c, And) and (_implies(c.left, d) or _implies(c.right, d)):
        return True
    if isinstance(d, Or) and (_implies(c, d.left) or _implies(c, d.right)):
        return True
    if isinstance(c, Forall) and isinstance(d, Forall) and c.role == d.role:
        return _implies(c.filler, d.filler)
    lower = _card_atleast(c)
    if lower is not None:
        upper = _card_atleast(d)
        if upper is not None and lower[1] == upper[1] and lower[0] >= upper[0]:
            return _implies(lower[2], upper[2])
    if isinstance(d, AtMost):
        # Successors counted by the rhs are a subset of those counted (or
        # forbidden) by the lhs, so the lhs bound carries over.
        if isinstance(c, AtMost) and c.role == d.role and c.n <= d.n:
            return _implies(d.filler, c.filler)
        if isinstance(c, Forall) and c.role == d.role:
            return _implies(c.filler, complement(d.filler))
    return False


def valid_subsumption(axiom: Subsumption) -> bool:
    """Is the subsumption entailed by the empty knowledge base?  Sound and
    incomplete; False only means the tableau has to decide."""
    return _implies(simplify(nnf(axiom.lhs)), simplify(nnf(axiom.rhs)))


def _initial_state(axioms, budget: Budget) -> _Tableau:
    universal: list[ConceptExpr] = []
    absorbed: dict[str, list[ConceptExpr]] = {}
    for axiom in axioms:
        if isinstance(axiom, Subsumption):
            rule = _absorb(axiom)
            if rule is not None:
                name, consequence = rule
                rules = absorbed.setdefault(name, [])
                if consequence not in rules:
                    rules.append(consequence)
                continue
            u = _gci_universal(axiom)
            if u is not None and u not in universal:
                universal.append(u)
    state = _Tableau(
        tuple(universal), {name: tuple(cs) for name, cs in absorbed.items()}, budget
    )
    for axiom in axioms:
        if isinstance(axiom, ConceptAssertion):
            _root_for(state, axiom.individual)
        elif isinstance(axiom, RoleAssertion):
            _root_for(state, axiom.subject)
            _root_for(state, axiom.object)
    if not state.nodes:
        state.new_node(parent=None, root=True)
    for axiom in axioms:
        if isinstance(axiom, ConceptAssertion):
            node = state.nodes[state.named[axiom.individual]]
            state.add(node, _assertion_concept(axiom))
        elif isinstance(axiom, RoleAssertion):
            node = state.nodes[state.named[axiom.subject]]
            ys = node.succ.setdefault(axiom.role, [])
            target = state.named[axiom.object]
            if target not in ys:
                ys.append(target)
    return state


def _root_for(state: _Tableau, name: str) -> None:
    if name not in state.named:
        node = state.new_node(parent=None, root=True)
        state.named[name] = node.nid


def _extract_model(state: _Tableau) -> Interpretation | None:
    for nid in state.nodes:
        if _is_blocked(state, nid):
            return None
    atom_ext: dict[str, set[int]] = {}
    role_ext: dict[str, set[tuple[int, int]]] = {}
    for nid in list(state.nodes):
        node = state.nodes[nid]
        for c in node.label:
            if isinstance(c, Atomic):
                atom_ext.setdefault(c.name, set()).add(nid)
        for role in node.succ:
            for y in state.successors(node, role):
                role_ext.setdefault(role, set()).add((nid, y))
    return Interpretation(
        domain=frozenset(state.nodes),
        atom_ext={a: frozenset(s) for a, s in atom_ext.items()},
        role_ext={r: frozenset(s) for r, s in role_ext.items()},
        individual_map=dict(state.named),
    )


def _components(axioms: tuple[Axiom, ...]) -> list[tuple[Axiom, ...]]:
    """Partition the ABox into role-connected individual groups, each paired
    with the full TBox.  Individuals never linked by a role assertion cannot
    constrain each other (ALCQ has no nominals and no unique-name
    assumption), so each group is an independent satisfiability problem
    with an exponentially smaller search space than the union."""
    order: list[str] = []
    for axiom in axioms:
        for name in _axiom_individuals(axiom):
            if name not in order:
                order.append(name)
    if len(order) <= 1:
        return [axioms]
    leader = {name: name for name in order}

    def find(name: str) -> str:
        while leader[name] != name:
            leader[name] = leader[leader[name]]
            name = leader[name]
        return name

    for axiom in axioms:
        if isinstance(axiom, RoleAssertion):
            leader[find(axiom.subject)] = find(axiom.object)
    roots: list[str] = []
    for name in order:
        if all(find(name) != find(r) for r in roots):
            roots.append(name)
    if len(roots) == 1:
        return [axioms]
    groups = []
    for root in roots:
        group = tuple(
            a
            for a in axioms
            if isinstance(a, Subsumption)
            or all(find(n) == find(root) for n in _axiom_individuals(a))
        )
        groups.append(group)
    return groups


def _axiom_individuals(axiom: Axiom) -> tuple[str, ...]:
    if isinstance(axiom, ConceptAssertion):
        return (axiom.individual,)
    if isinstance(axiom, RoleAssertion):
        return (axiom.subject, axiom.object)
    return ()


def _compose(models: list[Interpretation]) -> Interpretation:
    domain: set[int] = set()
    atom_ext: dict[str, set[int]] = {}
    role_ext: dict[str, set[tuple[int, int]]] = {}
    individual_map: dict[str, int] = {}
    offset = 0
    for model in models:
        shift = offset - min(model.domain, default=0)
        domain |= {e + shift for e in model.domain}
        for name, ext in model.atom_ext.items():
            atom_ext.setdefault(name, set()).update(e + shift for e in ext)
        for role, pairs in model.role_ext.items():
            role_ext.setdefault(role, set()).update(
                (a + shift, b + shift) for a, b in pairs
            )
        for name, e in model.individual_map.items():
            individual_map[name] = e + shift
        offset = max(domain) + 1
    return Interpretation(
        domain=frozenset(domain),
        atom_ext={a: frozenset(s) for a, s in atom_ext.items()},
        role_ext={r: frozenset(s) for r, s in role_ext.items()},
        individual_map=individual_map,
    )


def satisfiable(
    axioms,
    budget: Budget | None = None,
    component_cache: dict | None = None,
) -> Interpretation | None | bool:
    """Run the tableau on an axiom collection.

    Returns None when unsatisfiable, an :class:`Interpretation` when a
    finite model was completed, or True when satisfiable but the completed
    graph contains blocked nodes (the model would be infinite).

    ``component_cache`` memoizes per-group results across calls.  Repeated
    checks against one KB mostly re-pose the same individual groups with a
    single group changed, so the hit rate grows with the individual count.
    """
    if budget is None:
        budget = budget_from_secs(DEFAULT_BUDGET_SECS)
    models = []
    for group in _components(tuple(axioms)):
        key = frozenset(group) if component_cache is not None else None
        if key is not None and key in component_cache:
            result = component_cache[key]
        else:
            state = _initial_state(group, budget)
            final = _run(state)
            if final is None:
                result = None
            else:
                model = _extract_model(final)
                result = model if model is not None else True
            if key is not None:
                component_cache[key] = result
        if result is None:
            return None
        models.append(result)
    if any(model is True for model in models):
        return True
    if len(models) == 1:
        return models[0]
    return _compose(models)


def is_consistent(kb: KnowledgeBase, budget: Budget | None = None) -> bool:
    return satisfiable(kb.axioms, budget) is not None


def check_all_satisfiable(kb: KnowledgeBase, budget: Budget | None = None) -> bool:
    """Every atomic concept named in ``kb`` is satisfiable wrt its TBox."""
    checker = EntailmentChecker(kb, budget)
    return checker.all_concepts_satisfiable()


def entails(kb: KnowledgeBase, query: Axiom, budget: Budget | None = None) -> Verdict:
    return EntailmentChecker(kb, budget).entails(query)


_MODEL_CACHE_SIZE = 64
_EMPTY_BOUND: frozenset[str] = frozenset()


class EntailmentChecker:
    """Entailment and consistency checks over one knowledge base, with a
    bounded cache of discovered finite models shared across checks.

    ``entails`` always runs both directions: the query's refutation against
    the KB (True test) and the query itself against the KB (False test).
    Both failing on a consistent KB raises :class:`InternalSoundnessError`.
    Role assertion queries are rejected because ALCQ cannot express their
    negation, so no True verdict could ever be justified.
    """

    def __init__(self, kb: KnowledgeBase, budget: Budget | None = None):
        self.kb = kb
        self.budget = budget if budget is not None else budget_from_secs(DEFAULT_BUDGET_SECS)
        self._models: list[tuple[Interpretation, bool, bool]] = []
        self._memo: dict = {}
        self._component_cache: dict = {}
        self._consistent: bool | None = None
        self._kb_bound = committed_individuals(kb.axioms)
        names = set(kb.individuals())
        fresh = "_x0"
        counter = 0
        while fresh in names:
            counter += 1
            fresh = f"_x{counter}"
        self.fresh_individual = fresh

    # -- model cache ------------------------------------------------------

    def _note_model(self, model: Interpretation) -> None:
        # Whether the model covers the whole KB (or its TBox) is decided
        # once at insertion; the sweep paths then skip re-verification.
        full = model.satisfies_all(self.kb.axioms)
        tbox = full or model.satisfies_all(self.kb.tbox)
        self._models.insert(0, (model, full, tbox))
        del self._models[_MODEL_CACHE_SIZE:]

    def _promote(self, idx: int) -> None:
        self._models.insert(0, self._models.pop(idx))

    def _covers(self, entry: tuple[Interpretation, bool, bool], axioms) -> bool:
        model, full, tbox = entry
        if axioms is self.kb.axioms:
            return full
        if axioms is self.kb.tbox:
            return tbox
        return model.satisfies_all(axioms)

    # -- satisfiability core ----------------------------------------------

    def _sat(self, axioms: tuple[Axiom, ...]) -> bool:
        """Is the axiom tuple satisfiable?  Consults cached models first."""
        for idx, entry in enumerate(self._models):
            if self._covers(entry, axioms):
                self._promote(idx)
                return True
        result = satisfiable(axioms, self.budget, self._component_cache)
        if result is None:
            return False
        if isinstance(result, Interpretation):
            self._note_model(result)
        return True

    def _sat_with_query(self, axioms: tuple[Axiom, ...], query: Axiom, want: str) -> bool:
        """Satisfiability of ``axioms`` together with the query (want="hold")
        or its refutation (want="fail")."""
        if axioms is self.kb.axioms:
            bound = self._kb_bound
        elif axioms is self.kb.tbox:
            bound = _EMPTY_BOUND
        else:
            bound = committed_individuals(axioms)
        for idx, entry in enumerate(self._models):
            if not self._covers(entry, axioms):
                continue
            model = entry[0]
            ok = (
                model.can_satisfy(query, bound)
                if want == "hold"
                else model.can_refute(query, bound)
            )
            if ok:
                self._promote(idx)
                return True
        extra = self._materialize(query, want)
        result = satisfiable(axioms + extra, self.budget, self._component_cache)
        if result is None:
            return False
        if isinstance(result, Interpretation):
            self._note_model(result)
        return True

    def _materialize(self, query: Axiom, want: str) -> tuple[Axiom, ...]:
        if want == "hold":
            return (query,)
        if isinstance(query, ConceptAssertion):
            return (ConceptAssertion(complement(nnf(query.concept)), query.individual),)
        if isinstance(query, Subsumption):
            witness = And(nnf(query.lhs), complement(nnf(query.rhs)))
            return (ConceptAssertion(witness, self.fresh_individual),)
        raise ValueError(
            "role assertion queries are not supported: ALCQ cannot express their negation"
        )

    # -- public checks ------------------------------------------------------

    def is_consistent(self) -> bool:
        if self._consistent is None:
            self._consistent = self._sat(self.kb.axioms)
        return self._consistent

    def consistent_with(self, extras: tuple[Axiom, ...]) -> bool:
        return self._sat(self.kb.axioms + tuple(extras))

    def entails(self, query: Axiom) -> Verdict:
        if isinstance(query, RoleAssertion):
            raise ValueError(
                "role assertion queries are not supported: ALCQ cannot express their negation"
            )
        # ABox facts cannot force a subsumption over a consistent KB (ALCQ
        # is invariant under disjoint unions), so the True test for
        # subsumptions runs on the TBox alone; smaller graphs, same verdict.
        if isinstance(query, Subsumption):
            base_true: tuple[Axiom, ...] = self.kb.tbox
        else:
            base_true = self.kb.axioms
        refutable = self._sat_with_query(base_true, query, want="fail")
        satisfiable_with = self._sat_with_query(self.kb.axioms, query, want="hold")
        if not refutable and not satisfiable_with:
            if self.is_consistent():
                raise InternalSoundnessError(
                    f"query and its refutation are both inconsistent with the KB: {query!r}"
                )
            raise ValueError("entailment is undefined for an inconsistent knowledge base")
        if not refutable:
            return Verdict.TRUE
        if not satisfiable_with:
            return Verdict.FALSE
        return Verdict.UNKNOWN

    def holds(self, query: Axiom) -> bool:
        """One-sided entailment test: is the query's refutation inconsistent
        with the KB?  Cheaper than :meth:`entails` when only True-ness
        matters (the closure sweep)."""
        if isinstance(query, RoleAssertion):
            raise ValueError(
                "role assertion queries are not supported: ALCQ cannot express their negation"
            )
        if isinstance(query, Subsumption) and valid_subsumption(query):
            return True
        base: tuple[Axiom, ...] = (
            self.kb.tbox if isinstance(query, Subsumption) else self.kb.axioms
        )
        return not self._sat_with_query(base, query, want="fail")

    def subset_holds(self, axioms: tuple[Axiom, ...], query: Axiom, mode: str) -> bool:
        """Does the axiom subset entail the query (mode="supports-true") or
        become inconsistent with it (mode="induces-inconsistency")?"""
        if (
            mode == "supports-true"
            and isinstance(query, Subsumption)
            and valid_subsumption(query)
        ):
            return True
        key = (frozenset(axioms), query, mode)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        want = "fail" if mode == "supports-true" else "hold"
        result = not self._sat_with_query(axioms, query, want)
        self._memo[key] = result
        return result

    def all_concepts_satisfiable(self) -> bool:
        for name in self.kb.atomic_concepts():
            probe = ConceptAssertion(Atomic(name), self.fresh_individual)
            if not self._sat_with_query(self.kb.tbox, probe, want="hold"):
                return False
        return True
