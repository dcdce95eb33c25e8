"""Finite interpretations and direct model checking.

An :class:`Interpretation` is a concrete finite model: a domain of integer
elements, extensions for atomic concepts, binary relations for roles, and a
partial mapping of individual names to elements.  Concept extensions are
computed by structural recursion and memoized per interpretation.

Individuals absent from ``individual_map`` are unconstrained: any element
can stand for them, which the witness helpers exploit (a model refutes
``C(a)`` for unmapped ``a`` whenever some element falls outside ``C``).
"""

from __future__ import annotations

from dataclasses import dataclass, field

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
    Not,
    Or,
    RoleAssertion,
    Subsumption,
    Top,
    _individuals_of_axiom,
)


@dataclass
class Interpretation:
    domain: frozenset[int]
    atom_ext: dict[str, frozenset[int]]
    role_ext: dict[str, frozenset[tuple[int, int]]]
    individual_map: dict[str, int]
    _ext_cache: dict[ConceptExpr, frozenset[int]] = field(default_factory=dict, repr=False)
    _succ_cache: dict[str, dict[int, tuple[int, ...]]] = field(default_factory=dict, repr=False)

    def _successors(self, role: str) -> dict[int, tuple[int, ...]]:
        cached = self._succ_cache.get(role)
        if cached is None:
            by_source: dict[int, list[int]] = {}
            for x, y in self.role_ext.get(role, frozenset()):
                by_source.setdefault(x, []).append(y)
            cached = {x: tuple(ys) for x, ys in by_source.items()}
            self._succ_cache[role] = cached
        return cached

    def extension(self, c: ConceptExpr) -> frozenset[int]:
        cached = self._ext_cache.get(c)
        if cached is not None:
            return cached
        if isinstance(c, Atomic):
            out = self.atom_ext.get(c.name, frozenset()) & self.domain
        elif isinstance(c, Top):
            out = self.domain
        elif isinstance(c, Bottom):
            out = frozenset()
        elif isinstance(c, Not):
            out = self.domain - self.extension(c.inner)
        elif isinstance(c, And):
            out = self.extension(c.left) & self.extension(c.right)
        elif isinstance(c, Or):
            out = self.extension(c.left) | self.extension(c.right)
        elif isinstance(c, (Exists, Forall, AtLeast, AtMost)):
            succ = self._successors(c.role)
            filler = self.extension(c.filler)
            members = []
            for x in self.domain:
                hits = sum(1 for y in succ.get(x, ()) if y in filler)
                misses = len(succ.get(x, ())) - hits
                if isinstance(c, Exists):
                    ok = hits >= 1
                elif isinstance(c, Forall):
                    ok = misses == 0
                elif isinstance(c, AtLeast):
                    ok = hits >= c.n
                else:
                    ok = hits <= c.n
                if ok:
                    members.append(x)
            out = frozenset(members)
        else:
            raise TypeError(f"cannot evaluate {type(c).__name__}")
        self._ext_cache[c] = out
        return out

    def satisfies(self, axiom: Axiom) -> bool | None:
        """Truth of ``axiom`` in this model; None if it mentions an unmapped
        individual (the model does not determine it)."""
        if isinstance(axiom, Subsumption):
            return self.extension(axiom.lhs) <= self.extension(axiom.rhs)
        if isinstance(axiom, ConceptAssertion):
            elem = self.individual_map.get(axiom.individual)
            if elem is None:
                return None
            return elem in self.extension(axiom.concept)
        if isinstance(axiom, RoleAssertion):
            a = self.individual_map.get(axiom.subject)
            b = self.individual_map.get(axiom.object)
            if a is None or b is None:
                return None
            return (a, b) in self.role_ext.get(axiom.role, frozenset())
        raise TypeError(f"cannot evaluate {type(axiom).__name__}")

    def satisfies_all(self, axioms) -> bool:
        """True only when every axiom is determined and holds."""
        for axiom in axioms:
            if self.satisfies(axiom) is not True:
                return False
        return True

    def can_refute(self, query: Axiom, bound: frozenset[str]) -> bool:
        """True when some extension of this model's individual mapping makes
        ``query`` false.  ``bound`` is the set of individual names the model
        is already committed to (those mentioned by the axioms it satisfies);
        names outside it may map to any element."""
        if isinstance(query, Subsumption):
            return not self.extension(query.lhs) <= self.extension(query.rhs)
        if isinstance(query, ConceptAssertion):
            elem = self.individual_map.get(query.individual)
            ext = self.extension(query.concept)
            if elem is not None:
                return elem not in ext
            if query.individual in bound:
                return False
            return ext != self.domain
        return False

    def can_satisfy(self, query: Axiom, bound: frozenset[str]) -> bool:
        """Dual of :meth:`can_refute`: some extension makes ``query`` true."""
        if isinstance(query, Subsumption):
            return self.extension(query.lhs) <= self.extension(query.rhs)
        if isinstance(query, ConceptAssertion):
            elem = self.individual_map.get(query.individual)
            ext = self.extension(query.concept)
            if elem is not None:
                return elem in ext
            if query.individual in bound:
                return False
            return bool(ext)
        return False


def committed_individuals(axioms) -> frozenset[str]:
    out: set[str] = set()
    for axiom in axioms:
        out |= _individuals_of_axiom(axiom)
    return frozenset(out)
