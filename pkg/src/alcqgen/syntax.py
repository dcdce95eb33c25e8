"""Abstract syntax for ALCQ concepts, axioms, and knowledge bases.

The concept language, in the textual form used throughout the package:

    C, D := NAME | Thing | Nothing | not C | C and D | C or D
          | R some C | R only C | atleast n R C | atmost n R C

All nodes are immutable and hashable, so concepts can be used as dict keys
and set members; equality is structural.  ``render`` produces the canonical
fully parenthesized form that :mod:`alcqgen.parser` parses back.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class ConceptExpr:
    """Base class for concept expressions."""

    __slots__ = ()


def _seal(obj: "ConceptExpr", *parts: object) -> None:
    # Concepts live in hot dict-keyed label sets; recomputing a structural
    # hash on every lookup dominates the reasoner, so it is fixed at birth.
    object.__setattr__(obj, "_hash", hash(parts))


def _sealed_hash(self: "ConceptExpr") -> int:
    return self._hash  # type: ignore[attr-defined]


@dataclass(frozen=True, slots=True)
class Atomic(ConceptExpr):
    name: str
    _hash: int = field(init=False, repr=False, compare=False)

    __hash__ = _sealed_hash

    def __post_init__(self) -> None:
        _seal(self, "atom", self.name)


@dataclass(frozen=True, slots=True)
class Top(ConceptExpr):
    _hash: int = field(init=False, repr=False, compare=False)

    __hash__ = _sealed_hash

    def __post_init__(self) -> None:
        _seal(self, "top")


@dataclass(frozen=True, slots=True)
class Bottom(ConceptExpr):
    _hash: int = field(init=False, repr=False, compare=False)

    __hash__ = _sealed_hash

    def __post_init__(self) -> None:
        _seal(self, "bottom")


@dataclass(frozen=True, slots=True)
class Not(ConceptExpr):
    inner: ConceptExpr
    _hash: int = field(init=False, repr=False, compare=False)

    __hash__ = _sealed_hash

    def __post_init__(self) -> None:
        _seal(self, "not", self.inner)


@dataclass(frozen=True, slots=True)
class And(ConceptExpr):
    left: ConceptExpr
    right: ConceptExpr
    _hash: int = field(init=False, repr=False, compare=False)

    __hash__ = _sealed_hash

    def __post_init__(self) -> None:
        _seal(self, "and", self.left, self.right)


@dataclass(frozen=True, slots=True)
class Or(ConceptExpr):
    left: ConceptExpr
    right: ConceptExpr
    _hash: int = field(init=False, repr=False, compare=False)

    __hash__ = _sealed_hash

    def __post_init__(self) -> None:
        _seal(self, "or", self.left, self.right)


@dataclass(frozen=True, slots=True)
class Exists(ConceptExpr):
    role: str
    filler: ConceptExpr
    _hash: int = field(init=False, repr=False, compare=False)

    __hash__ = _sealed_hash

    def __post_init__(self) -> None:
        _seal(self, "exists", self.role, self.filler)


@dataclass(frozen=True, slots=True)
class Forall(ConceptExpr):
    role: str
    filler: ConceptExpr
    _hash: int = field(init=False, repr=False, compare=False)

    __hash__ = _sealed_hash

    def __post_init__(self) -> None:
        _seal(self, "forall", self.role, self.filler)


@dataclass(frozen=True, slots=True)
class AtLeast(ConceptExpr):
    n: int
    role: str
    filler: ConceptExpr
    _hash: int = field(init=False, repr=False, compare=False)

    __hash__ = _sealed_hash

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"atleast requires a cardinality of at least 1, got {self.n}")
        _seal(self, "atleast", self.n, self.role, self.filler)


@dataclass(frozen=True, slots=True)
class AtMost(ConceptExpr):
    n: int
    role: str
    filler: ConceptExpr
    _hash: int = field(init=False, repr=False, compare=False)

    __hash__ = _sealed_hash

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"atmost requires a non-negative cardinality, got {self.n}")
        _seal(self, "atmost", self.n, self.role, self.filler)


TOP = Top()
BOTTOM = Bottom()


class Axiom:
    """Base class for axioms (TBox statements and ABox facts)."""

    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Subsumption(Axiom):
    lhs: ConceptExpr
    rhs: ConceptExpr


@dataclass(frozen=True, slots=True)
class ConceptAssertion(Axiom):
    concept: ConceptExpr
    individual: str


@dataclass(frozen=True, slots=True)
class RoleAssertion(Axiom):
    role: str
    subject: str
    object: str


@dataclass(frozen=True)
class KnowledgeBase:
    """An immutable bag of axioms with a stable order.

    ``axioms`` is the canonical indexing used everywhere (justifications point
    into it): TBox first, then ABox, each in insertion order.
    """

    tbox: tuple[Subsumption, ...]
    abox: tuple[ConceptAssertion | RoleAssertion, ...]
    pool_id: str = ""
    level: int = 0

    @property
    def axioms(self) -> tuple[Axiom, ...]:
        return self.tbox + self.abox

    def __len__(self) -> int:
        return len(self.tbox) + len(self.abox)

    def individuals(self) -> tuple[str, ...]:
        """Named individuals in first-mention order."""
        seen: dict[str, None] = {}
        for fact in self.abox:
            if isinstance(fact, ConceptAssertion):
                seen.setdefault(fact.individual, None)
            else:
                seen.setdefault(fact.subject, None)
                seen.setdefault(fact.object, None)
        return tuple(seen)

    def atomic_concepts(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for axiom in self.axioms:
            for name in sorted(_atoms_of_axiom(axiom)):
                seen.setdefault(name, None)
        return tuple(seen)

    def roles(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for axiom in self.axioms:
            for name in sorted(_roles_of_axiom(axiom)):
                seen.setdefault(name, None)
        return tuple(seen)


def render(obj: ConceptExpr | Axiom) -> str:
    """Canonical textual form of a concept or axiom.

    Composite concepts are parenthesized, so the output is unambiguous and
    round-trips through the parser.
    """
    if isinstance(obj, ConceptExpr):
        return _render_concept(obj)
    if isinstance(obj, Subsumption):
        return f"{_render_concept(obj.lhs)} subclassof {_render_concept(obj.rhs)}"
    if isinstance(obj, ConceptAssertion):
        return f"{_render_concept(obj.concept)}({obj.individual})"
    if isinstance(obj, RoleAssertion):
        return f"{obj.role}({obj.subject}, {obj.object})"
    raise TypeError(f"cannot render {type(obj).__name__}")


def _render_concept(c: ConceptExpr) -> str:
    if isinstance(c, Atomic):
        return c.name
    if isinstance(c, Top):
        return "Thing"
    if isinstance(c, Bottom):
        return "Nothing"
    if isinstance(c, Not):
        return f"not {_render_concept(c.inner)}"
    if isinstance(c, And):
        return f"({_render_concept(c.left)} and {_render_concept(c.right)})"
    if isinstance(c, Or):
        return f"({_render_concept(c.left)} or {_render_concept(c.right)})"
    if isinstance(c, Exists):
        return f"({c.role} some {_render_concept(c.filler)})"
    if isinstance(c, Forall):
        return f"({c.role} only {_render_concept(c.filler)})"
    if isinstance(c, AtLeast):
        return f"(atleast {c.n} {c.role} {_render_concept(c.filler)})"
    if isinstance(c, AtMost):
        return f"(atmost {c.n} {c.role} {_render_concept(c.filler)})"
    raise TypeError(f"cannot render {type(c).__name__}")


def concept_subterms(c: ConceptExpr):
    """Yield every subexpression of ``c``, including ``c`` itself."""
    yield c
    if isinstance(c, Not):
        yield from concept_subterms(c.inner)
    elif isinstance(c, (And, Or)):
        yield from concept_subterms(c.left)
        yield from concept_subterms(c.right)
    elif isinstance(c, (Exists, Forall, AtLeast, AtMost)):
        yield from concept_subterms(c.filler)


def _atoms_of_concept(c: ConceptExpr) -> set[str]:
    return {sub.name for sub in concept_subterms(c) if isinstance(sub, Atomic)}


def _roles_of_concept(c: ConceptExpr) -> set[str]:
    return {sub.role for sub in concept_subterms(c) if isinstance(sub, (Exists, Forall, AtLeast, AtMost))}


def _atoms_of_axiom(axiom: Axiom) -> set[str]:
    if isinstance(axiom, Subsumption):
        return _atoms_of_concept(axiom.lhs) | _atoms_of_concept(axiom.rhs)
    if isinstance(axiom, ConceptAssertion):
        return _atoms_of_concept(axiom.concept)
    return set()


def _roles_of_axiom(axiom: Axiom) -> set[str]:
    if isinstance(axiom, Subsumption):
        return _roles_of_concept(axiom.lhs) | _roles_of_concept(axiom.rhs)
    if isinstance(axiom, ConceptAssertion):
        return _roles_of_concept(axiom.concept)
    if isinstance(axiom, RoleAssertion):
        return {axiom.role}
    return set()


def _individuals_of_axiom(axiom: Axiom) -> set[str]:
    if isinstance(axiom, ConceptAssertion):
        return {axiom.individual}
    if isinstance(axiom, RoleAssertion):
        return {axiom.subject, axiom.object}
    return set()


def axiom_signature(axiom: Axiom) -> frozenset[str]:
    """All symbols an axiom mentions, tagged by kind to avoid collisions."""
    out = {f"c:{n}" for n in _atoms_of_axiom(axiom)}
    out |= {f"r:{n}" for n in _roles_of_axiom(axiom)}
    out |= {f"i:{n}" for n in _individuals_of_axiom(axiom)}
    return frozenset(out)
