"""Negation normal form and fact negation.

In NNF, negation appears only directly above atomic concepts.  Negated
quantifiers rewrite by duality; negated number restrictions shift their
bound (``not atleast n`` becomes ``atmost n-1`` and ``not atmost n``
becomes ``atleast n+1``).
"""

from __future__ import annotations

from functools import lru_cache

from .syntax import (
    BOTTOM,
    TOP,
    And,
    AtLeast,
    AtMost,
    Atomic,
    Bottom,
    ConceptAssertion,
    ConceptExpr,
    Exists,
    Forall,
    Not,
    Or,
    Top,
)


@lru_cache(maxsize=None)
def nnf(c: ConceptExpr) -> ConceptExpr:
    """Rewrite ``c`` into negation normal form."""
    if isinstance(c, (Atomic, Top, Bottom)):
        return c
    if isinstance(c, And):
        return And(nnf(c.left), nnf(c.right))
    if isinstance(c, Or):
        return Or(nnf(c.left), nnf(c.right))
    if isinstance(c, Exists):
        return Exists(c.role, nnf(c.filler))
    if isinstance(c, Forall):
        return Forall(c.role, nnf(c.filler))
    if isinstance(c, AtLeast):
        return AtLeast(c.n, c.role, nnf(c.filler))
    if isinstance(c, AtMost):
        return AtMost(c.n, c.role, nnf(c.filler))
    if isinstance(c, Not):
        return _push(c.inner)
    raise TypeError(f"cannot normalize {type(c).__name__}")


@lru_cache(maxsize=None)
def _push(c: ConceptExpr) -> ConceptExpr:
    """NNF of ``not c``."""
    if isinstance(c, Atomic):
        return Not(c)
    if isinstance(c, Top):
        return BOTTOM
    if isinstance(c, Bottom):
        return TOP
    if isinstance(c, Not):
        return nnf(c.inner)
    if isinstance(c, And):
        return Or(_push(c.left), _push(c.right))
    if isinstance(c, Or):
        return And(_push(c.left), _push(c.right))
    if isinstance(c, Exists):
        return Forall(c.role, _push(c.filler))
    if isinstance(c, Forall):
        return Exists(c.role, _push(c.filler))
    if isinstance(c, AtLeast):
        # n >= 1 by construction, so the bound stays non-negative.
        return AtMost(c.n - 1, c.role, nnf(c.filler))
    if isinstance(c, AtMost):
        return AtLeast(c.n + 1, c.role, nnf(c.filler))
    raise TypeError(f"cannot normalize {type(c).__name__}")


def complement(c: ConceptExpr) -> ConceptExpr:
    """NNF of the negation of ``c``."""
    return _push(c)


@lru_cache(maxsize=None)
def simplify(c: ConceptExpr) -> ConceptExpr:
    """Equivalence-preserving shrink of an NNF concept: Boolean identities
    (absorbing Thing/Nothing, duplicate and complementary juncts) plus the
    quantifier collapses ``some R Nothing = Nothing``, ``atleast n R Nothing
    = Nothing``, ``only R Thing = Thing``, ``atmost n R Nothing = Thing``.

    Randomly sampled concepts hit these shapes constantly, and every junct
    removed here shrinks tableau labels and branch factors downstream.
    """
    if isinstance(c, (And, Or)):
        juncts: list[ConceptExpr] = []
        absorber = BOTTOM if isinstance(c, And) else TOP
        neutral = TOP if isinstance(c, And) else BOTTOM
        stack = [c.right, c.left]
        while stack:
            item = stack.pop()
            if type(item) is type(c):
                stack.append(item.right)
                stack.append(item.left)
                continue
            item = simplify(item)
            if item == absorber:
                return absorber
            if item == neutral or item in juncts:
                continue
            juncts.append(item)
        for item in juncts:
            if complement(item) in juncts:
                return absorber
        if not juncts:
            return neutral
        out = juncts[0]
        for item in juncts[1:]:
            out = And(out, item) if isinstance(c, And) else Or(out, item)
        return out
    if isinstance(c, Exists):
        filler = simplify(c.filler)
        return BOTTOM if filler == BOTTOM else Exists(c.role, filler)
    if isinstance(c, Forall):
        filler = simplify(c.filler)
        return TOP if filler == TOP else Forall(c.role, filler)
    if isinstance(c, AtLeast):
        filler = simplify(c.filler)
        return BOTTOM if filler == BOTTOM else AtLeast(c.n, c.role, filler)
    if isinstance(c, AtMost):
        filler = simplify(c.filler)
        return TOP if filler == BOTTOM else AtMost(c.n, c.role, filler)
    return c


def is_nnf(c: ConceptExpr) -> bool:
    if isinstance(c, Not):
        return isinstance(c.inner, Atomic)
    if isinstance(c, (And, Or)):
        return is_nnf(c.left) and is_nnf(c.right)
    if isinstance(c, (Exists, Forall, AtLeast, AtMost)):
        return is_nnf(c.filler)
    return True


def negate_fact(fact: ConceptAssertion) -> ConceptAssertion:
    """The assertion stating the opposite fact, in NNF."""
    return ConceptAssertion(complement(fact.concept), fact.individual)
