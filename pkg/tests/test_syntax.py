import pytest

from alcqgen.syntax import (
    BOTTOM,
    TOP,
    And,
    AtLeast,
    AtMost,
    Atomic,
    ConceptAssertion,
    Exists,
    Forall,
    KnowledgeBase,
    Not,
    Or,
    RoleAssertion,
    Subsumption,
    render,
)

A = Atomic("A")
B = Atomic("B")


def test_structural_equality_and_hash():
    assert And(A, B) == And(Atomic("A"), Atomic("B"))
    assert hash(And(A, B)) == hash(And(Atomic("A"), Atomic("B")))
    assert And(A, B) != And(B, A)
    assert And(A, B) != Or(A, B)
    assert Exists("likes", A) != Forall("likes", A)
    assert AtLeast(2, "likes", A) != AtLeast(3, "likes", A)


def test_expressions_are_immutable():
    with pytest.raises(Exception):
        And(A, B).left = B


def test_atleast_zero_rejected():
    with pytest.raises(ValueError):
        AtLeast(0, "likes", A)
    # atmost 0 is meaningful ("no likes-successor in A") and stays legal
    AtMost(0, "likes", A)


def test_render_keywords():
    assert render(A) == "A"
    assert render(TOP) == "Thing"
    assert render(BOTTOM) == "Nothing"
    assert render(Not(A)) == "not A"
    assert render(And(A, B)) == "(A and B)"
    assert render(Or(Not(A), B)) == "(not A or B)"
    assert render(Exists("likes", A)) == "(likes some A)"
    assert render(Forall("admires", BOTTOM)) == "(admires only Nothing)"
    assert render(AtLeast(2, "likes", A)) == "(atleast 2 likes A)"
    assert render(AtMost(1, "likes", TOP)) == "(atmost 1 likes Thing)"


def test_render_axioms():
    assert render(Subsumption(A, B)) == "A subclassof B"
    assert render(ConceptAssertion(Not(A), "anne")) == "not A(anne)"
    assert render(ConceptAssertion(A, "anne")) == "A(anne)"
    assert render(RoleAssertion("likes", "anne", "bob")) == "likes(anne, bob)"


def test_render_nesting():
    c = Exists("likes", Exists("loves", Atomic("Cat")))
    assert render(c) == "(likes some (loves some Cat))"
    d = And(A, Or(B, Not(A)))
    assert render(d) == "(A and (B or not A))"


def test_kb_accessors_ordered_and_deduplicated():
    kb = KnowledgeBase(
        tbox=(Subsumption(A, B), Subsumption(B, A)),
        abox=(
            ConceptAssertion(B, "bob"),
            ConceptAssertion(A, "anne"),
            RoleAssertion("likes", "anne", "bob"),
        ),
    )
    assert kb.axioms == kb.tbox + kb.abox
    assert len(kb) == 5
    # first-appearance order, duplicates collapsed
    assert kb.individuals() == ("bob", "anne")
    assert kb.atomic_concepts() == ("A", "B")
    assert kb.roles() == ("likes",)


def test_empty_kb():
    kb = KnowledgeBase((), ())
    assert kb.axioms == ()
    assert kb.individuals() == ()
    assert kb.atomic_concepts() == ()
