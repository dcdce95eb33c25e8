import random

import pytest

from alcqgen.parser import ParseError, parse_axiom, parse_concept
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
    Not,
    Or,
    RoleAssertion,
    Subsumption,
    render,
)

A = Atomic("A")
B = Atomic("B")
C = Atomic("C")


def test_atoms_and_constants():
    assert parse_concept("A") == A
    assert parse_concept("Thing") is TOP
    assert parse_concept("Nothing") is BOTTOM
    assert parse_concept("  A  ") == A


def test_precedence_or_binds_loosest():
    assert parse_concept("A and B or C") == Or(And(A, B), C)
    assert parse_concept("A or B and C") == Or(A, And(B, C))
    assert parse_concept("A and (B or C)") == And(A, Or(B, C))


def test_left_associativity():
    assert parse_concept("A and B and C") == And(And(A, B), C)
    assert parse_concept("A or B or C") == Or(Or(A, B), C)


def test_unary_binds_tightest():
    assert parse_concept("not A and B") == And(Not(A), B)
    assert parse_concept("not (A and B)") == Not(And(A, B))
    assert parse_concept("likes some A or B") == Or(Exists("likes", A), B)
    assert parse_concept("likes only not A") == Forall("likes", Not(A))
    assert parse_concept("atleast 2 likes A and B") == And(AtLeast(2, "likes", A), B)
    assert parse_concept("atmost 0 likes Thing") == AtMost(0, "likes", TOP)


def test_quantifier_filler_nests():
    got = parse_concept("likes some loves some Cat")
    assert got == Exists("likes", Exists("loves", Atomic("Cat")))
    got = parse_concept("atmost 1 likes (A or B)")
    assert got == AtMost(1, "likes", Or(A, B))


def test_axiom_forms():
    assert parse_axiom("A subclassof B") == Subsumption(A, B)
    assert parse_axiom("A and B subclassof likes some C") == Subsumption(
        And(A, B), Exists("likes", C)
    )
    assert parse_axiom("A(anne)") == ConceptAssertion(A, "anne")
    assert parse_axiom("not A(anne)") == ConceptAssertion(Not(A), "anne")
    assert parse_axiom("(A and B)(anne)") == ConceptAssertion(And(A, B), "anne")
    assert parse_axiom("likes(anne, bob)") == RoleAssertion("likes", "anne", "bob")


def test_parse_errors():
    for bad in ("", "A and", "and A", "(A", "A)", "A B", "atleast likes A", "atleast 0 likes A", "$"):
        with pytest.raises(ParseError):
            parse_concept(bad)
    for bad in ("A subclassof B subclassof C", "A subclassof", "likes(anne) and B"):
        with pytest.raises(ParseError):
            parse_axiom(bad)


def test_keywords_are_not_names():
    with pytest.raises(ParseError):
        parse_concept("some")
    with pytest.raises(ParseError):
        parse_axiom("and(anne)")


def test_role_assertion_needs_plain_role():
    with pytest.raises(ParseError):
        parse_axiom("(A and B)(anne, bob)")


def test_error_offset_points_into_input():
    try:
        parse_concept("A and and B")
    except ParseError as err:
        assert err.offset == 6
    else:
        raise AssertionError("expected a ParseError")


def _random_concept(rng, depth):
    if depth == 0:
        return rng.choice([A, B, Atomic("Cat"), Atomic("Dog"), TOP, BOTTOM])
    pick = rng.randrange(8)
    if pick == 0:
        return Not(_random_concept(rng, depth - 1))
    if pick == 1:
        return And(_random_concept(rng, depth - 1), _random_concept(rng, depth - 1))
    if pick == 2:
        return Or(_random_concept(rng, depth - 1), _random_concept(rng, depth - 1))
    if pick == 3:
        return Exists(rng.choice(["likes", "eats"]), _random_concept(rng, depth - 1))
    if pick == 4:
        return Forall(rng.choice(["likes", "eats"]), _random_concept(rng, depth - 1))
    if pick == 5:
        return AtLeast(rng.randint(1, 3), "likes", _random_concept(rng, depth - 1))
    if pick == 6:
        return AtMost(rng.randint(0, 3), "likes", _random_concept(rng, depth - 1))
    return _random_concept(rng, depth - 1)


def test_render_parse_round_trip_concepts():
    rng = random.Random(20240811)
    for _ in range(400):
        concept = _random_concept(rng, rng.randint(1, 4))
        assert parse_concept(render(concept)) == concept


def test_render_parse_round_trip_axioms():
    rng = random.Random(20240812)
    for i in range(200):
        if i % 3 == 0:
            axiom = Subsumption(_random_concept(rng, 2), _random_concept(rng, 2))
        elif i % 3 == 1:
            axiom = ConceptAssertion(_random_concept(rng, 2), "anne")
        else:
            axiom = RoleAssertion("likes", "anne", "bob")
        assert parse_axiom(render(axiom)) == axiom
