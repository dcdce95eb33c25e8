import random

from alcqgen.nnf import complement, is_nnf, negate_fact, nnf, simplify
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
)
from oracle import concepts_equivalent

A = Atomic("A")
B = Atomic("B")

ATOMS = ("A", "B")
ROLES = ("likes",)


def _random_concept(rng, depth):
    if depth == 0:
        return rng.choice([A, B, TOP, BOTTOM])
    pick = rng.randrange(7)
    if pick == 0:
        return Not(_random_concept(rng, depth - 1))
    if pick == 1:
        return And(_random_concept(rng, depth - 1), _random_concept(rng, depth - 1))
    if pick == 2:
        return Or(_random_concept(rng, depth - 1), _random_concept(rng, depth - 1))
    if pick == 3:
        return Exists("likes", _random_concept(rng, depth - 1))
    if pick == 4:
        return Forall("likes", _random_concept(rng, depth - 1))
    if pick == 5:
        return AtLeast(rng.randint(1, 2), "likes", _random_concept(rng, depth - 1))
    return AtMost(rng.randint(0, 2), "likes", _random_concept(rng, depth - 1))


def test_nnf_goldens():
    assert nnf(Not(And(A, B))) == Or(Not(A), Not(B))
    assert nnf(Not(Or(A, B))) == And(Not(A), Not(B))
    assert nnf(Not(Not(A))) == A
    assert nnf(Not(Exists("likes", A))) == Forall("likes", Not(A))
    assert nnf(Not(Forall("likes", A))) == Exists("likes", Not(A))
    assert nnf(Not(TOP)) is BOTTOM
    assert nnf(Not(BOTTOM)) is TOP
    assert nnf(Not(AtLeast(2, "likes", A))) == AtMost(1, "likes", A)
    assert nnf(Not(AtMost(2, "likes", A))) == AtLeast(3, "likes", A)
    assert nnf(Not(AtMost(0, "likes", A))) == AtLeast(1, "likes", A)


def test_nnf_output_shape():
    rng = random.Random(411)
    for _ in range(300):
        c = _random_concept(rng, rng.randint(1, 5))
        assert is_nnf(nnf(c))


def test_nnf_idempotent():
    rng = random.Random(412)
    for _ in range(300):
        c = _random_concept(rng, rng.randint(1, 5))
        once = nnf(c)
        assert nnf(once) == once


def test_nnf_preserves_meaning():
    rng = random.Random(413)
    for _ in range(30):
        c = _random_concept(rng, rng.randint(1, 3))
        assert concepts_equivalent(c, nnf(c), ATOMS, ROLES)


def test_complement_negates():
    rng = random.Random(414)
    for _ in range(30):
        c = _random_concept(rng, rng.randint(1, 3))
        flipped = complement(c)
        assert is_nnf(flipped)
        assert concepts_equivalent(flipped, Not(c), ATOMS, ROLES)


def test_simplify_goldens():
    assert simplify(And(A, A)) == A
    assert simplify(Or(A, Not(A))) is TOP
    assert simplify(And(A, Not(A))) is BOTTOM
    assert simplify(And(A, TOP)) == A
    assert simplify(Or(A, BOTTOM)) == A
    assert simplify(Or(A, TOP)) is TOP
    assert simplify(And(A, BOTTOM)) is BOTTOM
    assert simplify(Exists("likes", BOTTOM)) is BOTTOM
    assert simplify(Forall("likes", TOP)) is TOP
    assert simplify(AtLeast(2, "likes", BOTTOM)) is BOTTOM
    assert simplify(AtMost(1, "likes", BOTTOM)) is TOP


def test_simplify_keeps_first_occurrence_order():
    assert simplify(And(And(B, A), B)) == And(B, A)
    assert simplify(Or(A, Or(B, A))) == Or(A, B)


def test_simplify_preserves_meaning():
    rng = random.Random(415)
    for _ in range(30):
        c = nnf(_random_concept(rng, rng.randint(1, 3)))
        assert concepts_equivalent(c, simplify(c), ATOMS, ROLES)


def test_negate_fact_involution():
    rng = random.Random(416)
    for _ in range(25):
        fact = ConceptAssertion(_random_concept(rng, rng.randint(0, 2)), "anne")
        flipped = negate_fact(fact)
        assert flipped.individual == "anne"
        assert concepts_equivalent(flipped.concept, Not(fact.concept), ATOMS, ROLES)
        back = negate_fact(flipped)
        assert concepts_equivalent(back.concept, fact.concept, ATOMS, ROLES)
