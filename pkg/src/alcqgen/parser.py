"""Recursive-descent parser for the textual ALCQ syntax.

Grammar (keywords are reserved and cannot be used as names):

    concept     := disjunction
    disjunction := conjunction ("or" conjunction)*
    conjunction := unary ("and" unary)*
    unary       := "not" unary
                 | "atleast" INT NAME unary
                 | "atmost" INT NAME unary
                 | NAME "some" unary
                 | NAME "only" unary
                 | primary
    primary     := "Thing" | "Nothing" | NAME | "(" concept ")"
    axiom       := concept "subclassof" concept
                 | concept "(" NAME ")"
                 | NAME "(" NAME "," NAME ")"

"and" binds tighter than "or"; both are left associative.  Quantifier
fillers extend to one unary expression, so ``likes some kind and big``
parses as ``(likes some kind) and big``; parenthesize the filler to get
the other reading.
"""

from __future__ import annotations

from dataclasses import dataclass

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
    Not,
    Or,
    RoleAssertion,
    Subsumption,
)

KEYWORDS = frozenset(
    {"not", "and", "or", "some", "only", "atleast", "atmost", "subclassof", "Thing", "Nothing"}
)


class ParseError(ValueError):
    """Raised on malformed input; ``offset`` is the character position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class _Token:
    kind: str  # "name", "int", "(", ")", ",", or a keyword
    text: str
    offset: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "(),":
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            kind = word if word in KEYWORDS else "name"
            tokens.append(_Token(kind, word, i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self, ahead: int = 0) -> _Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "end":
            self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text or 'end of input'!r}", tok.offset)
        return self.next()

    def concept(self) -> ConceptExpr:
        expr = self.conjunction()
        while self.peek().kind == "or":
            self.next()
            expr = Or(expr, self.conjunction())
        return expr

    def conjunction(self) -> ConceptExpr:
        expr = self.unary()
        while self.peek().kind == "and":
            self.next()
            expr = And(expr, self.unary())
        return expr

    def unary(self) -> ConceptExpr:
        tok = self.peek()
        if tok.kind == "not":
            self.next()
            return Not(self.unary())
        if tok.kind in ("atleast", "atmost"):
            self.next()
            num = self.expect("int")
            n = int(num.text)
            if tok.kind == "atleast" and n < 1:
                raise ParseError("atleast requires a cardinality of at least 1", num.offset)
            role = self.expect("name")
            filler = self.unary()
            cls = AtLeast if tok.kind == "atleast" else AtMost
            return cls(n, role.text, filler)
        if tok.kind == "name" and self.peek(1).kind in ("some", "only"):
            role = self.next()
            quant = self.next()
            filler = self.unary()
            cls = Exists if quant.kind == "some" else Forall
            return cls(role.text, filler)
        return self.primary()

    def primary(self) -> ConceptExpr:
        tok = self.peek()
        if tok.kind == "Thing":
            self.next()
            return TOP
        if tok.kind == "Nothing":
            self.next()
            return BOTTOM
        if tok.kind == "name":
            self.next()
            return Atomic(tok.text)
        if tok.kind == "(":
            self.next()
            expr = self.concept()
            self.expect(")")
            return expr
        raise ParseError(f"expected a concept, found {tok.text or 'end of input'!r}", tok.offset)


def parse_concept(text: str) -> ConceptExpr:
    """Parse a concept expression; raises :class:`ParseError` on bad input."""
    parser = _Parser(_tokenize(text))
    expr = parser.concept()
    tail = parser.peek()
    if tail.kind != "end":
        raise ParseError(f"unexpected trailing input {tail.text!r}", tail.offset)
    return expr


def parse_axiom(text: str) -> Axiom:
    """Parse a subsumption, concept assertion, or role assertion."""
    tokens = _tokenize(text)
    depth = 0
    split = None
    for idx, tok in enumerate(tokens):
        if tok.kind == "(":
            depth += 1
        elif tok.kind == ")":
            depth -= 1
        elif tok.kind == "subclassof" and depth == 0:
            if split is not None:
                raise ParseError("more than one 'subclassof'", tok.offset)
            split = idx
    if split is not None:
        end = tokens[-1]
        lhs = _parse_all(tokens[:split] + [end])
        rhs = _parse_all(tokens[split + 1 :])
        return Subsumption(lhs, rhs)
    return _parse_assertion(tokens, text)


def _parse_all(tokens: list[_Token]) -> ConceptExpr:
    parser = _Parser(tokens)
    expr = parser.concept()
    tail = parser.peek()
    if tail.kind != "end":
        raise ParseError(f"unexpected trailing input {tail.text!r}", tail.offset)
    return expr


def _parse_assertion(tokens: list[_Token], text: str) -> Axiom:
    # The argument list is the trailing parenthesized group: scan back from
    # the final ")" to its matching "(".
    if len(tokens) < 2 or tokens[-2].kind != ")":
        raise ParseError("expected an assertion ending in ')'", tokens[-1].offset)
    depth = 0
    open_idx = None
    for idx in range(len(tokens) - 2, -1, -1):
        if tokens[idx].kind == ")":
            depth += 1
        elif tokens[idx].kind == "(":
            depth -= 1
            if depth == 0:
                open_idx = idx
                break
    if open_idx is None or open_idx == 0:
        raise ParseError("expected a concept or role before '('", tokens[0].offset)
    args = tokens[open_idx + 1 : -2]
    head = tokens[:open_idx] + [tokens[-1]]
    if len(args) == 1 and args[0].kind == "name":
        concept = _parse_all(head)
        return ConceptAssertion(concept, args[0].text)
    if len(args) == 3 and args[0].kind == "name" and args[1].kind == "," and args[2].kind == "name":
        if len(head) != 2 or head[0].kind != "name":
            raise ParseError("a role assertion needs a plain role name", tokens[0].offset)
        return RoleAssertion(head[0].text, args[0].text, args[2].text)
    offset = args[0].offset if args else tokens[open_idx].offset
    raise ParseError("expected '(individual)' or '(subject, object)'", offset)
