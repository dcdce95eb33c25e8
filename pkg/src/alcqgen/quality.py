"""Golden reasoning cases: hand-checked verdicts the checker must reproduce.

Each case is a small knowledge base and one query whose entailment status
was worked out by hand.  They pin the behaviors that are easy to silently
break: open-world unknowns, number-restriction merging, anonymous
witnesses, contrapositives, and the interplay of role assertions with
universal restrictions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .parser import parse_axiom
from .reasoner import EntailmentChecker, Verdict, budget_from_secs
from .syntax import KnowledgeBase, Subsumption


@dataclass(frozen=True)
class QualityCase:
    name: str
    kb: tuple[str, ...]
    query: str
    expected: str


@dataclass(frozen=True)
class QualityResult:
    case: QualityCase
    observed: str

    @property
    def ok(self) -> bool:
        return self.observed == self.case.expected


CASES: tuple[QualityCase, ...] = (
    QualityCase("member", ("red(Anne)",), "red(Anne)", "True"),
    QualityCase("member-negated", ("red(Anne)",), "(not red)(Anne)", "False"),
    QualityCase("open-world-atom", ("red(Anne)",), "green(Anne)", "Unknown"),
    QualityCase("conjunction-elim", ("(red and green)(Anne)",), "green(Anne)", "True"),
    QualityCase("disjunction-no-elim", ("(red or green)(Anne)",), "red(Anne)", "Unknown"),
    QualityCase(
        "disjunctive-syllogism",
        ("(red or green)(Anne)", "(not red)(Anne)"),
        "green(Anne)",
        "True",
    ),
    QualityCase(
        "modus-ponens", ("red subclassof kind", "red(Anne)"), "kind(Anne)", "True"
    ),
    QualityCase(
        "chain-of-two",
        ("red subclassof kind", "kind subclassof nice", "red(Anne)"),
        "nice(Anne)",
        "True",
    ),
    QualityCase(
        "contrapositive",
        ("red subclassof kind", "(not kind)(Anne)"),
        "(not red)(Anne)",
        "True",
    ),
    QualityCase(
        "universal-propagation",
        ("likes(Anne, Bob)", "(likes only kind)(Anne)"),
        "kind(Bob)",
        "True",
    ),
    QualityCase(
        "universal-without-edge",
        ("(likes only kind)(Anne)",),
        "kind(Bob)",
        "Unknown",
    ),
    QualityCase(
        "anonymous-witness",
        ("(likes some red)(Anne)",),
        "red(Bob)",
        "Unknown",
    ),
    QualityCase(
        "exists-to-atleast-one",
        ("(likes some red)(Anne)",),
        "(atleast 1 likes red)(Anne)",
        "True",
    ),
    QualityCase(
        "atleast-to-exists",
        ("(atleast 2 likes red)(Anne)",),
        "(likes some red)(Anne)",
        "True",
    ),
    QualityCase(
        "atleast-weakening",
        ("(atleast 3 likes red)(Anne)",),
        "(atleast 2 likes red)(Anne)",
        "True",
    ),
    QualityCase(
        "atleast-strengthening-open",
        ("(atleast 2 likes red)(Anne)",),
        "(atleast 3 likes red)(Anne)",
        "Unknown",
    ),
    QualityCase(
        "atmost-weakening",
        ("(atmost 1 likes red)(Anne)",),
        "(atmost 2 likes red)(Anne)",
        "True",
    ),
    QualityCase(
        "cardinality-conflict",
        ("(atleast 2 likes red)(Anne)",),
        "(atmost 1 likes red)(Anne)",
        "False",
    ),
    QualityCase(
        "forced-merge",
        (
            "likes(Anne, Bob)",
            "likes(Anne, Carol)",
            "(atmost 1 likes Thing)(Anne)",
            "red(Bob)",
        ),
        "red(Carol)",
        "True",
    ),
    QualityCase(
        "distinct-by-label",
        ("likes(Anne, Bob)", "likes(Anne, Carol)", "red(Bob)", "(not red)(Carol)"),
        "(atleast 2 likes Thing)(Anne)",
        "True",
    ),
    QualityCase(
        "mergeable-pair-open",
        ("likes(Anne, Bob)", "likes(Anne, Carol)"),
        "(atleast 2 likes Thing)(Anne)",
        "Unknown",
    ),
    QualityCase(
        "universal-bottom-blocks-exists",
        ("(likes only Nothing)(Anne)",),
        "(likes some Thing)(Anne)",
        "False",
    ),
    QualityCase(
        "exists-blocks-universal-bottom",
        ("(likes some Thing)(Anne)",),
        "(likes only Nothing)(Anne)",
        "False",
    ),
    QualityCase(
        "domain-axiom-applies-to-fresh-name",
        ("Thing subclassof kind",),
        "kind(Anne)",
        "True",
    ),
    QualityCase(
        "subsumption-chain",
        ("red subclassof kind", "kind subclassof nice"),
        "red subclassof nice",
        "True",
    ),
    QualityCase(
        "subsumption-converse-open",
        ("red subclassof kind",),
        "kind subclassof red",
        "Unknown",
    ),
    QualityCase(
        "subsumption-counterexample",
        ("red(Anne)", "(not kind)(Anne)"),
        "red subclassof kind",
        "False",
    ),
    QualityCase(
        "de-morgan",
        ("(not (red and green))(Anne)", "red(Anne)"),
        "(not green)(Anne)",
        "True",
    ),
    QualityCase(
        "nested-existential",
        ("(likes some (likes some red))(Anne)",),
        "(likes some Thing)(Anne)",
        "True",
    ),
    QualityCase(
        "universal-chain",
        (
            "(likes only (likes only red))(Anne)",
            "likes(Anne, Bob)",
            "likes(Bob, Carol)",
        ),
        "red(Carol)",
        "True",
    ),
    QualityCase(
        "global-universal",
        ("Thing subclassof (likes only red)", "likes(Anne, Bob)"),
        "red(Bob)",
        "True",
    ),
    QualityCase(
        "witness-typed-by-universal",
        ("(likes some Thing)(Anne)", "(likes only red)(Anne)"),
        "(likes some red)(Anne)",
        "True",
    ),
    QualityCase(
        "case-split-join",
        ("(red or green)(Anne)", "red subclassof kind", "green subclassof kind"),
        "kind(Anne)",
        "True",
    ),
    QualityCase(
        "unrelated-subsumption-open",
        ("red(Anne)",),
        "green subclassof kind",
        "Unknown",
    ),
    QualityCase(
        "atmost-zero-is-universal-bottom",
        ("(atmost 0 likes Thing)(Anne)",),
        "(likes only Nothing)(Anne)",
        "True",
    ),
    QualityCase(
        "negated-cardinality-merge",
        (
            "(not (atleast 2 likes Thing))(Anne)",
            "likes(Anne, Bob)",
            "likes(Anne, Carol)",
            "red(Bob)",
        ),
        "red(Carol)",
        "True",
    ),
    QualityCase(
        "disjunction-intro",
        ("(red and green)(Anne)",),
        "(red or green)(Anne)",
        "True",
    ),
    QualityCase(
        "disjunction-intro-two-facts",
        ("red(Anne)", "green(Anne)"),
        "(red or green)(Anne)",
        "True",
    ),
    QualityCase(
        "conjunction-intro",
        ("red(Anne)", "green(Anne)"),
        "(red and green)(Anne)",
        "True",
    ),
    QualityCase(
        "tautology",
        ("kind(Bob)",),
        "(red and green) subclassof (red or green)",
        "True",
    ),
    QualityCase(
        "quantifier-duality",
        ("(not (likes some red))(Anne)",),
        "(likes only (not red))(Anne)",
        "True",
    ),
    QualityCase(
        "universal-bottom-chain-false",
        (
            "(admires only Nothing)(Anne)",
            "(admires only Nothing) subclassof (likes only quiet)",
        ),
        "(likes some (not quiet))(Anne)",
        "False",
    ),
)


def build_case_kb(case: QualityCase) -> KnowledgeBase:
    tbox = []
    abox = []
    for text in case.kb:
        axiom = parse_axiom(text)
        if isinstance(axiom, Subsumption):
            tbox.append(axiom)
        else:
            abox.append(axiom)
    return KnowledgeBase(tuple(tbox), tuple(abox), pool_id="quality")


def run_case(case: QualityCase, budget_secs: float = 5.0) -> QualityResult:
    kb = build_case_kb(case)
    checker = EntailmentChecker(kb, budget_from_secs(budget_secs))
    verdict = checker.entails(parse_axiom(case.query))
    observed = {
        Verdict.TRUE: "True",
        Verdict.FALSE: "False",
        Verdict.UNKNOWN: "Unknown",
    }[verdict]
    return QualityResult(case=case, observed=observed)


def run_quality(budget_secs: float = 5.0) -> list[QualityResult]:
    return [run_case(case, budget_secs) for case in CASES]
