"""Graded Modus Ponens and Modus Tollens over linguistic truth values.

The two rule schemas are evaluated as formulas:

    MP   (P & (P -> Q)) -> Q
    MT   (!Q & (P -> Q)) -> !P

Given e(P) and e(Q), ``mp_direct``/``mt_direct`` compute the schema value by
structural evaluation, while ``mp_closed``/``mt_closed`` look the value up
in closed-form branch tables keyed on the polarity pair of (e(P), e(Q)):

    table 3.1 / 4.1   both true          table 3.3 / 4.3   true, false
    table 3.2 / 4.2   both false         table 3.4 / 4.4   false, true

(3.x for the plain kind, 4.x for the quasi kind).  The tables follow the
case derivations rather than the published case lists, which contain a few
symbol and scope errors; `lingtruth.discrepancies` documents each one.
Half-grade comparisons such as n <= i + j/2 are evaluated in exact integer
arithmetic (2n <= 2i + j).  ``inference_table`` materializes one row per
ordered carrier pair and records whether the direct and closed-form values
agree; they must agree everywhere, and the test suite checks this
exhaustively for every verified algebra size.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .formula import Valuation, evaluate, parse
from .lattice import AlgebraConfig, LinguisticValue, canonical, lia, qlia

MP_SCHEMA = parse("(P & (P -> Q)) -> Q")
MT_SCHEMA = parse("(!Q & (P -> Q)) -> !P")


class RuleId(enum.Enum):
    MP = "MP"
    MT = "MT"


@dataclass(frozen=True)
class BranchLabel:
    """Which table and which case produced a closed-form value."""

    table: str
    case: str

    def __str__(self) -> str:
        return f"{self.table}:{self.case}"


@dataclass(frozen=True)
class InferenceRow:
    p: LinguisticValue
    q: LinguisticValue
    rule: RuleId
    direct: LinguisticValue
    closed: LinguisticValue
    branch: BranchLabel

    @property
    def agree(self) -> bool:
        return self.direct == self.closed

    def to_dict(self) -> dict:
        return {
            "p": canonical(self.p),
            "q": canonical(self.q),
            "rule": self.rule.value,
            "direct": canonical(self.direct),
            "closed": canonical(self.closed),
            "branch": str(self.branch),
            "agree": self.agree,
        }


# ----------------------------------------------------------------------
# Direct evaluation


def mp_direct(config: AlgebraConfig, p: LinguisticValue, q: LinguisticValue) -> LinguisticValue:
    return evaluate(MP_SCHEMA, Valuation(config, {"P": p, "Q": q}))


def mt_direct(config: AlgebraConfig, p: LinguisticValue, q: LinguisticValue) -> LinguisticValue:
    return evaluate(MT_SCHEMA, Valuation(config, {"P": p, "Q": q}))


# ----------------------------------------------------------------------
# Closed-form tables, plain kind (3.1 - 3.4; grades i = e(P), j = e(Q))


def _mp_31(n, i, j):
    if i <= j:
        return n, "i<=j"
    if 2 * i <= n + j:
        return n - i + j, "i>=j,2i<=n+j"
    return i, "i>=j,2i>=n+j"


def _mt_31(n, i, j):
    if i <= j:
        return n, "i<=j"
    if i <= 2 * j:
        return n - i + j, "j<=i<=2j"
    return n - j, "i>2j"


def _mp_32(n, i, j):
    if i >= j:
        return n, "i>=j"
    if j <= 2 * i:
        return n - j + i, "i<=j<=2i"
    return n - i, "j>=2i"


def _mt_32(n, i, j):
    if i >= j:
        return n, "i>=j"
    if 2 * j <= n + i:
        return n - j + i, "i<=j,2j<=n+i"
    return j, "i<=j,2j>=n+i"


def _mp_33(n, i, j):
    if i + j <= n:
        return n, "i+j<=n"
    if 2 * n <= 2 * i + j:
        return i, "i+j>=n,n<=i+j/2"
    return 2 * n - i - j, "i+j>=n,n>=i+j/2"


def _mt_33(n, i, j):
    if i + j <= n:
        return n, "i+j<=n"
    if 2 * n <= 2 * j + i:
        return j, "i+j>=n,n<=j+i/2"
    return 2 * n - i - j, "i+j>=n,n>=j+i/2"


def _mp_34(n, i, j):
    if i + j >= n:
        return n, "i+j>=n"
    if n <= 2 * i + j:
        return i + j, "i+j<=n,n<=2i+j"
    return n - i, "i+j<=n,n>=2i+j"


def _mt_34(n, i, j):
    if i + j >= n:
        return n, "i+j>=n"
    if n <= 2 * j + i:
        return i + j, "i+j<=n,n<=2j+i"
    return n - j, "i+j<=n,n>=2j+i"


# ----------------------------------------------------------------------
# Closed-form tables, quasi kind (4.1 - 4.4; grades k = e(P), l = e(Q),
# non-comparable index i)


def _mp_41(n, nc, k, l):
    if k <= l:
        return n, "k<=l"
    if 2 * k <= n + l:
        return n - k + l, "k>=l,2k<=n+l"
    return k, "k>=l,2k>=n+l"


def _mt_41(n, nc, k, l):
    if k <= l:
        return n, "k<=l"
    if k - l != nc:
        if k <= 2 * l:
            return n - k + l, "l<=k<=2l,k-l!=i"
        return n - l, "k>=2l,k-l!=i"
    # !Q meets the implication value v_(n-i)T across the missing link.
    if 2 * l > k + 1:
        return n - k + l, "k>l,2l>k+1,k-l=i"
    return min(n, n - l + 1), "k>l,2l<=k+1,k-l=i"


def _mp_42(n, nc, k, l):
    if k >= l:
        return n, "k>=l"
    if l - k != nc:
        if l <= 2 * k:
            return n - l + k, "k<l<=2k,l-k!=i"
        return n - k, "l>=2k,l-k!=i"
    if 2 * k > l + 1:
        return n - l + k, "k<l,2k>l+1,l-k=i"
    return min(n, n - k + 1), "k<l,2k<=l+1,l-k=i"


def _mt_42(n, nc, k, l):
    if k >= l:
        return n, "k>=l"
    if 2 * l <= n + k:
        return n - l + k, "k<l,2l<=n+k"
    return l, "k<l,2l>=n+k"


def _mp_43(n, nc, k, l):
    if k + l <= n:
        if k != n - nc:
            return n, "k+l<=n,k!=n-i"
        return n, "k+l<=n,k=n-i"
    if k != n - nc:
        if 2 * n <= 2 * k + l:
            return k, "k+l>n,k!=n-i,n<=k+l/2"
        return 2 * n - k - l, "k+l>n,k!=n-i,n>=k+l/2"
    if l <= 2 * nc:
        if k + l == n + 1:
            return n, "k+l=n+1,k=n-i"
        return 2 * n - k - l + 1, "k+l>n+1,k=n-i,2(n-k)>=l-1"
    return k, "k+l>n,k=n-i,2(n-k)<=l-1"


def _mt_43(n, nc, k, l):
    if k + l <= n:
        if l != n - nc:
            return n, "k+l<=n,l!=n-i"
        return n, "k+l<=n,l=n-i"
    if l != n - nc:
        if 2 * n <= 2 * l + k:
            return l, "k+l>n,l!=n-i,n<=l+k/2"
        return 2 * n - k - l, "k+l>n,l!=n-i,n>=l+k/2"
    if k <= 2 * nc:
        if k + l == n + 1:
            return n, "k+l=n+1,l=n-i"
        return 2 * n - k - l + 1, "k+l>n+1,l=n-i,2(n-l)>=k-1"
    return l, "k+l>n,l=n-i,2(n-l)<=k-1"


def _mp_44(n, nc, k, l):
    if k + l >= n:
        return n, "k+l>=n"
    if k + l != n - nc:
        if n <= 2 * k + l:
            return k + l, "k+l<n,k+l!=n-i,n<=2k+l"
        return n - k, "k+l<n,k+l!=n-i,n>=2k+l"
    # the implication value is v_(n-i)T, the top of the missing link
    if 2 * k + l > n:
        return k + l, "k+l=n-i,n<2k+l"
    if k <= 1:
        return n, "k+l=n-i,n>=2k+l,k<=1"
    return n - k + 1, "k+l=n-i,n>=2k+l,k>=2"


def _mt_44(n, nc, k, l):
    if k + l >= n:
        return n, "k+l>=n"
    if k + l != n - nc:
        if n <= 2 * l + k:
            return k + l, "k+l<n,k+l!=n-i,n<=2l+k"
        return n - l, "k+l<n,k+l!=n-i,n>=2l+k"
    if 2 * l + k > n:
        return k + l, "k+l=n-i,n<2l+k"
    if l <= 1:
        return n, "k+l=n-i,n>=2l+k,l<=1"
    return n - l + 1, "k+l=n-i,n>=2l+k,l>=2"


def _closed(config, p, q, rule):
    n, nc = config.n, config.noncomparable
    i, j = p.grade, q.grade
    if nc is None:
        if p.is_true and q.is_true:
            table, fn = "3.1", (_mp_31 if rule is RuleId.MP else _mt_31)
        elif not p.is_true and not q.is_true:
            table, fn = "3.2", (_mp_32 if rule is RuleId.MP else _mt_32)
        elif p.is_true:
            table, fn = "3.3", (_mp_33 if rule is RuleId.MP else _mt_33)
        else:
            table, fn = "3.4", (_mp_34 if rule is RuleId.MP else _mt_34)
        grade, case = fn(n, i, j)
    else:
        if p.is_true and q.is_true:
            table, fn = "4.1", (_mp_41 if rule is RuleId.MP else _mt_41)
        elif not p.is_true and not q.is_true:
            table, fn = "4.2", (_mp_42 if rule is RuleId.MP else _mt_42)
        elif p.is_true:
            table, fn = "4.3", (_mp_43 if rule is RuleId.MP else _mt_43)
        else:
            table, fn = "4.4", (_mp_44 if rule is RuleId.MP else _mt_44)
        grade, case = fn(n, nc, i, j)
    return LinguisticValue.true(grade), BranchLabel(table, case)


def mp_closed(config, p, q) -> tuple[LinguisticValue, BranchLabel]:
    return _closed(config, p, q, RuleId.MP)


def mt_closed(config, p, q) -> tuple[LinguisticValue, BranchLabel]:
    return _closed(config, p, q, RuleId.MT)


def inference_table(config: AlgebraConfig, rule: RuleId) -> list[InferenceRow]:
    """One row per ordered (e(P), e(Q)) pair, in carrier enumeration order."""
    direct = mp_direct if rule is RuleId.MP else mt_direct
    values = config.values()
    rows = []
    for p in values:
        for q in values:
            closed, branch = _closed(config, p, q, rule)
            rows.append(InferenceRow(p, q, rule, direct(config, p, q), closed, branch))
    return rows


# ----------------------------------------------------------------------
# The eight worked examples (five-grade chain; quasi kind uses index 2)


@dataclass(frozen=True)
class ExampleCheck:
    example: str
    kind: str
    p: LinguisticValue
    q: LinguisticValue
    expected_mp: LinguisticValue
    expected_mt: LinguisticValue
    mp: LinguisticValue
    mt: LinguisticValue
    mp_closed: LinguisticValue
    mt_closed: LinguisticValue

    @property
    def passed(self) -> bool:
        return (
            self.mp == self.expected_mp
            and self.mt == self.expected_mt
            and self.mp_closed == self.expected_mp
            and self.mt_closed == self.expected_mt
        )

    def to_dict(self) -> dict:
        return {
            "example": self.example,
            "kind": self.kind,
            "p": canonical(self.p),
            "q": canonical(self.q),
            "expected_mp": canonical(self.expected_mp),
            "expected_mt": canonical(self.expected_mt),
            "mp": canonical(self.mp),
            "mt": canonical(self.mt),
            "passed": self.passed,
        }


@dataclass
class ExampleReport:
    checks: list[ExampleCheck]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dicts(self) -> list[dict]:
        return [c.to_dict() for c in self.checks]


_EXAMPLE_ROWS = (
    ("3.1", "LIA", "v3T", "v2T", "v3T", "v3T"),
    ("3.2", "LIA", "v2F", "v4F", "v2T", "v4T"),
    ("3.3", "LIA", "v2T", "v4F", "v2T", "v4T"),
    ("3.4", "LIA", "v0F", "v2T", "v4T", "v2T"),
    ("4.1", "QLIA", "v3T", "v1T", "v3T", "v4T"),
    ("4.2", "QLIA", "v1F", "v2F", "v3T", "v3T"),
    ("4.3", "QLIA", "v2T", "v3F", "v4T", "v3T"),
    ("4.4", "QLIA", "v0F", "v3T", "v4T", "v3T"),
)


def verify_examples() -> ExampleReport:
    """Recompute the eight reference inferences and compare index-exactly."""
    plain = lia(4)
    quasi = qlia(4, 2)
    checks = []
    for name, kind, p_text, q_text, mp_text, mt_text in _EXAMPLE_ROWS:
        config = plain if kind == "LIA" else quasi
        p = config.parse_value(p_text)
        q = config.parse_value(q_text)
        checks.append(
            ExampleCheck(
                example=name,
                kind=kind,
                p=p,
                q=q,
                expected_mp=config.parse_value(mp_text),
                expected_mt=config.parse_value(mt_text),
                mp=mp_direct(config, p, q),
                mt=mt_direct(config, p, q),
                mp_closed=mp_closed(config, p, q)[0],
                mt_closed=mt_closed(config, p, q)[0],
            )
        )
    return ExampleReport(checks)
