"""Ground-truth order oracle for the truth-value carrier.

The closed-form operations in `lingtruth.lattice` are fast but easy to get
wrong around the non-comparable pair, so this module rebuilds the order from
first principles: lay down the cover edges of the carrier's Hasse diagram,
take the reflexive-transitive closure by plain reachability, and compute
least upper bounds / greatest lower bounds by exhaustive search over common
bounds.  Everything here favors being obviously correct over being fast;
the carrier never exceeds a few dozen elements at the sizes we verify.

`cross_check_ops` compares three things against the oracle on every pair:

* the implemented closed-form join/meet/leq (must always agree);
* the join/meet branch tables exactly as stated in the source case lists,
  before the corrections documented in `lingtruth.discrepancies` (the
  quasi-kind join rule for grade pairs around the missing cross link
  genuinely disagrees, and the report records each such pair);
* the residuation reading "a <= b iff a -> b = top", which in the quasi
  kind has exactly one exceptional pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lattice import AlgebraConfig, LinguisticValue, canonical


@dataclass(frozen=True)
class CoverGraph:
    """Hasse cover edges of a carrier; queries answered from the closure."""

    config: AlgebraConfig
    elements: tuple[LinguisticValue, ...]
    covers: frozenset[tuple[LinguisticValue, LinguisticValue]]

    def __post_init__(self):
        object.__setattr__(self, "_reach", _closure(self.elements, self.covers))

    def leq(self, a: LinguisticValue, b: LinguisticValue) -> bool:
        return b in self._reach[a]

    def upper_bounds(self, a, b):
        return [c for c in self.elements if self.leq(a, c) and self.leq(b, c)]

    def lower_bounds(self, a, b):
        return [c for c in self.elements if self.leq(c, a) and self.leq(c, b)]

    def lub(self, a: LinguisticValue, b: LinguisticValue) -> LinguisticValue | None:
        """Unique minimal common upper bound, or None if absent/ambiguous."""
        ubs = self.upper_bounds(a, b)
        minimal = [u for u in ubs if not any(v != u and self.leq(v, u) for v in ubs)]
        return minimal[0] if len(minimal) == 1 else None

    def glb(self, a: LinguisticValue, b: LinguisticValue) -> LinguisticValue | None:
        lbs = self.lower_bounds(a, b)
        maximal = [u for u in lbs if not any(v != u and self.leq(u, v) for v in lbs)]
        return maximal[0] if len(maximal) == 1 else None


def _closure(elements, covers):
    """Reflexive-transitive closure by repeated expansion (no cleverness)."""
    above = {e: {e} for e in elements}
    edges = {}
    for lower, upper in covers:
        edges.setdefault(lower, set()).add(upper)
    changed = True
    while changed:
        changed = False
        for e in elements:
            grown = set(above[e])
            for reached in tuple(grown):
                grown |= edges.get(reached, set())
            for reached in tuple(grown):
                grown |= above[reached]
            if grown != above[e]:
                above[e] = grown
                changed = True
    return above


def build_covers(config: AlgebraConfig) -> CoverGraph:
    """Cover edges: the two hedge chains plus one cross link per false grade
    (minus the configured non-comparable one)."""
    n = config.n
    covers = set()
    for g in range(n, 0, -1):
        covers.add((LinguisticValue.false(g), LinguisticValue.false(g - 1)))
    for g in range(n):
        covers.add((LinguisticValue.true(g), LinguisticValue.true(g + 1)))
    for k in range(n + 1):
        if k == config.noncomparable:
            continue
        covers.add((LinguisticValue.false(k), LinguisticValue.true(n - k)))
    return CoverGraph(config, config.values(), frozenset(covers))


def leq_oracle(graph: CoverGraph, a: LinguisticValue, b: LinguisticValue) -> bool:
    return graph.leq(a, b)


def lub_oracle(graph: CoverGraph, a: LinguisticValue, b: LinguisticValue):
    return graph.lub(a, b)


def glb_oracle(graph: CoverGraph, a: LinguisticValue, b: LinguisticValue):
    return graph.glb(a, b)


@dataclass
class LatticeReport:
    """Pairs of the carrier lacking a unique LUB or GLB (should be none)."""

    config: AlgebraConfig
    missing_joins: list[tuple[LinguisticValue, LinguisticValue]] = field(default_factory=list)
    missing_meets: list[tuple[LinguisticValue, LinguisticValue]] = field(default_factory=list)

    @property
    def is_lattice(self) -> bool:
        return not self.missing_joins and not self.missing_meets

    def to_dict(self) -> dict:
        return {
            "kind": self.config.kind,
            "n": self.config.n,
            "is_lattice": self.is_lattice,
            "missing_joins": [[canonical(a), canonical(b)] for a, b in self.missing_joins],
            "missing_meets": [[canonical(a), canonical(b)] for a, b in self.missing_meets],
        }


def verify_lattice(config: AlgebraConfig) -> LatticeReport:
    graph = build_covers(config)
    report = LatticeReport(config)
    values = graph.elements
    for a in values:
        for b in values:
            if graph.lub(a, b) is None:
                report.missing_joins.append((a, b))
            if graph.glb(a, b) is None:
                report.missing_meets.append((a, b))
    return report


# ----------------------------------------------------------------------
# Cross-checking the closed forms against the oracle


@dataclass(frozen=True)
class OpMismatch:
    op: str
    a: LinguisticValue
    b: LinguisticValue
    got: LinguisticValue | bool | None
    expected: LinguisticValue | bool | None
    rule: str | None = None

    def to_dict(self) -> dict:
        def show(v):
            return canonical(v) if isinstance(v, LinguisticValue) else v

        entry = {
            "op": self.op,
            "a": canonical(self.a),
            "b": canonical(self.b),
            "got": show(self.got),
            "expected": show(self.expected),
        }
        if self.rule:
            entry["rule"] = self.rule
        return entry


@dataclass
class DiscrepancyReport:
    """Implemented-vs-oracle and stated-vs-oracle comparison for one algebra."""

    config: AlgebraConfig
    implemented: list[OpMismatch] = field(default_factory=list)
    stated: list[OpMismatch] = field(default_factory=list)
    residuation_exceptions: list[tuple[LinguisticValue, LinguisticValue]] = field(
        default_factory=list
    )

    @property
    def clean(self) -> bool:
        """True when the implemented operations match the oracle everywhere."""
        return not self.implemented

    def to_dict(self) -> dict:
        return {
            "kind": self.config.kind,
            "n": self.config.n,
            "noncomparable": self.config.noncomparable,
            "implemented_mismatches": [m.to_dict() for m in self.implemented],
            "stated_mismatches": [m.to_dict() for m in self.stated],
            "residuation_exceptions": [
                [canonical(a), canonical(b)] for a, b in self.residuation_exceptions
            ],
        }


def _stated_join(config: AlgebraConfig, a: LinguisticValue, b: LinguisticValue):
    """Mixed-polarity join exactly as the quasi-kind case list states it:
    the raised value v_(n-(i-1))T is used for every true grade k = n-i,
    regardless of the false grade."""
    if config.noncomparable is None or a.polarity is b.polarity:
        return config.join(a, b)
    t, f = (a, b) if a.is_true else (b, a)
    n, nc = config.n, config.noncomparable
    k, l = t.grade, f.grade
    if n <= k + l:
        if k == n - nc:
            return LinguisticValue.true(n - (nc - 1))
        return LinguisticValue.true(k)
    if l == nc:
        return LinguisticValue.true(n - (nc - 1))
    return LinguisticValue.true(n - l)


def _stated_meet(config: AlgebraConfig, a: LinguisticValue, b: LinguisticValue):
    """Mixed-polarity meet as stated (the case list scopes its special
    branches correctly, so this coincides with the implemented meet)."""
    if config.noncomparable is None or a.polarity is b.polarity:
        return config.meet(a, b)
    t, f = (a, b) if a.is_true else (b, a)
    n, nc = config.n, config.noncomparable
    k, l = t.grade, f.grade
    if n <= k + l:
        if k == n - nc and l == nc:
            return LinguisticValue.false(nc + 1)
        return LinguisticValue.false(l)
    if k == n - nc:
        return LinguisticValue.false(nc + 1)
    return LinguisticValue.false(n - k)


def cross_check_ops(config: AlgebraConfig) -> DiscrepancyReport:
    """Exhaustively compare closed-form join/meet/leq with the oracle."""
    graph = build_covers(config)
    report = DiscrepancyReport(config)
    values = graph.elements
    top = config.top()
    for a in values:
        for b in values:
            oracle_join = graph.lub(a, b)
            oracle_meet = graph.glb(a, b)
            oracle_leq = graph.leq(a, b)

            got_join = config.join(a, b)
            if got_join != oracle_join:
                report.implemented.append(OpMismatch("join", a, b, got_join, oracle_join))
            got_meet = config.meet(a, b)
            if got_meet != oracle_meet:
                report.implemented.append(OpMismatch("meet", a, b, got_meet, oracle_meet))
            got_leq = config.leq(a, b)
            if got_leq != oracle_leq:
                report.implemented.append(OpMismatch("leq", a, b, got_leq, oracle_leq))

            stated_join = _stated_join(config, a, b)
            if stated_join != oracle_join:
                report.stated.append(
                    OpMismatch("join", a, b, stated_join, oracle_join, rule="2.4-item3")
                )
            stated_meet = _stated_meet(config, a, b)
            if stated_meet != oracle_meet:
                report.stated.append(
                    OpMismatch("meet", a, b, stated_meet, oracle_meet, rule="2.4-item7/8")
                )

            if (config.implies(a, b) == top) != oracle_leq:
                report.residuation_exceptions.append((a, b))
    return report


# ----------------------------------------------------------------------
# Exports


def to_dot(graph: CoverGraph) -> str:
    """Graphviz digraph of the cover edges, directed lower -> upper."""
    config = graph.config
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for value in graph.elements:
        name = canonical(value)
        if config.labels is not None:
            lines.append(f'  "{name}" [label="{config.label(value)}"];')
        else:
            lines.append(f'  "{name}";')
    for lower, upper in sorted(graph.covers, key=lambda e: (canonical(e[0]), canonical(e[1]))):
        lines.append(f'  "{canonical(lower)}" -> "{canonical(upper)}";')
    lines.append("}")
    return "\n".join(lines)


def to_json_dict(graph: CoverGraph) -> dict:
    return {
        "kind": graph.config.kind,
        "n": graph.config.n,
        "noncomparable": graph.config.noncomparable,
        "nodes": [canonical(v) for v in graph.elements],
        "edges": sorted(
            [canonical(lower), canonical(upper)] for lower, upper in graph.covers
        ),
    }
