"""Exhaustive checker for the implication axioms I1-I7 and lattice laws.

All checks enumerate the whole carrier (pairs or triples as the axiom
demands) in the deterministic order of ``AlgebraConfig.values()``, so two
runs over the same algebra produce identical reports, including the order
of counterexamples.  Witness lists in reports are capped (10 by default)
but the total violation count is always exact; pass ``max_witnesses=None``
to keep every witness.

The axioms, for all x, y, z:

    I1  x -> (y -> z) = y -> (x -> z)
    I2  x -> x = top
    I3  x -> y = y' -> x'
    I4  x -> y = y -> x = top  implies  x = y   (checked as an implication)
    I5  (x -> y) -> y = (y -> x) -> x
    I6  (x v y) -> z = (x -> z) ^ (y -> z)
    I7  (x ^ y) -> z = (x -> z) v (y -> z)

An algebra satisfying I1-I7 classifies as LIA, one satisfying I1-I5 but
failing I6 or I7 as QLIA, anything else as NOT_QLIA.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .lattice import AlgebraConfig, LinguisticValue, canonical


class Axiom(enum.Enum):
    I1 = "I1"
    I2 = "I2"
    I3 = "I3"
    I4 = "I4"
    I5 = "I5"
    I6 = "I6"
    I7 = "I7"


class Classification(enum.Enum):
    LIA = "LIA"
    QLIA = "QLIA"
    NOT_QLIA = "NotQLIA"


@dataclass(frozen=True)
class Witness:
    """One violating assignment with the two sides that should be equal."""

    x: LinguisticValue
    y: LinguisticValue | None
    z: LinguisticValue | None
    lhs: LinguisticValue
    rhs: LinguisticValue

    def to_dict(self) -> dict:
        entry = {"x": canonical(self.x)}
        if self.y is not None:
            entry["y"] = canonical(self.y)
        if self.z is not None:
            entry["z"] = canonical(self.z)
        entry["lhs"] = canonical(self.lhs)
        entry["rhs"] = canonical(self.rhs)
        return entry


@dataclass
class CheckResult:
    name: str
    total_violations: int
    witnesses: list[Witness]

    @property
    def holds(self) -> bool:
        return self.total_violations == 0

    def to_dict(self) -> dict:
        return {
            "axiom": self.name,
            "holds": self.holds,
            "total_violations": self.total_violations,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }


def _collect(name, violations, max_witnesses):
    kept = violations if max_witnesses is None else violations[:max_witnesses]
    return CheckResult(name, len(violations), kept)


def check_axiom(
    config: AlgebraConfig, axiom: Axiom, max_witnesses: int | None = 10
) -> CheckResult:
    values = config.values()
    imp, join, meet, neg = config.implies, config.join, config.meet, config.negate
    top = config.top()
    bad: list[Witness] = []

    if axiom is Axiom.I1:
        for x in values:
            for y in values:
                for z in values:
                    lhs = imp(x, imp(y, z))
                    rhs = imp(y, imp(x, z))
                    if lhs != rhs:
                        bad.append(Witness(x, y, z, lhs, rhs))
    elif axiom is Axiom.I2:
        for x in values:
            lhs = imp(x, x)
            if lhs != top:
                bad.append(Witness(x, None, None, lhs, top))
    elif axiom is Axiom.I3:
        for x in values:
            for y in values:
                lhs = imp(x, y)
                rhs = imp(neg(y), neg(x))
                if lhs != rhs:
                    bad.append(Witness(x, y, None, lhs, rhs))
    elif axiom is Axiom.I4:
        for x in values:
            for y in values:
                if x != y and imp(x, y) == top and imp(y, x) == top:
                    bad.append(Witness(x, y, None, imp(x, y), imp(y, x)))
    elif axiom is Axiom.I5:
        for x in values:
            for y in values:
                lhs = imp(imp(x, y), y)
                rhs = imp(imp(y, x), x)
                if lhs != rhs:
                    bad.append(Witness(x, y, None, lhs, rhs))
    elif axiom is Axiom.I6:
        for x in values:
            for y in values:
                for z in values:
                    lhs = imp(join(x, y), z)
                    rhs = meet(imp(x, z), imp(y, z))
                    if lhs != rhs:
                        bad.append(Witness(x, y, z, lhs, rhs))
    elif axiom is Axiom.I7:
        for x in values:
            for y in values:
                for z in values:
                    lhs = imp(meet(x, y), z)
                    rhs = join(imp(x, z), imp(y, z))
                    if lhs != rhs:
                        bad.append(Witness(x, y, z, lhs, rhs))
    else:  # pragma: no cover - the enum is closed
        raise ValueError(f"unknown axiom {axiom}")

    return _collect(axiom.value, bad, max_witnesses)


def check_all_axioms(
    config: AlgebraConfig, max_witnesses: int | None = 10
) -> dict[Axiom, CheckResult]:
    return {axiom: check_axiom(config, axiom, max_witnesses) for axiom in Axiom}


def check_lattice_laws(
    config: AlgebraConfig, max_witnesses: int | None = 10
) -> list[CheckResult]:
    """Idempotence, commutativity, associativity and absorption for v and ^."""
    values = config.values()
    join, meet = config.join, config.meet
    results = []

    for name, op in (("join", join), ("meet", meet)):
        bad = [
            Witness(x, None, None, op(x, x), x) for x in values if op(x, x) != x
        ]
        results.append(_collect(f"{name}-idempotent", bad, max_witnesses))

    for name, op in (("join", join), ("meet", meet)):
        bad = []
        for x in values:
            for y in values:
                lhs, rhs = op(x, y), op(y, x)
                if lhs != rhs:
                    bad.append(Witness(x, y, None, lhs, rhs))
        results.append(_collect(f"{name}-commutative", bad, max_witnesses))

    for name, op in (("join", join), ("meet", meet)):
        bad = []
        for x in values:
            for y in values:
                for z in values:
                    lhs = op(op(x, y), z)
                    rhs = op(x, op(y, z))
                    if lhs != rhs:
                        bad.append(Witness(x, y, z, lhs, rhs))
        results.append(_collect(f"{name}-associative", bad, max_witnesses))

    for name, outer, inner in (("join", join, meet), ("meet", meet, join)):
        bad = []
        for x in values:
            for y in values:
                lhs = outer(x, inner(x, y))
                if lhs != x:
                    bad.append(Witness(x, y, None, lhs, x))
        results.append(_collect(f"{name}-absorption", bad, max_witnesses))

    return results


def check_involution(config: AlgebraConfig, max_witnesses: int | None = 10) -> CheckResult:
    """Negation is an involution and reverses the order."""
    values = config.values()
    neg, leq = config.negate, config.leq
    bad = []
    for x in values:
        double = neg(neg(x))
        if double != x:
            bad.append(Witness(x, None, None, double, x))
    for x in values:
        for y in values:
            if leq(x, y) and not leq(neg(y), neg(x)):
                bad.append(Witness(x, y, None, neg(y), neg(x)))
    return _collect("involution", bad, max_witnesses)


def classify(config: AlgebraConfig) -> Classification:
    results = check_all_axioms(config, max_witnesses=0)
    if all(results[axiom].holds for axiom in Axiom):
        return Classification.LIA
    if all(results[axiom].holds for axiom in (Axiom.I1, Axiom.I2, Axiom.I3, Axiom.I4, Axiom.I5)):
        return Classification.QLIA
    return Classification.NOT_QLIA
