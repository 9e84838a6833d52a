import pytest

from lingtruth.errors import DomainError, ParseError
from lingtruth.lattice import (
    DEFAULT_LABELS_N4,
    AlgebraConfig,
    LinguisticValue,
    Polarity,
    canonical,
    default_labels,
    lia,
    qlia,
)

T = LinguisticValue.true
F = LinguisticValue.false


class TestConfigValidation:
    def test_negative_n_rejected(self):
        with pytest.raises(DomainError):
            lia(-1)

    def test_quasi_kind_needs_n_at_least_two(self):
        with pytest.raises(DomainError):
            qlia(1, 1)

    @pytest.mark.parametrize("bad", [0, 4, 5, -2])
    def test_noncomparable_index_must_be_interior(self, bad):
        with pytest.raises(DomainError):
            qlia(4, bad)

    def test_labels_must_match_chain_length(self):
        with pytest.raises(DomainError):
            lia(4, labels=("a", "b"))

    def test_labels_must_be_distinct(self):
        with pytest.raises(DomainError):
            lia(1, labels=("same", "Same"))

    def test_default_labels_only_for_five_hedges(self):
        assert default_labels(4) == DEFAULT_LABELS_N4
        assert default_labels(3) is None


class TestCarrier:
    def test_bounds(self):
        alg = lia(4)
        assert alg.top() == T(4)
        assert alg.bottom() == F(4)

    def test_bounds_degenerate(self):
        alg = lia(0)
        assert alg.top() == T(0)
        assert alg.bottom() == F(0)

    def test_enumeration_order(self):
        assert lia(1).values() == (F(1), F(0), T(0), T(1))
        assert lia(0).values() == (F(0), T(0))
        assert len(lia(4).values()) == 10

    def test_validate_value(self):
        alg = lia(2)
        assert alg.validate_value(T(2)) == T(2)
        with pytest.raises(DomainError):
            alg.validate_value(T(3))


class TestNegation:
    def test_flips_polarity_keeps_grade(self):
        alg = lia(4)
        assert alg.negate(T(2)) == F(2)
        assert alg.negate(T(4)) == F(4)

    def test_involution(self):
        alg = lia(4)
        assert alg.negate(alg.negate(F(3))) == F(3)


class TestJoinMeet:
    def test_plain_mixed_join(self):
        alg = lia(4)
        assert alg.join(T(0), F(0)) == T(4)
        assert alg.join(T(3), F(2)) == T(3)  # i+j = 5 >= n

    def test_quasi_special_join(self):
        alg = qlia(4, 2)
        assert alg.join(T(2), F(2)) == T(3)

    def test_join_idempotent(self):
        for alg in (lia(4), qlia(4, 2)):
            for a in alg.values():
                assert alg.join(a, a) == a

    def test_plain_meets(self):
        alg = lia(4)
        assert alg.meet(T(2), F(2)) == F(2)  # i+j = 4 >= n
        assert alg.meet(T(2), F(1)) == F(2)  # i+j = 3 <= n

    def test_quasi_meets(self):
        alg = qlia(4, 2)
        assert alg.meet(T(2), F(1)) == F(3)
        assert alg.meet(T(2), F(2)) == F(3)  # the non-comparable pair

    def test_commutative(self):
        for alg in (lia(4), qlia(4, 2)):
            for a in alg.values():
                for b in alg.values():
                    assert alg.join(a, b) == alg.join(b, a)
                    assert alg.meet(a, b) == alg.meet(b, a)


class TestImplication:
    @pytest.mark.parametrize(
        "a, b, expected",
        [
            (F(2), F(4), T(2)),
            (T(2), F(4), F(2)),
            (F(0), T(2), T(2)),
            (T(3), T(2), T(3)),
        ],
    )
    def test_worked_values(self, a, b, expected):
        assert lia(4).implies(a, b) == expected

    def test_self_implication_is_top(self):
        for alg in (lia(4), qlia(4, 2), lia(0)):
            for a in alg.values():
                assert alg.implies(a, a) == alg.top()

    def test_contrapositive_identity(self):
        for alg in (lia(4), qlia(4, 2)):
            for a in alg.values():
                for b in alg.values():
                    assert alg.implies(a, b) == alg.implies(alg.negate(b), alg.negate(a))


class TestOrder:
    def test_cross_link(self):
        assert lia(4).leq(F(2), T(2))

    def test_quasi_pair_not_comparable(self):
        alg = qlia(4, 2)
        assert not alg.leq(F(2), T(2))
        assert not alg.leq(T(2), F(2))
        assert alg.leq(F(2), T(3))

    def test_reflexive(self):
        for alg in (lia(4), qlia(4, 2)):
            for a in alg.values():
                assert alg.leq(a, a)

    def test_leq_matches_meet(self):
        for alg in (lia(5), qlia(5, 2), lia(0)):
            for a in alg.values():
                for b in alg.values():
                    assert alg.leq(a, b) == (alg.meet(a, b) == a)


class TestTextForms:
    def test_canonical(self):
        assert canonical(T(3)) == "v3T"
        assert canonical(F(0)) == "v0F"
        assert str(T(12)) == "v12T"

    def test_parse_canonical(self):
        alg = lia(4)
        assert alg.parse_value("v3T") == T(3)
        assert alg.parse_value(" v0F ") == F(0)

    def test_parse_rejects_out_of_range(self):
        with pytest.raises(DomainError):
            lia(2).parse_value("v3T")

    def test_parse_rejects_garbage(self):
        with pytest.raises(ParseError):
            lia(4).parse_value("3T")
        with pytest.raises(ParseError):
            lia(4).parse_value("vxT")

    def test_labeled_forms(self):
        alg = lia(4, labels=DEFAULT_LABELS_N4)
        assert alg.label(T(3)) == "quite True"
        assert alg.describe(T(3)) == "v3T (quite True)"
        assert alg.parse_value("quite True") == T(3)
        assert alg.parse_value("RATHER false") == F(2)

    def test_unlabeled_describe_falls_back(self):
        assert lia(3).describe(T(1)) == "v1T"

    def test_round_trip_all_values(self):
        alg = lia(4, labels=DEFAULT_LABELS_N4)
        for v in alg.values():
            assert alg.parse_value(canonical(v)) == v
            assert alg.parse_value(alg.label(v)) == v


def test_polarity_words():
    assert Polarity.T.word == "True"
    assert Polarity.F.word == "False"


def test_kind_names():
    assert lia(4).kind == "LIA"
    assert qlia(4, 2).kind == "QLIA"


def test_labels_coerced_to_tuple():
    alg = AlgebraConfig(n=1, labels=["low", "high"])
    assert alg.labels == ("low", "high")
