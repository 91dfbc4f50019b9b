from fractions import Fraction
from itertools import product

import pytest

from leibniz_kit import catalog as cat
from leibniz_kit.algebra import bracket, check_leibniz
from leibniz_kit.field import GF, QQ, quad_roots
from leibniz_kit.invariants import NON_NILPOTENT
from leibniz_kit.linalg import is_zero, span, unit_vec

SIDE_FAMILIES = [f"Lei{n}(3)" for n in (20, 21, 22, 23, 28, 29, 30, 31, 32, 33, 34)]


def sp(F, *idx):
    return span(F, [unit_vec(F, 3, i - 1) for i in idx], 3)


class TestRegistry:
    def test_counts(self):
        types = cat.list_types()
        assert sum(1 for _, d, _ in types if d == 3) == 40
        assert ("Lei1(2)", 2) in [(t, d) for t, d, _ in types]
        assert len(types) == 42

    @pytest.mark.parametrize("text", ["Lei7(3)", "Lei7_3", "Lei7", " Lei7 "])
    def test_resolve(self, text):
        assert cat.resolve(text).id == "Lei7(3)"

    @pytest.mark.parametrize("text", ["Lei43", "Lei7(2)", "L7", ""])
    def test_unknown(self, text):
        with pytest.raises(cat.UnknownType):
            cat.resolve(text)

    def test_param_spec_round_trip(self):
        for fid, _, _ in cat.list_types():
            assert cat.param_spec(fid)["id"] == fid

    def test_param_spec_examples(self):
        s7 = cat.param_spec("Lei7")
        assert s7["params"] == ["beta"]
        kinds = {k for k, _ in s7["constraints"]}
        assert {"nonzero", "rootless"} <= kinds
        assert cat.param_spec("Lei3")["params"] == []
        s24 = cat.param_spec("Lei24")
        assert s24["params"] == [] and ("char", "char(F)≠2") in s24["constraints"]
        assert cat.param_spec("Lei27")["derived"] == {"beta": "β=α(1+α)⁻¹"}
        assert cat.param_spec("Lei34")["derived"] == {"beta": "β=(α+γ)(1+α)⁻¹"}


class TestMake:
    def test_examples(self):
        cat.make("Lei7", {"beta": 1}, GF(3))
        with pytest.raises(cat.InvalidParameter):
            cat.make("Lei7", {"beta": 1}, GF(5))
        with pytest.raises(cat.InvalidParameter):
            cat.make("Lei27", {"alpha": -1}, QQ)
        with pytest.raises(cat.CharNotAllowed):
            cat.make("Lei24", {}, GF(2))

    def test_parameter_names(self):
        with pytest.raises(cat.UnsupportedParamName):
            cat.make("Lei3", {"alpha": 1}, QQ)
        with pytest.raises(cat.InvalidParameter):
            cat.make("Lei7", {}, QQ)

    def test_string_parameters(self):
        L, _ = cat.make("Lei6", {"alpha": "1/2"}, QQ)
        assert L.table[0][1] == (0, 0, Fraction(1, 2))

    def test_tables(self):
        L3, _ = cat.make("Lei3", {}, QQ)
        assert L3.sparse() == {(0, 0): (0, 0, 1)}
        L37, _ = cat.make("Lei37", {}, GF(5))
        assert L37.sparse() == {(0, 0): (0, 1, 0), (0, 1): (0, 0, 1)}

    def test_derived_parameters(self):
        for F in (QQ, GF(5), GF(7)):
            for a in range(-3, 5):
                try:
                    P = cat.check_params("Lei27", {"alpha": a}, F)
                except cat.CatalogError:
                    continue
                assert F.mul(P["beta"], F.add(F.one, P["alpha"])) == P["alpha"]
                L, _ = cat.make("Lei27", {"alpha": a}, F)
                assert L.table[0][1] == (F.neg(F.one), F.zero, P["beta"])
                for g in range(-2, 3):
                    try:
                        Q = cat.check_params("Lei34", {"alpha": a, "gamma": g}, F)
                    except cat.CatalogError:
                        continue
                    lhs = F.mul(Q["beta"], F.add(F.one, Q["alpha"]))
                    assert lhs == F.add(Q["alpha"], Q["gamma"])


class TestExpected:
    def test_examples(self):
        e17 = cat.expected_report("Lei17", {}, QQ)
        assert e17["left_center"] == sp(QQ, 2, 3)
        assert e17["right_center"] == e17["center"] == sp(QQ, 2)
        assert e17["nilpotency"] == NON_NILPOTENT
        e3 = cat.expected_report("Lei3", {}, QQ)
        assert e3["left_center"] == e3["right_center"] == e3["center"] == sp(QQ, 2, 3)
        assert e3["nilpotency"] == 2
        e40 = cat.expected_report("Lei40", {"beta": 1, "gamma": 1}, QQ)
        assert e40["right_center"].dim == 0 and e40["center"].dim == 0

    @pytest.mark.parametrize("F", [QQ, GF(3), GF(5), GF(7)])
    def test_discrepancies_are_exactly_the_documented_ones(self, F):
        for fid, _, _ in cat.list_types():
            params = cat.survey_params(fid, F) if F.is_finite else [cat.default_params(fid, F)]
            for P in params:
                if P is None:
                    continue
                L, _ = cat.make(fid, P, F)
                diff = set(cat.compare_claims(L, fid, P, F))
                assert diff <= set(cat.KNOWN_DISCREPANCIES.get(fid, {})), (fid, P)

    def test_documented_discrepancies_are_real(self):
        F = GF(7)
        for fid, fields in cat.KNOWN_DISCREPANCIES.items():
            P = cat.default_params(fid, F)
            L, _ = cat.make(fid, P, F)
            assert set(cat.compare_claims(L, fid, P, F)) == set(fields), fid


class TestIdentityRecord:
    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_non_leibniz_record_is_exact(self, p):
        F = GF(p)
        for fid, _, _ in cat.list_types():
            for P in cat.survey_params(fid, F):
                L, _ = cat.make(fid, P, F)
                broken = check_leibniz(L) is not None
                assert broken == (cat.expected_non_leibniz(fid, P, F) is not None), (fid, P)


class TestSurvey:
    def test_lei7(self):
        assert cat.survey_params("Lei7", GF(2)) == []
        assert cat.survey_params("Lei7", GF(3)) == [{"beta": 1}]
        assert [P["beta"] for P in cat.survey_params("Lei7", GF(7))] == [1, 2, 4]

    def test_lei7_scan_oracle(self):
        for p in (2, 3, 5, 7, 11, 13):
            F = GF(p)
            expected = [b for b in range(1, p) if not quad_roots(0, b, F)]
            assert [P["beta"] for P in cat.survey_params("Lei7", F)] == expected

    def test_infinite(self):
        with pytest.raises(cat.InfiniteField):
            cat.survey_params("Lei7", QQ)

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_agrees_with_recheck(self, p):
        F = GF(p)
        for fid, _, _ in cat.list_types():
            names = cat.param_spec(fid)["params"]
            found = cat.survey_params(fid, F)
            for values in product(range(p), repeat=len(names)):
                P = dict(zip(names, values))
                try:
                    cat.make(fid, P, F)
                    ok = True
                except (cat.InvalidParameter, cat.CharNotAllowed):
                    ok = False
                assert ok == (P in found), (fid, P)

    def test_defaults(self):
        assert cat.default_params("Lei7", GF(3)) == {"beta": 1}
        assert cat.default_params("Lei7", GF(2)) is None
        assert cat.default_params("Lei3", QQ) == {}
        # over Q the search runs 1, -1, 2, -2, ...; X²+1 is rootless
        assert cat.default_params("Lei7", QQ) == {"beta": 1}


class TestSideConditions:
    @pytest.mark.parametrize("fid", SIDE_FAMILIES)
    @pytest.mark.parametrize("F", [QQ, GF(3), GF(5), GF(7)])
    def test_witness_squares_to_zero_outside_a(self, fid, F):
        P = cat.default_params(fid, F)
        if P is None:
            pytest.skip(f"{fid} has no valid parameters over {F}")
        L, (status,) = cat.make(fid, P, F)
        assert status.satisfied is False
        w = tuple(F(c) for c in status.witness)
        assert w[1] != 0
        assert is_zero(bracket(L, w, w))

    def test_lei20_text(self):
        _, (status,) = cat.make("Lei20", {"sigma": 1}, QQ)
        assert status.condition == "α²+αγ+β²σ≠0"

    def test_no_side_condition_elsewhere(self):
        assert cat.make("Lei3", {}, QQ)[1] == []
