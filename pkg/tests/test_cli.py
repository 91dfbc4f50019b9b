import dataclasses
import json
import random

import pytest
from click.testing import CliRunner

from leibniz_kit import catalog as cat
from leibniz_kit.algebra import Algebra, check_leibniz
from leibniz_kit.cli import (
    EXIT_CLASSIFY,
    EXIT_FIELD,
    EXIT_NOT_APPLICABLE,
    EXIT_OK,
    EXIT_PARAM,
    EXIT_PARSE,
    EXIT_VIOLATION,
    main,
    parse_algebra,
    report_from_dict,
    write_algebra,
)
from leibniz_kit.field import GF, QQ, ParseError
from leibniz_kit.invariants import invariant_report

from conftest import SEED


@pytest.fixture
def runner():
    return CliRunner()


def run(runner, *args, input=None):
    return runner.invoke(main, list(args), input=input)


def algebra_file(tmp_path, L, name="alg.json"):
    p = tmp_path / name
    p.write_text(write_algebra(L), encoding="utf-8")
    return str(p)


def catalog_file(tmp_path, fid, F=QQ, params=None):
    L, _ = cat.make(fid, params if params is not None else cat.default_params(fid, F), F)
    return algebra_file(tmp_path, L, f"{fid}.json")


class TestFiles:
    def test_round_trip_every_instance(self):
        for F in (QQ, GF(2), GF(3), GF(5)):
            for fid, _, _ in cat.list_types():
                for P in (cat.survey_params(fid, F) if F.is_finite else
                          [cat.default_params(fid, F)]):
                    if P is None:
                        continue
                    L, _ = cat.make(fid, P, F)
                    assert parse_algebra(write_algebra(L)) == L

    def test_labels_survive(self):
        L = Algebra.from_brackets(QQ, 2, {(0, 0): (0, 1)}, labels=["x", "y"])
        assert parse_algebra(write_algebra(L)).labels == ("x", "y")

    @pytest.mark.parametrize("text", [
        "{", "[]", '{"field": "Q", "dim": 2}',
        '{"field": "Q", "dim": 2, "brackets": [{"i": 3, "j": 1, "coeffs": ["0", "1"]}]}',
        '{"field": "Q", "dim": 2, "brackets": [{"i": 1, "j": 1, "coeffs": ["1"]}]}',
        '{"field": "Q", "dim": 2, "brackets": [{"i": 1, "j": 1, "coeffs": ["1/0", "0"]}]}',
        '{"field": "Q", "dim": 2, "brackets": [{"i": 1, "j": 1, "coeffs": ["0", "1"]},'
        ' {"i": 1, "j": 1, "coeffs": ["0", "2"]}]}',
        '{"field": "Fp:4", "dim": 1, "brackets": []}',
    ])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_algebra(text)


class TestVerify:
    def test_ok(self, runner, tmp_path):
        res = run(runner, "verify", catalog_file(tmp_path, "Lei37"))
        assert res.exit_code == EXIT_OK
        assert "ok" in res.output

    def test_violation(self, runner, tmp_path):
        bad = Algebra.from_brackets(QQ, 1, {(0, 0): (1,)})
        res = run(runner, "verify", algebra_file(tmp_path, bad))
        assert res.exit_code == EXIT_VIOLATION
        assert "(1, 1, 1)" in res.output
        assert "[[e₁,e₁],e₁] = e₁" in res.output

    def test_violation_json(self, runner, tmp_path):
        res = run(runner, "verify", "--format", "json", catalog_file(tmp_path, "Lei26"))
        doc = json.loads(res.output)
        assert res.exit_code == EXIT_VIOLATION
        assert doc["triple"] == [1, 2, 3] and doc["lhs"] == ["0", "0", "-1"]

    def test_malformed_scalar(self, runner, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text('{"field": "Q", "dim": 1, "brackets": [{"i": 1, "j": 1, "coeffs": ["x"]}]}')
        assert run(runner, "verify", str(p)).exit_code == EXIT_PARSE

    def test_every_catalog_file_matches_the_record(self, runner, tmp_path):
        for F in (QQ, GF(3)):
            for fid, _, _ in cat.list_types():
                P = cat.default_params(fid, F)
                if P is None:
                    continue
                res = run(runner, "verify", catalog_file(tmp_path, fid, F, P))
                broken = cat.expected_non_leibniz(fid, P, F) is not None
                assert res.exit_code == (EXIT_VIOLATION if broken else EXIT_OK), fid


class TestReport:
    def test_lei4_text(self, runner, tmp_path):
        res = run(runner, "report", catalog_file(tmp_path, "Lei4"))
        assert res.exit_code == EXIT_OK
        assert "Leib(L)  = Fa₃" in res.output
        assert "ζ^left   = Fa₂⊕Fa₃" in res.output
        assert "ncl = 2" in res.output

    def test_json_round_trip(self, runner, tmp_path):
        for fid in ("Lei4", "Lei24", "Lei38", "Lei42"):
            path = catalog_file(tmp_path, fid)
            doc = json.loads(run(runner, "report", "--format", "json", path).output)
            L = parse_algebra(open(path, encoding="utf-8").read())
            assert report_from_dict(doc) == invariant_report(L)

    def test_stable_under_reordering(self, runner, tmp_path):
        rnd = random.Random(SEED)
        for fid in ("Lei6", "Lei25", "Lei36", "Lei40"):
            path = catalog_file(tmp_path, fid)
            doc = json.loads(open(path, encoding="utf-8").read())
            base = run(runner, "report", "--format", "json", path).output
            for k in range(3):
                rnd.shuffle(doc["brackets"])
                p = tmp_path / f"shuffled{k}.json"
                p.write_text(json.dumps(doc), encoding="utf-8")
                assert run(runner, "report", "--format", "json", str(p)).output == base

    def test_requires_leibniz(self, runner, tmp_path):
        assert run(runner, "report", catalog_file(tmp_path, "Lei26")).exit_code == EXIT_VIOLATION


class TestClassify:
    def test_lei37(self, runner, tmp_path):
        res = run(runner, "classify", "--trace", catalog_file(tmp_path, "Lei37", GF(5)))
        assert res.exit_code == EXIT_OK
        assert res.output.splitlines()[0] == "Lei37(3)"
        assert "trace:" in res.output and "[verify]" in res.output

    def test_overlap_note(self, runner, tmp_path):
        res = run(runner, "classify", catalog_file(tmp_path, "Lei4"))
        assert "Lei5(3)" in res.output

    def test_json(self, runner, tmp_path):
        res = run(runner, "classify", "--format", "json", "--trace", catalog_file(tmp_path, "Lei25"))
        doc = json.loads(res.output)
        assert doc["id"] == "Lei25(3)" and doc["params"] == {"alpha": "1"}
        assert doc["trace"][-1]["predicate"] == "transport"

    def test_exit_codes(self, runner, tmp_path):
        lie = Algebra.from_brackets(QQ, 3, {(0, 1): (0, 0, 1), (1, 0): (0, 0, -1)})
        assert run(runner, "classify", algebra_file(tmp_path, lie)).exit_code == EXIT_NOT_APPLICABLE
        assert run(runner, "classify", catalog_file(tmp_path, "Lei1")).exit_code == EXIT_NOT_APPLICABLE
        assert run(runner, "classify", catalog_file(tmp_path, "Lei12")).exit_code == EXIT_VIOLATION
        kappa = Algebra.from_brackets(QQ, 3, {
            (0, 0): (0, 0, 1), (0, 1): (0, 2, 0), (0, 2): (0, 0, 1), (1, 0): (0, -2, 0)})
        assert check_leibniz(kappa) is None
        res = run(runner, "classify", "--trace", algebra_file(tmp_path, kappa))
        assert res.exit_code == EXIT_CLASSIFY
        assert "κ" in res.output

    def test_every_leibniz_instance(self, runner, tmp_path):
        for fid, _, _ in cat.list_types():
            P = cat.default_params(fid, GF(5))
            L, _ = cat.make(fid, P, GF(5))
            if L.dim != 3 or check_leibniz(L) is not None:
                continue
            res = run(runner, "classify", "--format", "json", algebra_file(tmp_path, L))
            assert res.exit_code == EXIT_OK
            assert json.loads(res.output)["id"] in cat.possible_results(fid)


class TestCatalog:
    def test_list(self, runner):
        res = run(runner, "catalog")
        assert res.exit_code == EXIT_OK
        assert len(res.output.splitlines()) == 42

    def test_write_and_expect(self, runner, tmp_path):
        out = tmp_path / "l20.json"
        res = run(runner, "catalog", "Lei20", "--param", "sigma=1", "--field", "Fp:3",
                  "--out", str(out), "--expect")
        assert res.exit_code == EXIT_OK
        assert "unsatisfied" in res.output and "claimed leib" in res.output
        doc = json.loads(out.read_text(encoding="utf-8"))
        assert doc["meta"]["side_conditions"][0]["satisfied"] is False
        assert "identity_note" in doc["meta"]
        assert "right_center" in doc["meta"]["documented_discrepancies"]
        L = parse_algebra(out.read_text(encoding="utf-8"))
        assert L == cat.make("Lei20", {"sigma": 1}, GF(3))[0]

    def test_greek_parameter_names(self, runner):
        res = run(runner, "catalog", "Lei7", "--param", "β=1", "--field", "Fp:3")
        assert res.exit_code == EXIT_OK

    @pytest.mark.parametrize("args,needle", [
        (("Lei24", "--field", "Fp:2"), "char(F)≠2"),
        (("Lei7", "--param", "beta=1", "--field", "Fp:5"), "β"),
        (("Lei27", "--param", "alpha=-1"), "α"),
        (("Lei3", "--param", "alpha=1"), "alpha"),
        (("Lei43",), "Lei43"),
    ])
    def test_invalid(self, runner, args, needle):
        res = run(runner, "catalog", *args)
        assert res.exit_code == EXIT_PARAM
        assert needle in res.output

    def test_bad_field(self, runner):
        assert run(runner, "catalog", "Lei3", "--field", "Fp:4").exit_code == EXIT_PARSE


class TestSurvey:
    def test_lei7(self, runner):
        res = run(runner, "survey", "Lei7", "--field", "Fp:7")
        assert res.exit_code == EXIT_OK
        assert "3 valid" in res.output

    def test_json(self, runner):
        doc = json.loads(run(runner, "survey", "Lei7", "--field", "Fp:3", "--format", "json").output)
        assert doc["count"] == 1 and doc["params"] == [{"beta": "1"}]

    def test_infinite(self, runner):
        assert run(runner, "survey", "Lei7", "--field", "Q").exit_code == EXIT_FIELD

    def test_all(self, runner):
        res = run(runner, "survey", "--all", "--field", "Fp:2", "--field", "Fp:3")
        assert res.exit_code == EXIT_OK
        lines = res.output.splitlines()
        assert len(lines) == 43
        row = next(ln for ln in lines if ln.startswith("Lei7(3)"))
        assert row.split()[1:] == ["-", "1"]


class TestSelftest:
    def test_passes_and_is_deterministic(self, runner):
        first = run(runner, "selftest")
        second = run(runner, "selftest")
        assert first.exit_code == EXIT_OK
        assert first.output.splitlines()[-1] == "selftest passed"
        assert first.output == second.output

    def test_fault_injection(self, runner, monkeypatch):
        fam = cat.FAMILIES["Lei37(3)"]

        def corrupt(F, P):
            return {**fam.table(F, P), (2, 1): (0, 0, 1)}

        monkeypatch.setitem(cat.FAMILIES, "Lei37(3)", dataclasses.replace(fam, table=corrupt))
        res = run(runner, "selftest")
        assert res.exit_code == EXIT_VIOLATION
        failing = [ln for ln in res.output.splitlines() if " FAIL " in ln]
        assert [ln.split()[0] for ln in failing] == ["Lei37(3)"]
