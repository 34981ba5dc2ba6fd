"""Tests for the command-line interface."""

import json

import pytest

from core.contfrac import expand_sqrt
from core.exceptions import MismatchError
from core.payloads import Envelope, ExpansionPayload, PellPayload, ScanPayload, UnitPayload
from core.types import FamilyId, VerificationReport
from main import main, run


def _json(argv):
    outcome = run(["--json", *argv])
    return outcome.exit_code, json.loads(outcome.payload)


class TestExpandAndPell:
    def test_expand(self):
        outcome = run(["expand", "57"])
        assert outcome.exit_code == 0
        assert outcome.payload == "[7; 1,1,4,1,1,14]"

    def test_expand_json(self):
        code, document = _json(["expand", "22"])
        assert code == 0
        assert document["command"] == "expand"
        assert document["data"]["period"] == ["1", "2", "4", "2", "1", "8"]
        assert document["data"]["period_length"] == 6

    def test_pell(self):
        assert run(["pell", "22"]).payload == "c=197 h=42"
        assert run(["pell", "2", "--rank", "2"]).payload == "c=17 h=12 rank=2"

    def test_pell_json_keeps_big_integers_exact(self):
        code, document = _json(["pell", "61"])
        assert code == 0
        assert document["data"]["solution"]["X"] == "1766319049"
        assert document["data"]["congruence_row"] == "c = +-1 (mod 8), h = 0 (mod 4)"

    def test_negative(self):
        assert run(["pell", "13", "--negative"]).payload == "X=18 Y=5 norm -1"
        outcome = run(["pell", "22", "--negative"])
        assert outcome.exit_code == 0
        assert "period 6 is even" in outcome.payload

    def test_perfect_square_is_an_error(self):
        outcome = run(["expand", "16"])
        assert outcome.exit_code == 1
        assert outcome.payload.startswith("error:")

    def test_error_envelope(self):
        code, document = _json(["pell", "49"])
        assert code == 1
        assert document["data"] is None
        assert "perfect square" in document["error"]


class TestUsage:
    @pytest.mark.parametrize("argv", [
        [],
        ["bogus"],
        ["expand", "abc"],
        ["expand", "1"],
        ["pell", "22", "--rank", "0"],
        ["family"],
    ])
    def test_usage_errors_exit_one(self, argv):
        assert run(argv).exit_code == 1

    def test_usage_error_prints_help(self):
        outcome = run(["bogus"])
        assert outcome.payload.startswith("usage:")
        assert "--json" in outcome.payload
        assert "invalid choice" in outcome.payload

    def test_subcommand_usage_error_prints_its_help(self, capsys):
        assert main(["pell", "22", "--rank", "0"]) == 1
        err = capsys.readouterr().err
        assert "--negative" in err


class TestFamilyCommands:
    def test_show(self):
        outcome = run(["family", "show", "F2", "22"])
        assert outcome.exit_code == 0
        assert "case: F2(ii)" in outcome.payload
        assert "identity X^2 - f*Y^2 = 1: holds" in outcome.payload

    def test_show_uncovered(self):
        code, document = _json(["family", "show", "F2", "57"])
        assert code == 0
        assert document["data"]["covered"] is False
        assert document["data"]["pattern"] is None

    def test_show_non_integral(self):
        assert run(["family", "show", "F4", "7"]).exit_code == 1

    def test_unknown_family(self):
        outcome = run(["family", "show", "F9", "22"])
        assert outcome.exit_code == 1
        assert "unknown family" in outcome.payload

    def test_verify(self):
        outcome = run(["family", "verify", "F1", "22", "--t-max", "5"])
        assert outcome.exit_code == 0
        lines = outcome.payload.splitlines()
        assert len(lines) == 6
        assert all(line.startswith("PASS") for line in lines)

    def test_verify_failure_exits_two(self, mocker):
        expansion = expand_sqrt(22)
        failing = VerificationReport(
            family=FamilyId.F1, f=22, t=0, value=22, covered=True, pattern_matches=True,
            fundamental_matches=False, identity_holds=True, expansion=expansion,
            predicted=(1, 1), fundamental=(197, 42),
        )
        mocker.patch("main.verify_grid", return_value=[failing])
        code, document = _json(["family", "verify", "F1", "22"])
        assert code == 2
        assert document["data"]["failures"] == 1

    def test_list(self):
        outcome = run(["family", "list"])
        assert outcome.exit_code == 0
        for family_id in ("F1", "F2", "F3", "F4", "F5"):
            assert family_id in outcome.payload

    def test_list_json(self):
        code, document = _json(["family", "list"])
        assert code == 0
        assert [entry["id"] for entry in document["data"]["families"]] == ["F1", "F2", "F3", "F4", "F5"]


class TestUnitCommand:
    def test_unit(self):
        assert run(["unit", "22"]).payload == "197 + 42*sqrt(D), norm +1"
        assert run(["unit", "13"]).payload == "(3 + 1*sqrt(D))/2, norm -1"

    def test_golden_unit(self):
        assert run(["unit", "282234512826670"]).payload == "705593141 + 42*sqrt(D), norm +1"

    def test_not_squarefree(self):
        assert run(["unit", "12"]).exit_code == 1

    def test_from_family(self):
        outcome = run(["unit", "from-family", "F1", "22", "199998", "--step", "2"])
        assert outcome.exit_code == 0
        assert outcome.payload.splitlines() == [
            "D = 282234512826670",
            "705593141 + 42*sqrt(D), norm +1",
        ]

    def test_from_family_wrong_arity(self):
        assert run(["unit", "from-family", "F1", "22"]).exit_code == 1

    def test_mismatch_exits_two(self, mocker):
        mocker.patch("main.unit_from_family", side_effect=MismatchError("predicted unit is not fundamental"))
        outcome = run(["unit", "from-family", "F1", "22", "4"])
        assert outcome.exit_code == 2
        assert "not fundamental" in outcome.payload


class TestScanCommand:
    def test_poly(self):
        outcome = run(["scan", "--poly", "3,2,1", "--range", "0:20", "--sieve-bound", "3", "--endpoints"])
        assert outcome.exit_code == 0
        assert "squarefree 16 of 21" in outcome.payload
        assert "inclusive 16, left_open 15, right_open 15" in outcome.payload

    def test_family_scan_json(self):
        code, document = _json(["scan", "--family", "F1", "--base", "22", "--step", "2", "--range", "0:50"])
        assert code == 0
        assert document["data"]["poly"] == "7056t^2 + 788t + 22"
        assert document["data"]["total"] == 51

    def test_csv(self, tmp_path):
        path = tmp_path / "scan.csv"
        outcome = run(["scan", "--poly", "3,2,1", "--range", "0:20", "--csv", str(path)])
        assert outcome.exit_code == 0
        assert len(path.read_text(encoding="utf-8").splitlines()) == 22

    @pytest.mark.parametrize("argv", [
        ["scan", "--range", "0:10"],
        ["scan", "--poly", "3,2,1", "--family", "F1", "--base", "22", "--range", "0:10"],
        ["scan", "--poly", "3,2,1", "--range", "10:0"],
        ["scan", "--poly", "3,2,1"],
    ])
    def test_invalid(self, argv):
        assert run(argv).exit_code == 1


class TestLemmasAndSchema:
    def test_lemmas(self):
        outcome = run(["lemmas", "22"])
        assert outcome.exit_code == 0
        assert outcome.payload.startswith("sqrt(22): period 6")
        assert "FAIL" not in outcome.payload

    def test_lemmas_json(self):
        code, document = _json(["lemmas", "13"])
        assert code == 0
        assert document["data"]["passed"] is True

    def test_schema(self):
        outcome = run(["schema"])
        schemas = json.loads(outcome.payload)
        assert {"envelope", "expand", "pell", "scan", "unit"} <= set(schemas)


class TestMain:
    def test_prints_payload(self, capsys):
        assert main(["expand", "22"]) == 0
        assert "[4; 1,2,4,2,1,8]" in capsys.readouterr().out

    def test_errors_go_to_stderr(self, capsys):
        assert main(["expand", "16"]) == 1
        assert "perfect square" in capsys.readouterr().err


class TestJsonRoundTrip:
    def test_pell_payload_validates_back(self):
        _, document = _json(["pell", "61"])
        payload = PellPayload.model_validate(document["data"])
        assert payload.solution.X == 1766319049
        assert payload.solution.Y == 226153980

    def test_unit_payload_matches_text(self):
        _, document = _json(["unit", "282234512826670"])
        payload = UnitPayload.model_validate(document["data"])
        assert (payload.a, payload.b, payload.norm) == (705593141, 42, 1)
        assert run(["unit", "282234512826670"]).payload.startswith(payload.text)

    def test_scan_payload_matches_text(self):
        argv = ["scan", "--poly", "3,2,1", "--range", "0:20", "--sieve-bound", "3"]
        _, document = _json(argv)
        payload = ScanPayload.model_validate(document["data"])
        assert (payload.total, payload.squarefree_count) == (21, 16)
        assert f"squarefree {payload.squarefree_count} of {payload.total}" in run(argv).payload

    def test_envelope_validates_back(self):
        outcome = run(["--json", "expand", "22"])
        envelope = Envelope.model_validate_json(outcome.payload)
        expansion = ExpansionPayload.model_validate(envelope.data)
        assert expansion.period == [1, 2, 4, 2, 1, 8]


class TestOddPeriodUnitCommand:
    def test_norm_minus_one_unit(self):
        outcome = run(["unit", "from-family", "F4", "2", "1"])
        assert outcome.exit_code == 0
        assert outcome.payload.splitlines() == ["D = 82", "9 + 1*sqrt(D), norm -1"]
