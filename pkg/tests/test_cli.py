"""Descriptor grammar and command line behavior."""

import io
import json
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest

from flateta import (
    BaseSurface,
    DescriptorSyntaxError,
    FiberPair,
    SeifertData,
    ValidationError,
    flat_catalog,
    parse_descriptor,
    render_descriptor,
    run,
)

SCHEMA = json.loads(
    (Path(__file__).resolve().parent.parent / "docs" / "output.schema.json").read_text()
)


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def parse_json_output(text):
    payload = json.loads(text)
    jsonschema.validate(payload, SCHEMA)
    return payload


class TestParseDescriptor:
    def test_catalog_example(self):
        data = parse_descriptor("S2;(2,1)(3,-1)(6,-1)")
        assert data.base is BaseSurface.S2
        assert data.b == 0
        assert data.fibers == (FiberPair(2, 1), FiberPair(3, -1), FiberPair(6, -1))

    def test_bare_torus(self):
        data = parse_descriptor("T2;")
        assert data.base is BaseSurface.T2
        assert data.fibers == ()

    def test_explicit_obstruction_term(self):
        data = parse_descriptor("S2;b=-2;(2,1)")
        assert data.b == -2

    def test_whitespace_ignored(self):
        data = parse_descriptor("  S2 ; b = -2 ; ( 2 , 1 )  ")
        assert data == parse_descriptor("S2;b=-2;(2,1)")

    def test_validation_forwarded(self):
        with pytest.raises(ValidationError, match=r"gcd\(4,2\)"):
            parse_descriptor("S2;(4,2)")

    @pytest.mark.parametrize(
        "text, offset",
        [
            ("X2;", 0),
            ("S2", 2),
            ("S2;(2,1", 7),
            ("S2;(2 1)", 6),
            ("S2;b=;", 5),
            ("S2;(2,1)x", 8),
        ],
    )
    def test_syntax_error_offsets(self, text, offset):
        with pytest.raises(DescriptorSyntaxError) as excinfo:
            parse_descriptor(text)
        assert excinfo.value.offset == offset

    def test_round_trip_is_identity(self):
        samples = [
            SeifertData(BaseSurface.S2, 0, ((2, 1), (3, -1), (6, -1))),
            SeifertData(BaseSurface.S2, -3, ((5, 2),)),
            SeifertData(BaseSurface.T2),
        ]
        samples += [e.seifert for e in flat_catalog() if e.seifert is not None]
        for data in samples:
            assert parse_descriptor(render_descriptor(data)) == data


class TestEtaCommand:
    def test_prints_exact_value(self):
        code, out, err = invoke("eta", "S2;(2,1)(3,-1)(6,-1)")
        assert code == 0
        assert err == ""
        assert "-4/3" in out

    def test_quiet_prints_value_only(self):
        code, out, err = invoke("eta", "S2;(2,1)(3,-1)(6,-1)", "--quiet")
        assert (code, out, err) == (0, "-4/3\n", "")

    def test_json_payload(self):
        code, out, err = invoke("eta", "S2;(2,1)(3,-1)(6,-1)", "--json")
        assert code == 0
        payload = parse_json_output(out)
        assert payload["schema"] == "1"
        assert payload["eta"] == "-4/3"
        assert payload["integral"] is False
        assert payload["fibers"][2] == {"alpha": 6, "beta": -1, "dedekind_sum": "-5/18"}

    def test_not_flat_is_domain_error(self):
        code, out, err = invoke("eta", "S2;(2,1)")
        assert code == 2
        assert "not flat: e = -1/2" in err
        assert out == ""

    def test_syntax_error_is_usage_error(self):
        code, out, err = invoke("eta", "S2;(2,1")
        assert code == 1
        assert "byte 7" in err

    def test_matches_catalog_values(self):
        for entry in flat_catalog():
            if entry.seifert is None:
                continue
            code, out, _ = invoke("eta", render_descriptor(entry.seifert), "--quiet")
            assert code == 0
            assert Fraction(out.strip()) == entry.eta, entry.name


class TestObstructCommand:
    def test_obstructed_exits_three(self):
        code, out, err = invoke("obstruct", "S2;(2,1)(3,-1)(6,-1)")
        assert code == 3
        assert "obstructed" in out
        assert "multi-cusped" in out
        assert "not an integer" in err

    def test_obstructed_json(self):
        code, out, err = invoke("obstruct", "S2;(2,1)(3,-1)(6,-1)", "--json")
        assert code == 3
        payload = parse_json_output(out)
        assert payload["geodesic_boundary_obstructed"] is True
        assert payload["one_cusped_cross_section_obstructed"] is True
        assert payload["predicted_signature"] is None
        assert "multi-cusped" in payload["note"]

    def test_unobstructed_torus(self):
        code, out, err = invoke("obstruct", "T2;", "--json")
        assert code == 0
        assert err == ""
        payload = parse_json_output(out)
        assert payload["geodesic_boundary_obstructed"] is False
        assert payload["predicted_signature"] == 0

    def test_signature_prediction(self):
        code, out, _ = invoke("obstruct", "S2;(2,1)(4,-1)(4,-1)", "--json")
        assert code == 0
        assert parse_json_output(out)["predicted_signature"] == 1


class TestDedekindCommand:
    def test_json_shows_both_paths(self):
        code, out, err = invoke("dedekind", "3", "7", "--json")
        assert code == 0
        payload = parse_json_output(out)
        assert payload["sawtooth"] == "-1/14"
        assert payload["cotangent"] == "-1/14"

    def test_negative_beta(self):
        code, out, _ = invoke("dedekind", "-1", "6", "--quiet")
        assert code == 0
        assert out.strip() == "-5/18"

    def test_human_output_names_both_paths(self):
        code, out, _ = invoke("dedekind", "3", "7")
        assert code == 0
        assert "sawtooth" in out and "cotangent" in out

    def test_non_coprime_is_domain_error(self):
        code, out, err = invoke("dedekind", "2", "4")
        assert code == 2
        assert "coprime" in err


class TestCatalogCommand:
    def test_lists_all_six(self):
        code, out, err = invoke("catalog")
        assert code == 0
        for name in ("G1", "G2", "G3", "G4", "G5", "G6"):
            assert name in out

    def test_json_matches_library_catalog(self):
        code, out, _ = invoke("catalog", "--json")
        assert code == 0
        payload = parse_json_output(out)
        entries = payload["entries"]
        assert len(entries) == 6
        by_name = {e["name"]: e for e in entries}
        assert by_name["G5"]["eta"] == "-4/3"
        assert by_name["G3"]["eta"] == "-2/3"
        assert by_name["G1"]["eta"] == "0/1"
        assert by_name["G6"]["eta"] is None
        assert by_name["G6"]["descriptor"] is None
        assert by_name["G6"]["eta_integral"] is True
        for entry in flat_catalog():
            row = by_name[entry.name]
            if entry.seifert is not None:
                assert row["descriptor"] == render_descriptor(entry.seifert)


class TestGaussBonnetCommand:
    def test_chi_to_volume(self):
        code, out, _ = invoke("gauss-bonnet", "--chi", "1", "--json")
        assert code == 0
        payload = parse_json_output(out)
        assert payload["volume_coefficient"] == "4/3"
        assert payload["volume"] == "13.1594725348"

    def test_volume_to_chi(self):
        code, out, _ = invoke("gauss-bonnet", "--volume", "13.1594725348", "--json")
        assert code == 0
        assert parse_json_output(out)["chi"] == 1

    def test_off_lattice_is_domain_error(self):
        code, out, err = invoke("gauss-bonnet", "--volume", "20.0")
        assert code == 2
        assert "lattice" in err

    def test_nonpositive_chi_is_domain_error(self):
        code, out, err = invoke("gauss-bonnet", "--chi", "0")
        assert code == 2

    def test_chi_and_volume_conflict(self):
        code, out, err = invoke("gauss-bonnet", "--chi", "1", "--volume", "13.0")
        assert code == 1

    def test_requires_an_argument(self):
        code, out, err = invoke("gauss-bonnet")
        assert code == 1


class TestCliContract:
    def test_unknown_command(self):
        code, out, err = invoke("frobnicate")
        assert code == 1
        assert err != ""

    def test_missing_command(self):
        code, out, err = invoke()
        assert code == 1

    def test_global_flag_before_subcommand(self):
        code, out, _ = invoke("--json", "dedekind", "3", "7")
        assert code == 0
        assert parse_json_output(out)["sawtooth"] == "-1/14"

    def test_exit_zero_iff_no_error_text(self):
        invocations = [
            ("eta", "S2;(2,1)(3,-1)(6,-1)"),
            ("eta", "S2;(2,1)"),
            ("eta", "nonsense"),
            ("obstruct", "T2;"),
            ("obstruct", "S2;(3,2)(3,-1)(3,-1)"),
            ("dedekind", "3", "7"),
            ("dedekind", "2", "4"),
            ("catalog",),
            ("gauss-bonnet", "--chi", "5"),
            ("gauss-bonnet", "--volume", "20.0"),
            ("gauss-bonnet", "--chi", "0"),
        ]
        for argv in invocations:
            code, out, err = invoke(*argv)
            assert (code == 0) == (err == ""), argv

    def test_json_output_is_single_object(self):
        for argv in (
            ("eta", "T2;", "--json"),
            ("obstruct", "T2;", "--json"),
            ("dedekind", "1", "3", "--json"),
            ("catalog", "--json"),
            ("gauss-bonnet", "--chi", "2", "--json"),
            ("gauss-bonnet", "--volume", "13.1594725348", "--json"),
        ):
            code, out, _ = invoke(*argv)
            payload = parse_json_output(out)  # validates against the schema
            assert isinstance(payload, dict)
            assert payload["schema"] == "1"
            assert len(out.strip().splitlines()) == 1
