import json
import pytest
from unittest.mock import patch

from cli import build_parser, run
from models.records import CensusRecord
from tests.knot_data import CENSUS_FIXTURE, KNOT_13A_COEFFS, KNOT_13A_PD, KNOT_8_19_PD, TREFOIL_PD


class TestJonesCommand:
    """Test cases for the jones subcommand"""

    def test_inline_pd(self, capsys):
        """Test the trefoil polynomial in text format"""
        assert run(["jones", "--pd", TREFOIL_PD]) == 0
        out = capsys.readouterr().out
        assert "polynomial: t + t^3 - t^4" in out
        assert "coefficients: 1:1 2:0 3:1 4:-1" in out
        assert "writhe: 3" in out

    def test_pd_file_and_descending(self, tmp_path, capsys):
        """Test reading PD text from a file and printing highest exponent first"""
        pd_file = tmp_path / "trefoil.pd"
        pd_file.write_text(f"# trefoil\n{TREFOIL_PD}\n")
        assert run(["jones", "--pd", str(pd_file), "--route", "bracket", "--descending"]) == 0
        assert "polynomial: -t^4 + t^3 + t" in capsys.readouterr().out

    def test_json_lines(self, capsys):
        """Test json-lines output"""
        assert run(["jones", "--pd", KNOT_8_19_PD, "--route", "bracket", "--format", "json-lines"]) == 0
        record = json.loads(capsys.readouterr().out)
        assert record["polynomial"] == "t^3 + t^5 - t^8"
        assert record["route"] == "bracket"

    def test_output_file(self, tmp_path, capsys):
        """Test writing to --out instead of stdout"""
        out = tmp_path / "jones.csv"
        assert run(["jones", "--pd", TREFOIL_PD, "--format", "csv", "--out", str(out)]) == 0
        assert capsys.readouterr().out == ""
        assert out.read_text().splitlines()[0] == "polynomial,coefficients,route,writhe"

    def test_tutte_route_on_non_alternating(self, capsys):
        """Test exit status 1 and an error message when a route does not apply"""
        assert run(["jones", "--pd", KNOT_8_19_PD, "--route", "tutte"]) == 1
        assert "NotAlternating" in capsys.readouterr().err

    def test_parse_error(self, capsys):
        """Test exit status 1 for malformed PD text"""
        assert run(["jones", "--pd", "X(1,2,3)"]) == 1
        assert "ParseError" in capsys.readouterr().err

    def test_usage_errors(self):
        """Test exit status 2 for a missing argument or an unknown route"""
        assert run(["jones"]) == 2
        assert run(["jones", "--pd", TREFOIL_PD, "--route", "skein"]) == 2
        assert run([]) == 2


class TestOtherCommands:
    """Test cases for tutte, twist, bounds and verify"""

    def test_tutte(self, capsys):
        """Test the Tutte polynomial of the positive trefoil graph"""
        assert run(["tutte", "--pd", TREFOIL_PD]) == 0
        out = capsys.readouterr().out
        assert "polynomial: x^2 + x + y" in out
        assert "vertices: 3" in out

    def test_tutte_purple(self, capsys):
        """Test the Tutte polynomial of the other trefoil graph"""
        assert run(["tutte", "--pd", TREFOIL_PD, "--graph", "purple"]) == 0
        assert "polynomial: x + y^2 + y" in capsys.readouterr().out

    def test_twist(self, capsys):
        """Test twist numbers of the 13-crossing knot"""
        assert run(["twist", "--pd", KNOT_13A_PD]) == 0
        out = capsys.readouterr().out
        assert "twist_numbers: 8,22,45,69,94,105" in out
        assert "twist_from_graphs: 8" in out

    def test_bounds_from_coefficients(self, capsys):
        """Test volume bounds from a published coefficient list"""
        coeffs = ",".join(str(c) for c in KNOT_13A_COEFFS)
        assert run(["bounds", f"--coeffs={coeffs}", "--min-exp", "-12", "--crossings", "13", "--format", "json-lines"]) == 0
        record = json.loads(capsys.readouterr().out)
        assert record["twist"] == 8
        assert record["lower"] == pytest.approx(6.0896496385, abs=1e-9)
        assert record["upper"] == pytest.approx(71.0459124487, abs=1e-9)

    def test_bounds_needs_one_source(self):
        """Test that --pd and --coeffs are mutually exclusive and one is required"""
        assert run(["bounds", "--pd", TREFOIL_PD, "--coeffs", "1,0,1,-1"]) == 2
        assert run(["bounds"]) == 2

    def test_bounds_all_zero(self, capsys):
        """Test exit status 1 for an all-zero coefficient list"""
        assert run(["bounds", "--coeffs", "0,0"]) == 1
        assert "BadArgument" in capsys.readouterr().err

    def test_verify(self, capsys):
        """Test a passing verification report"""
        assert run(["verify", "--pd", KNOT_13A_PD]) == 0
        out = capsys.readouterr().out
        assert "T(K): 8" in out
        assert "routes_agree: pass" in out
        assert "result: pass" in out

    def test_verify_non_alternating(self, capsys):
        """Test that non-alternating diagrams report the Jones twist number"""
        assert run(["verify", "--pd", KNOT_8_19_PD]) == 0
        assert "T(K): 0" in capsys.readouterr().out


class TestCensusCommand:
    """Test cases for census-scan"""

    def test_scan(self, tmp_path, capsys):
        """Test a filtered census scan and its summary"""
        out_dir = tmp_path / "out"
        args = ["census-scan", "--in", str(CENSUS_FIXTURE), "--out-dir", str(out_dir), "--filter", "nonalternating", "--ti", "1,2", "--format", "json-lines"]
        assert run(args) == 0
        summary = json.loads(capsys.readouterr().out)
        assert summary["rows"] == 6
        assert (out_dir / "scatter_T1.csv").exists()
        assert (out_dir / "scatter_T2.csv").exists()
        assert not (out_dir / "scatter_T3.csv").exists()

    def test_twist_index_out_of_range(self, tmp_path, capsys):
        """Test exit status 1 for T5 without the override"""
        args = ["census-scan", "--in", str(CENSUS_FIXTURE), "--out-dir", str(tmp_path), "--ti", "5"]
        assert run(args) == 1
        assert "BadArgument" in capsys.readouterr().err

    def test_missing_census(self, tmp_path, capsys):
        """Test exit status 1 for an unreadable census file"""
        args = ["census-scan", "--in", str(tmp_path / "missing.csv"), "--out-dir", str(tmp_path)]
        assert run(args) == 1

    def test_non_finite_volume(self, tmp_path, capsys):
        """Test exit status 1 and a line-numbered CsvError for a nan volume"""
        census = tmp_path / "census.csv"
        census.write_text(f'name,crossings,alternating,prime,torus,pd,volume\n3_1,3,1,1,1,"{TREFOIL_PD}",nan\n')
        args = ["census-scan", "--in", str(census), "--out-dir", str(tmp_path / "out")]
        assert run(args) == 1
        assert "CsvError: line 2:" in capsys.readouterr().err

    @patch("cli.run_census")
    def test_validation_error(self, mock_run_census, tmp_path, capsys):
        """Test that a pydantic validation failure is reported with exit status 1"""
        mock_run_census.side_effect = lambda *args, **kwargs: CensusRecord()
        args = ["census-scan", "--in", str(CENSUS_FIXTURE), "--out-dir", str(tmp_path)]
        assert run(args) == 1
        assert "ValidationError" in capsys.readouterr().err

    def test_parser_defaults(self):
        """Test parsed defaults of census-scan"""
        args = build_parser().parse_args(["census-scan", "--in", "a.csv", "--out-dir", "out"])
        assert args.input == "a.csv"
        assert args.ti is None
        assert args.jobs is None
        assert args.format == "text"


class TestServeCommand:
    """Test cases for the serve subcommand"""

    @patch("cli.uvicorn.run")
    def test_serve(self, mock_run, capsys):
        """Test that serve starts uvicorn on the requested port and prints nothing"""
        assert run(["serve", "--port", "9001"]) == 0
        mock_run.assert_called_once_with("main:app", host="0.0.0.0", port=9001)
        assert capsys.readouterr().out == ""
