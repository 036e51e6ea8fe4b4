"""Command-line interface: outputs, JSON round trips, exit codes."""

import io
import json


from cfq.cli import run


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestClassPoly:
    def test_disc_71_text(self):
        code, out, _ = invoke(["class-poly", "-n", "71", "--group", "fricke", "-D", "-71"])
        assert code == 0
        assert out.strip() == "1,0,-2,-3,1,5,4,1"

    def test_disc_284_text(self):
        code, out, _ = invoke(["class-poly", "-n", "71", "--group", "fricke", "-D", "-284"])
        assert code == 0
        assert out.strip() == "-11,4,18,5,-11,-7,0,1"

    def test_json_round_trip(self):
        code, out, _ = invoke(
            ["class-poly", "-n", "71", "--group", "fricke", "-D", "-284", "--json"]
        )
        assert code == 0
        obj = json.loads(out)
        assert json.dumps(obj, indent=2, sort_keys=True) + "\n" == out
        assert obj["class_number"] == 7

    def test_not_genus_zero_exit_code(self):
        code, _, err = invoke(["class-poly", "-n", "11", "--group", "gamma0", "-D", "-44"])
        assert code == 1
        assert "genus" in err

    def test_escalation_failure_exit_code(self):
        code, _, err = invoke(
            ["class-poly", "-n", "71", "--group", "fricke", "-D", "-71",
             "--prec-bits", "600"]
        )
        assert code == 2
        assert "escalation" in err

    def test_missing_data_exit_code(self):
        code, _, err = invoke(["class-poly", "-n", "59", "--group", "fricke", "-D", "-59"])
        assert code == 1


class TestClassGroup:
    def test_text_output(self):
        code, out, _ = invoke(["class-group", "-D", "-284"])
        assert code == 0
        lines = out.strip().splitlines()
        assert "1,0,71" in lines
        assert "h = 7" in lines
        assert len(lines) == 7 + 1 + 7      # forms, h line, table rows

    def test_json(self):
        code, out, _ = invoke(["class-group", "-D", "-71", "--json"])
        obj = json.loads(out)
        assert obj["class_number"] == 7
        assert obj["classes"][0] == "1,1,18"
        assert json.dumps(obj, indent=2, sort_keys=True) + "\n" == out

    def test_bad_disc(self):
        code, _, err = invoke(["class-group", "-D", "-3p"])
        assert code == 1


class TestReps:
    def test_disc_71(self):
        code, out, _ = invoke(["reps", "-n", "71", "-D", "-71"])
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 7
        assert lines[0].startswith("1,-36,2@71")

    def test_json_fields(self):
        code, out, _ = invoke(["reps", "-n", "71", "-D", "-284", "--json"])
        obj = json.loads(out)
        assert obj["representatives"][0]["element"] == "0,-1,1"
        assert obj["representatives"][0]["tau"] == "(0+1*sqrt(-71))/71"


class TestEval:
    def test_fricke_point(self):
        code, out, _ = invoke(
            ["eval", "-n", "71", "--group", "fricke", "--element", "0,-1,1"]
        )
        assert code == 0
        value = float(out.split()[0])
        assert abs(value - 3.0701356) < 1e-5

    def test_invalid_element(self):
        code, _, err = invoke(
            ["eval", "-n", "71", "--group", "fricke", "--element", "1,-36,3"]
        )
        assert code == 1

    def test_json(self):
        code, out, _ = invoke(
            ["eval", "-n", "2", "--group", "fricke", "--element", "0,-1,1", "--json"]
        )
        obj = json.loads(out)
        assert obj["disc"] == -8
        assert obj["value_re"].startswith("152.0")


class TestVerify:
    def test_paper71_suite(self):
        code, out, _ = invoke(["verify", "--paper71"])
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 4
        assert all(line.startswith("PASS") for line in lines)

    def test_requires_flag(self):
        code, _, err = invoke(["verify"])
        assert code == 1


class TestCatalog:
    def test_inventory(self):
        code, out, _ = invoke(["catalog"])
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 52
        assert any("fricke   71  qseries  data present" in line for line in lines)

    def test_json_round_trip(self):
        code, out, _ = invoke(["catalog", "--json"])
        obj = json.loads(out)
        assert json.dumps(obj, indent=2, sort_keys=True) + "\n" == out


class TestParsing:
    def test_unknown_command(self):
        code, _, _ = invoke(["frobnicate"])
        assert code == 1

    def test_missing_required(self):
        code, _, _ = invoke(["class-poly", "-n", "71"])
        assert code == 1
