import json

import pytest

from src.cli.main import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, add_approx, build_parser, render_text, run

SQRT5 = {"p": 5, "modulus": "-5,0,1", "certificate": {"kind": "eisenstein"}}
TABLE4 = {"kind": "table", "n": 4, "values": {"0": "0", "1": "2", "2": "2", "3": "2"}}


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def last_error(err):
    return json.loads(err.strip().splitlines()[-1])


class TestGoldenOutput:
    def test_vp(self, capsys):
        code, out, _ = call(capsys, "vp", "50", "--p", "5")
        assert code == EXIT_OK
        assert out == '{"valuation":"2"}\n'

    def test_vp_of_zero(self, capsys):
        _, out, _ = call(capsys, "vp", "0", "--p", "5")
        assert out == '{"valuation":"inf"}\n'

    def test_norm(self, capsys):
        _, out, _ = call(capsys, "norm", "7", "--p", "5")
        assert out == '{"magnitude":{"factors":{}}}\n'
        _, out, _ = call(capsys, "norm", "75/8", "--p", "5")
        assert out == '{"magnitude":{"factors":{"5":"-2"}}}\n'

    def test_ext_norm(self, capsys, write_json):
        path = write_json("ext.json", SQRT5)
        code, out, _ = call(capsys, "ext-norm", "--ext", path, "--element", "0,1")
        assert code == EXIT_OK
        assert out == '{"magnitude":{"factors":{"5":"-1/2"}}}\n'

    def test_deterministic(self, capsys, write_json):
        path = write_json("ext.json", SQRT5)
        _, first, _ = call(capsys, "basis-norm", "--ext", path, "--element", "1/5,1")
        _, second, _ = call(capsys, "basis-norm", "--ext", path, "--element", "1/5,1")
        assert first == second
        assert json.loads(first) == {"bound": {"factors": {}}, "magnitude": {"factors": {"5": "1"}}}


class TestSubcommands:
    def test_spectral_value(self, capsys):
        _, out, _ = call(capsys, "spectral-value", "--poly", "5,-7,1", "--p", "5")
        assert json.loads(out) == {"magnitude": {"factors": {}}}

    def test_newton(self, capsys):
        _, out, _ = call(capsys, "newton", "--poly", "5,-7,1", "--p", "5")
        data = json.loads(out)
        assert data["vertices"] == [[0, "1"], [1, "0"], [2, "0"]]
        assert data["root_magnitudes"] == [{"factors": {"5": "-1"}}, {"factors": {}}]

    def test_galois_norm(self, capsys, write_json):
        path = write_json("ext.json", SQRT5)
        code, out, _ = call(capsys, "galois-norm", "--ext", path, "--element", "0,1", "--aut", "0,-1")
        assert code == EXIT_OK
        assert json.loads(out) == {"magnitude": {"factors": {"5": "-1/2"}}}

    def test_smooth(self, capsys, write_json):
        path = write_json("padic.json", {"kind": "padic", "p": 5})
        _, out, _ = call(capsys, "smooth", "--seminorm", path, "--element", "75/8")
        data = json.loads(out)
        assert data["limit"] == {"factors": {"5": "-2"}}
        assert data["estimate"]["stabilized"] is True
        _, out, _ = call(capsys, "smooth", "--seminorm", path, "--element", "5", "--n", "3")
        assert json.loads(out) == {"term": {"factors": {"5": "-1"}}}

    def test_smooth_scaled_not_stabilized(self, capsys, write_json):
        path = write_json("scaled.json", {"kind": "scaled", "c": 2, "p": 5})
        code, out, _ = call(capsys, "smooth", "--seminorm", path, "--element", "5", "--max-n", "64")
        assert code == EXIT_OK
        data = json.loads(out)
        assert "limit" not in data
        low, high = data["estimate"]["float_bracket"]
        assert low <= 0.2 + 1e-9 and abs(high - 0.2) < 0.01

    def test_from_const(self, capsys, write_json):
        path = write_json("maxpow.json", {"kind": "max_pow", "p": 5, "k": 2})
        _, out, _ = call(capsys, "from-const", "--seminorm", path, "--element", "5", "--y", "1/5")
        assert json.loads(out)["limit"] == {"factors": {"5": "-2"}}

    def test_from_bounded_table(self, capsys, write_json):
        path = write_json("table.json", TABLE4)
        _, out, _ = call(capsys, "from-bounded", "--seminorm", path)
        assert json.loads(out) == {"table": {
            "0": {"zero": True}, "1": {"factors": {}}, "2": {"factors": {}}, "3": {"factors": {}},
        }}
        _, out, _ = call(capsys, "from-bounded", "--seminorm", path, "--element", "2")
        assert json.loads(out) == {"magnitude": {"factors": {}}}

    def test_check(self, capsys, write_json):
        seminorm = write_json("padic.json", {"kind": "padic", "p": 5})
        samples = write_json("samples.json", [0, 1, 5, "75/8", -25])
        code, out, _ = call(capsys, "check", "--seminorm", seminorm, "--samples", samples,
                            "--profile", "norm,NONARCH,MULT")
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["passed"] is True and data["samples"] == 5

    def test_check_reports_witness(self, capsys, write_json):
        seminorm = write_json("basis.json", {"kind": "basis", "ext": SQRT5})
        samples = write_json("samples.json", ["1", "0,1"])
        code, out, _ = call(capsys, "check", "--seminorm", seminorm, "--samples", samples, "--profile", "POW_MUL")
        assert code == EXIT_OK
        verdict = json.loads(out)["axioms"]["POW_MUL"]
        assert verdict["passed"] is False
        assert verdict["witness"] == [["0", "1"], 2]

    def test_check_random_samples(self, capsys, write_json):
        seminorm = write_json("padic.json", {"kind": "padic", "p": 3})
        code, out, _ = call(capsys, "check", "--seminorm", seminorm, "--profile", "VALUATION")
        assert code == EXIT_OK
        assert json.loads(out)["samples"] == 22


class TestNegativeValues:
    def test_polynomial_with_negative_constant(self, capsys):
        code, out, _ = call(capsys, "spectral-value", "--p", "5", "--poly", "-5,0,1")
        assert code == EXIT_OK
        assert out == '{"magnitude":{"factors":{"5":"-1/2"}}}\n'
        code, out, _ = call(capsys, "newton", "--poly", "-5,0,1", "--p", "5")
        assert code == EXIT_OK
        assert json.loads(out)["root_magnitudes"] == [{"factors": {"5": "-1/2"}}] * 2

    def test_negative_rational_positional(self, capsys):
        code, out, _ = call(capsys, "vp", "--p", "5", "-75/8")
        assert code == EXIT_OK
        assert out == '{"valuation":"2"}\n'
        _, out, _ = call(capsys, "norm", "-3", "--p", "3")
        assert out == '{"magnitude":{"factors":{"3":"-1"}}}\n'

    def test_element_with_negative_coefficient(self, capsys, write_json):
        # -1 + α 的特征多项式为 X² + 2X - 4
        path = write_json("ext.json", SQRT5)
        code, out, _ = call(capsys, "ext-norm", "--ext", path, "--element", "-1,1")
        assert code == EXIT_OK
        assert out == '{"magnitude":{"factors":{}}}\n'

    def test_unknown_option_still_rejected(self, capsys):
        code, _, err = call(capsys, "vp", "50", "--p", "5", "-x")
        assert code == EXIT_USAGE
        assert last_error(err)["error"] == "parse"


class TestOutputModes:
    def test_approx(self, capsys):
        _, out, _ = call(capsys, "norm", "5", "--p", "5", "--approx")
        data = json.loads(out)["magnitude"]
        assert data["factors"] == {"5": "-1"}
        assert data["approx"] == pytest.approx(0.2)

    def test_no_json(self, capsys):
        _, out, _ = call(capsys, "norm", "5", "--p", "5", "--no-json")
        assert out.startswith("magnitude: 5^-1 ≈ 0.2")

    def test_helpers(self):
        assert add_approx({"a": [{"zero": True}]}) == {"a": [{"zero": True, "approx": 0.0}]}
        assert render_text({"valuation": "2"}) == ["valuation: 2"]


class TestErrors:
    def test_non_prime(self, capsys):
        code, out, err = call(capsys, "vp", "50", "--p", "4")
        assert code == EXIT_USAGE
        assert out == ""
        assert last_error(err)["error"] == "input"

    def test_missing_flag(self, capsys):
        code, _, err = call(capsys, "vp", "50")
        assert code == EXIT_USAGE
        assert last_error(err)["error"] == "parse"

    def test_unknown_command(self, capsys):
        code, _, err = call(capsys, "frobnicate")
        assert code == EXIT_USAGE
        assert last_error(err)["error"] == "parse"

    def test_bad_polynomial(self, capsys):
        code, _, err = call(capsys, "spectral-value", "--poly", "1,zz", "--p", "5")
        assert code == EXIT_USAGE
        assert last_error(err)["error"] == "parse"

    def test_non_prime_descriptor(self, capsys, write_json):
        path = write_json("ext.json", {**SQRT5, "p": 4})
        code, _, err = call(capsys, "ext-norm", "--ext", path, "--element", "0,1")
        assert code == EXIT_USAGE
        assert last_error(err)["error"] == "parse"

    def test_certificate_failure(self, capsys, write_json):
        path = write_json("ext.json", {"p": 5, "modulus": "-6,0,1", "certificate": {"kind": "eisenstein"}})
        code, _, err = call(capsys, "ext-norm", "--ext", path, "--element", "0,1")
        assert code == EXIT_DOMAIN
        assert last_error(err)["error"] == "certificate"

    def test_precondition_failure(self, capsys, write_json):
        path = write_json("table.json", {"kind": "table", "n": 4, "values": {"0": "0", "1": "1", "2": "3", "3": "1"}})
        code, _, err = call(capsys, "from-bounded", "--seminorm", path)
        assert code == EXIT_DOMAIN
        assert last_error(err)["error"] == "precondition"

    def test_missing_config(self, capsys, tmp_path):
        code, _, err = call(capsys, "vp", "50", "--p", "5", "--config", str(tmp_path / "none.yaml"))
        assert code == EXIT_USAGE
        assert last_error(err)["error"] == "config"

    def test_unsupported_descriptor_format(self, capsys, tmp_path):
        path = tmp_path / "ext.txt"
        path.write_text("p=5", encoding="utf-8")
        code, _, err = call(capsys, "ext-norm", "--ext", str(path), "--element", "0,1")
        assert code == EXIT_USAGE
        assert last_error(err)["error"] == "parse"


def test_parser_lists_subcommands():
    parser = build_parser()
    args = parser.parse_args(["vp", "3", "--p", "3"])
    assert args.command == "vp" and args.as_json
