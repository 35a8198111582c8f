import json

import pytest

from sproutsym.cli import run
from sproutsym.seeds import seed_by_name
from sproutsym.series import dump_seed_series


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExpand:
    def test_h_table_row_three(self, capsys):
        code, out, _ = invoke(
            capsys,
            "expand", "--seed", "secsqrt", "--n", "3", "--basis", "h",
            "--scale", "fact2n", "--format", "text",
        )
        assert code == 0
        assert out.strip() == "h[1,1,1] + 12·h[2,1] + 48·h[3]"

    def test_elementary_row(self, capsys):
        code, out, _ = invoke(
            capsys, "expand", "--seed", "one_plus_t", "--n", "5", "--basis", "e"
        )
        assert code == 0
        assert out.strip() == "e[5]"

    def test_h_table_row_four_follows_table_order(self, capsys):
        _, out, _ = invoke(
            capsys,
            "expand", "--seed", "secsqrt", "--n", "4", "--basis", "h",
            "--scale", "fact2n",
        )
        assert out.strip() == (
            "h[1,1,1,1] + 24·h[2,1,1] + 256·h[3,1] + 16·h[2,2] + 1088·h[4]"
        )

    def test_negative_coefficients_render(self, capsys):
        _, out, _ = invoke(
            capsys, "expand", "--seed", "one_plus_t", "--n", "2", "--basis", "h"
        )
        assert out.strip() == "h[1,1] - h[2]"

    def test_json_round_trips_byte_identically(self, capsys):
        _, out, _ = invoke(
            capsys,
            "expand", "--seed", "secsqrt", "--n", "4", "--basis", "s",
            "--format", "json",
        )
        line = out.strip()
        assert json.dumps(json.loads(line)) == line
        obj = json.loads(line)
        assert obj["basis"] == "s"
        partitions = [tuple(t["partition"]) for t in obj["terms"]]
        assert partitions == sorted(partitions, reverse=True)  # reverse-lex

    def test_latex(self, capsys):
        _, out, _ = invoke(
            capsys,
            "expand", "--seed", "secsqrt", "--n", "2", "--basis", "h",
            "--scale", "fact2n", "--format", "latex",
        )
        assert out.strip() == "h_{1}^{2} + 4 h_{2}"

    def test_file_seed(self, capsys, tmp_path):
        path = tmp_path / "seed.json"
        path.write_text(dump_seed_series(seed_by_name("geom", 6).a))
        code, out, _ = invoke(
            capsys, "expand", "--seed", f"file:{path}", "--n", "3", "--basis", "h"
        )
        assert code == 0
        assert out.strip() == "h[3]"

    def test_determinism(self, capsys):
        argv = ["expand", "--seed", "qfn", "--n", "5", "--basis", "s", "--format", "json"]
        _, first, _ = invoke(capsys, *argv)
        _, second, _ = invoke(capsys, *argv)
        assert first == second


class TestSeedsListing:
    def test_catalog_names_present(self, capsys):
        code, out, _ = invoke(capsys, "seeds", "list")
        assert code == 0
        for name in ("one_plus_t", "geom", "qfn", "exp", "subset_exp", "secsqrt",
                     "l_genus", "ahat", "file"):
            assert name in out


class TestVerify:
    @pytest.mark.parametrize(
        "suite,nmax",
        [
            ("rp", "3"),
            ("m-expansion", "3"),
            ("schur-skew", "4"),
            ("uio", "2"),
            ("h-specials", "4"),
            ("omega", "4"),
            ("routes", "4"),
            ("kronecker", "3"),
        ],
    )
    def test_suites_pass(self, capsys, suite, nmax):
        code, out, _ = invoke(capsys, "verify", "--suite", suite, "--nmax", nmax)
        assert code == 0
        assert "FAIL" not in out

    def test_jobs_flag_keeps_output_identical(self, capsys):
        _, serial, _ = invoke(capsys, "verify", "--suite", "rp", "--nmax", "3")
        _, threaded, _ = invoke(
            capsys, "verify", "--suite", "rp", "--nmax", "3", "--jobs", "4"
        )
        assert serial == threaded


class TestPositivityCommand:
    def test_minor_report(self, capsys):
        code, out, _ = invoke(
            capsys,
            "positivity", "--seed", "secsqrt", "--minor-order", "3", "--degree", "6",
        )
        assert code == 0
        obj = json.loads(out.strip())
        assert obj["passed"] is True
        assert json.dumps(obj) == out.strip()

    def test_with_basis_sweep(self, capsys):
        code, out, _ = invoke(
            capsys,
            "positivity", "--seed", "secsqrt", "--minor-order", "2", "--degree", "4",
            "--basis", "h", "--nmax", "4",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 2
        assert json.loads(lines[1])["passed"] is True

    def test_decimated(self, capsys):
        code, out, _ = invoke(
            capsys,
            "positivity", "--seed", "secsqrt", "--minor-order", "2", "--degree", "4",
            "--decimate", "2",
        )
        assert code == 0
        assert "submatrix" in json.loads(out.strip())["note"]


class TestSpecialCommand:
    def test_sn(self, capsys):
        code, out, _ = invoke(
            capsys, "special", "--seed", "secsqrt", "--op", "sn", "--nmax", "3"
        )
        assert code == 0
        assert out.strip() == "1, 1/2, 5/24, 61/720"

    def test_hpair(self, capsys):
        code, out, _ = invoke(
            capsys, "special", "--seed", "secsqrt", "--op", "hpair", "--i", "2", "--j", "1"
        )
        assert code == 0
        assert out.strip() == "1/60"

    def test_hooks_json(self, capsys):
        code, out, _ = invoke(
            capsys,
            "special", "--seed", "secsqrt", "--op", "hooks", "--n", "2",
            "--format", "json",
        )
        assert code == 0
        assert json.loads(out.strip()) == ["5/24", "1/24"]

    def test_ones(self, capsys):
        code, out, _ = invoke(
            capsys,
            "special", "--seed", "geom", "--op", "ones", "--k", "3", "--nmax", "3",
        )
        assert code == 0
        assert out.strip() == "1, 3, 6, 10"

    def test_hk(self, capsys):
        code, out, _ = invoke(
            capsys, "special", "--seed", "geom", "--op", "hk", "--k", "1", "--nmax", "4"
        )
        assert code == 0
        assert out.strip() == "1, 1, 0, 0, 0"


class TestOracleCommand:
    def test_rho(self, capsys):
        code, out, _ = invoke(capsys, "oracle", "--op", "rho", "--partition", "5,3,1,1")
        assert code == 0
        assert out.strip() == "(12,7,6,3,2)/(4,3,2,1)"

    def test_rp_hist(self, capsys):
        code, out, _ = invoke(capsys, "oracle", "--op", "rp-hist", "--n", "2")
        assert code == 0
        assert out.splitlines() == ["2  2", "1,1  3", "total  5"]

    def test_alt_and_cyc(self, capsys):
        assert invoke(capsys, "oracle", "--op", "alt-count", "--n", "4")[1].strip() == "5"
        assert invoke(capsys, "oracle", "--op", "cyc-alt", "--n", "2")[1].strip() == "4"

    def test_piecewise(self, capsys):
        code, out, _ = invoke(
            capsys, "oracle", "--op", "piecewise", "--partition", "1,1"
        )
        assert code == 0
        assert out.strip() == "6"

    def test_syt(self, capsys):
        code, out, _ = invoke(
            capsys, "oracle", "--op", "syt", "--outer", "3,2", "--inner", "1"
        )
        assert out.strip() == "5"
        code, out, _ = invoke(
            capsys, "oracle", "--op", "syt", "--outer", "3,2", "--inner", "1", "--brute"
        )
        assert out.strip() == "5"

    def test_uio(self, capsys):
        code, out, _ = invoke(capsys, "oracle", "--op", "uio", "--n", "2")
        assert code == 0
        obj = json.loads(out.strip())
        assert obj["terms"][0] == {"partition": [2], "coeff": "5/1"}

    def test_claw_check(self, capsys):
        code, out, _ = invoke(capsys, "oracle", "--op", "claw-check")
        assert code == 0
        assert "negative Schur coefficient" in out
        assert "[2,2] = -1" in out


class TestExitCodes:
    def test_usage_error_unknown_seed(self, capsys):
        code, _, err = invoke(
            capsys, "expand", "--seed", "mystery", "--n", "2", "--basis", "m"
        )
        assert code == 2
        assert "usage error" in err

    def test_usage_error_bad_flag(self, capsys):
        code, _, _ = invoke(capsys, "expand", "--seed", "geom", "--n", "2")
        assert code == 2

    def test_usage_error_missing_file(self, capsys):
        code, _, _ = invoke(
            capsys, "expand", "--seed", "file:/does/not/exist", "--n", "2", "--basis", "m"
        )
        assert code == 2

    def test_budget_error(self, capsys):
        code, _, err = invoke(capsys, "oracle", "--op", "rp-hist", "--n", "7")
        assert code == 3
        assert "budget" in err

    def test_precision_error_from_file(self, capsys, tmp_path):
        path = tmp_path / "short.json"
        path.write_text(dump_seed_series(seed_by_name("geom", 2).a))
        code, _, _ = invoke(
            capsys, "expand", "--seed", f"file:{path}", "--n", "5", "--basis", "m"
        )
        assert code == 3
