"""End-to-end tests of the command-line interface.

Everything runs in-process through ``main(argv)`` so exit codes and
stdout/stderr can be asserted exactly.
"""

import json

import pytest

from lapcomp import UnivariateRationalGF, series_expand
from lapcomp.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGf:
    def test_specialized_text(self, capsys):
        code, out, _ = run(
            capsys, "gf", "--family", "leafed_cycle:3", "--spec", "first"
        )
        assert code == 0
        assert out.strip() == "(1 + q + 2q^2 + q^3 + 2q^4 + q^5 + q^6)/(1 - q^3)^3"

    def test_specialized_json_round_trips(self, capsys):
        code, out, _ = run(
            capsys, "gf", "--family", "leafed_cycle:3", "--spec", "first",
            "--json",
        )
        assert code == 0
        gf = UnivariateRationalGF.from_json_dict(json.loads(out))
        assert series_expand(gf, 5) == [1, 1, 2, 4, 5, 7]

    def test_multivariate_json(self, capsys):
        code, out, _ = run(
            capsys, "gf", "--family", "cycle:3", "--minor", "0", "--json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["numerator"] == [["0", "0"], ["1", "1"], ["2", "2"]]
        assert all(isinstance(e["mult"], str) for e in data["denominator"])

    def test_requires_exactly_one_source(self, capsys):
        code, _, err = run(capsys, "gf", "--family", "path:3", "--file", "x")
        assert code == 2 and "exactly one" in err
        code, _, err = run(capsys, "gf")
        assert code == 2 and "exactly one" in err

    def test_unknown_family(self, capsys):
        code, _, err = run(capsys, "gf", "--family", "torus:3")
        assert code == 2 and "unknown family" in err

    def test_minor_out_of_range(self, capsys):
        code, _, err = run(capsys, "gf", "--family", "path:3", "--minor", "7")
        assert code == 2 and "out of range" in err

    def test_file_input(self, capsys, tmp_path):
        f = tmp_path / "leafed3.txt"
        f.write_text("# leafed 3-cycle\n4\n0 1\n1 2\n0 2\n0 3\n")
        code_file, out_file, _ = run(
            capsys, "gf", "--file", str(f), "--spec", "first"
        )
        code_fam, out_fam, _ = run(
            capsys, "gf", "--family", "leafed_cycle:3", "--spec", "first"
        )
        assert code_file == code_fam == 0
        assert out_file == out_fam

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "gf", "--file", str(tmp_path / "no.txt"))
        assert code == 2 and err.startswith("error:")

    def test_disconnected_file(self, capsys, tmp_path):
        f = tmp_path / "dis.txt"
        f.write_text("4\n0 1\n2 3\n")
        code, _, err = run(capsys, "gf", "--file", str(f))
        assert code == 2 and "not connected" in err


class TestSeries:
    def test_family_route(self, capsys):
        code, out, _ = run(
            capsys, "series", "--family", "leafed_cycle:3", "--spec", "first",
            "--order", "8",
        )
        assert code == 0
        assert out.strip() == "[1, 1, 2, 4, 5, 7, 10, 12, 15]"

    def test_json_coefficients_are_strings(self, capsys):
        code, out, _ = run(
            capsys, "series", "--family", "path:3", "--order", "4", "--json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["order"] == "4"
        assert all(isinstance(c, str) for c in data["coefficients"])

    def test_file_route(self, capsys, tmp_path):
        _, gf_json, _ = run(
            capsys, "gf", "--family", "leafed_cycle:3", "--spec", "first",
            "--json",
        )
        f = tmp_path / "gf.json"
        f.write_text(gf_json)
        code, out, _ = run(
            capsys, "series", "--file", str(f), "--order", "8"
        )
        assert code == 0
        assert out.strip() == "[1, 1, 2, 4, 5, 7, 10, 12, 15]"

    def test_bad_json_file(self, capsys, tmp_path):
        f = tmp_path / "bad.json"
        f.write_text('{"numerator": "oops"}')
        code, _, err = run(capsys, "series", "--file", str(f), "--order", "3")
        assert code == 2 and err.startswith("error:")

    def test_negative_order(self, capsys):
        code, _, err = run(
            capsys, "series", "--family", "path:3", "--order", "-1"
        )
        assert code == 2 and "order" in err

    def test_requires_exactly_one_source(self, capsys):
        code, _, err = run(capsys, "series", "--order", "3")
        assert code == 2 and "exactly one" in err


class TestCheck:
    def test_cyclic(self, capsys):
        code, out, _ = run(capsys, "check", "cyclic", "3", "12")
        assert code == 0
        assert "13/13 match" in out
        assert "MISMATCH" not in out

    def test_cyclic_json(self, capsys):
        code, out, _ = run(capsys, "check", "cyclic", "4", "6", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["all_match"] is True
        assert data["rows"][0]["lhs"] == "1"

    def test_cyclic_wrong_arity(self, capsys):
        code, _, err = run(capsys, "check", "cyclic", "3")
        assert code == 2 and "parameter" in err

    def test_near_symmetry(self, capsys):
        code, out, _ = run(capsys, "check", "near_symmetry", "2")
        assert code == 0
        assert "verdict: False" in out
        assert "numerator-level identity holds: True" in out

    def test_reflexive_positive(self, capsys):
        code, out, _ = run(capsys, "check", "reflexive", "3")
        assert code == 0
        assert "reflexive=True" in out and "agrees" in out

    def test_reflexive_negative_is_still_exit_zero(self, capsys):
        code, out, _ = run(capsys, "check", "reflexive", "8")
        assert code == 0
        assert "reflexive=False" in out

    def test_reflexive_disagreement_is_exit_one(self, capsys, monkeypatch):
        import lapcomp.cli as cli_mod

        monkeypatch.setattr(
            cli_mod, "reflexivity_by_interior_counts",
            lambda *a, **k: False,
        )
        code, _, err = run(capsys, "check", "reflexive", "3")
        assert code == 1 and "disagree" in err

    def test_tree_equivalence(self, capsys):
        code, out, _ = run(capsys, "check", "tree_equivalence", "11", "25")
        assert code == 0
        assert "25 random trees: all identities hold" in out

    def test_tree_equivalence_failure_is_exit_one(self, capsys, monkeypatch):
        import lapcomp.cli as cli_mod

        monkeypatch.setattr(
            cli_mod, "verify_tree_identities",
            lambda t, leaf: ["forced failure"],
        )
        code, out, _ = run(capsys, "check", "tree_equivalence", "1", "2")
        assert code == 1
        assert "forced failure" in out

    def test_unknown_target_rejected_by_parser(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["check", "everything"])
        assert exc.value.code == 2

    def test_non_integer_params_rejected(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["check", "cyclic", "three", "12"])
        assert exc.value.code == 2


class TestEhrhart:
    def test_reflexive_case_json(self, capsys):
        code, out, _ = run(capsys, "ehrhart", "3", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["h_star"] == ["1", "1", "1"]
        assert data["dilate_counts"] == ["1", "4", "10"]
        assert data["palindromic"] is True
        assert data["reflexive"] is True
        assert data["normal_up_to"] == "2"

    def test_non_reflexive_case(self, capsys):
        code, out, _ = run(capsys, "ehrhart", "4", "--normal-m", "0")
        assert code == 0
        assert "h*: [1, 6, 9, 0]" in out
        assert "reflexive=False" in out
        assert "normal up to" not in out

    def test_normality_skip_in_json(self, capsys):
        code, out, _ = run(capsys, "ehrhart", "3", "--normal-m", "0", "--json")
        assert code == 0
        assert json.loads(out)["normal_up_to"] is None

    def test_too_small(self, capsys):
        code, _, err = run(capsys, "ehrhart", "2")
        assert code == 2 and err.startswith("error:")


class TestFpp:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "fpp", "--family", "cycle:3", "--minor", "0")
        assert code == 0
        assert out.splitlines() == [
            "determinant 3, 3 lattice points",
            "digits [0, 0] -> point [0, 0]",
            "digits [1, 1] -> point [1, 1]",
            "digits [2, 2] -> point [2, 2]",
        ]

    def test_json(self, capsys):
        code, out, _ = run(
            capsys, "fpp", "--family", "cycle:3", "--minor", "0", "--json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["determinant"] == "3"
        assert data["points"][1] == {"digits": ["1", "1"], "point": ["1", "1"]}

    def test_oversized_instance(self, capsys):
        code, _, err = run(capsys, "fpp", "--family", "complete:6")
        assert code == 2
        assert "budget" in err and "2821109907456" in err


class TestTreeInverse:
    def test_default_leaf(self, capsys):
        code, out, _ = run(capsys, "tree-inverse", "--family", "path:4")
        assert code == 0
        assert out.splitlines() == [
            "leaf 3, vertex order [0, 1, 2]",
            "3 2 1",
            "2 2 1",
            "1 1 1",
        ]

    def test_json(self, capsys):
        code, out, _ = run(
            capsys, "tree-inverse", "--family", "kary:2,2", "--minor", "0",
            "--json",
        )
        assert code == 0
        data = json.loads(out)
        assert data["leaf"] == "0"
        assert data["vertices"] == ["1", "2", "3"]

    def test_non_tree_rejected(self, capsys):
        code, _, err = run(capsys, "tree-inverse", "--family", "cycle:4")
        assert code == 2 and "not a tree" in err

    def test_internal_vertex_rejected(self, capsys):
        code, _, err = run(
            capsys, "tree-inverse", "--family", "path:4", "--minor", "1"
        )
        assert code == 2


class TestBudgetsAndThreads:
    def test_budget_flag(self, capsys):
        code, _, err = run(
            capsys, "fpp", "--family", "cycle:4", "--minor", "0",
            "--budget", "5",
        )
        assert code == 2 and "budget" in err

    def test_env_budget(self, capsys, monkeypatch):
        monkeypatch.setenv("LAPCOMP_BUDGET", "5")
        code, _, err = run(capsys, "fpp", "--family", "cycle:4", "--minor", "0")
        assert code == 2 and "budget is 5" in err

    def test_flag_overrides_env(self, capsys, monkeypatch):
        monkeypatch.setenv("LAPCOMP_BUDGET", "5")
        code, _, _ = run(
            capsys, "fpp", "--family", "cycle:4", "--minor", "0",
            "--budget", "100",
        )
        assert code == 0

    def test_invalid_env_budget(self, capsys, monkeypatch):
        monkeypatch.setenv("LAPCOMP_BUDGET", "banana")
        code, _, err = run(capsys, "fpp", "--family", "cycle:3", "--minor", "0")
        assert code == 2

    def test_nonpositive_budgets(self, capsys, monkeypatch):
        code, _, err = run(
            capsys, "fpp", "--family", "cycle:3", "--minor", "0",
            "--budget", "0",
        )
        assert code == 2 and "positive" in err
        monkeypatch.setenv("LAPCOMP_BUDGET", "-3")
        code, _, err = run(capsys, "fpp", "--family", "cycle:3", "--minor", "0")
        assert code == 2 and "positive" in err

    def test_threads_accepted_but_validated(self, capsys):
        code, out, _ = run(
            capsys, "series", "--family", "path:3", "--order", "3",
            "--threads", "4",
        )
        assert code == 0
        code, _, err = run(
            capsys, "series", "--family", "path:3", "--order", "3",
            "--threads", "0",
        )
        assert code == 2 and "thread count" in err
