import json

import pytest
from click.testing import CliRunner

from cyclebetti.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def combined_output(result):
    try:
        return result.output + result.stderr
    except ValueError:
        return result.output


class TestTable:
    def test_pentagon_csv(self, runner):
        result = runner.invoke(main, ["table", "--n", "5", "--format", "csv"])
        assert result.exit_code == 0
        assert result.output == "i,j,betti,syt\n0,0,1,\n1,2,5,5\n2,3,5,5\n3,5,1,\n"

    def test_square_csv(self, runner):
        result = runner.invoke(main, ["table", "--n", "4", "--format", "csv"])
        assert result.exit_code == 0
        assert result.output == "i,j,betti,syt\n0,0,1,\n1,2,2,2\n2,4,1,\n"

    def test_pentagon_text_has_header_and_rows(self, runner):
        result = runner.invoke(main, ["table", "--n", "5"])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0].split() == ["i", "j", "betti", "syt"]
        assert lines[1].split() == ["0", "0", "1", "-"]
        assert lines[2].split() == ["1", "2", "5", "5"]

    def test_json_round_trips(self, runner):
        result = runner.invoke(main, ["table", "--n", "5", "--format", "json"])
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc == {
            "n": 5,
            "entries": [
                {"i": 0, "j": 0, "betti": 1, "syt": None},
                {"i": 1, "j": 2, "betti": 5, "syt": 5},
                {"i": 2, "j": 3, "betti": 5, "syt": 5},
                {"i": 3, "j": 5, "betti": 1, "syt": None},
            ],
        }

    @pytest.mark.parametrize("n", ["3", "21", "-1"])
    def test_out_of_range_size_is_usage_error(self, runner, n):
        result = runner.invoke(main, ["table", "--n", n])
        assert result.exit_code == 2

    def test_deterministic(self, runner):
        first = runner.invoke(main, ["table", "--n", "6", "--format", "json"])
        second = runner.invoke(main, ["table", "--n", "6", "--format", "json"])
        assert first.output == second.output


class TestMapUnmap:
    def test_map_known(self, runner):
        result = runner.invoke(main, ["map", "1,2;3,4;5"])
        assert result.exit_code == 0
        assert result.output == "{2,4}|4\n"

    def test_map_invalid_filling_names_invariant(self, runner):
        result = runner.invoke(main, ["map", "2,1;3,4;5"])
        assert result.exit_code == 2
        assert "increasing" in combined_output(result)

    def test_map_wrong_shape(self, runner):
        result = runner.invoke(main, ["map", "1,2,3;4,5,6"])
        assert result.exit_code == 2

    def test_unmap_known(self, runner):
        result = runner.invoke(
            main, ["unmap", "--n", "6", "--j", "3", "--set", "2,4,6", "--a", "6"]
        )
        assert result.exit_code == 0
        assert result.output == "1,2,4;3,6;5\n"

    def test_unmap_inadmissible_marker(self, runner):
        result = runner.invoke(
            main, ["unmap", "--n", "6", "--j", "3", "--set", "2,4,6", "--a", "2"]
        )
        assert result.exit_code == 2
        assert "admissible" in combined_output(result)

    def test_unmap_rejects_bad_set_syntax(self, runner):
        result = runner.invoke(
            main, ["unmap", "--n", "6", "--j", "3", "--set", "2,x,6", "--a", "4"]
        )
        assert result.exit_code == 2

    @pytest.mark.parametrize("text", ["1,2;3,4;5", "1,3;2,4;5", "1,4;2,5;3"])
    def test_unmap_inverts_map(self, runner, text):
        mapped = runner.invoke(main, ["map", text]).output.strip()
        vertices, marker = mapped.split("|")
        result = runner.invoke(
            main,
            ["unmap", "--n", "5", "--j", "2", "--set", vertices.strip("{}"), "--a", marker],
        )
        assert result.output.strip() == text


class TestVerify:
    def test_range_passes(self, runner):
        result = runner.invoke(main, ["verify", "--n", "4..6"])
        assert result.exit_code == 0
        assert "all checks passed" in result.output

    def test_single_size_json(self, runner):
        result = runner.invoke(main, ["verify", "--n", "5", "--format", "json"])
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["passed"] is True
        assert [(r["n"], r["j"], r["tableaux"], r["marked"]) for r in doc["results"]] == [
            (5, 2, 5, 5),
            (5, 3, 5, 5),
        ]

    def test_csv_header(self, runner):
        result = runner.invoke(main, ["verify", "--n", "4", "--format", "csv"])
        assert result.exit_code == 0
        assert result.output.splitlines()[0] == "n,j,tableaux,marked,bijection,duality"

    @pytest.mark.parametrize("range_text", ["3", "15", "8..5", "abc", "4..x"])
    def test_bad_ranges_are_usage_errors(self, runner, range_text):
        result = runner.invoke(main, ["verify", "--n", range_text])
        assert result.exit_code == 2


class TestSyt:
    def test_lists_pentagon_family_in_canonical_order(self, runner):
        result = runner.invoke(main, ["syt", "--n", "5", "--j", "2"])
        assert result.exit_code == 0
        assert result.output.splitlines() == [
            "1,2;3,4;5",
            "1,2;3,5;4",
            "1,3;2,4;5",
            "1,3;2,5;4",
            "1,4;2,5;3",
        ]

    def test_count_only_prints_both_oracles(self, runner):
        result = runner.invoke(main, ["syt", "--n", "6", "--j", "3", "--count-only"])
        assert result.exit_code == 0
        assert result.output == "16 16\n"

    def test_count_only_square(self, runner):
        result = runner.invoke(main, ["syt", "--n", "4", "--j", "2", "--count-only"])
        assert result.output == "2 2\n"

    def test_count_only_json(self, runner):
        result = runner.invoke(
            main, ["syt", "--n", "5", "--j", "2", "--count-only", "--format", "json"]
        )
        assert json.loads(result.output) == {
            "n": 5,
            "j": 2,
            "enumerated": 5,
            "hook_length": 5,
        }

    @pytest.mark.parametrize("args", [["--n", "5", "--j", "4"], ["--n", "3", "--j", "2"]])
    def test_out_of_range_is_usage_error(self, runner, args):
        result = runner.invoke(main, ["syt", *args])
        assert result.exit_code == 2
