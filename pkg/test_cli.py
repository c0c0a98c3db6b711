import json
import os
import shutil

import pytest
from click.testing import CliRunner

from commands.tables import golden_path
from config import DEFAULT_GOLDEN_DIR
from main import cli
from models.algebra import AlgebraKind
from models.responses import (
    BettiListing,
    CheckResponse,
    CountResponse,
    DivisorResponse,
    ErrorResponse,
    HilbertListing,
    PartitionIdentityResponse,
    SeriesResponse,
    TablesResponse,
)

EXAMPLE_3_3 = '{"a": [[0, 2]], "b": [[1, 2]]}'


class CliTester:
    def __init__(self, env=None):
        self.runner = CliRunner()
        self.env = {"HILBERT_KIND": "quadratic", "HILBERT_OUTPUT": "text", **(env or {})}

    def run(self, *args, env=None):
        return self.runner.invoke(cli, list(args), env={**self.env, **(env or {})})

    def error_of(self, result) -> ErrorResponse:
        return ErrorResponse.model_validate_json(result.stderr.strip().splitlines()[-1])


@pytest.fixture
def tester():
    return CliTester()


class TestSeries:
    def test_from_epsilon_and_s(self, tester):
        result = tester.run("series", "--kind", "quadratic", "--eps", "2", "--s", "1", "--n-terms", "6")
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "1 3 5 7 9 11 ..."
        assert lines[1] == "epsilon = 2, s(t) = 1, shift = 0, e = 2, gkdim = 2"

    def test_cubic_line(self, tester):
        result = tester.run("series", "--kind", "cubic", "--eps", "1", "--s", "0", "--n-terms", "6")
        assert result.exit_code == 0
        assert result.stdout.splitlines()[0] == "1 1 2 2 3 3 ..."
        assert "e = 1/2" in result.stdout

    def test_from_betti(self, tester):
        result = tester.run("series", "--betti", '{"a": [[0, 1]], "b": [[3, 1]]}')
        assert result.exit_code == 0
        assert result.stdout.startswith("1 3 6 9 12 15 ")
        assert "epsilon = 3, s(t) = 2 + t" in result.stdout

    def test_betti_from_file(self, tester, tmp_path):
        path = tmp_path / "betti.json"
        path.write_text('{"a": [[1, 1], [2, 1], [7, 1]], "b": [[3, 1], [7, 1], [8, 1]]}')
        result = tester.run("series", "--betti", f"@{path}", "--n-terms", "3", "--output", "json")
        assert result.exit_code == 0
        payload = SeriesResponse.model_validate_json(result.stdout)
        assert (payload.offset, payload.coeffs) == (1, [1, 4, 8])
        assert (payload.epsilon, payload.shift, payload.e, payload.gkdim) == (8, 1, "8", 2)

    def test_default_length_comes_from_the_environment(self, tester):
        result = tester.run("series", "--eps", "1", env={"HILBERT_N_TERMS": "4"})
        assert result.stdout.splitlines()[0] == "1 2 3 4 ..."

    def test_needs_exactly_one_input(self, tester):
        result = tester.run("series", "--eps", "2", "--betti", EXAMPLE_3_3)
        assert result.exit_code == 2
        assert tester.error_of(result).error == "usage"
        assert tester.run("series").exit_code == 2

    def test_inadmissible_s(self, tester):
        result = tester.run("series", "--eps", "2", "--s", "3")
        assert result.exit_code == 2
        assert tester.error_of(result).error == "invalid-s-poly"

    def test_unclassifiable_betti(self, tester):
        result = tester.run("series", "--betti", '{"a": [[0, 2]], "b": [[1, 1]]}')
        assert result.exit_code == 2
        assert tester.error_of(result).error == "not-in-image"

    def test_invalid_json(self, tester):
        result = tester.run("series", "--betti", "{not json")
        assert result.exit_code == 2
        assert tester.error_of(result).error == "invalid-json"

    def test_missing_file(self, tester, tmp_path):
        result = tester.run("series", "--betti", f"@{tmp_path / 'missing.json'}")
        assert result.exit_code == 2
        assert tester.error_of(result).error == "unreadable-input"

    def test_n_terms_must_be_positive(self, tester):
        result = tester.run("series", "--eps", "1", "--n-terms", "0")
        assert result.exit_code == 2
        error = tester.error_of(result)
        assert error.error == "invalid-input"
        assert error.detail.startswith("--n-terms:")


class TestCheck:
    def test_cubic_exclusion_fails(self, tester):
        result = tester.run("check", "--kind", "cubic", "--betti", EXAMPLE_3_3, "--critical")
        assert result.exit_code == 1
        assert result.stdout.startswith("FAIL (2)(d) [ladder]: ")

    def test_quadratic_passes(self, tester):
        result = tester.run("check", "--kind", "quadratic", "--betti", EXAMPLE_3_3, "--critical")
        assert result.exit_code == 0
        assert result.stdout == "PASS\n"

    def test_ladder_condition_is_cited(self, tester):
        result = tester.run("check", "--betti", '{"a": [[0, 1]], "b": [[0, 1]]}')
        assert result.exit_code == 1
        assert result.stdout.startswith("FAIL (1)(c) [ladder]: ")

    @pytest.mark.parametrize("form, label", [("q", "q(e)"), ("ab", "ab(e)")])
    def test_other_forms(self, tester, form, label):
        result = tester.run(
            "check", "--kind", "cubic", "--betti", EXAMPLE_3_3, "--critical", "--form", form, "--output", "json"
        )
        assert result.exit_code == 1
        payload = CheckResponse.model_validate_json(result.stdout)
        assert payload.verdict == "FAIL"
        assert payload.violation.condition == label

    def test_shape(self, tester):
        result = tester.run("check", "--betti", '{"a": [[0, 3]], "b": [[1, 3]]}', "--critical", "--shape", "bordered")
        assert result.exit_code == 0
        assert result.stdout.splitlines() == ["PASS", "1 1 1", "1 . 1", ". 1 1"]

    def test_negative_count(self, tester):
        result = tester.run("check", "--betti", '{"a": [[0, -1]], "b": [[1, 1]]}')
        assert result.exit_code == 2
        assert tester.error_of(result).error == "invalid-input"


class TestEnumerateAndCount:
    @pytest.mark.parametrize("kind, expected", [("quadratic", "8"), ("cubic", "7")])
    def test_count_hilbert(self, tester, kind, expected):
        result = tester.run("count", "--kind", kind, "--eps", "4", "--critical", "--mode", "hilbert", "--verify")
        assert result.exit_code == 0
        assert result.stdout.strip() == expected

    def test_count_betti(self, tester):
        result = tester.run("count", "--eps", "4", "--s", "2", "--mode", "betti", "--verify", "--output", "json")
        assert result.exit_code == 0
        payload = CountResponse.model_validate_json(result.stdout)
        assert (payload.count, payload.verified) == (3, True)

    def test_cm_hilbert_count_needs_a_degree_bound(self, tester):
        assert tester.run("count", "--eps", "4").exit_code == 2
        result = tester.run("count", "--eps", "4", "--max-degree", "1")
        assert result.stdout.strip() == "10"

    def test_enumerate_betti(self, tester):
        result = tester.run("enumerate", "--eps", "4", "--s", "2", "--critical", "--mode", "betti")
        assert result.exit_code == 0
        assert result.stdout.splitlines() == [
            "0 → A(-2)^2 → A^2 → M → 0",
            "0 → A(-1) ⊕ A(-2)^2 → A^2 ⊕ A(-1) → M → 0",
        ]

    def test_enumerate_hilbert(self, tester):
        result = tester.run("enumerate", "--eps", "3", "--critical")
        assert result.stdout.splitlines() == ["2 + t", "2", "1", "0"]

    def test_enumerate_json(self, tester):
        hilbert = tester.run("enumerate", "--kind", "cubic", "--eps", "3", "--critical", "--output", "json")
        assert HilbertListing.model_validate_json(hilbert.stdout).polys == [[2, 1], [2], [1]]
        betti = tester.run("enumerate", "--eps", "3", "--s", "2", "--critical", "--mode", "betti", "--output", "json")
        listing = BettiListing.model_validate_json(betti.stdout)
        assert listing.count == 1
        assert listing.resolutions[0].a == ((0, 1), (1, 1))

    def test_betti_mode_needs_s(self, tester):
        result = tester.run("enumerate", "--eps", "3", "--mode", "betti")
        assert result.exit_code == 2

    def test_cap(self, tester):
        result = tester.run("count", "--eps", "4", "--critical", env={"HILBERT_EPS_CAP": "3"})
        assert result.exit_code == 3
        assert tester.error_of(result).error == "cap-exceeded"

    @pytest.mark.parametrize("command", ["count", "enumerate"])
    def test_epsilon_must_be_positive(self, tester, command):
        result = tester.run(command, "--eps", "0", "--critical")
        assert result.exit_code == 2
        assert result.stdout == ""
        assert tester.error_of(result).error == "invalid-epsilon"

    def test_betti_mode_epsilon_must_be_positive(self, tester):
        result = tester.run("count", "--eps", "0", "--s", "", "--mode", "betti")
        assert result.exit_code == 2
        assert tester.error_of(result).error == "invalid-epsilon"

    def test_workers_must_be_positive(self, tester):
        result = tester.run("enumerate", "--eps", "4", "--s", "2", "--critical", "--mode", "betti", "--workers", "0")
        assert result.exit_code == 2
        error = tester.error_of(result)
        assert error.error == "invalid-input"
        assert error.detail.startswith("--workers:")

    def test_output_is_deterministic(self, tester):
        args = ("enumerate", "--eps", "6", "--s", "4,2", "--critical", "--mode", "betti", "--workers", "3")
        assert tester.run(*args).stdout == tester.run(*args).stdout


class TestTables:
    def test_golden_check(self, tester):
        result = tester.run("tables", "--golden-check")
        assert result.exit_code == 0
        assert result.stdout.strip() == "golden tables match"

    def test_text_matches_golden(self, tester):
        result = tester.run("tables", "--kind", "cubic")
        with open(golden_path(DEFAULT_GOLDEN_DIR, AlgebraKind.CUBIC), encoding="utf-8") as handle:
            assert result.stdout == handle.read()

    def test_mismatch_exits_one(self, tester, tmp_path):
        for kind in AlgebraKind:
            shutil.copy(golden_path(DEFAULT_GOLDEN_DIR, kind), tmp_path)
        path = golden_path(str(tmp_path), AlgebraKind.QUADRATIC)
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text.replace("3 + 2t + t^2", "3 + 2t + 1", 1))
        result = tester.run("tables", "--golden-check", env={"HILBERT_GOLDEN_DIR": str(tmp_path)})
        assert result.exit_code == 1
        assert "-  s(t) = 3 + 2t + 1" in result.stdout

    def test_eps_max_must_be_positive(self, tester):
        result = tester.run("tables", "--eps-max", "0")
        assert result.exit_code == 2
        assert tester.error_of(result).error == "invalid-epsilon"

    def test_golden_check_covers_epsilon_four_only(self, tester):
        assert tester.run("tables", "--golden-check", "--eps-max", "3").exit_code == 2

    def test_json(self, tester):
        result = tester.run("tables", "--kind", "quadratic", "--eps-max", "2", "--output", "json")
        payload = TablesResponse.model_validate_json(result.stdout)
        assert [(table.kind, table.epsilon, len(table.rows)) for table in payload.tables] == [
            (AlgebraKind.QUADRATIC, 1, 1),
            (AlgebraKind.QUADRATIC, 2, 2),
        ]
        first = json.loads(result.stdout)["tables"][0]
        assert set(first) == {"kind", "epsilon", "rows"}
        assert {"s", "series", "resolutions"} <= set(first["rows"][0])


class TestPartitionIdentity:
    def test_to_twenty(self, tester):
        result = tester.run("partition-identity")
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert len(lines) == 21
        assert all(line.endswith("PASS") for line in lines[1:])
        assert lines[4].split() == ["4", "8", "8", "PASS"]

    def test_json(self, tester):
        result = tester.run("partition-identity", "--m-max", "4", "--output", "json")
        payload = PartitionIdentityResponse.model_validate_json(result.stdout)
        assert payload.ok
        assert [row.total for row in payload.rows] == [1, 2, 4, 8]


class TestDivisor:
    def test_degree_and_sum(self, tester):
        assert tester.run("divisor", "degree", "--div", "[[0, 0, 1], [1, 1, 2]]").stdout == "3\n"
        assert tester.run("divisor", "sum", "--div", "[[0, 0, 1], [1, 1, 1]]").stdout == "(1, 1)\n"

    def test_equiv(self, tester):
        result = tester.run("divisor", "equiv", "--div", "[[0, 0, 1], [1, 1, 1]]", "--other", "[[1, 0, 1], [0, 1, 1]]")
        assert result.stdout == "true\n"

    def test_shift(self, tester):
        result = tester.run("divisor", "shift", "--div", "[[1, 1, 2]]", "--n", "-1", "--output", "json")
        assert DivisorResponse.model_validate_json(result.stdout).divisor == [[1, 0, 2]]

    def test_add(self, tester):
        result = tester.run(
            "divisor", "add", "--kind", "cubic",
            "--eps", "1", "--div", "[[0, 0, 2]]",
            "--other-eps", "1", "--other", "[[1, 1, 2]]",
        )
        assert result.exit_code == 0
        assert result.stdout == "epsilon = 2, div = 2(0, 0) + 2(1, 1)\n"

    def test_add_kind_mismatch(self, tester):
        result = tester.run(
            "divisor", "add", "--kind", "quadratic",
            "--eps", "1", "--div", "[[0, 0, 3]]",
            "--other-kind", "cubic", "--other-eps", "1", "--other", "[[1, 1, 2]]",
        )
        assert result.exit_code == 2
        assert tester.error_of(result).error == "kind-mismatch"

    def test_quotient(self, tester):
        result = tester.run(
            "divisor", "quotient", "--eps", "1", "--div", "[[0, 0, 1], [1, 0, 1], [2, 0, 1]]", "--point", "0,0"
        )
        assert result.exit_code == 0
        assert result.stdout == "epsilon = 1, div = (0, -3) + (1, 0) + (2, 0)\n"

    def test_quotient_point_outside_support(self, tester):
        result = tester.run("divisor", "quotient", "--eps", "1", "--div", "[[0, 0, 3]]", "--point", "5,5")
        assert result.exit_code == 2
        assert tester.error_of(result).error == "point-not-in-support"

    def test_bad_point(self, tester):
        result = tester.run("divisor", "quotient", "--eps", "1", "--div", "[[0, 0, 3]]", "--point", "origin")
        assert result.exit_code == 2
        assert tester.error_of(result).error == "invalid-point"

    def test_wrong_degree(self, tester):
        result = tester.run("divisor", "quotient", "--eps", "2", "--div", "[[0, 0, 3]]", "--point", "0,0")
        assert result.exit_code == 2
        assert tester.error_of(result).error == "invalid-input"

    def test_sections(self, tester):
        assert tester.run("divisor", "sections", "--kind", "cubic", "--n", "1", "--deg", "2").stdout == "<= 1\n"
        assert tester.run("divisor", "sections", "--n", "2", "--deg", "3").stdout == "3\n"
        result = tester.run("divisor", "sections", "--n", "1", "--deg", "4")
        assert result.exit_code == 2
        assert tester.error_of(result).error == "degree-too-large"

    def test_complete(self, tester):
        result = tester.run("divisor", "complete", "--div", "[[0, 0, 1]]", "--reference", "[[1, 0, 1], [0, 1, 1]]")
        assert result.stdout == "(1, 1)\n"


class TestSchema:
    @pytest.mark.parametrize("name, title", [("series", "SeriesResponse"), ("error", "ErrorResponse")])
    def test_schema(self, tester, name, title):
        result = tester.run("schema", name)
        assert result.exit_code == 0
        assert json.loads(result.stdout)["title"] == title


class TestConfig:
    def test_invalid_setting(self, tester):
        result = tester.run("series", "--eps", "1", env={"HILBERT_KIND": "quartic"})
        assert result.exit_code == 2
        assert tester.error_of(result).error == "invalid-config"

    def test_json_from_environment(self, tester):
        result = tester.run("count", "--eps", "3", "--critical", env={"HILBERT_OUTPUT": "json"})
        assert CountResponse.model_validate_json(result.stdout).count == 4

    def test_golden_dir_default_exists(self):
        assert os.path.isdir(DEFAULT_GOLDEN_DIR)
