"""Tests for the `convert` command."""
from click.testing import CliRunner

from bnnctl.config import DATA_DIR
from bnnctl.formats.csv_format import parse_problem_csv
from bnnctl.formats.json_format import parse_problem_json
from bnnctl.main import cli


class TestConvertCommand:
    def test_json_to_csv(self):
        runner = CliRunner()
        result = runner.invoke(cli, ["convert", "-i", str(DATA_DIR / "car_selection.json"), "--to", "csv"])
        assert result.exit_code == 0
        expected = parse_problem_json((DATA_DIR / "car_selection.json").read_bytes())
        assert parse_problem_csv(result.stdout.encode("utf-8")) == expected

    def test_csv_to_json(self):
        runner = CliRunner()
        result = runner.invoke(cli, ["convert", "-i", str(DATA_DIR / "car_selection.csv"), "-t", "json"])
        assert result.exit_code == 0
        assert result.stdout.startswith("{")

    def test_writes_normalized_weights(self, tmp_path):
        path = tmp_path / "p.csv"
        path.write_text("alt,C1,C2\nA1,0.5|0.7|0.2|-0.7|-0.3|-0.6,0.4|0.4|0.5|-0.7|-0.8|-0.4\n")
        runner = CliRunner()
        result = runner.invoke(cli, ["convert", "-i", str(path), "-t", "csv"])
        assert result.exit_code == 0
        assert "#weights,0.5,0.5" in result.stdout

    def test_target_is_required(self):
        runner = CliRunner()
        result = runner.invoke(cli, ["convert", "-i", str(DATA_DIR / "car_selection.csv")])
        assert result.exit_code == 1
