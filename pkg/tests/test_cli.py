"""Integration tests for the CLI."""

from __future__ import annotations

import json
from typing import TYPE_CHECKING

import pytest

from qlittlewood import runner
from qlittlewood.cli import main
from qlittlewood.verify import Failure, SuiteReport

if TYPE_CHECKING:
    from pathlib import Path

    from qlittlewood.runner import SuiteJob


def _run(argv: list[str], capsys: pytest.CaptureFixture[str]) -> str:
    main(argv)
    return capsys.readouterr().out


def _exit_code(argv: list[str]) -> int | str | None:
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    return excinfo.value.code


# === imm ===


@pytest.mark.usefixtures("config_home")
def test_imm_text_output(capsys: pytest.CaptureFixture[str]) -> None:
    """Repeated rows pick up the q²-multiplicity in the raw immanant."""
    out = _run(["imm", "--n", "2", "--shape", "2", "--rows", "1,1", "--cols", "1,1"], capsys)
    assert out == "Imm_(2)(X_(1, 1),(1, 1)) = (q^2 + 1)*x11*x11\n"


@pytest.mark.usefixtures("config_home")
def test_imm_normalized(capsys: pytest.CaptureFixture[str]) -> None:
    """--normalized divides by m_{q²}(I)."""
    argv = ["imm", "--n", "2", "--shape", "2", "--rows", "1,1", "--cols", "1,1", "--normalized"]
    assert _run(argv, capsys) == "Imm_(2)(X_(1, 1),(1, 1)) = x11*x11\n"


@pytest.mark.usefixtures("config_home")
def test_imm_single_generator(capsys: pytest.CaptureFixture[str]) -> None:
    """A one-box immanant is the matrix entry itself."""
    out = _run(["imm", "--n", "2", "--shape", "1", "--rows", "1", "--cols", "2"], capsys)
    assert out == "Imm_(1)(X_(1,),(2,)) = x12\n"


@pytest.mark.usefixtures("config_home")
def test_imm_json_output(capsys: pytest.CaptureFixture[str]) -> None:
    """JSON output carries the schema version and the inputs."""
    argv = ["imm", "--n", "2", "--shape", "1,1", "--rows", "1,2", "--cols", "1,2"]
    payload = json.loads(_run([*argv, "--format", "json"], capsys))
    assert payload["schema_version"] == 1
    assert payload["shape"] == [1, 1]
    assert payload["rows"] == [1, 2]
    assert payload["normalized"] is False
    assert payload["element"]["n"] == 2


@pytest.mark.usefixtures("config_home")
def test_imm_normalized_needs_sorted_rows() -> None:
    """--normalized with unequal rows and columns is a usage error."""
    argv = ["imm", "--n", "2", "--shape", "2", "--rows", "1,2", "--cols", "2,2", "--normalized"]
    assert _exit_code(argv) == 2


@pytest.mark.usefixtures("config_home")
def test_imm_letter_out_of_range() -> None:
    """Letters beyond n exit with the usage code."""
    assert _exit_code(["imm", "--n", "2", "--shape", "2", "--rows", "1,3", "--cols", "1,2"]) == 2


@pytest.mark.usefixtures("config_home")
def test_guardrail_refuses_large_m(capsys: pytest.CaptureFixture[str]) -> None:
    """m above max_m is refused unless --unsafe-scale is given."""
    argv = ["imm", "--n", "1", "--shape", "7", "--rows", "1,1,1,1,1,1,1", "--cols", "1,1,1,1,1,1,1"]
    assert _exit_code(argv) == 2
    assert "--unsafe-scale" in capsys.readouterr().err


def test_guardrail_follows_config(config_home: Path) -> None:
    """Limits come from config.toml."""
    config = config_home / "qlittlewood" / "config.toml"
    config.parent.mkdir(parents=True)
    config.write_text("[limits]\nmax_dimension = 3\n")
    assert _exit_code(["imm", "--n", "2", "--shape", "2", "--rows", "1,2", "--cols", "1,2"]) == 2


def test_invalid_config_is_usage_error(config_home: Path) -> None:
    """A malformed config file exits with the usage code."""
    config = config_home / "qlittlewood" / "config.toml"
    config.parent.mkdir(parents=True)
    config.write_text('[verify]\nformat = "yaml"\n')
    assert _exit_code(["partitions", "--m", "2"]) == 2


def test_config_sets_default_format(config_home: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """format = "json" in config.toml applies when --format is absent."""
    config = config_home / "qlittlewood" / "config.toml"
    config.parent.mkdir(parents=True)
    config.write_text('[verify]\nformat = "json"\n')
    payload = json.loads(_run(["partitions", "--m", "2"], capsys))
    assert payload == {"schema_version": 1, "m": 2, "partitions": [[2], [1, 1]]}


# === char-table, idem, bethe, partitions ===


@pytest.mark.usefixtures("config_home")
def test_char_table_h2(capsys: pytest.CaptureFixture[str]) -> None:
    """Rows are shapes, columns are Coxeter classes."""
    out = _run(["char-table", "--m", "2"], capsys)
    assert out.splitlines() == ["λ \\ ρ\t(2)\t(1,1)", "(2)\tq\t1", "(1,1)\t-q^-1\t1"]


@pytest.mark.usefixtures("config_home")
def test_idem_both_methods_agree(capsys: pytest.CaptureFixture[str]) -> None:
    """The seminormal and JM constructions print the same element."""
    seminormal = _run(["idem", "1,2/3"], capsys)
    jm = _run(["idem", "1,2/3", "--method", "jm"], capsys)
    assert seminormal == jm
    assert seminormal.startswith("E_1,2/3 = ")


@pytest.mark.usefixtures("config_home")
def test_idem_rejects_garbage() -> None:
    """Unparseable tableaux are rejected by argparse."""
    assert _exit_code(["idem", "1,a"]) == 2


@pytest.mark.usefixtures("config_home")
def test_bethe_text(capsys: pytest.CaptureFixture[str]) -> None:
    """Each family is printed from degree 0 to the requested degree."""
    lines = _run(["bethe", "--n", "1", "--degree", "2"], capsys).splitlines()
    assert "alpha_1 = x11" in lines
    assert "beta_2 = x11*x11" in lines
    assert "gamma_2 = x11*x11" in lines
    assert len(lines) == 2 + 3 + 3


@pytest.mark.usefixtures("config_home")
def test_bethe_json(capsys: pytest.CaptureFixture[str]) -> None:
    """The degree defaults to n."""
    payload = json.loads(_run(["bethe", "--n", "2", "--format", "json"], capsys))
    assert payload["degree"] == 2
    assert (len(payload["alpha"]), len(payload["beta"]), len(payload["gamma"])) == (3, 3, 3)


@pytest.mark.usefixtures("config_home")
def test_partitions_text(capsys: pytest.CaptureFixture[str]) -> None:
    """Partitions print one per line in reverse lexicographic order."""
    assert _run(["partitions", "--m", "3"], capsys) == "(3)\n(2,1)\n(1,1,1)\n"


# === verify ===


@pytest.mark.usefixtures("config_home")
def test_verify_passing_suite(capsys: pytest.CaptureFixture[str]) -> None:
    """A passing suite prints PASS and exits normally."""
    out = _run(["verify", "yang-baxter", "--n", "2"], capsys)
    assert out == "PASS yang-baxter (5 cases)\n"


@pytest.mark.usefixtures("config_home")
def test_verify_json(capsys: pytest.CaptureFixture[str]) -> None:
    """JSON results embed the full report."""
    payload = json.loads(_run(["verify", "confluence", "--n", "1", "--format", "json"], capsys))
    assert payload["schema_version"] == 1
    (result,) = payload["results"]
    assert result["suite"] == "confluence"
    assert result["passed"] is True
    assert result["failures"] == []


@pytest.mark.usefixtures("config_home")
@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "goulden-jackson", "--n", "7"],
        ["verify", "macmahon", "--n", "2", "--degree", "7"],
        ["verify", "all", "--n", "7"],
    ],
)
def test_verify_guardrail_counts_default_sweeps(
    argv: list[str], capsys: pytest.CaptureFixture[str]
) -> None:
    """Sizes reached by a suite's default sweep are subject to the limits."""
    assert _exit_code(argv) == 2
    assert "--unsafe-scale" in capsys.readouterr().err


@pytest.mark.usefixtures("config_home")
def test_verify_unknown_suite() -> None:
    """Unknown suite names exit with the usage code."""
    assert _exit_code(["verify", "nosuchsuite"]) == 2


@pytest.mark.usefixtures("config_home")
def test_verify_failure_exits_one(
    monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
) -> None:
    """A failing case prints both sides and exits 1."""
    failure = Failure(case="demo", inputs={"k": 1}, left=0, right=1, confirmed=True)

    def _fake(job: SuiteJob) -> SuiteReport:
        return SuiteReport(suite=job.suite, parameters={}, cases=1, failures=(failure,))

    monkeypatch.setattr(runner, "execute_job", _fake)
    assert _exit_code(["verify", "macmahon"]) == 1
    out = capsys.readouterr().out
    assert out.splitlines() == [
        "FAIL macmahon (1 cases)",
        '  demo: {"k": 1}',
        "    left:  0",
        "    right: 1",
    ]
