import json
import subprocess
import sys
from pathlib import Path

import pytest

from pairmeasure.cli import EXIT_DEGENERATE, EXIT_OK, EXIT_PARSE, main

FIXTURES = Path(__file__).parent / "fixtures"


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_momentum_scenario_text(capsys):
    code, out, _ = run_cli(
        capsys,
        ["momentum-scenario", "--lattice", "8", "--mode-a", "1", "--mode-b", "7",
         "--statistics", "fermion"],
    )
    assert code == EXIT_OK
    assert "verdict: LocalOperation" in out
    prob_line = next(line for line in out.splitlines() if line.startswith("probability:"))
    assert float(prob_line.split()[1]) == pytest.approx(0.5, abs=1e-12)
    assert "Alice" in out and "Bob" in out


def test_momentum_scenario_json(capsys):
    code, out, _ = run_cli(
        capsys,
        ["momentum-scenario", "--lattice", "8", "--mode-a", "1", "--mode-b", "7",
         "--statistics", "fermion", "--output", "json"],
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["verdict"] == "LocalOperation"
    assert payload["probability"] == pytest.approx(0.5, abs=1e-12)
    assert payload["phase"] is None
    assert set(payload) == {
        "verdict", "probability", "singular_values", "entropy", "slater_rank", "phase",
    }


def test_position_scenario_json_phase(capsys):
    code, out, _ = run_cli(
        capsys,
        ["position-scenario", "--lattice", "8", "--mode-a", "1", "--mode-b", "7",
         "--xa", "2", "--xb", "5", "--width", "1", "--statistics", "fermion",
         "--output", "json"],
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["verdict"] == "EntanglingMeasurement"
    assert payload["phase"]["deviation"] < 1e-10
    assert payload["probability"] == pytest.approx(1 / 64, abs=1e-12)
    assert payload["entropy"] == pytest.approx(0.6931471805599453, abs=1e-10)


def test_json_output_is_byte_identical_across_runs(capsys):
    argv = ["position-scenario", "--lattice", "8", "--mode-a", "1", "--xa", "2",
            "--xb", "5", "--statistics", "boson", "--output", "json"]
    _, first, _ = run_cli(capsys, argv)
    _, second, _ = run_cli(capsys, argv)
    assert first == second
    argv = ["momentum-scenario", "--output", "json"]
    _, first, _ = run_cli(capsys, argv)
    _, second, _ = run_cli(capsys, argv)
    assert first == second


def test_classify_momentum_fixtures(capsys):
    code, out, _ = run_cli(
        capsys,
        ["classify", "--state", str(FIXTURES / "momentum_state.txt"),
         "--measure", str(FIXTURES / "momentum_measure.txt"), "--output", "json"],
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["verdict"] == "LocalOperation"
    assert payload["probability"] == pytest.approx(0.5, abs=1e-10)


def test_classify_position_fixtures(capsys):
    code, out, _ = run_cli(
        capsys,
        ["classify", "--state", str(FIXTURES / "position_state.txt"),
         "--measure", str(FIXTURES / "position_measure.txt"), "--output", "json"],
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["verdict"] == "EntanglingMeasurement"
    assert payload["probability"] == pytest.approx(1 / 64, abs=1e-10)


def test_classify_both_zero_measure(tmp_path, capsys):
    state = tmp_path / "state.txt"
    state.write_text("dim 2 2\namp 0 3 1 0\n")
    measure = tmp_path / "measure.txt"
    measure.write_text("dim 2 2\n")
    code, out, err = run_cli(
        capsys,
        ["classify", "--state", str(state), "--measure", str(measure),
         "--output", "json"],
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["verdict"] == "BothZero"
    assert payload["probability"] == 0.0
    assert payload["entropy"] is None
    assert "warning" in err


def test_classify_only_a_entries_warns(tmp_path, capsys):
    state = tmp_path / "state.txt"
    state.write_text("dim 2 1\namp 0 1 1 0\n")
    measure = tmp_path / "measure.txt"
    measure.write_text("dim 2 1\nA 0 0 1 0\n")
    code, out, err = run_cli(
        capsys,
        ["classify", "--state", str(state), "--measure", str(measure),
         "--output", "json"],
    )
    assert code == EXIT_OK
    assert json.loads(out)["verdict"] == "BothZero"
    assert "factor B" in err


def test_classify_non_projector_measure_relabels_probability(tmp_path, capsys):
    state = tmp_path / "state.txt"
    state.write_text("dim 2 1\namp 0 0 1 0\namp 1 0 1 0\namp 1 1 1 0\n")
    measure = tmp_path / "measure.txt"
    # factor A is a raising operator: not Hermitian, so no Born-rule reading
    measure.write_text("dim 2 1\nA 0 1 1 0\nB 0 0 1 0\nB 1 1 1 0\n")
    code, out, _ = run_cli(
        capsys, ["classify", "--state", str(state), "--measure", str(measure)]
    )
    assert code == EXIT_OK
    assert "squared event norm:" in out
    assert "probability:" not in out
    assert "disagrees with the event overlap" in out


def test_classify_malformed_file_exits_2(tmp_path, capsys):
    state = tmp_path / "state.txt"
    state.write_text("dim 2 2\namp 9 9 1 0\n")
    measure = tmp_path / "measure.txt"
    measure.write_text("dim 2 2\nA 0 0 1 0\nB 0 0 1 0\n")
    code, _, err = run_cli(
        capsys,
        ["classify", "--state", str(state), "--measure", str(measure)],
    )
    assert code == EXIT_PARSE
    assert "line 2" in err


def test_classify_zero_state_exits_3(tmp_path, capsys):
    state = tmp_path / "state.txt"
    state.write_text("dim 2 2\n")
    measure = tmp_path / "measure.txt"
    measure.write_text("dim 2 2\nA 0 0 1 0\nB 0 0 1 0\n")
    code, _, err = run_cli(
        capsys,
        ["classify", "--state", str(state), "--measure", str(measure)],
    )
    assert code == EXIT_DEGENERATE
    assert "warning" in err


def test_momentum_scenario_equal_modes_exits_3(capsys):
    code, _, err = run_cli(
        capsys, ["momentum-scenario", "--mode-a", "3", "--mode-b", "3"]
    )
    assert code == EXIT_DEGENERATE
    assert "error" in err


def test_bad_flag_values_exit_2():
    with pytest.raises(SystemExit) as excinfo:
        main(["momentum-scenario", "--lattice", "1"])
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit) as excinfo:
        main(["position-scenario", "--xa", "99"])
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit) as excinfo:
        main(["momentum-scenario", "--tol", "-1"])
    assert excinfo.value.code == 2


def test_module_invocation_end_to_end():
    result = subprocess.run(
        [sys.executable, "-m", "pairmeasure", "position-scenario", "--output", "json"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == EXIT_OK
    payload = json.loads(result.stdout)
    assert payload["verdict"] == "EntanglingMeasurement"
