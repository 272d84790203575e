import pytest

from rootflow.cli import main
from rootflow.harness import CSV_HEADER


def run_cli(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------------------------------------------------------------------------
# bench

def test_bench_exits_zero_and_prints_nine_rows(capsys):
    code, out, _ = run_cli(capsys, ["bench"])
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 10  # header + 9 rows
    assert out.count("divergence") == 5
    assert out.count("converged") == 4
    assert "0.523599" in out
    assert "1.000000" in out


def test_bench_output_is_byte_identical_between_runs(capsys):
    _, first, _ = run_cli(capsys, ["bench"])
    _, second, _ = run_cli(capsys, ["bench"])
    assert first == second


def test_bench_csv_to_file(tmp_path, capsys):
    target = tmp_path / "bench.csv"
    code, out, _ = run_cli(capsys, ["bench", "--format", "csv", "--output", str(target)])
    assert code == 0
    assert out == ""
    lines = target.read_text().strip().split("\n")
    assert lines[0] == CSV_HEADER
    assert len(lines) == 10


# ---------------------------------------------------------------------------
# solve

def test_solve_converging_run(capsys):
    code, out, _ = run_cli(capsys, [
        "solve", "--problem", "trig", "--scheme", "secant-dyn", "--mu", "2.65"])
    assert code == 0
    assert "converged" in out
    assert "iterations : 5" in out
    assert "0.523599" in out


def test_solve_divergence_exits_zero_without_expectation(capsys):
    code, out, _ = run_cli(capsys, ["solve", "--problem", "log", "--scheme", "newton"])
    assert code == 0
    assert "divergence" in out
    assert "domain_violation" in out


def test_solve_expect_converge_exit_code(capsys):
    code, _, _ = run_cli(capsys, [
        "solve", "--problem", "log", "--scheme", "newton", "--expect-converge"])
    assert code == 1
    code, _, _ = run_cli(capsys, [
        "solve", "--problem", "log", "--scheme", "secant-dyn", "--mu", "0.135",
        "--expect-converge"])
    assert code == 0


def test_solve_csv_trace(capsys):
    code, out, _ = run_cli(capsys, [
        "solve", "--problem", "log", "--scheme", "zheng", "--mu", "1",
        "--format", "csv"])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n,x,f"
    assert lines[1].startswith("0,5,")
    assert len(lines) == 10  # x0 plus eight accepted iterates


def test_solve_unknown_problem_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--problem", "cubic", "--scheme", "newton"])
    assert exc.value.code == 2


def test_solve_unknown_scheme_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--problem", "log", "--scheme", "halley"])
    assert exc.value.code == 2


# ---------------------------------------------------------------------------
# order

def test_order_report(capsys):
    code, out, _ = run_cli(capsys, [
        "order", "--problem", "trig", "--mu", "2.65", "--epsilon", "1e-13"])
    assert code == 0
    assert "final order" in out
    assert "predicted" in out


def test_order_is_deterministic(capsys):
    argv = ["order", "--problem", "log", "--mu", "1", "--x0", "1.5", "--epsilon", "1e-13"]
    _, first, _ = run_cli(capsys, argv)
    _, second, _ = run_cli(capsys, argv)
    assert first == second


# ---------------------------------------------------------------------------
# sweeps and basin

def test_sweep_mu_csv(capsys):
    code, out, _ = run_cli(capsys, [
        "sweep-mu", "--problem", "log", "--scheme", "secant-dyn",
        "--mu-values", "0.135,0.5,1.0"])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == CSV_HEADER
    assert len(lines) == 4


def test_sweep_mu_bad_values_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["sweep-mu", "--problem", "log", "--scheme", "secant-dyn",
              "--mu-values", "a,b"])
    assert exc.value.code == 2


def test_sweep_h_csv(capsys):
    code, out, _ = run_cli(capsys, [
        "sweep-h", "--problem", "log", "--mu", "0.135", "--h-values", "0.1,1.0"])
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 3
    assert ",euler_flow," in lines[1]


def test_basin_csv_and_grid_file(tmp_path, capsys):
    csv_path = tmp_path / "basin.csv"
    grid_path = tmp_path / "basin.grid"
    code, out, _ = run_cli(capsys, [
        "basin", "--problem", "log", "--scheme", "secant-dyn",
        "--mu-values", "0.135", "--x0-count", "21",
        "--output", str(csv_path), "--grid-output", str(grid_path)])
    assert code == 0
    csv_lines = csv_path.read_text().strip().split("\n")
    assert csv_lines[0] == CSV_HEADER
    assert len(csv_lines) == 22
    grid_lines = grid_path.read_text().strip().split("\n")
    assert grid_lines[0].startswith("x0: ")
    assert len(grid_lines) == 2
    codes = grid_lines[1].split(": ")[1].split(" ")
    assert len(codes) == 21
    assert all(c == "D" or c.startswith("C") for c in codes)


def test_basin_runs_are_byte_identical(tmp_path, capsys):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for path in paths:
        code = main(["basin", "--problem", "log", "--scheme", "newton",
                     "--mu-values", "0", "--x0-count", "51", "--output", str(path)])
        assert code == 0
        capsys.readouterr()
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_missing_subcommand_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
