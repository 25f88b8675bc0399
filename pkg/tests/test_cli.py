"""End-to-end CLI tests, run in-process through main()."""

import csv
import io
import json
import subprocess
import sys

from phasestar.blackbody import SPECTRUM_FIELDS, wien_peak
from phasestar.cavity import MODE_FIELDS
from phasestar.cli import main


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestStarCommand:
    def test_canonical_product(self):
        code, out, _ = run_cli("star", "q1", "p1", "--N", "2")
        assert code == 0
        assert out.strip() == "q1*p1 + 0.5*i*hbar"

    def test_no_correction_for_identical_momenta(self):
        code, out, _ = run_cli("star", "p1", "p1")
        assert code == 0
        assert out.strip() == "p1^2"

    def test_first_order_flag(self):
        code, out, _ = run_cli("star", "q1^2", "p1^2", "--N", "1", "--first-order")
        assert code == 0
        assert out.strip() == "q1^2*p1^2 + 4*i*q1*p1*hbar"

    def test_index_beyond_dimension_is_domain_error(self):
        code, _, err = run_cli("star", "q1", "p2", "--dims", "1")
        assert code == 1
        assert "exceeds dimension" in err

    def test_dims_flag(self):
        code, out, _ = run_cli("star", "q2", "p2", "--dims", "2", "--N", "2")
        assert code == 0
        assert out.strip() == "q2*p2 + 0.5*i*hbar"

    def test_bindings(self):
        code, out, _ = run_cli("star", "omega*q1", "p1", "--param", "omega=3")
        assert code == 0
        assert out.strip() == "3*q1*p1 + 1.5*i*hbar"

    def test_reserved_binding_rejected(self):
        code, _, err = run_cli("star", "q1", "p1", "--param", "hbar=1")
        assert code == 1
        assert "reserved" in err

    def test_json_format(self):
        code, out, _ = run_cli("star", "q1", "p1", "--format", "json")
        assert code == 0
        assert json.loads(out) == {"canonical": "q1*p1 + 0.5*i*hbar"}

    def test_infinity_deformation(self):
        code, out, _ = run_cli("star", "q1", "p1", "--N", "infinity")
        assert code == 0
        assert out.strip() == "q1*p1"

    def test_bad_deformation_constant(self):
        code, _, _ = run_cli("star", "q1", "p1", "--N", "-3")
        assert code == 1


class TestCommutatorCommand:
    def test_canonical_pair(self):
        code, out, _ = run_cli("commutator", "q1", "p1", "--N", "2")
        assert code == 0
        assert out.strip() == "i*hbar"

    def test_poisson_flag(self):
        code, out, _ = run_cli("commutator", "q1", "p1", "--poisson")
        assert code == 0
        assert out.strip() == "1"

    def test_self_commutator(self):
        code, out, _ = run_cli("commutator", "q1", "q1")
        assert code == 0
        assert out.strip() == "0"


class TestOscillatorCommand:
    def test_ground_state_physical_default(self):
        code, out, _ = run_cli("oscillator", "--omega", "1", "--N", "2")
        assert code == 0
        assert "ground_state = 0.5" in out
        assert "energy = 0.5*q1^2 + 0.5*p1^2 + 0.5*hbar" in out

    def test_free_limit_ground_state(self):
        code, out, _ = run_cli("oscillator", "--omega", "1", "--N", "infinity")
        assert code == 0
        assert "ground_state = 0" in out

    def test_levels(self):
        code, out, _ = run_cli("oscillator", "--omega", "1", "--levels", "3")
        assert code == 0
        assert "levels: 0.5 1.5 2.5 3.5" in out

    def test_csv_levels(self):
        code, out, err = run_cli("oscillator", "--omega", "2", "--levels", "2",
                                 "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["n", "energy"]
        assert [r[1] for r in rows[1:]] == ["1", "3", "5"]
        assert "energy =" in err

    def test_json(self):
        code, out, _ = run_cli("oscillator", "--omega", "1", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["ground_state"] == 0.5
        assert payload["levels"][0] == {"n": 0, "energy": 0.5}


class TestSpectrumCommand:
    def test_csv_header_matches_module_schema(self):
        code, out, _ = run_cli("spectrum", "-T", "1", "--omega-min", "0.5",
                               "--omega-max", "2", "--points", "3",
                               "--format", "csv")
        assert code == 0
        header = out.splitlines()[0].strip()
        assert header == ",".join(SPECTRUM_FIELDS)

    def test_oracle_deviation_reported(self):
        code, out, err = run_cli("spectrum", "-T", "1", "--omega-min", "0.1",
                                 "--omega-max", "20", "--points", "7",
                                 "--format", "csv", "--oracle")
        assert code == 0
        header = out.splitlines()[0].split(",")
        assert header[-2:] == ["oracle_total_density", "oracle_rel_error"]
        deviation = float(err.split("max_relative_deviation =")[1])
        assert deviation < 1e-10

    def test_no_zero_point_column(self):
        code, out, _ = run_cli("spectrum", "-T", "1", "--omega-min", "1",
                               "--omega-max", "2", "--points", "2",
                               "--format", "csv", "--no-zero-point")
        assert code == 0
        for line in out.splitlines()[1:]:
            assert line.split(",")[3] == "0"

    def test_json_keys(self):
        code, out, _ = run_cli("spectrum", "-T", "1", "--omega-min", "1",
                               "--omega-max", "2", "--points", "2",
                               "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert isinstance(payload, list)
        assert tuple(payload[0].keys()) == SPECTRUM_FIELDS

    def test_thermal_peak_near_wien_root(self):
        temperature = 1.0
        peak = wien_peak(temperature)
        code, out, _ = run_cli("spectrum", "-T", "1",
                               "--omega-min", str(peak / 2),
                               "--omega-max", str(peak * 2),
                               "--points", "201", "--spacing", "log",
                               "--format", "csv", "--no-zero-point")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        best = max(rows, key=lambda r: float(r["thermal_density"]))
        omegas = sorted(float(r["omega"]) for r in rows)
        index = omegas.index(float(best["omega"]))
        neighbors = omegas[max(0, index - 1):index + 2]
        assert min(neighbors) <= peak <= max(neighbors)

    def test_domain_error_exit_code(self):
        code, _, err = run_cli("spectrum", "-T", "1", "--omega-min", "2",
                               "--omega-max", "1", "--points", "5")
        assert code == 1
        assert "omega_min" in err

    def test_determinism(self):
        first = run_cli("spectrum", "-T", "2", "--omega-min", "0.5",
                        "--omega-max", "5", "--points", "9", "--format", "json")
        second = run_cli("spectrum", "-T", "2", "--omega-min", "0.5",
                         "--omega-max", "5", "--points", "9", "--format", "json")
        assert first == second


class TestModesCommand:
    def test_small_cavity_lists_modes(self):
        code, out, err = run_cli("modes", "--omega-max", "7", "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == list(MODE_FIELDS)
        assert rows[1][:3] == ["1", "1", "1"]
        assert "relative_error" in err

    def test_json_schema(self):
        code, out, _ = run_cli("modes", "--omega-max", "7", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert tuple(payload[0].keys()) == MODE_FIELDS
        assert payload[0]["convention"] == "standing"

    def test_large_cavity_reports_only(self):
        code, out, err = run_cli("modes", "--omega-max", "200")
        assert code == 0
        assert out == ""
        assert "table suppressed" in err
        assert "exact_count = 260724" in err

    def test_periodic_convention(self):
        code, out, _ = run_cli("modes", "--omega-max", "6.3",
                               "--convention", "periodic", "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert len(rows) == 7  # header + the six lowest modes

    def test_invalid_convention_is_usage_error(self):
        code, _, _ = run_cli("modes", "--omega-max", "5",
                             "--convention", "open")
        assert code == 1


class TestChecksCommand:
    def test_default_run_passes(self):
        code, out, _ = run_cli("checks")
        assert code == 0
        lines = [line for line in out.splitlines() if line]
        assert len(lines) == 5
        assert all(line.startswith("PASS") for line in lines)

    def test_seed_reproducibility(self):
        first = run_cli("checks", "--seed", "11")
        second = run_cli("checks", "--seed", "11")
        assert first == second

    def test_injected_fault_exits_nonzero(self):
        code, out, _ = run_cli("checks", "--inject-fault")
        assert code == 2
        assert "FAIL injected-fault" in out


class TestGlobalBehavior:
    def test_help_exits_zero(self):
        assert run_cli("--help")[0] == 0

    def test_subcommand_help_contains_grammar(self):
        # argparse prints help to the process stdout, so go through a subprocess
        completed = subprocess.run(
            [sys.executable, "-m", "phasestar", "star", "--help"],
            capture_output=True, text=True)
        assert completed.returncode == 0
        assert "expression grammar" in completed.stdout

    def test_missing_subcommand_is_error(self):
        assert run_cli()[0] == 1

    def test_precision_validated(self):
        code, _, err = run_cli("spectrum", "-T", "1", "--omega-min", "1",
                               "--omega-max", "2", "--points", "2",
                               "--precision", "2")
        assert code == 1
        assert "precision" in err

    def test_precision_changes_rendering(self):
        _, low, _ = run_cli("oscillator", "--omega", "1", "--N", "3",
                            "--precision", "3")
        _, high, _ = run_cli("oscillator", "--omega", "1", "--N", "3",
                             "--precision", "15")
        assert "0.333" in low
        assert "0.333333333333333" in high

    def test_bad_param_syntax(self):
        code, _, _ = run_cli("star", "q1", "p1", "--param", "omega")
        assert code == 1

    def test_module_entry_point(self):
        completed = subprocess.run(
            [sys.executable, "-m", "phasestar", "commutator", "q1", "p1"],
            capture_output=True, text=True)
        assert completed.returncode == 0
        assert completed.stdout.strip() == "i*hbar"
