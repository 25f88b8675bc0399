"""Mode enumeration, lattice counting and field-energy tests.

The counting arithmetic is cross-checked against a plain triple-loop oracle
that shares no code with the per-plane implementation.
"""

import math

import pytest

from phasestar.cavity import (CavitySpec, Mode, ModeAmplitude, ModeCapExceeded,
                              PERIODIC, STANDING,
                              electromagnetic_standing_mode_count,
                              enumerate_modes, field_energy,
                              mode_count_vs_asymptotic)
from phasestar.units import UnitSystem


def triple_loop_count(radius, positive_octant):
    """Independent brute-force lattice count."""
    reach = int(radius)
    total = 0
    axis = range(1, reach + 1) if positive_octant else range(-reach, reach + 1)
    for a in axis:
        for b in axis:
            for c in axis:
                if not positive_octant and a == 0 and b == 0 and c == 0:
                    continue
                if a * a + b * b + c * c <= radius * radius:
                    total += 1
    return total


class TestEnumerateModes:
    def test_standing_lowest_mode(self):
        spec = CavitySpec(side_length=1.0, boundary_convention=STANDING)
        lowest_omega = math.pi * math.sqrt(3)
        modes = enumerate_modes(spec, lowest_omega * 1.001)
        assert len(modes) == 1
        assert modes[0].lattice_triple == (1, 1, 1)
        assert modes[0].omega == pytest.approx(lowest_omega, rel=1e-15)
        assert modes[0].polarization_count == 2

    def test_below_lowest_mode_is_empty(self):
        spec = CavitySpec(side_length=1.0, boundary_convention=STANDING)
        assert enumerate_modes(spec, 0.9 * math.pi * math.sqrt(3)) == []

    def test_periodic_lowest_shell(self):
        spec = CavitySpec(side_length=1.0, boundary_convention=PERIODIC)
        shell_omega = 2 * math.pi
        modes = enumerate_modes(spec, shell_omega * 1.001)
        assert len(modes) == 6
        triples = {m.lattice_triple for m in modes}
        assert triples == {(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0),
                           (0, 0, 1), (0, 0, -1)}
        assert all(m.omega == pytest.approx(shell_omega) for m in modes)

    def test_ordering_and_uniqueness(self):
        spec = CavitySpec(side_length=1.0, boundary_convention=STANDING)
        modes = enumerate_modes(spec, 20.0)
        keys = [(m.omega, m.lattice_triple) for m in modes]
        assert keys == sorted(keys)
        triples = [m.lattice_triple for m in modes]
        assert len(triples) == len(set(triples))

    def test_determinism(self):
        spec = CavitySpec(side_length=2.0, boundary_convention=PERIODIC)
        assert enumerate_modes(spec, 15.0) == enumerate_modes(spec, 15.0)

    def test_side_length_scales_frequencies(self):
        unit_box = CavitySpec(side_length=1.0)
        double_box = CavitySpec(side_length=2.0)
        modes_unit = enumerate_modes(unit_box, 30.0)
        modes_double = enumerate_modes(double_box, 15.0)
        assert [m.lattice_triple for m in modes_unit] == \
            [m.lattice_triple for m in modes_double]
        for a, b in zip(modes_unit, modes_double):
            assert a.omega == pytest.approx(2 * b.omega, rel=1e-15)

    def test_cap_reports_requirement(self):
        spec = CavitySpec(side_length=1.0)
        with pytest.raises(ModeCapExceeded) as info:
            enumerate_modes(spec, 100.0, cap=10)
        assert info.value.required_cap > 10

    def test_omega_max_validated(self):
        with pytest.raises(ValueError):
            enumerate_modes(CavitySpec(), 0.0)

    def test_speed_of_light_enters(self):
        spec = CavitySpec(side_length=1.0)
        units = UnitSystem.si()
        lowest = math.pi * units.c_light * math.sqrt(3)
        modes = enumerate_modes(spec, lowest * 1.001, units)
        assert len(modes) == 1
        assert modes[0].omega == pytest.approx(lowest, rel=1e-15)


class TestCounting:
    @pytest.mark.parametrize("convention,ratio", [
        (STANDING, 37.7), (PERIODIC, 41.3),
    ])
    def test_matches_triple_loop_oracle(self, convention, ratio):
        spec = CavitySpec(boundary_convention=convention)
        report = mode_count_vs_asymptotic(spec, ratio)
        scale = math.pi if convention == STANDING else 2 * math.pi
        radius = ratio / scale
        oracle = triple_loop_count(radius, convention == STANDING)
        assert report.exact_count == 2 * oracle

    def test_matches_enumeration(self):
        spec = CavitySpec(boundary_convention=STANDING)
        omega_max = 45.0
        report = mode_count_vs_asymptotic(spec, omega_max)
        modes = enumerate_modes(spec, omega_max)
        assert report.exact_count == 2 * len(modes)

    def test_asymptote_formula(self):
        spec = CavitySpec(side_length=3.0)
        omega_max = 40.0
        report = mode_count_vs_asymptotic(spec, omega_max)
        expected = 27.0 * omega_max ** 3 / (3 * math.pi ** 2)
        assert report.asymptotic_count == pytest.approx(expected, rel=1e-15)

    def test_error_decreases_over_doubling_sweep(self):
        spec = CavitySpec(boundary_convention=STANDING)
        errors = [mode_count_vs_asymptotic(spec, ratio).relative_error
                  for ratio in (50.0, 100.0, 200.0, 400.0)]
        assert all(late < early for early, late in zip(errors, errors[1:]))

    def test_conventions_share_the_asymptote(self):
        omega_max = 200.0
        standing = mode_count_vs_asymptotic(
            CavitySpec(boundary_convention=STANDING), omega_max)
        periodic = mode_count_vs_asymptotic(
            CavitySpec(boundary_convention=PERIODIC), omega_max)
        assert standing.asymptotic_count == periodic.asymptotic_count
        assert periodic.relative_error < 0.01
        assert standing.relative_error < 0.05

    def test_advisory_warning_below_thousand_modes(self):
        with pytest.warns(UserWarning):
            mode_count_vs_asymptotic(CavitySpec(), 20.0)

    def test_electromagnetic_budget_cancels_the_surface_deficit(self):
        spec = CavitySpec(boundary_convention=STANDING)
        omega_max = 200.0
        budget = electromagnetic_standing_mode_count(spec, omega_max)
        asymptote = omega_max ** 3 / (3 * math.pi ** 2)
        assert abs(budget - asymptote) / asymptote < 0.005
        # and it is strictly larger than the uniform two-polarization count
        uniform = mode_count_vs_asymptotic(spec, omega_max).exact_count
        assert budget > uniform

    def test_electromagnetic_budget_requires_standing(self):
        with pytest.raises(ValueError):
            electromagnetic_standing_mode_count(
                CavitySpec(boundary_convention=PERIODIC), 10.0)


class TestFieldEnergy:
    @staticmethod
    def one_mode(omega=1.0, polarizations=2):
        return Mode((1, 1, 1), omega, polarizations)

    def test_vacuum_in_the_free_limit(self):
        mode = self.one_mode()
        rows = [[ModeAmplitude(0.0, 0.0)] * 2]
        result = field_energy([mode], rows, N=math.inf)
        assert result.classical == 0.0
        assert result.zero_point_prefactored == 0.0
        assert result.zero_point_per_oscillator == 0.0

    def test_prefactored_zero_point_single_oscillator(self):
        mode = self.one_mode(omega=1.0, polarizations=1)
        result = field_energy([mode], [[ModeAmplitude(0.0, 0.0)]], N=2.0)
        assert result.zero_point_prefactored == pytest.approx(0.25, rel=1e-15)
        assert result.zero_point_per_oscillator == pytest.approx(0.5, rel=1e-15)

    def test_kinetic_term_only(self):
        mode = self.one_mode(polarizations=1)
        result = field_energy([mode], [[ModeAmplitude(0.0, 1.0)]], N=2.0)
        assert result.classical == 0.5

    def test_missing_amplitudes_rejected(self):
        mode = self.one_mode()
        with pytest.raises(ValueError):
            field_energy([mode], [])
        with pytest.raises(ValueError):
            field_energy([mode], [[ModeAmplitude(0.0, 0.0)]])  # one of two

    def test_sign_flip_invariance(self):
        modes = [self.one_mode(1.0), self.one_mode(2.0)]
        rows = [[ModeAmplitude(0.3, -1.2), ModeAmplitude(0.0, 0.7)],
                [ModeAmplitude(-2.0, 0.1), ModeAmplitude(1.0, 1.0)]]
        flipped = [[ModeAmplitude(-a.Q, -a.P) for a in row] for row in rows]
        assert field_energy(modes, rows).classical == \
            field_energy(modes, flipped).classical

    def test_mode_reordering_invariance(self):
        modes = [self.one_mode(1.0), self.one_mode(3.0)]
        rows = [[ModeAmplitude(1.0, 0.0), ModeAmplitude(0.0, 1.0)],
                [ModeAmplitude(0.5, 0.5), ModeAmplitude(2.0, 0.0)]]
        forward = field_energy(modes, rows)
        backward = field_energy(modes[::-1], rows[::-1])
        assert forward.classical == pytest.approx(backward.classical, rel=1e-15)
        assert forward.zero_point_per_oscillator == pytest.approx(
            backward.zero_point_per_oscillator, rel=1e-15)

    def test_zero_point_ignores_amplitudes(self):
        mode = self.one_mode()
        quiet = field_energy([mode], [[ModeAmplitude(0.0, 0.0)] * 2])
        loud = field_energy([mode], [[ModeAmplitude(5.0, -3.0)] * 2])
        assert quiet.zero_point_prefactored == loud.zero_point_prefactored
        assert quiet.zero_point_per_oscillator == loud.zero_point_per_oscillator

    def test_totals(self):
        mode = self.one_mode(polarizations=1)
        result = field_energy([mode], [[ModeAmplitude(0.0, 1.0)]], N=2.0)
        assert result.total_prefactored == result.classical + 0.25
        assert result.total_per_oscillator == result.classical + 0.5

    def test_conventions_differ_by_factor_two(self):
        modes = [self.one_mode(1.7)]
        rows = [[ModeAmplitude(0.0, 0.0)] * 2]
        result = field_energy(modes, rows, N=3.0)
        assert result.zero_point_per_oscillator == pytest.approx(
            2 * result.zero_point_prefactored, rel=1e-15)


class TestSpecValidation:
    def test_convention_names(self):
        with pytest.raises(ValueError):
            CavitySpec(boundary_convention="open")

    def test_side_length(self):
        with pytest.raises(ValueError):
            CavitySpec(side_length=0.0)
