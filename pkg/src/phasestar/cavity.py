"""Cavity mode enumeration, counting against the continuum asymptote, and
the mode-sum field energy.

A cubic cavity of side L supports a lattice of radiation modes under either
of two bookkeeping conventions:

* ``standing``: k = pi*n/L with n ranging over strictly positive integer
  triples (one octant), the default;
* ``periodic``: k = 2*pi*n/L with n over all nonzero integer triples.

Each lattice mode carries two polarizations.  Both conventions approach the
same continuum count V w**3 / (3 pi**2 c**3), whose derivative in w is the
density of states w**2/(pi**2 c**3) entering the radiation law.  The octant
convention approaches it from below with a surface deficit of order
(c/(w L)) relative; the full-lattice convention has no surface term and
converges much faster.  ``electromagnetic_standing_mode_count`` additionally
reports the conducting-wall budget in which triples with exactly one zero
component contribute a single polarization; its surface term cancels almost
entirely.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .units import NATURAL, UnitSystem

STANDING = "standing"
PERIODIC = "periodic"

# Enumeration refuses to materialize more modes than this.
MODE_COUNT_CAP = 100_000_000

# Column order of mode exports (CSV header and JSON keys, token for token).
MODE_FIELDS = ("n1", "n2", "n3", "omega", "polarizations", "convention")


class ModeCapExceeded(ValueError):
    """Enumeration would exceed the mode cap; reports the required cap."""

    def __init__(self, required_cap: int, cap: int):
        super().__init__(
            f"enumeration needs a cap of at least {required_cap} modes, "
            f"configured cap is {cap}")
        self.required_cap = required_cap
        self.cap = cap


@dataclass(frozen=True)
class CavitySpec:
    """Cubic cavity geometry and mode bookkeeping convention."""

    side_length: float = 1.0
    boundary_convention: str = STANDING
    polarizations_per_mode: int = 2

    def __post_init__(self):
        if not self.side_length > 0:
            raise ValueError(f"side_length must be positive, got {self.side_length!r}")
        if self.boundary_convention not in (STANDING, PERIODIC):
            raise ValueError(
                f"boundary_convention must be {STANDING!r} or {PERIODIC!r}, "
                f"got {self.boundary_convention!r}")
        if self.polarizations_per_mode < 1:
            raise ValueError("polarizations_per_mode must be at least 1")


class Mode(NamedTuple):
    """One cavity mode: lattice triple, angular frequency, polarizations."""

    lattice_triple: tuple
    omega: float
    polarization_count: int = 2


class ModeAmplitude(NamedTuple):
    """Canonical amplitude pair of one mode-polarization oscillator."""

    Q: float
    P: float


class ModeCountResult(NamedTuple):
    exact_count: int
    asymptotic_count: float
    relative_error: float


def _wavenumber_scale(spec: CavitySpec, units: UnitSystem) -> float:
    factor = math.pi if spec.boundary_convention == STANDING else 2 * math.pi
    return factor * units.c_light / spec.side_length


def _lattice_radius(spec: CavitySpec, omega_max: float, units: UnitSystem) -> float:
    # omega = scale * |n| <= omega_max
    return omega_max / _wavenumber_scale(spec, units)


def _octant_lattice_points(radius: float) -> int:
    """Exact count of integer triples with all components >= 1 inside radius."""
    radius_sq = radius * radius
    total = 0
    for n1 in range(1, int(radius) + 1):
        slack1 = radius_sq - n1 * n1
        if slack1 < 1:
            break
        for n2 in range(1, int(radius) + 1):
            slack2 = slack1 - n2 * n2
            if slack2 < 1:
                break
            total += math.isqrt(math.floor(slack2))
    return total


def _full_lattice_points(radius: float) -> int:
    """Exact count of nonzero integer triples inside radius."""
    radius_sq = radius * radius
    reach = int(radius)
    total = 0
    for n1 in range(-reach, reach + 1):
        slack1 = radius_sq - n1 * n1
        if slack1 < 0:
            continue
        for n2 in range(-reach, reach + 1):
            slack2 = slack1 - n2 * n2
            if slack2 < 0:
                continue
            total += 2 * math.isqrt(math.floor(slack2)) + 1
    return total - 1  # remove the origin


def _face_lattice_pairs(radius: float) -> int:
    """Exact count of integer pairs with both components >= 1 inside radius."""
    radius_sq = radius * radius
    total = 0
    for n1 in range(1, int(radius) + 1):
        slack = radius_sq - n1 * n1
        if slack < 1:
            break
        total += math.isqrt(math.floor(slack))
    return total


def _lattice_point_count(spec: CavitySpec, radius: float) -> int:
    if spec.boundary_convention == STANDING:
        return _octant_lattice_points(radius)
    return _full_lattice_points(radius)


def enumerate_modes(spec: CavitySpec, omega_max: float,
                    units: UnitSystem = NATURAL,
                    cap: int = MODE_COUNT_CAP) -> list:
    """All modes with omega <= omega_max, sorted by (omega, lattice triple).

    The list is deterministic and duplicate-free; degenerate frequency
    shells stay as distinct entries, one per lattice triple.  Raises
    ModeCapExceeded (reporting the required cap) rather than materializing
    more than ``cap`` modes.
    """
    if not omega_max > 0:
        raise ValueError(f"omega_max must be positive, got {omega_max!r}")
    radius = _lattice_radius(spec, omega_max, units)
    count = _lattice_point_count(spec, radius)
    if count > cap:
        raise ModeCapExceeded(count, cap)
    scale = _wavenumber_scale(spec, units)
    radius_sq = radius * radius
    reach = int(radius)
    triples = []
    if spec.boundary_convention == STANDING:
        axis = range(1, reach + 1)
    else:
        axis = range(-reach, reach + 1)
    for n1 in axis:
        for n2 in axis:
            for n3 in axis:
                if n1 == 0 and n2 == 0 and n3 == 0:
                    continue
                norm_sq = n1 * n1 + n2 * n2 + n3 * n3
                if norm_sq <= radius_sq:
                    triples.append((n1, n2, n3))
    modes = [
        Mode((n1, n2, n3), scale * math.sqrt(n1 * n1 + n2 * n2 + n3 * n3),
             spec.polarizations_per_mode)
        for n1, n2, n3 in triples
    ]
    modes.sort(key=lambda m: (m.omega, m.lattice_triple))
    return modes


def mode_count_vs_asymptotic(spec: CavitySpec, omega_max: float,
                             units: UnitSystem = NATURAL) -> ModeCountResult:
    """Exact polarization-weighted lattice count against V w**3/(3 pi**2 c**3).

    The exact side counts every lattice triple of the chosen convention with
    ``polarizations_per_mode`` polarizations.  The relative error decreases
    toward zero as omega_max grows; for the octant convention it falls off
    like the surface-to-volume ratio of the lattice region.
    """
    if not omega_max > 0:
        raise ValueError(f"omega_max must be positive, got {omega_max!r}")
    radius = _lattice_radius(spec, omega_max, units)
    exact = spec.polarizations_per_mode * _lattice_point_count(spec, radius)
    volume = spec.side_length ** 3
    asymptotic = volume * omega_max ** 3 / (3 * math.pi ** 2 * units.c_light ** 3)
    if exact < 1000:
        warnings.warn(
            f"only {exact} modes below omega_max; the asymptotic comparison "
            "is meaningful from about a thousand modes up", stacklevel=2)
    relative_error = abs(exact - asymptotic) / asymptotic
    return ModeCountResult(exact, asymptotic, relative_error)


def electromagnetic_standing_mode_count(spec: CavitySpec, omega_max: float,
                                        units: UnitSystem = NATURAL) -> int:
    """Conducting-wall mode budget for the standing convention.

    Interior triples (all components positive) carry two polarizations;
    triples with exactly one zero component support a single field
    polarization and contribute one mode each; triples with two or more
    zeros carry none.  This physical bookkeeping cancels the octant surface
    deficit almost exactly, unlike the uniform two-polarization count.
    """
    if spec.boundary_convention != STANDING:
        raise ValueError("electromagnetic budget applies to the standing convention")
    radius = _lattice_radius(spec, omega_max, units)
    return 2 * _octant_lattice_points(radius) + 3 * _face_lattice_pairs(radius)


@dataclass(frozen=True)
class FieldEnergy:
    """Mode-sum field energy, with the zero point under both conventions.

    The quadratic part is (P**2 + w**2 Q**2)/2 summed over mode
    polarizations.  The zero-point sum is reported twice because two
    bookkeeping conventions coexist: ``zero_point_prefactored`` applies the
    global 1/2 of the quadratic form to the per-oscillator shift as well
    (hbar*w/(2N) per term, hbar*w/4 at N=2), while
    ``zero_point_per_oscillator`` counts the full ladder ground energy
    (hbar*w/N per term, hbar*w/2 at N=2).  They differ by exactly that
    factor of two and no reconciliation is asserted.
    """

    classical: float
    zero_point_prefactored: float
    zero_point_per_oscillator: float

    @property
    def total_prefactored(self) -> float:
        return self.classical + self.zero_point_prefactored

    @property
    def total_per_oscillator(self) -> float:
        return self.classical + self.zero_point_per_oscillator


def field_energy(modes: Sequence[Mode], amplitudes: Sequence[Sequence[ModeAmplitude]],
                 N: float = 2.0, units: UnitSystem = NATURAL) -> FieldEnergy:
    """Total field energy for given per-mode, per-polarization amplitudes.

    ``amplitudes[m][l]`` is the (Q, P) pair of polarization ``l`` of mode
    ``m``; every mode needs exactly ``polarization_count`` entries.  The
    zero-point parts depend only on the mode frequencies and vanish
    identically in the commutative limit N = inf.
    """
    if not N > 0:
        raise ValueError(f"N must be positive, got {N!r}")
    if len(amplitudes) != len(modes):
        raise ValueError(
            f"amplitudes for {len(amplitudes)} modes supplied, need {len(modes)}")
    classical = 0.0
    zero_point_half = 0.0
    for mode, rows in zip(modes, amplitudes):
        if len(rows) != mode.polarization_count:
            raise ValueError(
                f"mode {mode.lattice_triple} needs {mode.polarization_count} "
                f"polarization amplitudes, got {len(rows)}")
        for amplitude in rows:
            classical += 0.5 * (amplitude.P ** 2 + mode.omega ** 2 * amplitude.Q ** 2)
        if not math.isinf(N):
            zero_point_half += mode.polarization_count * units.hbar * mode.omega / (2 * N)
    return FieldEnergy(classical, zero_point_half, 2 * zero_point_half)
