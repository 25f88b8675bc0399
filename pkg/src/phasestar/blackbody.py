"""Spectral energy density of cavity radiation, with a zero-point term.

The central quantity is

    rho(w, T) = w**2 / (pi**2 c**3) * ( hbar*w / (exp(hbar*w/(k*T)) - 1)
                                        + hbar*w / 2 )

split everywhere into its thermal and zero-point parts.  The closed form is
checked against a direct Boltzmann-weighted average over the oscillator
ladder W_n = (n + 1/2) hbar w, evaluated as a ratio of truncated sums with a
documented geometric tail bound.  Classical-limit, peak-location and
integral checks round out the module.

Numerical policy: x = hbar*w/(k*T) is handled with expm1 so the formulas
stay accurate down to x ~ 1e-8; for x > 700 the thermal part is flushed to
exactly zero (underflow policy), as it is whenever it falls below 1e-300.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.optimize import brentq

from .units import NATURAL, UnitSystem

# x beyond which exp(x) - 1 would overflow a double; thermal part is 0 there.
X_OVERFLOW = 700.0
# Thermal occupations below this are flushed to exactly zero.
THERMAL_FLUSH = 1e-300
# Hard cap on ladder-sum terms; beyond it the required length is reported.
LADDER_TERM_CAP = 10_000_000

# Column order of spectrum sweeps (CSV header and JSON keys, token for token).
SPECTRUM_FIELDS = ("omega", "temperature", "thermal_density",
                   "zero_point_density", "total_density", "x")


class LadderTermCapExceeded(ValueError):
    """The tail bound demands more ladder terms than the configured cap."""

    def __init__(self, required_terms: int, cap: int):
        super().__init__(
            f"ladder sum needs {required_terms} terms for the requested "
            f"tolerance, above the cap of {cap}")
        self.required_terms = required_terms
        self.cap = cap


@dataclass(frozen=True)
class SpectrumPoint:
    """One spectral sample: densities are per volume per angular frequency."""

    omega: float
    temperature: float
    thermal_density: float
    zero_point_density: float
    total_density: float

    def __post_init__(self):
        if self.thermal_density < 0 or self.zero_point_density < 0:
            raise ValueError("densities must be non-negative")
        if self.total_density != self.thermal_density + self.zero_point_density:
            raise ValueError("total density must equal thermal plus zero-point")


def _check_domain(omega: float, temperature: float) -> None:
    if not omega > 0:
        raise ValueError(f"omega must be positive, got {omega!r}")
    if not temperature > 0:
        raise ValueError(f"temperature must be positive, got {temperature!r}")


def _thermal_occupation_energy(x: float, quantum: float) -> float:
    """hbar*w / (exp(x) - 1) with the documented underflow policy."""
    if x > X_OVERFLOW:
        return 0.0
    thermal = quantum / math.expm1(x)
    return 0.0 if thermal < THERMAL_FLUSH else thermal


def mean_oscillator_energy(omega: float, temperature: float,
                           units: UnitSystem = NATURAL,
                           include_zero_point: bool = True) -> float:
    """Mean thermal energy of one oscillator, plus hbar*w/2 when asked.

    The thermal part is hbar*w/(exp(hbar*w/kT) - 1); in the strong
    suppression limit the total tends to the bare zero point hbar*w/2.
    """
    _check_domain(omega, temperature)
    quantum = units.hbar * omega
    x = quantum / (units.k_boltzmann * temperature)
    thermal = _thermal_occupation_energy(x, quantum)
    return thermal + 0.5 * quantum if include_zero_point else thermal


def _density_prefactor(omega: float, units: UnitSystem) -> float:
    return omega ** 2 / (math.pi ** 2 * units.c_light ** 3)


def spectral_density(omega: float, temperature: float,
                     units: UnitSystem = NATURAL,
                     include_zero_point: bool = True) -> SpectrumPoint:
    """Closed-form spectral energy density, split thermal vs zero point.

    With ``include_zero_point=False`` this is the textbook radiation law;
    the default keeps the hbar*w/2 per-mode term in a separate field so the
    two contributions are never conflated.
    """
    _check_domain(omega, temperature)
    quantum = units.hbar * omega
    x = quantum / (units.k_boltzmann * temperature)
    prefactor = _density_prefactor(omega, units)
    thermal = prefactor * _thermal_occupation_energy(x, quantum)
    zero_point = prefactor * 0.5 * quantum if include_zero_point else 0.0
    return SpectrumPoint(omega, temperature, thermal, zero_point,
                         thermal + zero_point)


def spectral_density_per_frequency(nu: float, temperature: float,
                                   units: UnitSystem = NATURAL,
                                   include_zero_point: bool = True) -> SpectrumPoint:
    """Density per unit ordinary frequency nu = w/(2*pi).

    Derived view: the 2*pi Jacobian is applied to every density field of the
    angular-frequency form at w = 2*pi*nu.
    """
    point = spectral_density(2 * math.pi * nu, temperature, units,
                             include_zero_point)
    scale = 2 * math.pi
    return SpectrumPoint(nu, temperature, scale * point.thermal_density,
                         scale * point.zero_point_density,
                         scale * point.thermal_density + scale * point.zero_point_density)


# ----------------------------------------------------------------------
# ladder-sum route


def ladder_terms_for_tolerance(x: float, rel_tol: float = 1e-14,
                               cap: int = LADDER_TERM_CAP) -> int:
    """Smallest n_max whose dropped ladder tail is below rel_tol.

    The remainder of sum(n * r**n) past n_max, with r = exp(-x), is bounded
    by (n_max + 2) * r**(n_max + 1) / (1 - r)**2; this is compared against
    rel_tol times the leading term r of the same sum, giving the criterion

        (n_max + 2) * exp(-n_max * x) <= rel_tol * (1 - exp(-x))**2

    which is monotone in n_max and solved by bisection.  Raises
    LadderTermCapExceeded (reporting the required length) past the cap.
    """
    if not x > 0:
        raise ValueError(f"x must be positive, got {x!r}")
    if not 0 < rel_tol < 1:
        raise ValueError(f"rel_tol must be in (0, 1), got {rel_tol!r}")
    target = math.log(rel_tol) + 2 * math.log(-math.expm1(-x))

    def satisfied(n: int) -> bool:
        return math.log(n + 2) - n * x <= target

    low, high = 0, 1
    while not satisfied(high):
        high *= 2
        if high > 2 ** 60:
            raise RuntimeError("tail bound did not close; x too small")
    while low < high:
        mid = (low + high) // 2
        if satisfied(mid):
            high = mid
        else:
            low = mid + 1
    if low > cap:
        raise LadderTermCapExceeded(low, cap)
    return low


def spectral_density_ladder_sum(omega: float, temperature: float,
                                units: UnitSystem = NATURAL,
                                n_max: Optional[int] = None,
                                include_zero_point: bool = True) -> SpectrumPoint:
    """Spectral density from Boltzmann-weighted sums over the ladder.

    Evaluates the mean energy as the ratio of truncated sums of
    (n + 1/2) hbar w weighted by exp(-(n + 1/2) hbar w / kT).  The common
    factor exp(-x/2) and any overall weight scale cancel in the ratio, and
    the half quantum separates algebraically:

        mean = hbar*w * sum(n e^(-n x)) / sum(e^(-n x))  +  hbar*w/2

    which is how it is computed here, keeping the thermal part free of
    cancellation.  When n_max is None it comes from the documented tail
    bound.  The half-quantum the sums inherently contain goes to the
    zero-point field; ``include_zero_point=False`` drops it from the total.
    """
    _check_domain(omega, temperature)
    quantum = units.hbar * omega
    x = quantum / (units.k_boltzmann * temperature)
    if n_max is None:
        n_max = ladder_terms_for_tolerance(x)
    elif not isinstance(n_max, int) or n_max < 0:
        raise ValueError(f"n_max must be a non-negative integer, got {n_max!r}")
    levels = np.arange(n_max + 1, dtype=np.float64)
    weights = np.exp(-x * levels)
    denominator = float(np.sum(weights))
    numerator = float(np.sum(levels * weights))
    thermal_mean = quantum * numerator / denominator
    prefactor = _density_prefactor(omega, units)
    thermal = prefactor * thermal_mean
    zero_point = prefactor * 0.5 * quantum if include_zero_point else 0.0
    return SpectrumPoint(omega, temperature, thermal, zero_point,
                         thermal + zero_point)


# ----------------------------------------------------------------------
# classical limit, peak, integrals


def rayleigh_jeans_density(omega: float, temperature: float,
                           units: UnitSystem = NATURAL) -> float:
    """Classical spectral density w**2 k T / (pi**2 c**3).

    The hbar -> 0 limit of the thermal part; it exceeds the thermal density
    for every x > 0, which is the ultraviolet catastrophe the quantum form
    cures.
    """
    _check_domain(omega, temperature)
    return _density_prefactor(omega, units) * units.k_boltzmann * temperature


def wien_peak(temperature: float, units: UnitSystem = NATURAL) -> float:
    """Angular frequency maximizing the thermal density at temperature T.

    Maximizing x**3/(exp(x) - 1) reduces to the root condition
    3*(1 - exp(-x)) = x on the bracket [2, 3]; the peak sits at
    w = x* k T / hbar and scales linearly with T.  The zero-point part is
    excluded: it grows without bound in w and has no peak.
    """
    if not temperature > 0:
        raise ValueError(f"temperature must be positive, got {temperature!r}")
    x_star = wien_x_constant()
    return x_star * units.k_boltzmann * temperature / units.hbar


def wien_x_constant() -> float:
    """The dimensionless root x* of 3*(1 - exp(-x)) = x, about 2.821439.

    Located by bracketed root-finding (Brent) on [2, 3], where the
    condition changes sign exactly once.
    """
    return float(brentq(lambda x: 3 * (1 - math.exp(-x)) - x, 2.0, 3.0,
                        xtol=1e-14, rtol=8.9e-16))


class QuadratureError(RuntimeError):
    """Quadrature self-check failed; carries the achieved error estimate."""

    def __init__(self, estimate: float):
        super().__init__(f"quadrature did not converge; error estimate {estimate:.3e}")
        self.estimate = estimate


def _bose_integrand(x):
    """x**3/(exp(x) - 1), continued by its limit 0 at x = 0.

    Evaluated as x**3 * exp(-x) / (1 - exp(-x)), which neither overflows at
    large x nor loses accuracy near 0 (where it behaves as x**2).
    """
    x = np.asarray(x, dtype=np.float64)
    out = np.zeros_like(x)
    positive = x > 0
    xp = x[positive]
    out[positive] = xp ** 3 * np.exp(-xp) / (-np.expm1(-xp))
    return out


def _bose_quadrature(points: int) -> float:
    # Map (0, inf) to (0, 1) by x = t/(1-t); integrand decays fast enough
    # that Gauss-Legendre on the mapped interval converges rapidly.
    nodes, weights = np.polynomial.legendre.leggauss(points)
    t = 0.5 * (nodes + 1.0)
    w = 0.5 * weights
    x = t / (1.0 - t)
    jacobian = 1.0 / (1.0 - t) ** 2
    return float(np.sum(w * _bose_integrand(x) * jacobian))


def stefan_boltzmann_integral(units: UnitSystem = NATURAL,
                              quadrature_points: int = 128):
    """Quadrature of the dimensionless integral behind the T**4 law.

    Returns ``(integral, coefficient)`` where integral approximates
    int_0^inf x**3/(exp(x)-1) dx (exactly pi**4/15) and coefficient is
    k**4/(hbar**3 c**3 pi**2) times the integral, so the total thermal
    energy density is coefficient * T**4.

    A self-convergence estimate against a 25% finer rule guards the result;
    failure raises QuadratureError with the achieved estimate.
    """
    if not isinstance(quadrature_points, int) or quadrature_points < 64:
        raise ValueError(
            f"quadrature_points must be an integer >= 64, got {quadrature_points!r}")
    integral = _bose_quadrature(quadrature_points)
    refined = _bose_quadrature(quadrature_points + quadrature_points // 4)
    estimate = abs(integral - refined) / abs(integral)
    if estimate > 1e-8:
        raise QuadratureError(estimate)
    coefficient = integral * units.k_boltzmann ** 4 / (
        units.hbar ** 3 * units.c_light ** 3 * math.pi ** 2)
    return integral, coefficient


def zero_point_cutoff_energy(omega_cutoff: float, units: UnitSystem = NATURAL,
                             N: float = 2.0) -> float:
    """Zero-point energy density integrated up to a frequency cutoff.

    int_0^wc (w**2/pi**2 c**3) (hbar w / N) dw = hbar wc**4 / (4 N pi**2 c**3),
    the quartic growth that diverges as the cutoff is removed.  At N = 2 this
    is hbar wc**4/(8 pi**2 c**3); the commutative limit N = inf returns
    exactly zero, the one case with no divergence.
    """
    if not omega_cutoff > 0:
        raise ValueError(f"omega_cutoff must be positive, got {omega_cutoff!r}")
    if not N > 0:
        raise ValueError(f"N must be positive, got {N!r}")
    if math.isinf(N):
        return 0.0
    return units.hbar * omega_cutoff ** 4 / (4 * N * math.pi ** 2 * units.c_light ** 3)


# ----------------------------------------------------------------------
# sweeps


def spectrum_sweep(temperature: float, omega_min: float, omega_max: float,
                   points: int, spacing: str = "log",
                   units: UnitSystem = NATURAL,
                   include_zero_point: bool = True) -> list:
    """Closed-form SpectrumPoint rows over a log- or linear-spaced grid."""
    if not 0 < omega_min < omega_max:
        raise ValueError("need 0 < omega_min < omega_max")
    if not isinstance(points, int) or points < 2:
        raise ValueError(f"points must be an integer >= 2, got {points!r}")
    if spacing == "log":
        grid = np.geomspace(omega_min, omega_max, points)
    elif spacing == "linear":
        grid = np.linspace(omega_min, omega_max, points)
    else:
        raise ValueError(f"spacing must be 'log' or 'linear', got {spacing!r}")
    return [spectral_density(float(w), temperature, units, include_zero_point)
            for w in grid]


def dimensionless_x(omega: float, temperature: float,
                    units: UnitSystem = NATURAL) -> float:
    """The ratio hbar*w/(k*T) that controls every formula above."""
    return units.hbar * omega / (units.k_boltzmann * temperature)
