#!/usr/bin/env python3
"""The radiation law with its zero-point term, against its own oracles.

Prints a small spectrum table in natural units, compares the closed form
with the Boltzmann ladder sum, recovers the classical law at small x,
locates the peak, and shows the quartic laws on both sides of the spectrum:
the T^4 thermal integral and the cutoff^4 zero-point divergence.
"""

import math

from phasestar import (dimensionless_x, ladder_terms_for_tolerance,
                       rayleigh_jeans_density, spectral_density,
                       spectral_density_ladder_sum, stefan_boltzmann_integral,
                       wien_peak, wien_x_constant, zero_point_cutoff_energy)


def main():
    temperature = 1.0
    print(f"Spectral density at T = {temperature} (natural units), with the")
    print("zero-point column kept separate from the thermal one:")
    print(f"  {'omega':>6} {'x':>6} {'thermal':>12} {'zero-point':>12} {'ladder sum':>12} {'n_max':>6}")
    for omega in (0.25, 0.5, 1.0, 2.0, 4.0, 8.0):
        closed = spectral_density(omega, temperature)
        summed = spectral_density_ladder_sum(omega, temperature)
        x = dimensionless_x(omega, temperature)
        n_max = ladder_terms_for_tolerance(x)
        print(f"  {omega:6.2f} {x:6.2f} {closed.thermal_density:12.6e} "
              f"{closed.zero_point_density:12.6e} {summed.total_density:12.6e} {n_max:6d}")
    print()

    print("Closed form vs ladder sum, worst relative deviation over a grid:")
    worst = 0.0
    for x in (0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0):
        closed = spectral_density(1.0, 1.0 / x)
        summed = spectral_density_ladder_sum(1.0, 1.0 / x)
        worst = max(worst, abs(summed.total_density - closed.total_density)
                    / closed.total_density)
    print(f"  {worst:.3e}")
    print()

    print("Classical limit: at x = 1e-6 the thermal part meets the")
    print("classical density to half a part per million:")
    x = 1e-6
    thermal = spectral_density(1.0, 1.0 / x).thermal_density
    classical = rayleigh_jeans_density(1.0, 1.0 / x)
    print(f"  thermal   {thermal:.9e}")
    print(f"  classical {classical:.9e}")
    print(f"  deviation {abs(thermal - classical) / classical:.3e}")
    print()

    print("Peak of the thermal spectrum (the zero-point part is monotone")
    print("and excluded):")
    print(f"  x* = {wien_x_constant():.12f} solving 3(1 - e^-x) = x")
    for t in (1.0, 2.0, 4.0):
        print(f"  T = {t}: peak at omega = {wien_peak(t):.6f}")
    print()

    print("Thermal side integrates to the quartic law:")
    integral, coefficient = stefan_boltzmann_integral()
    print(f"  integral of x^3/(e^x - 1) = {integral:.12f}")
    print(f"  pi^4/15                  = {math.pi ** 4 / 15:.12f}")
    print(f"  energy density u(T) = {coefficient:.6f} * T^4")
    print()

    print("Zero-point side diverges quartically with the cutoff (the")
    print("commutative limit N = inf is the one case that vanishes):")
    for cutoff in (1.0, 2.0, 4.0):
        print(f"  cutoff {cutoff}: {zero_point_cutoff_energy(cutoff):.6f}")
    print(f"  cutoff 4.0 at N=inf: {zero_point_cutoff_energy(4.0, N=math.inf)}")


if __name__ == "__main__":
    main()
