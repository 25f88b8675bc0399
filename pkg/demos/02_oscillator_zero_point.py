#!/usr/bin/env python3
"""How the zero-point energy falls out of the factored oscillator product.

The factored form (p - i*w*x)/sqrt(2) (star) (p + i*w*x)/sqrt(2) equals the
classical energy plus hbar*w/N; the symmetric form (p*p + w^2 x*x)/2 carries
no shift at all.  Both are printed, along with the resulting ladder and its
commutative degeneration.
"""

import math

from phasestar import (OscillatorSpec, energy_level, format_canonical, ladder,
                       oscillator_square_form_energy, oscillator_star_energy)


def main():
    spec = OscillatorSpec(omega=1.0, N=2)

    print("Factored star energy (forward, reversed, and their average):")
    forward = oscillator_star_energy(spec)
    backward = oscillator_star_energy(spec, reverse_factors=True)
    print(f"  forward  = {format_canonical(forward)}")
    print(f"  reversed = {format_canonical(backward)}")
    average = (forward + backward) * 0.5
    print(f"  average  = {format_canonical(average)}   (the classical energy)")
    print()

    print("Symmetric ordering has no shift; ordering is where the zero")
    print("point lives:")
    print(f"  (p*p + w^2 x*x)/2 = {format_canonical(oscillator_square_form_energy(spec))}")
    print()

    print("Ladder at N=2 (the half-integer rule):")
    print("  " + "  ".join(f"W_{n}={value}" for n, value in enumerate(ladder(5, spec))))
    print()

    print("The shift scales as 1/N; a few ground-state energies:")
    for n_value in (1, 2, 10, 1000):
        ground = energy_level(0, OscillatorSpec(omega=1.0, N=n_value))
        print(f"  N={n_value:5}: W_0 = {ground}")
    free = OscillatorSpec(omega=1.0, N=math.inf)
    print(f"  N=  inf: W_0 = {energy_level(0, free)}  (exact zero, free field)")
    print()

    print("Free-field ladder loses the offset but keeps the spacing:")
    print("  " + "  ".join(f"W_{n}={value}" for n, value in enumerate(ladder(5, free))))
    print()

    print("The symbolic and numeric routes agree: evaluating the factored")
    print("energy at the origin with hbar=1 reproduces the ground level:")
    for omega, n_value in ((1.0, 2.0), (2.0, 2.0), (7.5, 10.0)):
        spec_n = OscillatorSpec(omega=omega, N=n_value)
        symbolic = oscillator_star_energy(spec_n).evaluate([0.0, 0.0], hbar_value=1.0)
        numeric = energy_level(0, spec_n)
        print(f"  w={omega:4}, N={n_value:4}: symbolic {symbolic.real} == ladder {numeric}")


if __name__ == "__main__":
    main()
