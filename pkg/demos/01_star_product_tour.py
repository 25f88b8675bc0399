#!/usr/bin/env python3
"""A walking tour of the exact star product on phase-space polynomials.

Everything printed here is computed in exact rational arithmetic: the
equalities are identities, not approximations.
"""

import math
from fractions import Fraction

from phasestar import (DeformationParameter, PhasePolynomial,
                       classical_limit_bracket, format_canonical,
                       parse_expression, poisson_bracket, star_commutator,
                       star_first_order, star_product)


def show(label, poly):
    print(f"  {label:32s} {format_canonical(poly)}")


def main():
    q = PhasePolynomial.variable_q(1, 0)
    p = PhasePolynomial.variable_p(1, 0)
    param = DeformationParameter(N=2)

    print("The deformed product of two coordinates picks up an hbar term:")
    show("q1 (star) p1 =", star_product(q, p, param))
    show("p1 (star) q1 =", star_product(p, q, param))
    print()

    print("Identical factors feel nothing (the kernel is antisymmetric):")
    show("p1 (star) p1 =", star_product(p, p, param))
    show("q1^3 (star) q1^2 =", star_product(q ** 3, q ** 2, param))
    print()

    print("The commutator is canonical at N=2, and scales like 2/N otherwise:")
    show("[q1, p1] at N=2 =", star_commutator(q, p, param))
    show("[q1, p1] at N=8 =", star_commutator(q, p, DeformationParameter(N=8)))
    print()

    print("First-order truncation agrees with the full series on linear")
    print("factors and differs from grade hbar^2 up on higher ones:")
    full = star_product(q ** 2, p ** 2, param)
    truncated = star_first_order(q ** 2, p ** 2, param)
    show("q1^2 (star) p1^2 full =", full)
    show("q1^2 (star) p1^2 truncated =", truncated)
    show("difference =", full - truncated)
    print()

    print("Dividing the commutator by 2i*hbar/N lowers the grade and lands")
    print("on the Poisson bracket:")
    f = q ** 2
    g = p ** 2
    show("{q1^2, p1^2} =", poisson_bracket(f, g))
    show("limit bracket =", classical_limit_bracket(f, g, param))
    print()

    print("The commutative limit N -> infinity is exact, not approximate:")
    free = DeformationParameter(N=math.inf)
    show("q1 (star) p1, N=inf =", star_product(q, p, free))
    print()

    print("The expression language round-trips canonical forms:")
    source = "q1*p1 + 0.5*i*hbar"
    parsed = parse_expression(source, 1)
    print(f"  parse({source!r}) renders back as {format_canonical(parsed)!r}")

    print()
    print("Associativity holds exactly; here is one spot check:")
    a = parse_expression("(q1 + 2*p1)^2", 1)
    b = parse_expression("q1 - i*p1", 1)
    c = parse_expression("p1^3 + q1", 1)
    left = star_product(star_product(a, b, param), c, param)
    right = star_product(a, star_product(b, c, param), param)
    print(f"  (a*b)*c == a*(b*c): {left == right}")


if __name__ == "__main__":
    main()
