"""Star product, star commutator, Poisson bracket and the classical limit.

The star product deforms pointwise multiplication with an exponential of the
antisymmetric bidifferential operator

    sum_i ( d/dq_i acting left * d/dp_i acting right
          - d/dp_i acting left * d/dq_i acting right )

scaled by i*hbar/N.  On polynomials the exponential series terminates after
min(deg f, deg g) applications, because each application lowers both
arguments' phase degree by one, so every result here is exact.

The k-th series term expands multinomially over the per-dimension derivative
splits: with q-derivative counts ``a`` (on the left factor) and p-derivative
counts ``b``, the contribution is

    (i*hbar/N)**k * (-1)**|b| / (a! b!) * (D_q^a D_p^b f) * (D_p^a D_q^b g)

summed over all splits with |a| + |b| = k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Optional

from .algebra import ComplexFraction, MultiIndex, PhasePolynomial, exact_fraction

# i**k for k mod 4
_I_POWERS = (
    ComplexFraction(1, 0),
    ComplexFraction(0, 1),
    ComplexFraction(-1, 0),
    ComplexFraction(0, -1),
)


@dataclass(frozen=True)
class DeformationParameter:
    """Deformation strength and treatment of hbar.

    ``N`` is the positive constant dividing hbar in the deformation kernel;
    ``math.inf`` selects the exact commutative (free-field) limit, with no
    float noise.  ``hbar_value=None`` keeps hbar as a formal grading symbol;
    a number substitutes it into the coefficients instead.
    """

    N: float = 2.0
    hbar_value: Optional[float] = None

    def __post_init__(self):
        if not self.N > 0:
            raise ValueError(f"N must be positive, got {self.N!r}")
        if self.hbar_value is not None and self.hbar_value < 0:
            raise ValueError(f"hbar_value must be non-negative, got {self.hbar_value!r}")

    @property
    def symbolic_hbar(self) -> bool:
        return self.hbar_value is None

    @property
    def inverse_n(self) -> Fraction:
        """Exact 1/N; exactly zero in the commutative limit."""
        if math.isinf(self.N):
            return Fraction(0)
        return Fraction(1) / exact_fraction(self.N)


def _check_dimensions(f: PhasePolynomial, g: PhasePolynomial) -> None:
    if f.dimension != g.dimension:
        raise ValueError(f"dimension mismatch: {f.dimension} vs {g.dimension}")


def _splits(total: int, parts: int) -> Iterator[tuple]:
    """All tuples of `parts` non-negative integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _splits(total - first, parts - 1):
            yield (first,) + rest


def _derivative_lookup(f: PhasePolynomial) -> Callable:
    """Memoized mixed partials of f, keyed by (q-counts, p-counts)."""
    d = f.dimension
    zero = (0,) * d
    cache = {(zero, zero): f}

    def lookup(q_counts: tuple, p_counts: tuple) -> PhasePolynomial:
        key = (q_counts, p_counts)
        found = cache.get(key)
        if found is not None:
            return found
        for i in range(d):
            if q_counts[i]:
                lower = q_counts[:i] + (q_counts[i] - 1,) + q_counts[i + 1:]
                result = lookup(lower, p_counts).partial_q(i)
                break
        else:
            for i in range(d):
                if p_counts[i]:
                    lower = p_counts[:i] + (p_counts[i] - 1,) + p_counts[i + 1:]
                    result = lookup(q_counts, lower).partial_p(i)
                    break
        cache[key] = result
        return result

    return lookup


def _accumulate_series(acc: dict, f: PhasePolynomial, g: PhasePolynomial,
                       param: DeformationParameter, k_max: int) -> None:
    """Add the series terms k = 0 .. k_max of f (star) g into acc."""
    d = f.dimension
    inv_n = param.inverse_n
    hbar_frac = None if param.symbolic_hbar else exact_fraction(param.hbar_value)
    left = _derivative_lookup(f)
    right = _derivative_lookup(g)

    for k in range(k_max + 1):
        if k > 0 and inv_n == 0:
            break
        base = inv_n ** k
        if hbar_frac is not None:
            base *= hbar_frac ** k
            if base == 0 and k > 0:
                break
        i_power = _I_POWERS[k % 4]
        grade_shift = k if param.symbolic_hbar else 0
        for split in _splits(k, 2 * d):
            a, b = split[:d], split[d:]
            f_part = left(a, b)
            if f_part.is_zero:
                continue
            g_part = right(b, a)
            if g_part.is_zero:
                continue
            denominator = 1
            for e in split:
                denominator *= math.factorial(e)
            scale = base / denominator
            if sum(b) % 2:
                scale = -scale
            prefactor = ComplexFraction(i_power.real * scale, i_power.imag * scale)
            for i1, c1 in f_part.terms.items():
                for i2, c2 in g_part.terms.items():
                    index = MultiIndex(
                        tuple(x + y for x, y in zip(i1.q_exponents, i2.q_exponents)),
                        tuple(x + y for x, y in zip(i1.p_exponents, i2.p_exponents)),
                        i1.hbar_power + i2.hbar_power + grade_shift)
                    value = c1 * c2 * prefactor
                    prev = acc.get(index)
                    total = value if prev is None else prev + value
                    if total.is_zero():
                        acc.pop(index, None)
                    else:
                        acc[index] = total


def star_product(f: PhasePolynomial, g: PhasePolynomial,
                 param: DeformationParameter = DeformationParameter()) -> PhasePolynomial:
    """The full star product f (star) g, exact to all orders."""
    _check_dimensions(f, g)
    acc: dict = {}
    k_max = min(f.total_degree(), g.total_degree())
    _accumulate_series(acc, f, g, param, k_max)
    return PhasePolynomial._from_clean(f.dimension, acc)


def star_first_order(f: PhasePolynomial, g: PhasePolynomial,
                     param: DeformationParameter = DeformationParameter()) -> PhasePolynomial:
    """Star product truncated to first order in hbar/N.

    Agrees exactly with :func:`star_product` whenever either argument has
    phase degree at most one; otherwise they differ from grade hbar**2 up.
    """
    _check_dimensions(f, g)
    acc: dict = {}
    k_max = min(1, f.total_degree(), g.total_degree())
    _accumulate_series(acc, f, g, param, k_max)
    return PhasePolynomial._from_clean(f.dimension, acc)


def star_commutator(f: PhasePolynomial, g: PhasePolynomial,
                    param: DeformationParameter = DeformationParameter()) -> PhasePolynomial:
    """f (star) g - g (star) f.

    For canonical pairs this is i*hbar*(2/N)*delta_ij, which reduces to the
    canonical commutation value i*hbar*delta_ij exactly when N = 2.
    """
    return star_product(f, g, param) - star_product(g, f, param)


def poisson_bracket(f: PhasePolynomial, g: PhasePolynomial) -> PhasePolynomial:
    """Classical Poisson bracket {f, g} = sum_i (df/dq_i dg/dp_i - df/dp_i dg/dq_i)."""
    _check_dimensions(f, g)
    total = PhasePolynomial.zero(f.dimension)
    for i in range(f.dimension):
        total = total + f.partial_q(i) * g.partial_p(i) - f.partial_p(i) * g.partial_q(i)
    return total


def classical_limit_bracket(f: PhasePolynomial, g: PhasePolynomial,
                            param: DeformationParameter = DeformationParameter()) -> PhasePolynomial:
    """The star commutator divided by 2*i*hbar/N, with the grade lowered by one.

    Its hbar**0 component equals the Poisson bracket, which is the
    correspondence that makes the deformation a quantization.  Requires the
    symbolic hbar treatment (the grading must be lowered) and finite N.
    """
    if not param.symbolic_hbar:
        raise ValueError("classical_limit_bracket requires symbolic hbar treatment")
    if math.isinf(param.N):
        raise ValueError("classical_limit_bracket requires finite N")
    commutator = star_commutator(f, g, param)
    # 1 / (2i/N) = -i N / 2; every commutator term carries hbar_power >= 1
    # because the grade-0 layers of f*g and g*f coincide.
    scale = ComplexFraction(0, -exact_fraction(param.N) / 2)
    out = {}
    for index, coefficient in commutator.terms.items():
        lowered = MultiIndex(index.q_exponents, index.p_exponents,
                             index.hbar_power - 1)
        out[lowered] = coefficient * scale
    return PhasePolynomial._from_clean(f.dimension, out)
