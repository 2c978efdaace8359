"""Rational forms of eventually periodic series.

An eventually periodic coefficient stream sums to

    f(z) = head(z) + z^len(head) * block(z) / (1 - z^T),   T = len(block),

a rational function whose poles sit among the T-th roots of unity.  This
module reduces that representation: roots of unity where the combined
numerator vanishes are cancelled, the rest are reported as poles.

Gaussian-integer inputs are reduced exactly over the cyclotomic
factorization of 1 - z^T; other inputs fall back to numeric root matching
with a 1e-9 tolerance.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

__all__ = ["RootOfUnityPole", "RationalForm", "reduce_eventually_periodic"]

_NUMERIC_POLE_TOL = 1e-9


@dataclass(frozen=True)
class RootOfUnityPole:
    """The pole e^(2*pi*i*num/den) in lowest terms."""

    num: int
    den: int

    @property
    def angle(self) -> float:
        return 2.0 * math.pi * self.num / self.den

    @property
    def value(self) -> complex:
        return cmath.exp(2j * math.pi * self.num / self.den)

    def label(self) -> str:
        return f"exp(2*pi*i*{self.num}/{self.den})"


@dataclass(frozen=True)
class RationalForm:
    """Reduced f = numerator/denominator with poles at roots of unity.

    Coefficient tuples are ascending in the exponent.  ``exact`` marks an
    exact cyclotomic reduction; otherwise cancellation was decided
    numerically.
    """

    numerator: tuple
    denominator: tuple
    poles: tuple
    period: int
    preperiod: int
    exact: bool

    def numerator_value(self, z: complex) -> complex:
        return sum(c * z ** k for k, c in enumerate(self.numerator))

    def denominator_value(self, z: complex) -> complex:
        return sum(c * z ** k for k, c in enumerate(self.denominator))

    def value(self, z: complex) -> complex:
        return self.numerator_value(z) / self.denominator_value(z)

    def to_json_dict(self) -> dict:
        return {
            "numerator": [[c.real, c.imag] for c in self.numerator],
            "denominator": [[c.real, c.imag] for c in self.denominator],
            "poles": [{"num": p.num, "den": p.den, "angle": p.angle}
                      for p in self.poles],
            "period": self.period,
            "preperiod": self.preperiod,
            "exact": self.exact,
        }


def _is_gaussian_integer(v: complex) -> bool:
    return float(v.real).is_integer() and float(v.imag).is_integer()


def _combined_numerator(head, block):
    """Coefficients of head(z)*(1 - z^T) + z^len(head)*block(z), ascending."""
    T, pp = len(block), len(head)
    out = np.zeros(pp + T, dtype=complex)
    for k, c in enumerate(head):
        out[k] += c
        out[k + T] -= c
    for k, c in enumerate(block):
        out[pp + k] += c
    return out


def _trim(coeffs):
    arr = np.asarray(coeffs, dtype=complex)
    nz = np.nonzero(np.abs(arr) > 0)[0]
    if nz.size == 0:
        return np.zeros(1, dtype=complex)
    return arr[: nz[-1] + 1]


def _reduce_exact(num_coeffs, T, pp):
    import sympy

    z = sympy.Symbol("z")
    has_imag = any(c.imag for c in num_coeffs)
    dom = "QQ_I" if has_imag else "QQ"

    expr = sympy.Integer(0)
    for k, c in enumerate(num_coeffs):
        coef = sympy.Integer(int(c.real))
        if has_imag:
            coef = coef + sympy.Integer(int(c.imag)) * sympy.I
        expr = expr + coef * z ** k
    npoly = sympy.Poly(expr, z, domain=dom)

    survivors, cancelled = [], []
    quotient = -npoly  # 1 - z^T = -(z^T - 1) = -(product of cyclotomics)
    for d in (d for d in range(1, T + 1) if T % d == 0):
        if npoly.is_zero:
            cancelled.append(d)
            continue
        cyc = sympy.Poly(sympy.cyclotomic_poly(d, z), z, domain=dom)
        q, r = quotient.div(cyc)
        if r.is_zero:
            quotient = q
            cancelled.append(d)
        else:
            survivors.append(d)

    den = sympy.Poly(1, z, domain=dom)
    for d in survivors:
        den = den * sympy.Poly(sympy.cyclotomic_poly(d, z), z, domain=dom)

    def to_tuple(poly):
        cs = poly.all_coeffs()[::-1]  # ascending order
        return tuple(complex(sympy.re(c)) + 1j * float(sympy.im(c)) for c in cs)

    poles = []
    for d in survivors:
        for k in range(d):
            if math.gcd(k, d) == 1:
                poles.append(RootOfUnityPole(k, d))
    poles.sort(key=lambda p: (p.angle, p.den))
    num_tuple = (0j,) if npoly.is_zero else to_tuple(quotient)
    return RationalForm(num_tuple, to_tuple(den), tuple(poles), T, pp, True)


def _synthetic_div(coeffs, root):
    """Divide an ascending-coefficient polynomial by (z - root)."""
    desc = coeffs[::-1]
    out = np.zeros(len(desc) - 1, dtype=complex)
    acc = 0j
    for i, c in enumerate(desc[:-1]):
        acc = c + acc * root
        out[i] = acc
    return out[::-1]


def _reduce_numeric(num_coeffs, T, pp):
    num = _trim(num_coeffs)
    scale = max(1.0, float(np.sum(np.abs(num))))
    roots = [cmath.exp(2j * math.pi * k / T) for k in range(T)]
    surviving, cancelled = [], []
    for k, w in enumerate(roots):
        val = sum(c * w ** j for j, c in enumerate(num))
        (cancelled if abs(val) <= _NUMERIC_POLE_TOL * scale else surviving).append(k)

    red = -num
    for k in cancelled:
        if len(red) > 1:
            red = _synthetic_div(red, roots[k])
    den = np.ones(1, dtype=complex)
    for k in surviving:
        den = np.convolve(den, np.array([-roots[k], 1.0]))
    poles = []
    for k in surviving:
        g = math.gcd(k, T) if k else T
        poles.append(RootOfUnityPole((k // g) % (T // g) if k else 0, T // g))
    poles.sort(key=lambda p: (p.angle, p.den))
    return RationalForm(tuple(complex(c) for c in red),
                        tuple(complex(c) for c in den),
                        tuple(poles), T, pp, False)


def reduce_eventually_periodic(head, block) -> RationalForm:
    """Reduced rational form of the series with preperiodic ``head`` and
    repeating ``block``."""
    head = [complex(v) for v in head]
    block = [complex(v) for v in block]
    if not block:
        raise ValueError("period block must be nonempty")
    num = _combined_numerator(head, block)
    if all(_is_gaussian_integer(c) for c in num):
        return _reduce_exact(num, len(block), len(head))
    return _reduce_numeric(num, len(block), len(head))
