"""Builders for the example families the analyses are exercised on."""

from __future__ import annotations

from fractions import Fraction

from .foliation import ProjectiveForm, pullback_linear, validate
from .qalgebra import Polynomial


def line_form() -> ProjectiveForm:
    """x0 dx1 - x1 dx0 on P^3: the simplest split foliation (e = 2)."""
    n = 4
    x = [Polynomial.variable(i, n) for i in range(n)]
    z = Polynomial.zero(n)
    return validate(3, 2, [-x[1], x[0], z, z])


def contact_form() -> ProjectiveForm:
    """x0 dx1 - x1 dx0 + x2 dx3 - x3 dx2: non-integrable, empty singular scheme."""
    n = 4
    x = [Polynomial.variable(i, n) for i in range(n)]
    return validate(3, 2, [-x[1], x[0], -x[3], x[2]])


def pencil_family(t) -> ProjectiveForm:
    """One-parameter pullback family on P^3 (fourth coefficient zero), e = 3."""
    t = Fraction(t)
    n3 = 3
    x, y, z = (Polynomial.variable(i, n3) for i in range(n3))
    a0 = (x + y.scale(1 + t)) * z
    a1 = -(x * z)
    a2 = -(x * (x + y.scale(t)))
    return pullback_linear([a0, a1, a2], names=["x", "y", "z", "w"])


def log_family_raw(l1, l2, l3) -> list:
    """Coefficients of the degree-4 logarithmic pullback family on P^3.

    The zeroth coefficient carries l0 = -(l1+l2+l3); when l0 = 0 every
    coefficient is divisible by y0 and validation rejects the raw form.
    """
    l1, l2, l3 = Fraction(l1), Fraction(l2), Fraction(l3)
    l0 = -(l1 + l2 + l3)
    n = 4
    y = [Polynomial.variable(i, n) for i in range(n)]
    a0 = (y[1] * y[2] * y[3] * y[3]).scale(l0) - y[0] * y[1] * y[2] * y[3]
    a1 = (y[0] * y[2] * y[3] * y[3]).scale(l1)
    a2 = (y[0] * y[1] * y[3] * y[3]).scale(l2)
    a3 = y[0] * y[0] * y[1] * y[2] + (y[0] * y[1] * y[2] * y[3]).scale(l3)
    return [a0, a1, a2, a3]


def log_family(l1, l2, l3) -> ProjectiveForm:
    """The degree-4 logarithmic family with l0 != 0 (twist e = 5)."""
    coeffs = log_family_raw(l1, l2, l3)
    return validate(3, 5, coeffs, names=["y0", "y1", "y2", "y3"])


def log_family_divided(l1, l2, l3) -> ProjectiveForm:
    """The l0 = 0 member after removing the common y0 factor (twist e = 4)."""
    from .qalgebra import exact_div
    l1, l2, l3 = Fraction(l1), Fraction(l2), Fraction(l3)
    if l1 + l2 + l3 != 0:
        raise ValueError("division requires l1 + l2 + l3 = 0")
    coeffs = log_family_raw(l1, l2, l3)
    n = 4
    y0 = Polynomial.variable(0, n)
    divided = [exact_div(c, y0) if not c.is_zero() else c for c in coeffs]
    return validate(3, 4, divided, names=["y0", "y1", "y2", "y3"])


def twisted_cubic_generators() -> list:
    """The three quadric generators of the twisted cubic in P^3."""
    n = 4
    x = [Polynomial.variable(i, n) for i in range(n)]
    return [x[0] * x[2] - x[1] * x[1],
            x[0] * x[3] - x[1] * x[2],
            x[1] * x[3] - x[2] * x[2]]
