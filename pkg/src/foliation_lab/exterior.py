"""Graded polynomial differential forms and vector fields.

Forms are stored sparsely over strictly increasing index tuples, which fixes
all sign conventions structurally: a coefficient is only ever attached to the
sorted tuple, and Koszul signs come from counting transpositions during
insertion.
"""

from __future__ import annotations

from fractions import Fraction

from .groebner import Ideal
from .qalgebra import Polynomial

ZERO = Fraction(0)


class PForm:
    """Polynomial p-form on C^(n+1); coefficients indexed by sorted tuples."""

    __slots__ = ("p", "n", "coeffs")

    def __init__(self, p: int, nvars: int, coeffs=None):
        self.p = p
        self.n = nvars  # number of variables (ambient dim + 1)
        c = {}
        if coeffs:
            for idx, poly in coeffs.items():
                if poly and not poly.is_zero():
                    assert len(idx) == p and tuple(sorted(idx)) == idx
                    c[idx] = poly
        self.coeffs = c

    @staticmethod
    def zero(p: int, nvars: int) -> "PForm":
        return PForm(p, nvars)

    @staticmethod
    def from_function(poly: Polynomial) -> "PForm":
        return PForm(0, poly.n, {(): poly})

    @staticmethod
    def basis(idx: tuple, nvars: int) -> "PForm":
        """dx_{i1} ^ ... ^ dx_{ip} for strictly increasing indices."""
        return PForm(len(idx), nvars, {idx: Polynomial.const(nvars, 1)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient_degree(self):
        """Common total degree of all coefficients, None if mixed or zero."""
        degs = set()
        for poly in self.coeffs.values():
            d = poly.homogeneous_degree()
            if d is None:
                return None
            degs.add(d)
        if len(degs) == 1:
            return degs.pop()
        return None

    def __add__(self, other: "PForm") -> "PForm":
        assert self.p == other.p and self.n == other.n
        c = dict(self.coeffs)
        for idx, poly in other.coeffs.items():
            s = c.get(idx)
            c[idx] = poly if s is None else s + poly
        return PForm(self.p, self.n, c)

    def __sub__(self, other: "PForm") -> "PForm":
        return self + other.scale(-1)

    def scale(self, c) -> "PForm":
        return PForm(self.p, self.n,
                     {idx: poly.scale(c) for idx, poly in self.coeffs.items()})

    def mul_poly(self, f: Polynomial) -> "PForm":
        return PForm(self.p, self.n,
                     {idx: poly * f for idx, poly in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return (isinstance(other, PForm) and self.p == other.p
                and self.n == other.n and self.coeffs == other.coeffs)

    def __repr__(self):
        return f"PForm(p={self.p}, terms={len(self.coeffs)})"


class VectorField:
    """Polynomial vector field: one component per partial derivative."""

    __slots__ = ("n", "components")

    def __init__(self, components):
        self.components = list(components)
        self.n = self.components[0].n

    @staticmethod
    def radial(nvars: int) -> "VectorField":
        return VectorField([Polynomial.variable(i, nvars) for i in range(nvars)])

    @staticmethod
    def coordinate(i: int, nvars: int) -> "VectorField":
        comps = [Polynomial.zero(nvars) for _ in range(nvars)]
        comps[i] = Polynomial.const(nvars, 1)
        return VectorField(comps)


def wedge(a: PForm, b: PForm) -> PForm:
    assert a.n == b.n, "ambient dimension mismatch"
    out = {}
    for ia, pa in a.coeffs.items():
        for ib, pb in b.coeffs.items():
            idx, sign = _merge_indices(ia, ib)
            if idx is None:
                continue
            term = (pa * pb).scale(sign)
            s = out.get(idx)
            out[idx] = term if s is None else s + term
    return PForm(a.p + b.p, a.n, out)


def _merge_indices(ia: tuple, ib: tuple):
    """Merge sorted index tuples, counting the Koszul sign; None on repeats."""
    if set(ia) & set(ib):
        return None, 0
    merged = list(ia)
    sign = 1
    for i in ib:
        pos = 0
        while pos < len(merged) and merged[pos] < i:
            pos += 1
        sign *= (-1) ** (len(merged) - pos)
        merged.insert(pos, i)
    return tuple(merged), sign


def exterior_derivative(a: PForm) -> PForm:
    out = PForm.zero(a.p + 1, a.n)
    for idx, poly in a.coeffs.items():
        for i in range(a.n):
            dpoly = poly.diff(i)
            if dpoly.is_zero():
                continue
            newidx, sign = _merge_indices((i,), idx)
            if newidx is None:
                continue
            out = out + PForm(a.p + 1, a.n, {newidx: dpoly.scale(sign)})
    return out


def contract(X: VectorField, a: PForm) -> PForm:
    """Interior product i_X a."""
    assert X.n == a.n, "ambient dimension mismatch"
    if a.p == 0:
        return PForm.zero(0, a.n)
    out = {}
    for idx, poly in a.coeffs.items():
        for pos, i in enumerate(idx):
            comp = X.components[i]
            if comp.is_zero():
                continue
            rest = idx[:pos] + idx[pos + 1:]
            term = (poly * comp).scale((-1) ** pos)
            s = out.get(rest)
            out[rest] = term if s is None else s + term
    return PForm(a.p - 1, a.n, out)


def lie_radial(a: PForm) -> PForm:
    """Lie derivative along the radial field, via the Cartan formula."""
    R = VectorField.radial(a.n)
    first = contract(R, exterior_derivative(a))
    if a.p == 0:
        return first
    return first + exterior_derivative(contract(R, a))


def coefficient_ideal(a: PForm, order=None, budget=None) -> Ideal:
    """Ideal generated by all stored coefficients of the form."""
    from .groebner import DEFAULT_BUDGET
    from .qalgebra import DEGREVLEX
    gens = list(a.coeffs.values())
    return Ideal(a.n, gens, order or DEGREVLEX, budget or DEFAULT_BUDGET)


def one_form(coefficients) -> PForm:
    """Build A_0 dx_0 + ... + A_n dx_n from a coefficient list."""
    n = len(coefficients)
    coeffs = {}
    for i, poly in enumerate(coefficients):
        if poly and not poly.is_zero():
            coeffs[(i,)] = poly
    return PForm(1, coefficients[0].n, coeffs)
