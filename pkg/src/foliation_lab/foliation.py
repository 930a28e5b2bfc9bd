"""Twisted 1-forms on projective space and their ideal-theoretic analyses.

The central objects are the singular ideal (coefficients of the form), the
degreewise unfolding ideal, the Kupka colon ideal, and the non-Kupka
saturation, together with the verdicts built on them: aCM-ness of the Kupka
scheme, tangent-sheaf splitting, connectedness, and the complete-intersection
test.  Everything is exact over Q.

The degreewise unfolding solver runs exact kernels at low degrees and, once a
candidate generating set is known, certifies higher degrees with the one-sided
mod-p rank argument, falling back to exact sparse elimination whenever the
certificate does not close.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .config import Config, DEFAULT_CONFIG
from .exterior import (
    PForm, VectorField, coefficient_ideal, contract, exterior_derivative,
    one_form, wedge,
)
from .groebner import Budget, BudgetExceeded, Ideal
from .linalg import modp_rank, sparse_kernel
from .qalgebra import (
    DEGREVLEX, ONE, ZERO, Polynomial, exact_div, graded_basis, mono_deg,
    poly_str,
)
from .resolutions import (
    is_acm, minimal_free_resolution, sheaf_cohomology_window,
)


class ValidationError(Exception):
    """Rejected input form; ``code`` names the violated precondition."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class ConstructionError(Exception):
    """Rejected constructor input (curve presentations, rational pairs)."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def default_names(nvars: int) -> list:
    return [f"x{i}" for i in range(nvars)]


# ---------------------------------------------------------------------------
# the validated form

@dataclass
class ProjectiveForm:
    """Homogeneous 1-form with i_R omega = 0 and singular locus of codim >= 2."""

    n: int                      # projective ambient dimension
    e: int                      # twist (normal class)
    coefficients: list          # n+1 polynomials of degree e-1
    names: list
    budget: Budget

    @property
    def nvars(self) -> int:
        return self.n + 1

    @property
    def d(self) -> int:
        return self.e - 2

    @property
    def omega(self) -> PForm:
        return one_form(self.coefficients)

    def domega(self) -> PForm:
        return exterior_derivative(self.omega)


def validate(n: int, e: int, coefficients, names=None,
             budget: Budget | None = None) -> ProjectiveForm:
    """Check the defining invariants and return the validated form.

    Raises ValidationError with codes: degree-mismatch, euler-violation,
    codim-1-singular-locus (reporting the common divisor).
    """
    if n < 3:
        raise ValidationError("ambient-too-small", f"need n >= 3, got {n}")
    nvars = n + 1
    if len(coefficients) != nvars:
        raise ValidationError("degree-mismatch",
                              f"expected {nvars} coefficients, got {len(coefficients)}")
    names = names or default_names(nvars)
    budget = budget or Budget(max_degree=4 * max(e, 2))
    nonzero = [c for c in coefficients if c and not c.is_zero()]
    if not nonzero:
        raise ValidationError("degree-mismatch", "the zero form is not allowed")
    for c in nonzero:
        hd = c.homogeneous_degree()
        if hd != e - 1:
            raise ValidationError(
                "degree-mismatch",
                f"coefficient {poly_str(c, names)} has degree {hd}, expected {e - 1}")
    omega = one_form(coefficients)
    euler = contract(VectorField.radial(nvars), omega)
    residue = euler.coeffs.get((), Polynomial.zero(nvars))
    if not residue.is_zero():
        raise ValidationError("euler-violation",
                              f"i_R omega = {poly_str(residue, names)} != 0")
    divisor = _common_divisor(nonzero, budget)
    if divisor is not None:
        raise ValidationError(
            "codim-1-singular-locus",
            f"coefficients share the divisor {poly_str(divisor, names)}")
    form = ProjectiveForm(n, e, list(coefficients), list(names), budget)
    if ideal_J(form).codim() < 2:
        raise ValidationError("codim-1-singular-locus",
                              "singular locus has codimension < 2")
    return form


def poly_gcd(f: Polynomial, g: Polynomial, budget: Budget | None = None) -> Polynomial:
    """gcd via lcm: the intersection of two principal ideals is principal."""
    if f.is_zero():
        return g.primitive()
    if g.is_zero():
        return f.primitive()
    budget = budget or Budget(max_degree=2 * (f.degree() + g.degree() + 2))
    inter = Ideal(f.n, [f], budget=budget).intersection(Ideal(g.n, [g], budget=budget))
    gb = inter.groebner()
    assert len(gb) == 1, "intersection of principal ideals must be principal"
    lcm = gb[0]
    return exact_div(f * g, lcm).primitive()


def _common_divisor(polys, budget):
    g = polys[0]
    for p in polys[1:]:
        g = poly_gcd(g, p, budget)
        if g.is_constant():
            return None
    return None if g.is_constant() else g.primitive()


# ---------------------------------------------------------------------------
# basic ideals

def is_integrable(form: ProjectiveForm) -> bool:
    return wedge(form.omega, form.domega()).is_zero()


def ideal_J(form: ProjectiveForm) -> Ideal:
    """Singular ideal: the coefficients of the form."""
    return Ideal(form.nvars, [c for c in form.coefficients if not c.is_zero()],
                 budget=form.budget)


def derivative_coefficient_ideal(form: ProjectiveForm) -> Ideal:
    """Ideal generated by the coefficients of d(omega)."""
    return coefficient_ideal(form.domega(), budget=form.budget)


def ideal_K(form: ProjectiveForm) -> Ideal:
    """Kupka ideal: (J : coefficient ideal of d omega)."""
    return ideal_J(form).quotient(derivative_coefficient_ideal(form))


def ideal_L(form: ProjectiveForm, K: Ideal | None = None) -> Ideal:
    """Non-Kupka ideal: the saturation (J : K^infinity)."""
    return ideal_J(form).saturation(K if K is not None else ideal_K(form))


# ---------------------------------------------------------------------------
# the degreewise unfolding solver

@dataclass
class UnfoldingResult:
    ideal: Ideal                 # ideal generated by the window solutions
    dims: dict                   # degree -> dim of the solution projection
    generators_by_degree: dict   # degree -> list of new generators
    dmax: int
    stabilized: bool
    certified_mod_p: list        # degrees settled by the rank certificate
    exact_degrees: list          # degrees settled by exact kernels

    def generator_strings(self, names=None):
        return {d: [poly_str(g, names) for g in gs]
                for d, gs in self.generators_by_degree.items()}


def _unfolding_columns(form: ProjectiveForm, m: int, include_dh: bool):
    """Columns of the degree-m linear system h*dw - w^(eta[-dh]) = 0.

    Returns (columns, n_h, row_index) where the first n_h columns belong to
    the h unknowns.  With ``include_dh`` the h columns carry the graded
    variant m*h*dw + e*w^dh and the eta block is scaled by e.
    """
    nvars = form.nvars
    e = form.e
    dw = form.domega()
    w = form.omega
    row_index = {}

    def vec_of(pform: PForm) -> dict:
        out = {}
        for idx, poly in pform.coeffs.items():
            for mono, c in poly.terms.items():
                key = (idx, mono)
                pos = row_index.setdefault(key, len(row_index))
                out[pos] = out.get(pos, ZERO) + c
        return {k: v for k, v in out.items() if v}

    columns = []
    h_monos = graded_basis(nvars, m)
    for u in h_monos:
        if include_dh:
            hu = Polynomial.monomial(u)
            pf = dw.mul_poly(hu.scale(m))
            dh = exterior_derivative(PForm.from_function(hu))
            pf = pf + wedge(w, dh).scale(e)
        else:
            pf = dw.mul_poly(Polynomial.monomial(u))
        columns.append(vec_of(pf))
    eta_scale = Fraction(-e) if include_dh else Fraction(-1)
    if m >= 1:
        for i in range(nvars):
            dxi = PForm.basis((i,), nvars)
            for v in graded_basis(nvars, m - 1):
                pf = wedge(w, dxi.mul_poly(Polynomial.monomial(v))).scale(eta_scale)
                columns.append(vec_of(pf))
    return columns, len(h_monos), row_index


def ideal_I(form: ProjectiveForm, dmax: int | None = None,
            config: Config = DEFAULT_CONFIG, K: Ideal | None = None,
            check_k: bool = True) -> UnfoldingResult:
    """Solve the unfolding equation degree by degree up to dmax.

    A mod-p rank certificate settles a degree exactly whenever the kernel
    dimension mod p matches the count explained by the generators found so
    far (plus the multiples of the form itself); otherwise an exact sparse
    kernel runs and fresh generators are absorbed.  The stabilization flag
    needs two quiet degrees at the top of the window and agreement with the
    Kupka ideal up to radical.
    """
    e = form.e
    if dmax is None:
        dmax = config.resolved_dmax(e)
    nvars = form.nvars
    gens: list[Polynomial] = []
    G = Ideal(nvars, [], budget=form.budget)
    dims = {}
    by_degree = {}
    certified = []
    exacts = []
    for m in range(0, dmax + 1):
        columns, n_h, _ = _unfolding_columns(form, m, include_dh=False)
        ncols = len(columns)
        trivial = comb(m - e + nvars - 1, nvars - 1) if m - e >= 0 else 0
        expected = G.graded_dim(m) + trivial
        if ncols == 0:
            dims[m] = 0
            continue
        nrows = _n_rows(columns)
        kd = ncols - modp_rank(columns, nrows)
        if kd == expected:
            dims[m] = expected - trivial
            certified.append(m)
            continue
        kernel = _kernel_of_columns(columns, nrows)
        monos = graded_basis(nvars, m)
        fresh = []
        for vec in kernel:
            hpart = {i: vec[i] for i in range(n_h) if vec[i]}
            if not hpart:
                continue
            p = Polynomial(nvars, {monos[i]: c for i, c in hpart.items()})
            nf = G.normal_form(p)
            if not nf.is_zero():
                fresh.append(nf.primitive())
                gens.append(nf.primitive())
                G = Ideal(nvars, gens, budget=form.budget)
        dims[m] = G.graded_dim(m)
        # dimension bookkeeping doubles as a division-lemma sanity check:
        # the eta-only kernel consists exactly of the multiples of the form
        assert dims[m] == len(kernel) - trivial, \
            "kernel projection does not match the generated ideal"
        if fresh:
            by_degree[m] = fresh
        exacts.append(m)
    result_ideal = Ideal(nvars, gens, budget=form.budget)
    stabilized = _stabilized(by_degree, dims, dmax)
    if stabilized and check_k:
        Kup = K if K is not None else ideal_K(form)
        stabilized = result_ideal.radical_equals(Kup)
    return UnfoldingResult(result_ideal, dims, by_degree, dmax, stabilized,
                           certified, exacts)


def _n_rows(columns) -> int:
    top = 0
    for col in columns:
        if col:
            top = max(top, max(col) + 1)
    return top


def _kernel_of_columns(columns, nrows):
    """Kernel vectors (over the column index) of the matrix with these columns."""
    rows = [dict() for _ in range(nrows)]
    for j, col in enumerate(columns):
        for i, c in col.items():
            rows[i][j] = c
    rows = [r for r in rows if r]
    return sparse_kernel(rows, len(columns))


def _stabilized(by_degree: dict, dims: dict, dmax: int) -> bool:
    if not by_degree:
        return True  # nothing ever appeared: the zero ideal is stable
    last_new = max(by_degree)
    return last_new + 2 <= dmax


def unfolding_dimensions(form: ProjectiveForm, window) -> dict:
    """Dimensions of the graded unfolding solution spaces, degree by degree.

    Solves the graded equation (with the derivative correction term) exactly
    and quotients out the multiples of the form itself.
    """
    e = form.e
    nvars = form.nvars
    out = {}
    for m in window:
        columns, n_h, _ = _unfolding_columns(form, m, include_dh=True)
        trivial = comb(m - e + nvars - 1, nvars - 1) if m - e >= 0 else 0
        if not columns:
            out[m] = 0
            continue
        kernel = _kernel_of_columns(columns, _n_rows(columns))
        out[m] = len(kernel) - trivial
    return out


# ---------------------------------------------------------------------------
# annihilator of the derivative 2-form

def derivative_annihilator(form: ProjectiveForm) -> list:
    """Generators of the module of fields X with i_X(d omega) = 0.

    Every generator also annihilates the form itself (asserted).
    """
    from .resolutions import FreeModule, ModuleMap, syzygies

    nvars = form.nvars
    dw = form.domega()
    cols = []
    for i in range(nvars):
        c = contract(VectorField.coordinate(i, nvars), dw)
        cols.append([c.coeffs.get((j,), Polynomial.zero(nvars)) for j in range(nvars)])
    matrix = [[cols[j][i] for j in range(nvars)] for i in range(nvars)]
    M = ModuleMap(FreeModule((form.e - 2,) * nvars), FreeModule((0,) * nvars),
                  matrix, nvars)
    S = syzygies(M, form.budget)
    fields = []
    w = form.omega
    for j in range(S.source.rank):
        comps = [S.matrix[i][j] for i in range(nvars)]
        X = VectorField(comps)
        assert contract(X, dw).is_zero()
        ixw = contract(X, w).coeffs.get((), Polynomial.zero(nvars))
        assert ixw.is_zero(), "derivative annihilator must annihilate the form"
        fields.append(X)
    return fields


# ---------------------------------------------------------------------------
# scheme summaries

@dataclass
class ComponentInfo:
    prime: Ideal
    multiplicity: int
    kupka: bool
    dim: int
    degree: int

    def as_dict(self, names=None):
        return {
            "prime": self.prime.generator_strings(names),
            "multiplicity": self.multiplicity,
            "kupka": self.kupka,
            "dim": self.dim,
            "degree": self.degree,
        }


@dataclass
class SchemeSummary:
    ideal: Ideal
    dim: int
    degree: int
    components: list | None      # None = indeterminate
    reduced: str                 # yes / no / indeterminate
    connected: str               # yes / no / indeterminate
    names: list | None = None

    def as_dict(self):
        return {
            "dim": self.dim,
            "degree": self.degree,
            "reduced": self.reduced,
            "connected": self.connected,
            "components": None if self.components is None else
            [c.as_dict(self.names) for c in self.components],
        }


def scheme_summary(I: Ideal, kupka_test: Ideal, decompose: bool = True,
                   names=None) -> SchemeSummary:
    """Saturate, measure, decompose, and flag components against d(omega).

    ``kupka_test`` is the coefficient ideal of the derivative 2-form: a
    component is Kupka exactly when that ideal does not vanish along it.
    """
    sat = I.irrelevant_saturation()
    if sat.is_unit():
        return SchemeSummary(sat, -1, 0, [], "yes", "yes", names)
    h = sat.hilbert()
    dim, degree = h.dim_proj, h.degree
    if not decompose:
        return SchemeSummary(sat, dim, degree, None, "indeterminate",
                             "indeterminate", names)
    primes = sat.minimal_primes()
    if primes is None:
        return SchemeSummary(sat, dim, degree, None, "indeterminate",
                             "indeterminate", names)
    comps = []
    for P in primes:
        mult = sat.component_multiplicity(P, primes)
        kupka = any(not P.radical_membership(g) for g in kupka_test.gens)
        comps.append(ComponentInfo(P, mult, kupka, P.dim_proj(), P.degree()))
    if all(c.dim == dim for c in comps):
        assert degree == sum(c.multiplicity * c.degree for c in comps), \
            "degree must match the weighted component degrees"
    rad = sat.radical_from_primes(primes)
    reduced = "yes" if sat.equals(rad) else "no"
    connected = _connectedness(comps)
    return SchemeSummary(sat, dim, degree, comps, reduced, connected, names)


def _connectedness(comps: list) -> str:
    k = len(comps)
    if k <= 1:
        return "yes"
    adj = {i: set() for i in range(k)}
    for i in range(k):
        for j in range(i + 1, k):
            meet = comps[i].prime.sum(comps[j].prime).irrelevant_saturation()
            if not meet.is_unit():
                adj[i].add(j)
                adj[j].add(i)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return "yes" if len(seen) == k else "no"


# ---------------------------------------------------------------------------
# verdicts

@dataclass
class ChernPair:
    c1: int
    c2: int

    def as_list(self):
        return [self.c1, self.c2]


class NotPureCurve(Exception):
    """Singular scheme is not pure of dimension one."""


def _pure_curve(summary: SchemeSummary) -> bool:
    if summary.dim != 1:
        return False
    if summary.components is None:
        raise ValueError("indeterminate decomposition")
    return all(c.dim == 1 for c in summary.components)


def chern_classes(form: ProjectiveForm, summary: SchemeSummary) -> ChernPair:
    """Chern pair of the tangent sheaf for n = 3 with a pure 1-dim singular scheme."""
    if form.n != 3:
        raise NotPureCurve("Chern formulas are specific to ambient dimension 3")
    if not _pure_curve(summary):
        raise NotPureCurve("singular scheme is not a pure curve")
    d = form.d
    return ChernPair(2 - d, d * d + 2 - summary.degree)


def split_type_string(a: int, b: int) -> str:
    hi, lo = max(a, b), min(a, b)

    def piece(t):
        return "O" if t == 0 else f"O({t})"

    return f"{piece(hi)}+{piece(lo)}"


def splitting_verdict(form: ProjectiveForm, summary: SchemeSummary,
                      window=None) -> dict:
    """Split test on P^3: pure 1-dim singular scheme + aCM <=> split.

    Returns a dict with verdict in {splits, locally-free-but-undecided,
    not-locally-free} and the supporting evidence.
    """
    if form.n != 3:
        return {"verdict": "not-evaluated", "reason": "ambient dimension != 3"}
    try:
        pure = _pure_curve(summary)
    except ValueError:
        return {"verdict": "indeterminate", "reason": "decomposition indeterminate"}
    if not pure:
        return {"verdict": "not-locally-free",
                "reason": "singular scheme is not a pure curve",
                "sing_dim": summary.dim}
    acm = is_acm(summary.ideal, window=window)
    chern = chern_classes(form, summary)
    out = {"chern": chern.as_list(), "acm": acm.as_dict()}
    if not acm.is_acm:
        out.update({"verdict": "locally-free-but-undecided",
                    "reason": "singular curve is not aCM"})
        return out
    disc = chern.c1 * chern.c1 - 4 * chern.c2
    root = _isqrt(disc)
    if disc < 0 or root is None or (chern.c1 + root) % 2 != 0:
        out.update({"verdict": "inconsistent-chern",
                    "reason": f"no integer split type for c1={chern.c1}, c2={chern.c2}"})
        return out
    a = (chern.c1 + root) // 2
    b = chern.c1 - a
    if a > 1 or b > 1:
        out.update({"verdict": "inconsistent-chern",
                    "reason": "split twists above the stability bound"})
        return out
    out.update({"verdict": "splits", "type": [a, b],
                "type_string": split_type_string(a, b)})
    return out


def _isqrt(x: int):
    if x < 0:
        return None
    from math import isqrt
    r = isqrt(x)
    return r if r * r == x else None


def complete_intersection_verdict(K: Ideal) -> dict:
    """Two minimal generators up to saturation <=> complete intersection."""
    sat = K.irrelevant_saturation()
    if sat.codim() != 2:
        raise ValueError("complete-intersection test needs codimension 2")
    hist = sat.minimal_generators()
    total = sum(c for _, c in hist)
    return {"verdict": total == 2, "generators": hist}


# ---------------------------------------------------------------------------
# constructors

def rational_foliation(f: Polynomial, g: Polynomial, r: int, s: int,
                       names=None) -> ProjectiveForm:
    """The form r*f*dg - s*g*df for coprime homogeneous f, g."""
    if f.homogeneous_degree() != r or g.homogeneous_degree() != s:
        raise ConstructionError("degree-mismatch",
                                "degrees must match the declared pair (r, s)")
    if not poly_gcd(f, g).is_constant():
        raise ConstructionError("common-factor", "f and g share a factor")
    nvars = f.n
    df = exterior_derivative(PForm.from_function(f))
    dg = exterior_derivative(PForm.from_function(g))
    w = dg.mul_poly(f.scale(r)) - df.mul_poly(g.scale(s))
    coefficients = [w.coeffs.get((i,), Polynomial.zero(nvars)) for i in range(nvars)]
    form = validate(nvars - 1, r + s, coefficients, names)
    assert is_integrable(form), "rational pair must give an involutive form"
    return form


def pullback_linear(coefficients, names=None) -> ProjectiveForm:
    """Lift a P^2 form to P^3 through a linear projection (new last coordinate)."""
    small = len(coefficients)
    nvars = small + 1
    lifted = []
    for c in coefficients:
        lifted.append(Polynomial(nvars, {m + (0,): v for m, v in c.terms.items()}))
    lifted.append(Polynomial.zero(nvars))
    e = max(c.degree() for c in coefficients if not c.is_zero()) + 1
    return validate(nvars - 1, e, lifted, names)


def foliation_from_acm_curve(generators, linear_relation, names=None):
    """Build the form sum f_i(y) dy_i from a 4-generator curve presentation.

    ``linear_relation`` holds four linear forms l_i with sum l_i f_i = 0 and
    x -> (l_0 : ... : l_3) invertible.  The distribution defined this way need
    not be involutive: the integrability flag is computed, never assumed.
    """
    if len(generators) != 4:
        raise ConstructionError(
            "wrong-generator-count",
            f"need exactly 4 generators, got {len(generators)}")
    if len(linear_relation) != 4:
        raise ConstructionError("wrong-generator-count",
                                "need exactly 4 linear forms")
    nvars = 4
    degs = {g.homogeneous_degree() for g in generators if not g.is_zero()}
    if len(degs) != 1:
        raise ConstructionError("degree-mismatch",
                                "generators must share one degree")
    acc = Polynomial.zero(nvars)
    for l, f in zip(linear_relation, generators):
        acc = acc + l * f
    if not acc.is_zero():
        raise ConstructionError("relation-not-satisfied",
                                "sum l_i * f_i must vanish")
    L = [[Fraction(0)] * nvars for _ in range(nvars)]
    for i, l in enumerate(linear_relation):
        if l.is_zero() or l.homogeneous_degree() != 1:
            raise ConstructionError("non-invertible-coordinates",
                                    "relation entries must be linear forms")
        for m, c in l.terms.items():
            j = next(k for k, exp in enumerate(m) if exp)
            L[i][j] = c
    Linv = _invert_matrix(L)
    if Linv is None:
        raise ConstructionError("non-invertible-coordinates",
                                "the linear relation must define a coordinate change")
    images = []
    for j in range(nvars):
        p = Polynomial.zero(nvars)
        for k in range(nvars):
            if Linv[j][k]:
                p = p + Polynomial.variable(k, nvars).scale(Linv[j][k])
        images.append(p)
    new_coeffs = [f.substitute(images) for f in generators]
    e = next(iter(degs)) + 1
    form = validate(3, e, new_coeffs, names)
    return form, is_integrable(form)


def _invert_matrix(L):
    n = len(L)
    aug = [[Fraction(L[i][j]) for j in range(n)]
           + [Fraction(1) if k == i else Fraction(0) for k in range(n)]
           for i in range(n)]
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, n):
            if aug[i][c]:
                piv = i
                break
        if piv is None:
            return None
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        r += 1
    if r < n:
        return None
    return [row[n:] for row in aug]
