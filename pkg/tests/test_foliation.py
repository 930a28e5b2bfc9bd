"""Form validation, the four ideals, verdicts, and constructors."""

import random
from fractions import Fraction

import pytest

from foliation_lab.exterior import PForm, VectorField, contract, exterior_derivative, one_form, wedge
from foliation_lab.fixtures import (
    contact_form, line_form, log_family, log_family_divided, pencil_family,
    twisted_cubic_generators,
)
from foliation_lab.foliation import (
    ConstructionError, ValidationError, chern_classes,
    complete_intersection_verdict, derivative_annihilator,
    derivative_coefficient_ideal, foliation_from_acm_curve, ideal_I, ideal_J,
    ideal_K, ideal_L, is_integrable, poly_gcd, pullback_linear,
    rational_foliation, scheme_summary, splitting_verdict,
    unfolding_dimensions, validate,
)
from foliation_lab.groebner import Ideal
from foliation_lab.qalgebra import Polynomial, graded_basis, poly_str

from oracles import random_homogeneous

N = 4
x = [Polynomial.variable(i, N) for i in range(N)]
Z = Polynomial.zero(N)


# -- validation ---------------------------------------------------------------

def test_validate_line_form():
    form = validate(3, 2, [-x[1], x[0], Z, Z])
    assert ideal_J(form).generator_strings() == ["x0", "x1"]


def test_validate_euler_violation():
    with pytest.raises(ValidationError) as err:
        validate(3, 2, [x[0], Z, Z, Z])
    assert err.value.code == "euler-violation"


def test_validate_degree_mismatch():
    with pytest.raises(ValidationError) as err:
        validate(3, 3, [-x[1], x[0], Z, Z])
    assert err.value.code == "degree-mismatch"


def test_validate_codim_one_rejected_with_divisor():
    from foliation_lab.fixtures import log_family_raw
    coeffs = log_family_raw(1, 2, -3)  # l0 = 0: everything divisible by y0
    with pytest.raises(ValidationError) as err:
        validate(3, 5, coeffs)
    assert err.value.code == "codim-1-singular-locus"
    assert "x0" in str(err.value)


# -- integrability ------------------------------------------------------------

def test_integrable_examples():
    assert is_integrable(line_form())
    assert not is_integrable(contact_form())
    assert is_integrable(pencil_family(1))


def test_contact_form_wedge_expansion():
    w = contact_form().omega
    dw = contact_form().domega()
    assert not wedge(w, dw).is_zero()


def test_closed_times_exact_integrable():
    rng = random.Random(3)
    for _ in range(5):
        f = random_homogeneous(rng, N, 1, density=0.9)
        g = random_homogeneous(rng, N, 1, density=0.9)
        if f.is_zero() or g.is_zero() or not poly_gcd(f, g).is_constant():
            continue
        form = rational_foliation(f, g, 1, 1)
        assert is_integrable(form)


# -- J, K, L ------------------------------------------------------------------

def test_ideal_J_examples():
    assert ideal_J(line_form()).generator_strings() == ["x0", "x1"]
    J = ideal_J(log_family_divided(1, 2, -3))
    h = J.irrelevant_saturation().hilbert()
    assert (h.dim_proj, h.degree) == (1, 6)


def test_ideal_K_unit_derivative():
    # d(omega) of the line form has a constant coefficient: K = J
    form = line_form()
    assert derivative_coefficient_ideal(form).is_unit()
    assert ideal_K(form).equals(ideal_J(form))


def test_ideal_L_examples():
    form = line_form()
    assert ideal_L(form).is_unit()
    L = ideal_L(log_family(1, 1, 1))
    assert not L.is_unit()
    sats = sorted(L.irrelevant_saturation().generator_strings(["y0", "y1", "y2", "y3"]))
    # the saddle-type line of the raw family is non-Kupka; at l1 = l2 the
    # (y1, y2) line degenerates as well and carries the saturation
    assert sats == ["y1", "y2"]


def test_log_family_nonkupka_component_flag():
    form = log_family(1, 1, 1)
    summary = scheme_summary(ideal_J(form), derivative_coefficient_ideal(form),
                             names=form.names)
    flags = {tuple(c.prime.generator_strings(form.names)): c.kupka
             for c in summary.components}
    assert flags[("y0", "y3")] is False  # the multiplicity-4 line
    assert flags[("y0", "y1")] is True


# -- unfolding ideal ----------------------------------------------------------

def test_unfolding_zero_for_nonintegrable():
    unf = ideal_I(contact_form(), dmax=6)
    assert unf.ideal.is_zero()
    assert all(v == 0 for v in unf.dims.values())


def test_unfolding_contains_J_not_one():
    form = line_form()
    unf = ideal_I(form, dmax=6)
    J = ideal_J(form)
    assert unf.ideal.contains_ideal(J)
    assert not unf.ideal.is_unit()
    assert unf.dims[0] == 0  # no constant unfoldings


def test_unfolding_equals_K_under_hypotheses():
    form = pencil_family(2)
    K = ideal_K(form)
    unf = ideal_I(form, dmax=8, K=K)
    for m in range(0, 9):
        assert unf.ideal.graded_dim(m) == K.graded_dim(m)
    assert unf.stabilized


def test_unfolding_dimensions_match_projection():
    # the h-projection of the graded unfolding solutions equals the
    # unfolding ideal piece, degree by degree (m >= 1)
    form = line_form()
    unf = ideal_I(form, dmax=5)
    dims = unfolding_dimensions(form, range(1, 6))
    for m in range(1, 6):
        assert dims[m] == unf.ideal.graded_dim(m)


def test_unfolding_dimensions_contact():
    dims = unfolding_dimensions(contact_form(), range(1, 5))
    assert all(v == 0 for v in dims.values())


# -- derivative annihilator ----------------------------------------------------

def test_derivative_annihilator_line():
    D = derivative_annihilator(line_form())
    consts = [X for X in D if all(c.is_constant() for c in X.components)]
    dirs = {tuple(1 if not c.is_zero() else 0 for c in X.components) for X in consts}
    assert (0, 0, 1, 0) in dirs and (0, 0, 0, 1) in dirs


def test_radial_never_annihilates():
    for form in (line_form(), pencil_family(1)):
        dw = form.domega()
        R = VectorField.radial(form.nvars)
        got = contract(R, dw)
        # i_R d(omega) = e * omega: never zero for a valid form
        assert got == form.omega.scale(form.e)


def test_contact_annihilator_trivial():
    assert derivative_annihilator(contact_form()) == []


# -- scheme summaries -----------------------------------------------------------

def test_summary_log_divided():
    form = log_family_divided(1, 2, -3)
    s = scheme_summary(ideal_J(form), derivative_coefficient_ideal(form),
                       names=form.names)
    assert (s.dim, s.degree) == (1, 6)
    assert sorted(c.multiplicity for c in s.components) == [1, 1, 2, 2]
    assert s.connected == "yes"
    lines = sorted(tuple(c.prime.generator_strings(form.names)) for c in s.components)
    assert lines == [("y0", "y3"), ("y1", "y2"), ("y1", "y3"), ("y2", "y3")]


def test_summary_log_raw():
    form = log_family(1, 1, 1)
    s = scheme_summary(ideal_J(form), derivative_coefficient_ideal(form),
                       names=form.names)
    assert (s.dim, s.degree) == (1, 11)
    assert sorted(c.multiplicity for c in s.components) == [1, 1, 1, 2, 2, 4]
    mult4 = [c for c in s.components if c.multiplicity == 4]
    assert mult4[0].prime.generator_strings(form.names) == ["y0", "y3"]
    assert mult4[0].kupka is False


def test_summary_skew_lines_disconnected():
    skew = Ideal(4, [x[0], x[1]]).intersection(Ideal(4, [x[2], x[3]]))
    s = scheme_summary(skew, Ideal(4, [Polynomial.const(4, 1)]))
    assert s.connected == "no"
    assert s.reduced == "yes"


# -- chern and splitting --------------------------------------------------------

def test_chern_examples():
    f4 = log_family_divided(1, 2, -3)
    s = scheme_summary(ideal_J(f4), derivative_coefficient_ideal(f4))
    assert chern_classes(f4, s).as_list() == [0, 0]

    f5 = log_family(1, 1, 1)
    s5 = scheme_summary(ideal_J(f5), derivative_coefficient_ideal(f5))
    assert chern_classes(f5, s5).as_list() == [-1, 0]

    line = line_form()
    sl = scheme_summary(ideal_J(line), derivative_coefficient_ideal(line))
    pair = chern_classes(line, sl)
    assert pair.as_list() == [2, 1]
    # consistency with the split type O(1) + O(1): a+b = 2, a*b = 1
    v = splitting_verdict(line, sl)
    assert v["type"] == [1, 1]


def test_splitting_verdicts():
    f4 = log_family_divided(1, 2, -3)
    s = scheme_summary(ideal_J(f4), derivative_coefficient_ideal(f4))
    assert splitting_verdict(f4, s)["type_string"] == "O+O"

    f5 = log_family(1, 1, 1)
    s5 = scheme_summary(ideal_J(f5), derivative_coefficient_ideal(f5))
    assert splitting_verdict(f5, s5)["type_string"] == "O+O(-1)"

    ft = pencil_family(1)
    st = scheme_summary(ideal_J(ft), derivative_coefficient_ideal(ft))
    assert splitting_verdict(ft, st)["type_string"] == "O(1)+O"


def test_splitting_not_locally_free():
    form = rational_foliation(x[0], x[1] * x[1] + x[2] * x[3], 1, 2)
    s = scheme_summary(ideal_J(form), derivative_coefficient_ideal(form))
    out = splitting_verdict(form, s)
    assert out["verdict"] == "not-locally-free"


# -- complete intersection -------------------------------------------------------

def test_ci_examples():
    assert complete_intersection_verdict(Ideal(4, [x[0], x[1]]))["verdict"] is True
    tw = Ideal(4, twisted_cubic_generators())
    out = complete_intersection_verdict(tw)
    assert out["verdict"] is False and out["generators"] == [(2, 3)]
    form = rational_foliation(x[0], x[1], 1, 1)
    assert complete_intersection_verdict(ideal_K(form))["verdict"] is True


# -- constructors -----------------------------------------------------------------

def test_rational_foliation_examples():
    form = rational_foliation(x[0], x[1], 1, 1)
    assert [poly_str(c) for c in form.coefficients] == ["-x1", "x0", "0", "0"]
    g = x[1] * x[1] + x[2] * x[3]
    form2 = rational_foliation(x[0], g, 1, 2)
    assert form2.e == 3
    assert is_integrable(form2)
    with pytest.raises(ConstructionError) as err:
        rational_foliation(x[0], x[0] * x[1], 1, 2)
    assert err.value.code == "common-factor"
    with pytest.raises(ConstructionError):
        rational_foliation(x[0], x[1], 2, 1)


def test_pullback_linear():
    n3 = 3
    a, b = Polynomial.variable(0, n3), Polynomial.variable(1, n3)
    form = pullback_linear([-b, a, Polynomial.zero(n3)])
    assert form.n == 3 and form.e == 2
    assert form.coefficients[3].is_zero()
    D = derivative_annihilator(form)
    # the projection direction is annihilated
    assert any(not X.components[3].is_zero()
               and all(X.components[i].is_zero() for i in range(3)) for X in D)


def test_acm_curve_constructor_recovers_line_form():
    gens = [-x[1], x[0], Z, Z]
    rel = [x[0], x[1], x[2], x[3]]
    form, integrable = foliation_from_acm_curve(gens, rel)
    assert integrable
    assert [poly_str(c) for c in form.coefficients] == ["-x1", "x0", "0", "0"]


def test_acm_curve_constructor_rejects_twisted_cubic():
    with pytest.raises(ConstructionError) as err:
        foliation_from_acm_curve(twisted_cubic_generators(),
                                 [x[0], x[1], x[2], x[3]])
    assert err.value.code == "wrong-generator-count"


def test_acm_curve_constructor_contact_distribution():
    # Koszul-style 4-generator presentation with the identity relation gives
    # the contact distribution: valid but not involutive
    gens = [x[1], -x[0], x[3], -x[2]]
    rel = [x[0], x[1], x[2], x[3]]
    form, integrable = foliation_from_acm_curve(gens, rel)
    assert not integrable


def test_acm_curve_constructor_error_paths():
    with pytest.raises(ConstructionError) as err:
        foliation_from_acm_curve([x[1], x[0], Z, Z], [x[0], x[1], x[2], x[3]])
    assert err.value.code == "relation-not-satisfied"
    with pytest.raises(ConstructionError) as err:
        foliation_from_acm_curve([-x[1], x[0], Z, Z], [x[0], x[1], x[2], x[2]])
    assert err.value.code == "non-invertible-coordinates"


def test_weight_identity_on_forms():
    # i_R d(omega) = e*omega across fixtures (contraction of the Cartan identity)
    for form in (line_form(), contact_form(), log_family_divided(1, 2, -3)):
        R = VectorField.radial(form.nvars)
        assert contract(R, form.domega()) == form.omega.scale(form.e)
