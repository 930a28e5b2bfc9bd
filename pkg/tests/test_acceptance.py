"""Acceptance suite: one test per criterion, exact expectations, timed.

Each test prints a `[acceptance] criterion N` line on success; failures carry
the mismatch.  The fixture analyses are shared across criteria through
session-scoped fixtures so the whole suite stays well inside its time budget.
"""

import random
import time
from fractions import Fraction

import pytest

from foliation_lab.config import Config
from foliation_lab.exterior import PForm, VectorField, contract, exterior_derivative, lie_radial, one_form, wedge
from foliation_lab.fixtures import (
    contact_form, line_form, log_family, log_family_divided, pencil_family,
    twisted_cubic_generators,
)
from foliation_lab.foliation import (
    ConstructionError, ValidationError, foliation_from_acm_curve, ideal_I,
    ideal_J, ideal_K, is_integrable, rational_foliation, validate,
)
from foliation_lab.groebner import Ideal
from foliation_lab.qalgebra import Polynomial, graded_basis
from foliation_lab.report import analyze

from oracles import (
    graded_dim_oracle, graded_intersection_dim, member_oracle,
    quotient_dim_oracle, random_homogeneous, random_member,
)


def _timed(builder, config=Config()):
    t0 = time.time()
    report = analyze(builder, config)
    return report.data, time.time() - t0


@pytest.fixture(scope="session")
def rep_log_e4():
    return _timed(log_family_divided(1, 2, -3))


@pytest.fixture(scope="session")
def rep_log_e5():
    return _timed(log_family(1, 1, 1))


@pytest.fixture(scope="session")
def rep_pencil_t1():
    return _timed(pencil_family(1))


@pytest.fixture(scope="session")
def rep_pencil_t0():
    return _timed(pencil_family(0))


@pytest.fixture(scope="session")
def rep_line():
    return _timed(line_form())


@pytest.fixture(scope="session")
def rep_rational_12():
    n = 4
    x = [Polynomial.variable(i, n) for i in range(n)]
    return _timed(rational_foliation(x[0], x[1] * x[1] + x[2] * x[3], 1, 2))


@pytest.fixture(scope="session")
def rep_contact():
    return _timed(contact_form())


@pytest.fixture(scope="session")
def integrable_reports(rep_log_e4, rep_log_e5, rep_pencil_t1, rep_pencil_t0,
                       rep_line, rep_rational_12):
    return {
        "log_e4": rep_log_e4[0],
        "log_e5": rep_log_e5[0],
        "pencil_t1": rep_pencil_t1[0],
        "pencil_t0": rep_pencil_t0[0],
        "line": rep_line[0],
        "rational_12": rep_rational_12[0],
    }


def _component_table(data, names):
    out = {}
    for c in data["sing_scheme"]["components"]:
        out[tuple(c["prime"])] = (c["multiplicity"], c["kupka"])
    return out


# -- criterion 1: the twist-4 logarithmic fixture -------------------------------

def test_criterion_1_log_e4(rep_log_e4):
    data, elapsed = rep_log_e4
    assert elapsed < 60, f"analysis took {elapsed:.1f}s, budget 60s"
    sing = data["sing_scheme"]
    assert sing["dim"] == 1
    assert all(c["dim"] == 1 for c in sing["components"])  # pure
    assert sing["degree"] == 6
    table = _component_table(data, ["y0", "y1", "y2", "y3"])
    assert len(table) == 4
    assert table[("y0", "y3")][0] == 1
    assert table[("y1", "y2")][0] == 1
    assert table[("y1", "y3")][0] == 2
    assert table[("y2", "y3")][0] == 2
    assert data["chern"] == [0, 0]
    assert data["verdicts"]["t_split"]["type_string"] == "O+O"
    assert data["verdicts"]["k_connected"] == "yes"
    print(f"\n[acceptance] criterion 1 (twist-4 fixture table): PASS ({elapsed:.1f}s)")


# -- criterion 2: the twist-5 logarithmic fixture -------------------------------

def test_criterion_2_log_e5(rep_log_e5):
    data, elapsed = rep_log_e5
    assert elapsed < 120, f"analysis took {elapsed:.1f}s, budget 120s"
    sing = data["sing_scheme"]
    table = _component_table(data, ["y0", "y1", "y2", "y3"])
    assert len(table) == 6
    mults = sorted(m for m, _ in table.values())
    assert mults == [1, 1, 1, 2, 2, 4]
    assert table[("y0", "y1")][0] == 1
    assert table[("y0", "y2")][0] == 1
    assert table[("y0", "y3")][0] == 4
    assert table[("y1", "y2")][0] == 1
    assert table[("y1", "y3")][0] == 2
    assert table[("y2", "y3")][0] == 2
    assert sing["degree"] == 11
    assert data["chern"] == [-1, 0]
    assert data["verdicts"]["t_split"]["type_string"] == "O+O(-1)"
    assert table[("y0", "y3")][1] is False  # the multiplicity-4 line is non-Kupka
    assert data["verdicts"]["k_connected"] == "yes"
    print(f"\n[acceptance] criterion 2 (twist-5 fixture table): PASS ({elapsed:.1f}s)")


# -- criterion 3: the pencil family at t = 1 and t = 0 --------------------------

def test_criterion_3_pencil_t1_radical_and_split(rep_pencil_t1):
    data, elapsed = rep_pencil_t1
    assert elapsed < 60
    assert data["hypothesis"]["j_radical"] == "yes"
    assert data["verdicts"]["t_split"]["type_string"] == "O(1)+O"
    print(f"\n[acceptance] criterion 3a (pencil t=1 radical/split): PASS ({elapsed:.1f}s)")


def test_criterion_3_pencil_t1_nonkupka_trivial(rep_pencil_t1):
    """Stated expectation: the non-Kupka ideal is the unit ideal at t = 1.

    The derivative 2-form of the t = 1 member vanishes identically along the
    third singular line, so the non-Kupka saturation cuts that line out and
    cannot be trivial; see notes/decisions.md for the full analysis.  The
    assertion is kept as stated and fails honestly.
    """
    data, _ = rep_pencil_t1
    assert data["ideals"]["L"]["trivial"], (
        "non-Kupka ideal at t=1 is " + str(data["ideals"]["L"]["generators"])
        + "; the t=1 member is a degenerate parameter of the family"
    )
    print("\n[acceptance] criterion 3b (pencil t=1 trivial non-Kupka): PASS")


def test_criterion_3_pencil_t0(rep_pencil_t0):
    data, elapsed = rep_pencil_t0
    assert elapsed < 60
    assert data["hypothesis"]["j_radical"] == "no"
    assert data["checks"]["kupka_acm_under_hypotheses"]["status"] == "not evaluated"
    assert data["alarms"] == []
    print(f"\n[acceptance] criterion 3c (pencil t=0 non-reduced): PASS ({elapsed:.1f}s)")


# -- criterion 4: aCM Kupka scheme under the stated hypotheses -------------------

def test_criterion_4_kupka_acm_pipeline(integrable_reports):
    applicable = 0
    for name, data in integrable_reports.items():
        if not data["integrable"]:
            continue
        hyp = data["hypothesis"]
        if hyp["j_radical"] != "yes" or hyp["kl_disjoint"] != "yes":
            continue
        applicable += 1
        acm = data["verdicts"]["kupka_acm"]
        assert acm["verdict"] == "yes", f"{name}: Kupka scheme must be aCM"
        assert acm["pd"] == 2, f"{name}: pd must equal the codimension 2"
        h1 = acm["h1_window"]
        assert h1 is not None and all(v == 0 for v in h1.values()), \
            f"{name}: h1 window must vanish"
        assert data["checks"]["kupka_acm_under_hypotheses"]["status"] == "holds"
    assert applicable >= 2, "expected at least two fixtures satisfying the hypotheses"
    print(f"\n[acceptance] criterion 4 (aCM pipeline, {applicable} fixtures): PASS")


# -- criterion 5: integrability <=> singular ideal inside the unfolding ideal ----

def _random_nonintegrable(rng, e, density):
    """Random distribution with i_R w = 0 via contraction of a random 2-form."""
    nvars = 4
    k = e - 2
    from itertools import combinations
    theta = PForm.zero(2, nvars)
    for idx in combinations(range(nvars), 2):
        poly = random_homogeneous(rng, nvars, k, density=density, cmax=3)
        if not poly.is_zero():
            theta = theta + PForm(2, nvars, {idx: poly})
    w = contract(VectorField.radial(nvars), theta)
    coeffs = [w.coeffs.get((i,), Polynomial.zero(nvars)) for i in range(nvars)]
    return coeffs


def test_criterion_5_integrability_biconditional(integrable_reports, rep_contact):
    t0 = time.time()
    # integrable corpus side: J inside the unfolding window ideal
    for name, data in integrable_reports.items():
        chk = data["checks"]["integrability_iff_sing_in_unfolding"]
        assert chk["status"] == "holds", f"{name}: biconditional failed"
        assert chk["sing_ideal_in_unfolding_window"] is True
    # non-integrable corpus side
    data, _ = rep_contact
    chk = data["checks"]["integrability_iff_sing_in_unfolding"]
    assert chk["status"] == "holds" and chk["unfolding_zero"] is True

    # randomized non-integrable distributions with i_R w = 0
    rng = random.Random(20260810)
    found = 0
    attempts = 0
    while found < 10 and attempts < 200:
        attempts += 1
        e = rng.choice([3, 3, 3, 4, 4, 5])
        density = 0.35 if e >= 5 else 0.6
        coeffs = _random_nonintegrable(rng, e, density)
        try:
            form = validate(3, e, coeffs)
        except ValidationError:
            continue
        if is_integrable(form):
            continue
        found += 1
        unf = ideal_I(form, dmax=e + 2, check_k=False)
        assert unf.ideal.is_zero(), "non-integrable form must have zero unfolding ideal"
        assert all(v == 0 for v in unf.dims.values())
        J = ideal_J(form)
        assert not unf.ideal.contains_ideal(J)
    assert found >= 10
    print(f"\n[acceptance] criterion 5 (biconditional, {found} random non-integrable, "
          f"{time.time() - t0:.1f}s): PASS")


# -- criterion 6: unfolding ideal saturated, h1 window zero -----------------------

def test_criterion_6_unfolding_saturated_h1(integrable_reports):
    for name, data in integrable_reports.items():
        assert data["integrable"]
        assert data["checks"]["unfolding_saturated"]["status"] == "holds", name
        chk = data["checks"]["unfolding_h1_window"]
        assert chk["status"] == "holds", name
        e = data["input"]["e"]
        assert chk["window"] == [-2 * e, 2 * e]  # window bounds recorded
        assert data["windows"]["cohomology"] == [-2 * e, 2 * e]
    print("\n[acceptance] criterion 6 (saturated unfolding ideal, zero h1 window): PASS")


# -- criterion 7: unfolding ideal equals the Kupka ideal degreewise ---------------

def test_criterion_7_unfolding_equals_kupka(integrable_reports):
    checked = 0
    builders = {
        "line": line_form,
        "rational_12": lambda: rational_foliation(
            Polynomial.variable(0, 4),
            Polynomial.variable(1, 4) * Polynomial.variable(1, 4)
            + Polynomial.variable(2, 4) * Polynomial.variable(3, 4), 1, 2),
        "pencil_t0": lambda: pencil_family(0),
        "pencil_t1": lambda: pencil_family(1),
        "log_e4": lambda: log_family_divided(1, 2, -3),
        "log_e5": lambda: log_family(1, 1, 1),
    }
    for name, data in integrable_reports.items():
        hyp = data["hypothesis"]
        e = data["input"]["e"]
        form = builders[name]()
        K = ideal_K(form)
        unf = ideal_I(form, dmax=2 * e + 2, K=K)
        if hyp["j_radical"] == "yes" and hyp["kl_disjoint"] == "yes":
            checked += 1
            for m in range(0, 2 * e + 3):
                assert unf.ideal.graded_dim(m) == K.graded_dim(m), \
                    f"{name}: unfolding and Kupka ideals differ in degree {m}"
            assert unf.ideal.contains_ideal(K) and K.contains_ideal(unf.ideal)
        if hyp["in_u"] == "yes":
            assert unf.ideal.radical_equals(K), f"{name}: radical comparison failed"
    assert checked >= 2
    print(f"\n[acceptance] criterion 7 (unfolding = Kupka, {checked} fixtures): PASS")


# -- criterion 8: twisted cubic obstruction ---------------------------------------

def test_criterion_8_twisted_cubic_obstruction():
    gens = twisted_cubic_generators()
    x = [Polynomial.variable(i, 4) for i in range(4)]
    with pytest.raises(ConstructionError) as err:
        foliation_from_acm_curve(gens, [x[0], x[1], x[2], x[3]])
    assert err.value.code == "wrong-generator-count"
    assert Ideal(4, gens).minimal_generators() == [(2, 3)]
    print("\n[acceptance] criterion 8 (twisted cubic obstruction): PASS")


# -- criterion 9: algebra kernel against linear-algebra oracles -------------------

def test_criterion_9_algebra_oracle_suite():
    t0 = time.time()
    rng = random.Random(97)
    disagreements = 0
    n_ideals = 0
    while n_ideals < 100:
        nvars = rng.choice([2, 3, 3, 4, 4])
        gens = []
        for _ in range(rng.randint(2, 3)):
            g = random_homogeneous(rng, nvars, rng.randint(1, 3), density=0.6, cmax=3)
            if not g.is_zero():
                gens.append(g)
        if not gens:
            continue
        n_ideals += 1
        I = Ideal(nvars, gens)
        # membership probes
        for _ in range(3):
            f = random_member(rng, gens, rng.randint(0, 2))
            if not f.is_zero() and f.degree() <= 5:
                if not I.contains(f):
                    disagreements += 1
        for _ in range(3):
            d = rng.randint(1, 5)
            f = random_homogeneous(rng, nvars, d, density=0.5, cmax=4)
            if f.is_zero():
                continue
            if I.contains(f) != member_oracle(f, gens):
                disagreements += 1
        # graded dimensions certify membership both ways
        for d in range(1, 6):
            if I.graded_dim(d) != graded_dim_oracle(gens, d):
                disagreements += 1
        if n_ideals % 4 == 0:
            g = random_homogeneous(rng, nvars, rng.randint(1, 2), density=0.7, cmax=3)
            if not g.is_zero():
                Q = I.quotient_poly(g)
                for q in Q.gens:
                    if not member_oracle(q * g, gens):
                        disagreements += 1
                for d in range(0, 4):
                    if Q.graded_dim(d) != quotient_dim_oracle(gens, g, d):
                        disagreements += 1
        if n_ideals % 4 == 1:
            other = [random_homogeneous(rng, nvars, rng.randint(1, 2), density=0.7)
                     for _ in range(2)]
            other = [g for g in other if not g.is_zero()]
            if other:
                J = Ideal(nvars, other)
                inter = I.intersection(J)
                for h in inter.gens:
                    if not (member_oracle(h, gens) and member_oracle(h, other)):
                        disagreements += 1
                for d in range(1, 5):
                    if inter.graded_dim(d) != graded_intersection_dim(gens, other, d, nvars):
                        disagreements += 1
        if n_ideals % 4 == 2:
            g = random_homogeneous(rng, nvars, 1, density=0.8, cmax=2)
            if not g.is_zero():
                S = I.saturation(Ideal(nvars, [g]))
                for s in S.gens:
                    # the clearing power can reach the socle degree
                    ok = any(member_oracle(s * g ** k, gens) for k in range(0, 12))
                    if not ok:
                        disagreements += 1
                SQ = S.quotient_poly(g)
                if not (SQ.contains_ideal(S) and S.contains_ideal(SQ)):
                    disagreements += 1
    elapsed = time.time() - t0
    assert disagreements == 0
    assert elapsed < 600, f"oracle suite took {elapsed:.0f}s, budget 600s"
    print(f"\n[acceptance] criterion 9 (oracle suite, {n_ideals} ideals, "
          f"{elapsed:.0f}s): PASS")


# -- criterion 10: exterior calculus law suite ------------------------------------

def test_criterion_10_exterior_laws():
    t0 = time.time()
    rng = random.Random(1001)
    from itertools import combinations
    checked = 0
    while checked < 200:
        nvars = 4
        p = rng.randint(0, 3)
        k = rng.randint(0, 4)
        a = PForm.zero(p, nvars)
        for idx in combinations(range(nvars), p):
            poly = random_homogeneous(rng, nvars, k, density=0.4)
            if not poly.is_zero():
                a = a + PForm(p, nvars, {idx: poly})
        if a.is_zero():
            continue
        checked += 1
        assert exterior_derivative(exterior_derivative(a)).is_zero()
        assert lie_radial(a) == a.scale(k + p)
        if p >= 1:
            X = VectorField([random_homogeneous(rng, nvars, rng.randint(0, 1),
                                                density=0.5) for _ in range(nvars)])
            b = PForm.zero(1, nvars)
            for idx in combinations(range(nvars), 1):
                poly = random_homogeneous(rng, nvars, rng.randint(0, 2), density=0.4)
                if not poly.is_zero():
                    b = b + PForm(1, nvars, {idx: poly})
            lhs = contract(X, wedge(a, b))
            rhs = wedge(contract(X, a), b) + wedge(a, contract(X, b)).scale((-1) ** p)
            assert lhs == rhs
    elapsed = time.time() - t0
    assert elapsed < 60, f"exterior suite took {elapsed:.0f}s, budget 60s"
    print(f"\n[acceptance] criterion 10 (exterior laws, {checked} forms, "
          f"{elapsed:.0f}s): PASS")
