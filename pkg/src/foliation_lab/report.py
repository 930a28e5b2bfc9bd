"""Full analysis pipeline: ideals, hypotheses, verdicts, consistency checks.

``analyze`` (the theorem suite) runs every analysis on a validated form and
returns a FoliationReport whose ``data`` dict is JSON-ready, deterministic,
and carries the evidence for every verdict.  Implications whose hypotheses
hold are re-checked against the computed verdicts; a violation lands in the
``alarms`` list with full evidence, never silently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .config import Config, DEFAULT_CONFIG
from .foliation import (
    ProjectiveForm, SchemeSummary, UnfoldingResult, chern_classes,
    complete_intersection_verdict, derivative_coefficient_ideal, ideal_I,
    ideal_J, ideal_K, ideal_L, is_integrable, NotPureCurve, scheme_summary,
    splitting_verdict,
)
from .groebner import BudgetExceeded, Ideal
from .qalgebra import Polynomial, poly_str
from .resolutions import is_acm, sheaf_cohomology_window


@dataclass
class FoliationReport:
    data: dict

    def to_json(self) -> str:
        return json.dumps(self.data, indent=2, sort_keys=True)

    @property
    def has_indeterminate(self) -> bool:
        return _contains_indeterminate(self.data)


def _contains_indeterminate(obj) -> bool:
    if isinstance(obj, str):
        return obj == "indeterminate"
    if isinstance(obj, dict):
        return any(_contains_indeterminate(v) for v in obj.values())
    if isinstance(obj, list):
        return any(_contains_indeterminate(v) for v in obj)
    return False


def _ideal_block(I: Ideal, names) -> dict:
    sat = I.irrelevant_saturation()
    h = sat.hilbert()
    return {
        "generators": I.generator_strings(names),
        "saturated": I.equals(sat),
        "dim": h.dim_proj,
        "degree": h.degree if h.dim_proj >= 0 else 0,
        "is_unit": I.is_unit(),
        "is_zero": I.is_zero(),
    }


def hypothesis_check(form: ProjectiveForm, J: Ideal, K: Ideal, L: Ideal,
                     unfolding: UnfoldingResult,
                     sing: SchemeSummary) -> dict:
    """The flags gating the theorem pipeline.

    ``j_radical`` follows the saturated singular scheme (the ideal-level flag
    is recorded alongside); ``kl_disjoint`` holds when the Kupka and
    non-Kupka schemes share no projective point; ``in_u`` is the division
    locus membership, decided through the radical comparison of the unfolding
    and Kupka ideals.
    """
    j_radical = sing.reduced
    if sing.components is None:
        ideal_level = "indeterminate"
    elif not sing.components:
        m = Ideal(form.nvars, [Polynomial.variable(i, form.nvars)
                               for i in range(form.nvars)], budget=form.budget)
        ideal_level = "yes" if J.equals(m) else "no"
    else:
        rad = J.radical_from_primes([c.prime for c in sing.components])
        ideal_level = "yes" if J.equals(rad) else "no"
    kl = K.sum(L).irrelevant_saturation().is_unit()
    if unfolding.ideal.is_zero():
        in_u = "yes" if K.is_zero() else "no"
    else:
        in_u = "yes" if unfolding.ideal.radical_equals(K) else "no"
    return {
        "j_radical": j_radical,
        "j_radical_ideal_level": ideal_level,
        "kl_disjoint": "yes" if kl else "no",
        "in_u": in_u,
    }


def analyze(form: ProjectiveForm, config: Config = DEFAULT_CONFIG) -> FoliationReport:
    """Run the full analysis and assemble the verdict report."""
    e = form.e
    names = form.names
    window = config.resolved_window(e)
    dmax = config.resolved_dmax(e)
    budget = config.resolved_budget(e)
    form = ProjectiveForm(form.n, form.e, form.coefficients, form.names, budget)

    data: dict = {"schema": 1}
    data["input"] = {
        "n": form.n,
        "e": e,
        "d": form.d,
        "vars": list(names),
        "coefficients": [poly_str(c, names) for c in form.coefficients],
    }
    data["windows"] = {"cohomology": list(window), "dmax": dmax}
    data["budgets"] = {"pairs": budget.max_pairs, "degree_cap": budget.max_degree}

    integrable = is_integrable(form)
    data["integrable"] = integrable

    J = ideal_J(form)
    dw = derivative_coefficient_ideal(form)
    K = ideal_K(form)
    L = ideal_L(form, K)
    unfolding = ideal_I(form, dmax, config, K=K)

    sing = scheme_summary(J, dw, config.decompose, names)
    kupka = scheme_summary(K, dw, config.decompose, names)

    data["validation"] = {"valid": True, "sing_codim": form.n - sing.dim if sing.dim >= 0 else form.n + 1}
    data["ideals"] = {
        "J": _ideal_block(J, names) | {"radical": sing.reduced},
        "dw": {"generators": dw.generator_strings(names)},
        "K": _ideal_block(K, names),
        "L": _ideal_block(L, names) | {"trivial": L.is_unit()},
        "I": {
            "window_generators": unfolding.generator_strings(names),
            "dims": {str(m): v for m, v in sorted(unfolding.dims.items())},
            "dmax": unfolding.dmax,
            "stabilized": unfolding.stabilized,
            "is_zero": unfolding.ideal.is_zero(),
            "saturated": unfolding.ideal.is_saturated(),
            "certified_mod_p": unfolding.certified_mod_p,
            "exact_degrees": unfolding.exact_degrees,
            "window_certified": not unfolding.stabilized,
        },
    }

    hyp = hypothesis_check(form, J, K, L, unfolding, sing)
    kset_closed = K.sum(dw).irrelevant_saturation().is_unit()
    hyp["kset_closed"] = "yes" if kset_closed else "no"
    data["hypothesis"] = hyp

    data["sing_scheme"] = sing.as_dict()
    data["kupka_scheme"] = kupka.as_dict()

    # verdicts (computed wherever defined, independent of the hypotheses)
    verdicts: dict = {}
    try:
        chern = chern_classes(form, sing)
        data["chern"] = chern.as_list()
    except (NotPureCurve, ValueError) as err:
        chern = None
        data["chern"] = None
        data["chern_error"] = "not-pure-codim-2"

    split = splitting_verdict(form, sing, window=window)
    verdicts["t_split"] = split

    try:
        acm_k = is_acm(K, window=window)
        verdicts["kupka_acm"] = acm_k.as_dict()
    except ValueError:
        acm_k = None
        verdicts["kupka_acm"] = {"verdict": "empty"}

    verdicts["k_connected"] = kupka.connected

    try:
        verdicts["k_complete_intersection"] = complete_intersection_verdict(K)
    except ValueError:
        verdicts["k_complete_intersection"] = {"verdict": "not-codim-2"}

    data["verdicts"] = verdicts

    # consistency checks: implications re-checked where the hypotheses hold
    checks: dict = {}
    alarms: list = []

    j_in_i = all(unfolding.ideal.contains(g) for g in J.gens) \
        if not unfolding.ideal.is_zero() else False
    nonintegrable_zero = integrable or unfolding.ideal.is_zero()
    holds_a = (integrable == j_in_i) and nonintegrable_zero
    checks["integrability_iff_sing_in_unfolding"] = {
        "status": "holds" if holds_a else "violated",
        "integrable": integrable,
        "sing_ideal_in_unfolding_window": j_in_i,
        "unfolding_zero": unfolding.ideal.is_zero(),
    }
    if not holds_a:
        alarms.append("integrability_iff_sing_in_unfolding")

    if integrable:
        sat_ok = data["ideals"]["I"]["saturated"]
        checks["unfolding_saturated"] = {
            "status": "holds" if sat_ok else "violated"}
        if not sat_ok:
            alarms.append("unfolding_saturated")
        if unfolding.ideal.is_zero():
            h1_zero = True
            h1_dims = {}
        else:
            h1 = sheaf_cohomology_window(unfolding.ideal, 1, window, budget)
            h1_zero = h1.is_zero()
            h1_dims = h1.as_dict()
        checks["unfolding_h1_window"] = {
            "status": "holds" if h1_zero else "violated",
            "window": list(window),
            "dims": h1_dims,
        }
        if not h1_zero:
            alarms.append("unfolding_h1_window")
    else:
        checks["unfolding_saturated"] = {"status": "not evaluated"}
        checks["unfolding_h1_window"] = {"status": "not evaluated"}

    main_hyp = integrable and hyp["j_radical"] == "yes" and hyp["kl_disjoint"] == "yes"
    if hyp["j_radical"] == "indeterminate":
        checks["kupka_acm_under_hypotheses"] = {"status": "not evaluated",
                                                "reason": "indeterminate hypothesis"}
    elif main_hyp:
        ok = acm_k is not None and acm_k.is_acm
        checks["kupka_acm_under_hypotheses"] = {
            "status": "holds" if ok else "violated",
            "evidence": verdicts["kupka_acm"],
        }
        if not ok:
            alarms.append("kupka_acm_under_hypotheses")
    else:
        checks["kupka_acm_under_hypotheses"] = {"status": "not evaluated"}

    split_hyp = integrable and hyp["j_radical"] == "yes" and L.is_unit()
    if split_hyp:
        ok = split.get("verdict") == "splits"
        checks["split_under_hypotheses"] = {
            "status": "holds" if ok else "violated", "evidence": split}
        if not ok:
            alarms.append("split_under_hypotheses")
    else:
        checks["split_under_hypotheses"] = {"status": "not evaluated"}

    if integrable and hyp["in_u"] == "yes":
        ok = kupka.connected == "yes"
        checks["kupka_connected_under_division"] = {
            "status": "holds" if ok else ("indeterminate" if kupka.connected == "indeterminate" else "violated")}
        if checks["kupka_connected_under_division"]["status"] == "violated":
            alarms.append("kupka_connected_under_division")
    else:
        checks["kupka_connected_under_division"] = {"status": "not evaluated"}

    ci_hyp = (main_hyp and L.is_unit() and kset_closed
              and kupka.components is not None
              and all(c.kupka for c in kupka.components)
              and kupka.dim == 1)
    if ci_hyp:
        ci = verdicts["k_complete_intersection"]
        ok = isinstance(ci, dict) and ci.get("verdict") is True
        checks["kupka_ci_under_compactness"] = {
            "status": "holds" if ok else "violated", "evidence": ci}
        if not ok:
            alarms.append("kupka_ci_under_compactness")
    else:
        checks["kupka_ci_under_compactness"] = {"status": "not evaluated"}

    data["checks"] = checks
    data["alarms"] = alarms
    return FoliationReport(data)


# the full pipeline under its task-facing name
theorem_suite = analyze
