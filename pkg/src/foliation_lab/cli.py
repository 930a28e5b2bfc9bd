"""Command line interface: analyze, ideals, corpus, cohomology.

Exit codes: 0 success, 1 invalid input, 2 indeterminate verdicts,
3 budget exceeded, 4 corpus regression.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .config import Config
from .foliation import (
    ConstructionError, ValidationError, foliation_from_acm_curve, ideal_I,
    ideal_J, ideal_K, ideal_L, is_integrable,
)
from .formfile import FormFile, FormSyntaxError, parse_form
from .groebner import BudgetExceeded
from .report import FoliationReport, analyze
from .resolutions import hilbert_burch_presentation, sheaf_cohomology_window

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INDETERMINATE = 2
EXIT_BUDGET = 3
EXIT_REGRESSION = 4


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--dmax", type=int, default=None)
    p.add_argument("--window", type=int, nargs=2, metavar=("LO", "HI"), default=None)
    p.add_argument("--budget-pairs", type=int, default=200_000)
    p.add_argument("--budget-deg", type=int, default=None)
    p.add_argument("--no-decompose", action="store_true")
    p.add_argument("--format", choices=["json", "text"], default="json")


def _config(args) -> Config:
    return Config(
        dmax=args.dmax,
        window=tuple(args.window) if args.window else None,
        budget_pairs=args.budget_pairs,
        budget_deg=args.budget_deg,
        decompose=not args.no_decompose,
        fmt=args.format,
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="foliation-lab",
        description="Ideal-theoretic analysis of twisted 1-forms on projective space")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full verdict report for a .fol file")
    p.add_argument("file")
    _add_common(p)

    p = sub.add_parser("ideals", help="singular/unfolding/Kupka/non-Kupka ideals")
    p.add_argument("file")
    _add_common(p)

    p = sub.add_parser("corpus", help="run a fixture directory against .expect files")
    p.add_argument("dir")
    _add_common(p)

    p = sub.add_parser("cohomology", help="sheaf cohomology window of a chosen ideal")
    p.add_argument("file")
    p.add_argument("--ideal", choices=["J", "I", "K", "L"], required=True)
    p.add_argument("--i", dest="index", type=int, required=True)
    _add_common(p)
    return ap


def _emit(data: dict, fmt: str):
    if fmt == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for line in _text_lines(data, ""):
            print(line)


def _text_lines(obj, prefix):
    if isinstance(obj, dict):
        for k in sorted(obj):
            yield from _text_lines(obj[k], f"{prefix}{k}.")
    else:
        yield f"{prefix[:-1]}: {obj}"


def _load_form(path: str, cfg: Config):
    text = Path(path).read_text(encoding="utf-8")
    ff = parse_form(text)
    budget = cfg.resolved_budget(ff.e)
    return ff, ff.build(budget)


def cmd_analyze(args) -> int:
    cfg = _config(args)
    try:
        _, form = _load_form(args.file, cfg)
        report = analyze(form, cfg)
    except (FormSyntaxError, ValidationError) as err:
        _emit({"schema": 1, "error": getattr(err, "code", "invalid"),
               "message": str(err)}, cfg.fmt)
        return EXIT_INVALID
    except BudgetExceeded as err:
        _emit({"schema": 1, "error": "budget-exceeded", "message": str(err)}, cfg.fmt)
        return EXIT_BUDGET
    _emit(report.data, cfg.fmt)
    return EXIT_INDETERMINATE if report.has_indeterminate else EXIT_OK


def cmd_ideals(args) -> int:
    cfg = _config(args)
    try:
        ff, form = _load_form(args.file, cfg)
        J = ideal_J(form)
        K = ideal_K(form)
        L = ideal_L(form, K)
        unf = ideal_I(form, cfg.resolved_dmax(form.e), cfg, K=K)
        names = form.names
        out = {
            "schema": 1,
            "integrable": is_integrable(form),
            "J": _hblock(J, names),
            "K": _hblock(K, names),
            "L": _hblock(L, names),
            "I": {
                "window_generators": unf.generator_strings(names),
                "dims": {str(m): v for m, v in sorted(unf.dims.items())},
                "is_zero": unf.ideal.is_zero(),
                "dmax": unf.dmax,
                "stabilized": unf.stabilized,
            },
        }
    except (FormSyntaxError, ValidationError) as err:
        _emit({"schema": 1, "error": getattr(err, "code", "invalid"),
               "message": str(err)}, cfg.fmt)
        return EXIT_INVALID
    except BudgetExceeded as err:
        _emit({"schema": 1, "error": "budget-exceeded", "message": str(err)}, cfg.fmt)
        return EXIT_BUDGET
    _emit(out, cfg.fmt)
    return EXIT_OK


def _hblock(I, names):
    h = I.irrelevant_saturation().hilbert()
    return {
        "generators": I.generator_strings(names),
        "dim": h.dim_proj,
        "degree": h.degree if h.dim_proj >= 0 else 0,
        "is_unit": I.is_unit(),
        "is_zero": I.is_zero(),
    }


def cmd_cohomology(args) -> int:
    cfg = _config(args)
    try:
        ff, form = _load_form(args.file, cfg)
        window = cfg.resolved_window(form.e)
        if args.ideal == "J":
            I = ideal_J(form)
        elif args.ideal == "K":
            I = ideal_K(form)
        elif args.ideal == "L":
            I = ideal_L(form)
        else:
            I = ideal_I(form, cfg.resolved_dmax(form.e), cfg).ideal
        if I.is_zero() or I.is_unit():
            _emit({"schema": 1, "error": "degenerate-ideal",
                   "message": "cohomology window needs a proper nonzero ideal"},
                  cfg.fmt)
            return EXIT_INVALID
        w = sheaf_cohomology_window(I, args.index, window,
                                    cfg.resolved_budget(form.e))
        out = {"schema": 1, "ideal": args.ideal, "i": args.index,
               "window": list(window), "dims": w.as_dict()}
    except (FormSyntaxError, ValidationError) as err:
        _emit({"schema": 1, "error": getattr(err, "code", "invalid"),
               "message": str(err)}, cfg.fmt)
        return EXIT_INVALID
    except BudgetExceeded as err:
        _emit({"schema": 1, "error": "budget-exceeded", "message": str(err)}, cfg.fmt)
        return EXIT_BUDGET
    _emit(out, cfg.fmt)
    return EXIT_OK


# ---------------------------------------------------------------------------
# corpus runner

def flatten_report(data: dict) -> dict:
    """Flat key=value view of a report for .expect comparisons."""
    out = {}
    out["integrable"] = str(data.get("integrable", "")).lower()
    sing = data.get("sing_scheme", {})
    out["sing_dim"] = str(sing.get("dim", ""))
    out["sing_degree"] = str(sing.get("degree", ""))
    comps = sing.get("components")
    if comps is not None:
        out["components"] = str(len(comps))
        mults = sorted(c["multiplicity"] for c in comps)
        out["multiplicities"] = ",".join(str(m) for m in mults)
        nonkupka = sorted("&".join(c["prime"]) for c in comps if not c["kupka"])
        out["nonkupka"] = ";".join(nonkupka) if nonkupka else "none"
    chern = data.get("chern")
    out["chern"] = ",".join(str(c) for c in chern) if chern else "none"
    split = data.get("verdicts", {}).get("t_split", {})
    out["split"] = split.get("type_string", split.get("verdict", ""))
    out["k_connected"] = str(data.get("verdicts", {}).get("k_connected", ""))
    acm = data.get("verdicts", {}).get("kupka_acm", {})
    out["k_acm"] = str(acm.get("verdict", ""))
    ci = data.get("verdicts", {}).get("k_complete_intersection", {})
    out["k_ci"] = str(ci.get("verdict", "")).lower()
    hyp = data.get("hypothesis", {})
    out["j_radical"] = hyp.get("j_radical", "")
    out["kl_disjoint"] = hyp.get("kl_disjoint", "")
    out["in_u"] = hyp.get("in_u", "")
    ideals = data.get("ideals", {})
    out["l_trivial"] = str(ideals.get("L", {}).get("trivial", "")).lower()
    out["i_zero"] = str(ideals.get("I", {}).get("is_zero", "")).lower()
    out["alarms"] = str(len(data.get("alarms", [])))
    checks = data.get("checks", {})
    for name, chk in checks.items():
        out[f"check.{name}"] = chk.get("status", "")
    return out


def _parse_expect(path: Path) -> dict:
    out = {}
    for raw in path.read_text(encoding="utf-8").splitlines():
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ValueError(f"malformed expectation line: {raw!r}")
        k, v = body.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _run_hb_fixture(path: Path) -> dict:
    """Curve-presentation fixture: gen/rel lines driving the curve constructor."""
    from .formfile import _ExprParser, _tokenize
    from .qalgebra import Polynomial

    n = None
    names = None
    gens = []
    rels = []
    for idx, raw in enumerate(path.read_text(encoding="utf-8").splitlines()):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if body.startswith("vars"):
            names = body[4:].split()
            continue
        if body.startswith("n"):
            n = int(body.split("=", 1)[1])
            continue
        if body.startswith("gen ") or body.startswith("rel "):
            kind, expr = body.split(" ", 1)
            env = {nm: Polynomial.variable(j, len(names)) for j, nm in enumerate(names)}
            p = _ExprParser(_tokenize(expr, idx + 1), env, len(names)).parse()
            (gens if kind == "gen" else rels).append(p)
    if not rels:
        rels = [Polynomial.variable(j, len(names)) for j in range(len(names))]
    try:
        form, integrable = foliation_from_acm_curve(gens, rels, names)
        return {"error": "none", "integrable": str(integrable).lower()}
    except ConstructionError as err:
        return {"error": err.code}


def run_corpus(directory: str, cfg: Config):
    """(summary lines, regression flag); fixtures run in name order."""
    base = Path(directory)
    fixtures = sorted(list(base.glob("*.fol")) + list(base.glob("*.hb")))
    lines = []
    regression = False
    for fx in fixtures:
        expect_path = fx.with_suffix(".expect")
        if not expect_path.exists():
            lines.append(f"{fx.name}: SKIP (no expectations)")
            continue
        try:
            expect = _parse_expect(expect_path)
        except ValueError as err:
            lines.append(f"{fx.name}: FAIL (corrupt expectations: {err})")
            regression = True
            continue
        try:
            if fx.suffix == ".hb":
                got = _run_hb_fixture(fx)
            else:
                text = fx.read_text(encoding="utf-8")
                ff = parse_form(text)
                form = ff.build(cfg.resolved_budget(ff.e))
                got = flatten_report(analyze(form, cfg).data)
                got["error"] = "none"
        except (FormSyntaxError, ValidationError) as err:
            got = {"error": getattr(err, "code", "invalid")}
        except BudgetExceeded:
            got = {"error": "budget-exceeded"}
        bad = []
        for k, v in expect.items():
            actual = got.get(k, "<missing>")
            if str(actual) != v:
                bad.append(f"{k}: expected {v!r}, got {actual!r}")
        if bad:
            regression = True
            lines.append(f"{fx.name}: FAIL ({'; '.join(bad)})")
        else:
            lines.append(f"{fx.name}: PASS")
    return lines, regression


def cmd_corpus(args) -> int:
    cfg = _config(args)
    lines, regression = run_corpus(args.dir, cfg)
    for line in lines:
        print(line)
    checked = sum(1 for l in lines if not l.endswith("(no expectations)"))
    print(f"-- {checked} fixture(s) checked, "
          f"{'regressions found' if regression else 'all passing'}")
    return EXIT_REGRESSION if regression else EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "analyze":
        return cmd_analyze(args)
    if args.command == "ideals":
        return cmd_ideals(args)
    if args.command == "corpus":
        return cmd_corpus(args)
    if args.command == "cohomology":
        return cmd_cohomology(args)
    return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
