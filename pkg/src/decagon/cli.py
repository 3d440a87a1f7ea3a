"""Command-line front end.

Reports are JSON on standard output with sorted keys and a stable layout,
so identical invocations produce byte-identical reports; human-readable
summaries go to standard error.  Exit code 0 means every requested check
passed, 1 means a check failed (the report is still emitted), 2 means a
usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .distlaw import (
    MixedLaw,
    algebra_to_monoidal,
    algebra_to_noiter,
    builtin_laws,
    check_algebra,
    check_beck,
    check_decagon,
    check_five_axiom,
    check_mixed_classic,
    check_mixed_decagon,
    check_noiter,
    compose_monads,
    extend_to_kleisli,
    law_from_config,
    monoidal_to_algebra,
    noiter_to_algebra,
)
from .monads import (
    ComonadMonoidal,
    TestUniverse,
    builtin_monads,
    check_comonad,
    check_monad_extensive,
    check_monad_monoidal,
    monad_from_config,
    monoidal_to_extensive,
)
from .report import LawReport
from .search import BudgetExceeded, SearchSpec, candidate_matches, enumerate_candidates


class ConfigError(ValueError):
    pass


def _load_registry(path: str | None):
    monads = builtin_monads()
    laws = builtin_laws()
    if path:
        try:
            with open(path) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read registry {path}: {exc}") from exc
        for i, cfg in enumerate(data.get("monads", [])):
            try:
                m = monad_from_config(cfg)
            except (KeyError, ValueError, TypeError) as exc:
                raise ConfigError(f"registry monads[{i}]: {exc}") from exc
            monads[cfg.get("alias", m.name)] = m
        for i, cfg in enumerate(data.get("laws", [])):
            try:
                law = law_from_config(cfg)
            except (KeyError, ValueError, TypeError) as exc:
                raise ConfigError(f"registry laws[{i}]: {exc}") from exc
            laws[law.name] = law
    return monads, laws


def _universe(args) -> TestUniverse:
    return TestUniverse.sizes(args.max_size, seed=args.seed)


_MONAD_FORMS = ("monoidal", "extensive", "all")
_LAW_FORMS = ("monoidal", "decagon", "algebra", "noiter", "five",
              "mixed-decagon", "mixed-classic", "all")


def _law_reports(law, form: str, universe: TestUniverse) -> list[LawReport]:
    if isinstance(law, MixedLaw):
        table = {
            "mixed-decagon": lambda: check_mixed_decagon(law, universe),
            "mixed-classic": lambda: check_mixed_classic(law, universe),
        }
        forms = ["mixed-decagon", "mixed-classic"] if form == "all" else [form]
    else:
        alg = monoidal_to_algebra(law)

        def noiter():
            return check_noiter(algebra_to_noiter(alg), universe)

        table = {
            "monoidal": lambda: check_beck(law, universe),
            "decagon": lambda: check_decagon(law, universe),
            "algebra": lambda: check_algebra(alg, universe),
            "noiter": noiter,
            "five": lambda: check_five_axiom(alg.alpha, law.T, law.P, universe, name=law.name),
        }
        forms = ["monoidal", "decagon", "algebra", "noiter", "five"] if form == "all" else [form]
    missing = [f for f in forms if f not in table]
    if missing:
        raise ConfigError(f"form {missing[0]!r} does not apply to law {law.name!r}")
    return [table[f]() for f in forms]


def _report_json(command: str, universe: str, reports: list[LawReport],
                 extra: dict | None = None, exhaustive: bool = True,
                 timing_ms: int = 0) -> dict:
    verdicts = []
    witnesses = []
    for rep in reports:
        for v in rep.verdicts:
            verdicts.append({
                "law": rep.law,
                "axiom": v.axiom,
                "passed": v.passed,
                "checked": v.checked,
                "skipped": v.skipped,
            })
            if v.witness is not None:
                witnesses.append({"law": rep.law, "axiom": v.axiom, **v.witness.as_dict()})
    out = {
        "command": command,
        "universe": universe,
        "verdicts": verdicts,
        "witnesses": witnesses,
        "timing_ms": timing_ms,
        "exhaustive": exhaustive,
    }
    if extra:
        out.update(extra)
    return out


def _emit(payload: dict, summaries: list[str]) -> None:
    print(json.dumps(payload, sort_keys=True, indent=1))
    for line in summaries:
        print(line, file=sys.stderr)


def _cross_form_agreement(reports: list[LawReport]) -> bool:
    return len({rep.ok for rep in reports}) <= 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="decagon",
        description="Finite-instance checks, conversions and searches for distributive laws of monads.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--registry", help="path to a JSON registry of monads and laws")
        p.add_argument("--max-size", type=int, default=2, choices=range(0, 4),
                       help="largest carrier size in the test universe")
        p.add_argument("--seed", type=int, default=None, help="seed for sampled policies")
        p.add_argument("--timing", action="store_true",
                       help="report wall-clock timing (breaks byte-identical output)")

    p = sub.add_parser("check-monad", help="run monad or comonad law suites")
    common(p)
    p.add_argument("--monad", required=True)
    p.add_argument("--form", choices=_MONAD_FORMS, default="all")

    p = sub.add_parser("check-law", help="run distributive-law axiom suites")
    common(p)
    p.add_argument("--law", required=True)
    p.add_argument("--form", choices=_LAW_FORMS, default="all")

    p = sub.add_parser("convert", help="convert between presentations and round-trip")
    common(p)
    p.add_argument("--law", required=True)
    p.add_argument("--from", dest="from_form", choices=("monoidal", "algebra", "noiter"),
                   default="monoidal")
    p.add_argument("--to", dest="to_form", choices=("monoidal", "algebra", "noiter"),
                   default="algebra")
    p.add_argument("--roundtrip", action="store_true")

    p = sub.add_parser("compose", help="build the composite monad and check it")
    common(p)
    p.add_argument("--law", required=True)

    p = sub.add_parser("extend-kleisli", help="extend along the law and check over Kleisli homs")
    common(p)
    p.add_argument("--law", required=True)

    p = sub.add_parser("search", help="brute-force candidate transformations")
    common(p)
    p.add_argument("--law", help="search the monad pair of a registered law")
    p.add_argument("--monad", action="append", default=[],
                   help="give twice: outer then inner monad")
    p.add_argument("--form", choices=("monoidal", "decagon", "algebra", "all"), default="all")
    p.add_argument("--budget", type=int, default=200_000)

    p = sub.add_parser("pasting-check", help="degenerate checks of the symbolic axioms")
    common(p)
    p.add_argument("--axiom", default="all")
    p.add_argument("--interpretation", default="exception-over-powerset",
                   help="law name or 'identity'")
    p.add_argument("--signature", help="path to a signature file")

    p = sub.add_parser("pasting-derive", help="run a construction builder and check boundaries")
    common(p)
    p.add_argument("--axiom", default="all",
                   help="Omega | pentagons | extension-cells | H | all")
    p.add_argument("--signature", help="path to a signature file")
    return parser


def _run_check_monad(args, monads, laws) -> tuple[int, dict, list[str]]:
    if args.monad not in monads:
        raise ConfigError(f"unknown monad {args.monad!r}")
    m = monads[args.monad]
    universe = _universe(args)
    reports = []
    if isinstance(m, ComonadMonoidal):
        reports.append(check_comonad(m, universe))
    else:
        if args.form in ("monoidal", "all"):
            reports.append(check_monad_monoidal(m, universe))
        if args.form in ("extensive", "all"):
            reports.append(check_monad_extensive(monoidal_to_extensive(m), universe))
    ok = all(r.ok for r in reports)
    payload = _report_json("check-monad", universe.describe(), reports)
    return (0 if ok else 1), payload, [r.summary() for r in reports]


def _run_check_law(args, monads, laws) -> tuple[int, dict, list[str]]:
    if args.law not in laws:
        raise ConfigError(f"unknown law {args.law!r}")
    law = laws[args.law]
    universe = _universe(args)
    reports = _law_reports(law, args.form, universe)
    ok = all(r.ok for r in reports)
    extra = {}
    if args.form == "all":
        extra["forms_agree"] = _cross_form_agreement(reports)
    payload = _report_json("check-law", universe.describe(), reports, extra=extra)
    return (0 if ok else 1), payload, [r.summary() for r in reports]


def _run_convert(args, monads, laws) -> tuple[int, dict, list[str]]:
    if args.law not in laws:
        raise ConfigError(f"unknown law {args.law!r}")
    law = laws[args.law]
    if isinstance(law, MixedLaw):
        raise ConfigError("mixed laws have no algebra or operator form")
    universe = _universe(args)
    alg = monoidal_to_algebra(law)
    ok = True
    details: dict = {"from": args.from_form, "to": args.to_form}
    if args.roundtrip:
        if {args.from_form, args.to_form} == {"monoidal", "algebra"}:
            back = algebra_to_monoidal(alg)
            same = all(back.lam.component(X) == law.lam.component(X) for X in universe.objects)
        elif {args.from_form, args.to_form} == {"algebra", "noiter"}:
            ni = algebra_to_noiter(alg)
            back_alg = noiter_to_algebra(ni, universe, law.P)
            same = all(back_alg.alpha.component(X) == alg.alpha.component(X)
                       for X in universe.objects)
        else:
            raise ConfigError("round trips run monoidal<->algebra or algebra<->noiter")
        details["roundtrip_identity"] = same
        ok = same
    payload = _report_json("convert", universe.describe(), [], extra=details)
    return (0 if ok else 1), payload, [f"convert {args.law}: {details}"]


def _run_compose(args, monads, laws) -> tuple[int, dict, list[str]]:
    if args.law not in laws:
        raise ConfigError(f"unknown law {args.law!r}")
    law = laws[args.law]
    if isinstance(law, MixedLaw):
        raise ConfigError("mixed laws do not compose the monads")
    universe = _universe(args)
    composite = compose_monads(monoidal_to_algebra(law))
    report = check_monad_monoidal(composite, universe)
    payload = _report_json("compose", universe.describe(), [report],
                           extra={"composite": composite.name})
    return (0 if report.ok else 1), payload, [report.summary()]


def _run_extend(args, monads, laws) -> tuple[int, dict, list[str]]:
    if args.law not in laws:
        raise ConfigError(f"unknown law {args.law!r}")
    law = laws[args.law]
    if isinstance(law, MixedLaw):
        raise ConfigError("mixed laws do not extend to the Kleisli category")
    universe = _universe(args)
    ext = extend_to_kleisli(monoidal_to_algebra(law))
    report = check_monad_extensive(ext, universe)
    payload = _report_json("extend-kleisli", universe.describe(), [report])
    return (0 if report.ok else 1), payload, [report.summary()]


def _run_search(args, monads, laws) -> tuple[int, dict, list[str]]:
    if args.law:
        if args.law not in laws:
            raise ConfigError(f"unknown law {args.law!r}")
        law = laws[args.law]
        if isinstance(law, MixedLaw):
            raise ConfigError("search handles monad-monad pairs only")
        T, Pm = law.T, law.P
        reference = law.lam
    elif len(args.monad) == 2:
        for name in args.monad:
            if name not in monads:
                raise ConfigError(f"unknown monad {name!r}")
        T, Pm = monads[args.monad[0]], monads[args.monad[1]]
        reference = None
    else:
        raise ConfigError("search needs --law NAME or --monad T --monad P")
    universe = _universe(args)
    try:
        spec = SearchSpec(T, Pm, form=args.form, universe=universe, budget=args.budget)
        result = enumerate_candidates(spec)
    except (BudgetExceeded, ValueError) as exc:
        raise ConfigError(str(exc)) from exc
    extra = {
        "note": result.note,
        "counts": {"raw": result.raw, "natural": result.natural, **result.per_axiom},
        "survivors": len(result.survivors),
        "forms_agree": result.forms_agree,
    }
    if reference is not None:
        extra["registered_among_survivors"] = any(
            candidate_matches(c, reference, universe) for c in result.survivors
        )
    payload = _report_json("search", universe.describe(), [], extra=extra,
                           exhaustive=result.exhaustive)
    ok = result.forms_agree and (reference is None or extra["registered_among_survivors"])
    return (0 if ok else 1), payload, [f"search {result.spec_desc}: {extra['counts']}"]


def _interpretation_by_name(name: str, laws):
    from .pasting.evaluate import identity_interpretation, law_interpretation

    if name == "identity":
        return identity_interpretation()
    if name not in laws:
        raise ConfigError(f"unknown interpretation {name!r}")
    law = laws[name]
    if isinstance(law, MixedLaw):
        raise ConfigError("mixed laws do not interpret the signature")
    return law_interpretation(law)


def _load_signature(path: str | None):
    from .pasting.builtin import builtin_signature
    from .pasting.signature import parse_signature

    if not path:
        return builtin_signature()
    try:
        with open(path) as fh:
            return parse_signature(fh.read())
    except (OSError, ValueError) as exc:
        raise ConfigError(f"cannot load signature {path}: {exc}") from exc


def _run_pasting_check(args, monads, laws) -> tuple[int, dict, list[str]]:
    from .pasting.evaluate import check_axiom_degenerate

    sig = _load_signature(args.signature)
    interp = _interpretation_by_name(args.interpretation, laws)
    universe = _universe(args)
    names = list(sig.axioms) if args.axiom == "all" else [args.axiom]
    for name in names:
        if name not in sig.axioms:
            raise ConfigError(f"unknown axiom {name!r}")
    reports = [check_axiom_degenerate(n, interp, universe, sig) for n in names]
    ok = all(r.ok for r in reports)
    payload = _report_json("pasting-check", universe.describe(), reports)
    return (0 if ok else 1), payload, [r.summary() for r in reports]


def _run_pasting_derive(args, monads, laws) -> tuple[int, dict, list[str]]:
    from .pasting.builtin import (
        build_H,
        build_kleisli_extension_cells,
        build_omega_from_pentagons,
        build_pentagons_from_omega,
    )
    from .pasting.signature import _term_str
    from .pasting.terms import boundary

    sig = _load_signature(args.signature)
    derivations = {}
    if args.axiom in ("Omega", "all"):
        derivations["Omega"] = (build_omega_from_pentagons(sig), "Omega")
    if args.axiom in ("pentagons", "all"):
        w4, w3 = build_pentagons_from_omega(sig)
        derivations["omega4"] = (w4, "omega4")
        derivations["omega3"] = (w3, "omega3")
    if args.axiom in ("extension-cells", "all"):
        phi, theta, delta = build_kleisli_extension_cells(sig)
        derivations["phi"] = (phi, "phi")
        derivations["theta"] = (theta, "theta")
        derivations["delta"] = (delta, "delta")
    if args.axiom in ("H", "all"):
        derivations["H"] = (build_H(sig), "H")
    if not derivations:
        raise ConfigError(f"unknown derivation target {args.axiom!r}")
    results = {}
    ok = True
    for name, (term, cell) in derivations.items():
        declared = (sig.cells[cell].src, sig.cells[cell].tgt)
        good = boundary(term, sig) == declared
        ok = ok and good
        results[name] = {"boundary_matches": good, "term": _term_str(term)}
    payload = _report_json("pasting-derive", "-", [], extra={"derivations": results})
    return (0 if ok else 1), payload, [f"{k}: {'ok' if v['boundary_matches'] else 'FAIL'}"
                                       for k, v in results.items()]


_RUNNERS = {
    "check-monad": _run_check_monad,
    "check-law": _run_check_law,
    "convert": _run_convert,
    "compose": _run_compose,
    "extend-kleisli": _run_extend,
    "search": _run_search,
    "pasting-check": _run_pasting_check,
    "pasting-derive": _run_pasting_derive,
}


def run(argv: list[str]) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    t0 = time.monotonic()
    try:
        monads, laws = _load_registry(args.registry)
        code, payload, summaries = _RUNNERS[args.command](args, monads, laws)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.timing:
        payload["timing_ms"] = int((time.monotonic() - t0) * 1000)
    _emit(payload, summaries)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
