"""Distributive laws between monads on finite sets, in four presentations.

The same transformation lambda: TP -> PT can be checked against Beck's two
triangles and two pentagons (monoidal form), against two triangles plus a
single ten-sided condition on TPTPT (Kleisli-decagon form), repackaged as
alpha: TPT -> PT with a triangle, a square and a hexagon (algebra form), or
presented through extension operators hom(X, PTY) -> hom(TX, PTY) that
never iterate P (no-iteration form).  Converters move between the forms;
``compose_monads`` builds the composite monad on PT and
``extend_to_kleisli`` the induced extensive monad on the Kleisli category
of P.  The mixed case (a comonad distributing over a monad) gets a decagon
checker plus the classical four-axiom checker for cross-validation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .elements import (
    Element,
    FinFn,
    FinSet,
    Inl,
    Pair,
    Subset,
    compose,
    element_repr,
    identity,
    subset,
)
from .functors import Id, apply_elem, apply_obj, compiled_action, compose_functors
from .monads import (
    ComonadMonoidal,
    ConstructionRefused,
    MonadExtensive,
    MonadMonoidal,
    TestUniverse,
    _eval_sides,
    builtin_monads,
    kleisli,
    monad_from_config,
    monoidal_to_extensive,
)
from .report import AxiomVerdict, LawReport, Witness
from .transforms import (
    ComponentUnavailable,
    NatTrans,
    Step,
    formula,
    tabulated,
)


@dataclass
class DistLaw:
    """lambda: TP -> PT between two monads; data shared by the monoidal and
    decagon presentations, which differ only in the axiom set a checker
    runs."""

    name: str
    T: MonadMonoidal
    P: MonadMonoidal
    lam: NatTrans

    def __post_init__(self):
        expect_src = compose_functors(self.T.functor, self.P.functor)
        expect_tgt = compose_functors(self.P.functor, self.T.functor)
        if self.lam.src != expect_src or self.lam.tgt != expect_tgt:
            raise ValueError(
                f"lambda boundaries {self.lam.src!r} -> {self.lam.tgt!r} do not match TP -> PT"
            )


DistLawMonoidal = DistLaw
DistLawDecagon = DistLaw


@dataclass
class DistLawAlgebra:
    """alpha: TPT -> PT presentation."""

    name: str
    T: MonadMonoidal
    P: MonadMonoidal
    alpha: NatTrans

    def __post_init__(self):
        T, P = self.T.functor, self.P.functor
        expect_src = compose_functors(T, P, T)
        expect_tgt = compose_functors(P, T)
        if self.alpha.src != expect_src or self.alpha.tgt != expect_tgt:
            raise ValueError("alpha boundaries do not match TPT -> PT")


@dataclass
class DistLawNoIteration:
    """Extension-operator presentation: op(f: X -> PTY): TX -> PTY."""

    name: str
    T: MonadMonoidal
    P: MonadExtensive
    op: Callable[[FinFn], FinFn]


@dataclass
class MixedLaw:
    """lambda: LR -> RL between a comonad L and a monad R."""

    name: str
    L: ComonadMonoidal
    R: MonadMonoidal
    lam: NatTrans


# ---------------------------------------------------------------------------
# checkers for the lambda forms


def check_beck(D: DistLaw, universe: TestUniverse) -> LawReport:
    """Two unit triangles and two pentagons."""
    T, P = D.T.functor, D.P.functor
    u, m = D.T.unit, D.T.mult
    eta, mu = D.P.unit, D.P.mult
    lam = D.lam
    I = Id()
    report = LawReport(f"beck:{D.name}", universe.describe())
    _eval_sides(
        report, "unit-u-triangle", universe,
        [Step(I, u, P), Step(I, lam, I)],
        [Step(P, u, I)],
        P,
    )
    _eval_sides(
        report, "unit-eta-triangle", universe,
        [Step(T, eta, I), Step(I, lam, I)],
        [Step(I, eta, T)],
        T,
    )
    _eval_sides(
        report, "m-pentagon", universe,
        [Step(I, m, P), Step(I, lam, I)],
        [Step(T, lam, I), Step(I, lam, T), Step(P, m, I)],
        compose_functors(T, T, P),
    )
    _eval_sides(
        report, "mu-pentagon", universe,
        [Step(T, mu, I), Step(I, lam, I)],
        [Step(I, lam, P), Step(P, lam, I), Step(I, mu, T)],
        compose_functors(T, P, P),
    )
    return report


def check_decagon(D: DistLaw, universe: TestUniverse) -> LawReport:
    """Two unit triangles and the single decagon on TPTPT."""
    T, P = D.T.functor, D.P.functor
    u, m = D.T.unit, D.T.mult
    eta, mu = D.P.unit, D.P.mult
    lam = D.lam
    I = Id()
    TP = compose_functors(T, P)
    report = LawReport(f"decagon:{D.name}", universe.describe())
    _eval_sides(
        report, "unit-u-triangle", universe,
        [Step(I, u, P), Step(I, lam, I)],
        [Step(P, u, I)],
        P,
    )
    _eval_sides(
        report, "unit-eta-triangle", universe,
        [Step(T, eta, I), Step(I, lam, I)],
        [Step(I, eta, T)],
        T,
    )
    _eval_sides(
        report, "decagon", universe,
        [
            Step(TP, lam, T),
            Step(compose_functors(T, P, P), m, I),
            Step(T, mu, T),
            Step(I, lam, T),
            Step(P, m, I),
        ],
        [
            Step(I, lam, compose_functors(T, P, T)),
            Step(P, m, compose_functors(P, T)),
            Step(P, lam, T),
            Step(compose_functors(P, P), m, I),
            Step(I, mu, T),
        ],
        compose_functors(T, P, T, P, T),
    )
    return report


def check_algebra(D: DistLawAlgebra, universe: TestUniverse) -> LawReport:
    """Unit triangle, eta square and the hexagon on TPTPT."""
    T, P = D.T.functor, D.P.functor
    u, m = D.T.unit, D.T.mult
    eta, mu = D.P.unit, D.P.mult
    alpha = D.alpha
    I = Id()
    PT = compose_functors(P, T)
    report = LawReport(f"algebra:{D.name}", universe.describe())
    _eval_sides(
        report, "unit-triangle", universe,
        [Step(I, u, PT), Step(I, alpha, I)],
        None,
        PT,
    )
    _eval_sides(
        report, "eta-square", universe,
        [Step(T, eta, T), Step(I, alpha, I)],
        [Step(I, m, I), Step(I, eta, T)],
        compose_functors(T, T),
    )
    _eval_sides(
        report, "hexagon", universe,
        [Step(compose_functors(T, P), alpha, I), Step(T, mu, T), Step(I, alpha, I)],
        [Step(I, alpha, PT), Step(P, alpha, I), Step(I, mu, T)],
        compose_functors(T, P, T, P, T),
    )
    return report


def check_five_axiom(
    alpha: NatTrans, T: MonadMonoidal, P: MonadMonoidal, universe: TestUniverse,
    name: str = "",
) -> LawReport:
    """T-algebra structure plus three squares on alpha: TPT -> PT."""
    TF, PF = T.functor, P.functor
    u, m = T.unit, T.mult
    eta, mu = P.unit, P.mult
    I = Id()
    PT = compose_functors(PF, TF)
    report = LawReport(f"five-axiom:{name or 'alpha'}", universe.describe())
    _eval_sides(
        report, "algebra-unit", universe,
        [Step(I, u, PT), Step(I, alpha, I)],
        None,
        PT,
    )
    _eval_sides(
        report, "algebra-mult", universe,
        [Step(TF, alpha, I), Step(I, alpha, I)],
        [Step(I, m, PT), Step(I, alpha, I)],
        compose_functors(TF, TF, PF, TF),
    )
    _eval_sides(
        report, "m-square", universe,
        [Step(compose_functors(TF, PF), m, I), Step(I, alpha, I)],
        [Step(I, alpha, TF), Step(PF, m, I)],
        compose_functors(TF, PF, TF, TF),
    )
    _eval_sides(
        report, "eta-square", universe,
        [Step(TF, eta, TF), Step(I, alpha, I)],
        [Step(I, m, I), Step(I, eta, TF)],
        compose_functors(TF, TF),
    )
    _eval_sides(
        report, "mu-diagram", universe,
        [Step(compose_functors(TF, PF), u, compose_functors(PF, TF)), Step(I, alpha, PT),
         Step(PF, alpha, I), Step(I, mu, TF)],
        [Step(TF, mu, TF), Step(I, alpha, I)],
        compose_functors(TF, PF, PF, TF),
    )
    return report


def check_noiter(D: DistLawNoIteration, universe: TestUniverse) -> LawReport:
    """Three equations on the extension operator, quantified over homs."""
    T = D.T
    P = D.P
    TF = T.functor
    report = LawReport(f"noiter:{D.name}", universe.describe())

    def pt(Y: FinSet) -> FinSet:
        return P.obj(apply_obj(TF, Y))

    def eta_at(W: FinSet) -> FinFn:
        return P.unit_at(W)

    def homs(X: FinSet, Y: FinSet) -> list[FinFn]:
        from .elements import all_functions

        return all_functions(X, pt(Y))

    def record(axiom: str, instances) -> None:
        checked, witness = 0, None
        for descr, lhs, rhs in instances:
            checked += 1
            if witness is None and lhs != rhs:
                for x in lhs.dom.elements:
                    if lhs(x) != rhs(x):
                        witness = Witness(descr, element_repr(x),
                                          element_repr(lhs(x)), element_repr(rhs(x)))
                        break
        report.verdicts.append(
            AxiomVerdict(axiom, passed=witness is None and checked > 0,
                         checked=checked, witness=witness)
        )

    def ax_unit():
        for X in universe.objects:
            uX = T.unit.component(X)
            for Y in universe.objects:
                for f in homs(X, Y):
                    yield (f"f:{len(X)}->{len(Y)}", compose(D.op(f), uX), f)

    def ax_eta():
        for X in universe.objects:
            TX = apply_obj(TF, X)
            etaTX = eta_at(TX)
            mX = T.mult.component(X)
            yield (f"|X|={len(X)}", D.op(etaTX), compose(etaTX, mX))

    def ax_comp():
        for X in universe.objects:
            for Y in universe.objects:
                fs = [(f, D.op(f)) for f in homs(X, Y)]
                for Z in universe.objects:
                    for g in homs(Y, Z):
                        og_p = P.ext(D.op(g))
                        for f, op_f in fs:
                            yield (
                                f"f:{len(X)}->{len(Y)},g:{len(Y)}->{len(Z)}",
                                compose(og_p, op_f),
                                D.op(compose(og_p, f)),
                            )

    record("op-unit", ax_unit())
    record("op-eta", ax_eta())
    record("op-composition", ax_comp())
    return report


# ---------------------------------------------------------------------------
# mixed distributive laws


def check_mixed_decagon(Mx: MixedLaw, universe: TestUniverse) -> LawReport:
    """Two triangles plus a ten-sided condition from LR^2 to RL^2."""
    L, R = Mx.L.functor, Mx.R.functor
    eps, delta = Mx.L.counit, Mx.L.comult
    eta, mu = Mx.R.unit, Mx.R.mult
    lam = Mx.lam
    I = Id()
    report = LawReport(f"mixed-decagon:{Mx.name}", universe.describe())
    _eval_sides(
        report, "epsilon-triangle", universe,
        [Step(I, lam, I), Step(R, eps, I)],
        [Step(I, eps, R)],
        compose_functors(L, R),
    )
    _eval_sides(
        report, "eta-triangle", universe,
        [Step(L, eta, I), Step(I, lam, I)],
        [Step(I, eta, L)],
        L,
    )
    _eval_sides(
        report, "mixed-decagon", universe,
        [
            Step(I, lam, R),
            Step(R, delta, R),
            Step(compose_functors(R, L), lam, I),
            Step(R, lam, L),
            Step(I, mu, compose_functors(L, L)),
        ],
        [
            Step(I, delta, compose_functors(R, R)),
            Step(L, lam, R),
            Step(compose_functors(L, R), lam, I),
            Step(L, mu, L),
            Step(I, lam, L),
        ],
        compose_functors(L, R, R),
    )
    return report


def check_mixed_classic(Mx: MixedLaw, universe: TestUniverse) -> LawReport:
    """The classical four axioms for a comonad distributing over a monad."""
    L, R = Mx.L.functor, Mx.R.functor
    eps, delta = Mx.L.counit, Mx.L.comult
    eta, mu = Mx.R.unit, Mx.R.mult
    lam = Mx.lam
    I = Id()
    report = LawReport(f"mixed-classic:{Mx.name}", universe.describe())
    _eval_sides(
        report, "epsilon-triangle", universe,
        [Step(I, lam, I), Step(R, eps, I)],
        [Step(I, eps, R)],
        compose_functors(L, R),
    )
    _eval_sides(
        report, "eta-triangle", universe,
        [Step(L, eta, I), Step(I, lam, I)],
        [Step(I, eta, L)],
        L,
    )
    _eval_sides(
        report, "delta-pentagon", universe,
        [Step(I, lam, I), Step(R, delta, I)],
        [Step(I, delta, R), Step(L, lam, I), Step(I, lam, L)],
        compose_functors(L, R),
    )
    _eval_sides(
        report, "mu-pentagon", universe,
        [Step(L, mu, I), Step(I, lam, I)],
        [Step(I, lam, R), Step(R, lam, I), Step(I, mu, L)],
        compose_functors(L, R, R),
    )
    return report


# ---------------------------------------------------------------------------
# converters


def _require(report: LawReport, what: str) -> None:
    if not report.ok:
        failing = [v.axiom for v in report.verdicts if not v.passed]
        raise ConstructionRefused(f"{what}: failing axioms {failing}")


def monoidal_to_algebra(D: DistLaw) -> DistLawAlgebra:
    """alpha = Pm after lambda-whiskered-by-T."""
    T, P = D.T.functor, D.P.functor
    lam, m = D.lam, D.T.mult

    def rule(X: FinSet) -> Callable[[Element], Element]:
        lam_fn = lam.component_fn(apply_obj(T, X)) if lam.needs_object else lam.rule(X)
        pm = compiled_action(P, m.rule(X))
        return lambda e: pm(lam_fn(e))

    alpha = NatTrans(
        compose_functors(T, P, T),
        compose_functors(P, T),
        rule,
        name=f"alpha[{D.name}]",
        needs_object=lam.needs_object,
    )
    return DistLawAlgebra(D.name, D.T, D.P, alpha)


def algebra_to_monoidal(D: DistLawAlgebra, universe: Optional[TestUniverse] = None) -> DistLaw:
    """Recover lambda as alpha after TPu."""
    if universe is not None:
        _require(check_algebra(D, universe), f"algebra form of {D.name}")
    T, P = D.T.functor, D.P.functor
    u, alpha = D.T.unit, D.alpha
    TP = compose_functors(T, P)

    def rule(X: FinSet) -> Callable[[Element], Element]:
        tpu = compiled_action(TP, u.rule(X))
        alpha_fn = alpha.component_fn(X)
        return lambda e: alpha_fn(tpu(e))

    lam = NatTrans(
        TP, compose_functors(P, T), rule,
        name=f"lambda[{D.name}]", needs_object=alpha.needs_object,
    )
    return DistLaw(D.name, D.T, D.P, lam)


def algebra_to_noiter(D: DistLawAlgebra, universe: Optional[TestUniverse] = None) -> DistLawNoIteration:
    """op(f) = alpha after T(f)."""
    if universe is not None:
        _require(check_algebra(D, universe), f"algebra form of {D.name}")
    T = D.T.functor
    PT = compose_functors(D.P.functor, T)
    alpha = D.alpha

    def alpha_fn_for(f: FinFn) -> Callable[[Element], Element]:
        if not alpha.needs_object:
            return alpha.rule(f.dom)
        for Y in alpha.tabulated_objects or ():
            if apply_obj(PT, Y) == f.cod:
                return alpha.component_fn(Y)
        raise ComponentUnavailable(f"no alpha component with PT(Y) = {f.cod!r}")

    def op(f: FinFn) -> FinFn:
        dom = apply_obj(T, f.dom)
        alpha_fn = alpha_fn_for(f)
        return FinFn._raw(dom, f.cod, {e: alpha_fn(apply_elem(T, f, e)) for e in dom.elements})

    P_ext = monoidal_to_extensive(D.P)
    return DistLawNoIteration(D.name, D.T, P_ext, op)


def noiter_to_algebra(
    D: DistLawNoIteration, universe: TestUniverse, P_monoidal: MonadMonoidal,
    check: bool = False,
) -> DistLawAlgebra:
    """Recover alpha at X as op applied to the identity on PTX."""
    if check:
        _require(check_noiter(D, universe), f"no-iteration form of {D.name}")
    T, P = D.T.functor, P_monoidal.functor
    tables: dict[FinSet, FinFn] = {}
    for X in universe.objects:
        ptx = D.P.obj(apply_obj(T, X))
        tables[X] = D.op(identity(ptx))
    alpha = tabulated(
        compose_functors(T, P, T), compose_functors(P, T), tables,
        name=f"alpha[{D.name}]",
    )
    return DistLawAlgebra(D.name, D.T, P_monoidal, alpha)


def compose_monads(D: DistLawAlgebra, universe: Optional[TestUniverse] = None) -> MonadMonoidal:
    """Composite monad on PT: unit etaT.u, multiplication muT.PPm.PlambdaT."""
    if universe is not None:
        _require(check_algebra(D, universe), f"algebra form of {D.name}")
    T, P = D.T.functor, D.P.functor
    u, m = D.T.unit, D.T.mult
    eta, mu = D.P.unit, D.P.mult
    lam = algebra_to_monoidal(D).lam
    PT = compose_functors(P, T)

    def unit_rule(X: FinSet) -> Callable[[Element], Element]:
        u_fn = u.rule(X)
        eta_fn = eta.rule(X)
        return lambda e: eta_fn(u_fn(e))

    def mult_rule(X: FinSet) -> Callable[[Element], Element]:
        # PTPT -> PT: P(lambda T); P(P m); mu T
        lam_fn = lam.component_fn(apply_obj(T, X)) if lam.needs_object else lam.rule(X)
        plam = compiled_action(P, lam_fn)
        ppm = compiled_action(compose_functors(P, P), m.rule(X))
        mu_fn = mu.rule(X)

        def go(e: Element) -> Element:
            return mu_fn(ppm(plam(e)))

        return go

    return MonadMonoidal(
        f"{D.P.name}.{D.T.name}",
        PT,
        NatTrans(Id(), PT, unit_rule, name="unit", needs_object=False),
        NatTrans(compose_functors(PT, PT), PT, mult_rule, name="mult",
                 needs_object=lam.needs_object),
    )


def extend_to_kleisli(D: DistLawAlgebra, universe: Optional[TestUniverse] = None) -> MonadExtensive:
    """Extensive monad on the Kleisli category of P induced by the law."""
    if universe is not None:
        _require(check_algebra(D, universe), f"algebra form of {D.name}")
    T = D.T.functor
    u, eta = D.T.unit, D.P.unit
    alpha = D.alpha
    P_ext = monoidal_to_extensive(D.P)
    kl = kleisli(P_ext)

    def unit_at(X: FinSet) -> FinFn:
        tx = apply_obj(T, X)
        u_table = u.component(X)
        eta_table = eta.component(tx)
        return compose(eta_table, u_table)

    def ext(f: FinFn) -> FinFn:
        dom = apply_obj(T, f.dom)
        alpha_fn = alpha.component_fn(f.dom)
        return FinFn._raw(dom, f.cod, {e: alpha_fn(apply_elem(T, f, e)) for e in dom.elements})

    return MonadExtensive(
        f"kleisli-extension[{D.name}]",
        obj=lambda X: apply_obj(T, X),
        unit_at=unit_at,
        ext=ext,
        ambient=kl,
    )


# ---------------------------------------------------------------------------
# built-in laws


def exception_over_powerset() -> DistLaw:
    """lambda(inl S) = image of S under inl; lambda(inr e) = {inr e}."""
    monads = builtin_monads()
    T = monads["exception"]
    P = monads["powerset"]

    def lam_fn(e: Element) -> Element:
        if type(e) is Inl:
            return subset(Inl(x) for x in e.value.members)
        return Subset((e,))

    lam = formula(
        compose_functors(T.functor, P.functor),
        compose_functors(P.functor, T.functor),
        lam_fn,
        name="exception-dist",
    )
    return DistLaw("exception-over-powerset", T, P, lam)


def writer_over_powerset() -> DistLaw:
    """Strength law: (m, S) goes to the set of pairs (m, x) for x in S."""
    monads = builtin_monads()
    T = monads["writer"]
    P = monads["powerset"]

    def lam_fn(e: Element) -> Element:
        return subset(Pair(e.fst, x) for x in e.snd.members)

    lam = formula(
        compose_functors(T.functor, P.functor),
        compose_functors(P.functor, T.functor),
        lam_fn,
        name="writer-strength",
    )
    return DistLaw("writer-over-powerset", T, P, lam)


def coreader_over_powerset() -> MixedLaw:
    """Mixed strength law: (a, S) goes to {(a, x) for x in S}."""
    monads = builtin_monads()
    L = monads["coreader"]
    R = monads["powerset"]

    def lam_fn(e: Element) -> Element:
        return subset(Pair(e.fst, x) for x in e.snd.members)

    lam = formula(
        compose_functors(L.functor, R.functor),
        compose_functors(R.functor, L.functor),
        lam_fn,
        name="coreader-strength",
    )
    return MixedLaw("coreader-over-powerset", L, R, lam)


_BUILTIN_COMPONENTS = {
    "exception-dist": lambda T, P: formula(
        compose_functors(T.functor, P.functor),
        compose_functors(P.functor, T.functor),
        lambda e: subset(Inl(x) for x in e.value.members) if type(e) is Inl else Subset((e,)),
        name="exception-dist",
    ),
    "writer-strength": lambda T, P: formula(
        compose_functors(T.functor, P.functor),
        compose_functors(P.functor, T.functor),
        lambda e: subset(Pair(e.fst, x) for x in e.snd.members),
        name="writer-strength",
    ),
    "coreader-strength": lambda L, R: formula(
        compose_functors(L.functor, R.functor),
        compose_functors(R.functor, L.functor),
        lambda e: subset(Pair(e.fst, x) for x in e.snd.members),
        name="coreader-strength",
    ),
}


def _validate_component(lam: NatTrans, name: str) -> None:
    """Smoke-materialise the component on tiny carriers so that a builtin
    formula paired with structurally wrong monads is a config error."""
    from .elements import atoms

    for X in (atoms(), atoms("a")):
        try:
            lam.component(X)
        except (AttributeError, TypeError, KeyError, ValueError) as exc:
            raise ValueError(
                f"lambda {lam.name!r} does not fit the monads of law {name!r}: {exc}"
            ) from exc


def law_from_config(cfg: dict) -> DistLaw | MixedLaw:
    """Build a law from its JSON description, for example
    {"law": "...", "T": {"name": "exception", "E": ["e"]},
     "P": {"name": "powerset"}, "lambda": "builtin:exception-dist"}."""
    name = cfg["law"]
    lam_spec = cfg["lambda"]
    if not (isinstance(lam_spec, str) and lam_spec.startswith("builtin:")):
        raise ValueError(f"lambda must name a builtin component, got {lam_spec!r}")
    builder = _BUILTIN_COMPONENTS.get(lam_spec.split(":", 1)[1])
    if builder is None:
        raise KeyError(f"unknown builtin lambda {lam_spec!r}")
    if "L" in cfg:
        L = monad_from_config(cfg["L"])
        R = monad_from_config(cfg["R"])
        law = MixedLaw(name, L, R, builder(L, R))
    else:
        T = monad_from_config(cfg["T"])
        P = monad_from_config(cfg["P"])
        if isinstance(T, ComonadMonoidal):
            law = MixedLaw(name, T, P, builder(T, P))
        else:
            law = DistLaw(name, T, P, builder(T, P))
    _validate_component(law.lam, name)
    return law


def builtin_laws() -> dict[str, DistLaw | MixedLaw]:
    return {
        "exception-over-powerset": exception_over_powerset(),
        "writer-over-powerset": writer_over_powerset(),
        "coreader-over-powerset": coreader_over_powerset(),
    }
