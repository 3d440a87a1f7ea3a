import pytest

from decagon.distlaw import (
    DistLaw,
    DistLawAlgebra,
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
    coreader_over_powerset,
    exception_over_powerset,
    law_from_config,
    monoidal_to_algebra,
    noiter_to_algebra,
    writer_over_powerset,
)
from decagon.elements import (
    Atom,
    FinFn,
    Inl,
    Inr,
    Pair,
    Subset,
    all_functions,
    atoms,
    compose,
    identity,
    subset,
)
from decagon.functors import apply_obj, compose_functors
from decagon.monads import (
    TestUniverse,
    builtin_monads,
    check_category,
    check_monad_extensive,
    check_monad_monoidal,
    identity_monad,
    monoidal_to_extensive,
    powerset_monad,
)
from decagon.transforms import formula

U2 = TestUniverse.sizes(2)
U1 = TestUniverse.sizes(1)


def identity_law():
    T = identity_monad()
    P = identity_monad()
    lam = formula(compose_functors(T.functor, P.functor),
                  compose_functors(P.functor, T.functor), lambda e: e, "id")
    return DistLaw("identity-over-identity", T, P, lam)


def broken_exception_law():
    """exception-dist with lambda(inr e) redefined to the empty set."""
    good = exception_over_powerset()

    def lam_fn(e):
        if type(e) is Inl:
            return subset(Inl(x) for x in e.value.members)
        return Subset(())

    lam = formula(good.lam.src, good.lam.tgt, lam_fn, "broken")
    return DistLaw("broken", good.T, good.P, lam)


# --- checkers on the lambda forms ------------------------------------------


def test_exception_over_powerset_passes_beck():
    report = check_beck(exception_over_powerset(), U2)
    assert report.ok, report.summary()


def test_exception_over_powerset_passes_decagon():
    report = check_decagon(exception_over_powerset(), U2)
    assert report.ok, report.summary()


def test_writer_over_powerset_passes_beck_and_decagon():
    law = writer_over_powerset()
    assert check_beck(law, U2).ok
    assert check_decagon(law, U2).ok


def test_identity_law_trivially_passes():
    law = identity_law()
    assert check_beck(law, U2).ok
    assert check_decagon(law, U2).ok


def test_broken_lambda_fails_a_unit_triangle():
    # lambda(inr e) = {} breaks the eta-unit triangle: T(eta) leaves inr e
    # fixed and eta T sends it to {inr e}, while the broken lambda gives {}.
    report = check_beck(broken_exception_law(), U2)
    assert not report.verdict("unit-eta-triangle").passed
    assert report.verdict("unit-eta-triangle").witness is not None


def test_broken_lambda_fails_decagon():
    # the empty-set mutation is absorbing and only the triangle catches it
    report = check_decagon(broken_exception_law(), U2)
    assert not report.ok

    # a size-sensitive mutation breaks the ten-sided condition itself
    good = exception_over_powerset()

    def lam_fn(e):
        if type(e) is Inl:
            img = [Inl(x) for x in e.value.members]
            if len(img) == 1:
                img.append(Inr(Atom("e")))
            return subset(img)
        return Subset((e,))

    bad = DistLaw("bad", good.T, good.P,
                  formula(good.lam.src, good.lam.tgt, lam_fn, "bad"))
    report = check_decagon(bad, U2)
    assert not report.verdict("decagon").passed
    assert report.verdict("decagon").witness is not None


def test_beck_and_decagon_agree_on_registered_laws():
    for law in [exception_over_powerset(), writer_over_powerset(), identity_law(),
                broken_exception_law()]:
        assert check_beck(law, U2).ok == check_decagon(law, U2).ok


# --- algebra form ------------------------------------------------------------


def test_algebra_form_of_exception_law_passes():
    D = monoidal_to_algebra(exception_over_powerset())
    report = check_algebra(D, U2)
    assert report.ok, report.summary()


def test_algebra_form_with_identity_p_is_multiplication():
    T = builtin_monads()["exception"]
    P = identity_monad()
    lam = formula(T.functor, T.functor, lambda e: e, "id")
    D = monoidal_to_algebra(DistLaw("exc-over-id", T, P, lam))
    for X in U2.objects:
        assert D.alpha.component(X) == T.mult.component(X)
    assert check_algebra(D, U2).ok


def test_alpha_mutation_fails_eta_square():
    good = monoidal_to_algebra(exception_over_powerset())

    def bad_alpha(e):
        return Subset(())  # constant empty set

    bad = DistLawAlgebra(
        "bad", good.T, good.P,
        formula(good.alpha.src, good.alpha.tgt, bad_alpha, "bad"),
    )
    report = check_algebra(bad, U2)
    assert not report.verdict("eta-square").passed


def test_exception_alpha_table_matches_direct_formula():
    # alpha = Pm . lambda T evaluated tablewise: on inl S the result is the
    # direct image of S under m restricted to inl, computed independently.
    D = monoidal_to_algebra(exception_over_powerset())
    T = D.T.functor
    for X in U2.objects:
        alpha = D.alpha.component(X)
        for e in alpha.dom.elements:
            if type(e) is Inl:
                expected = subset(
                    (w.value if type(w) is Inl else w) for w in
                    (Inl(v) for v in e.value.members)
                )
                expected = subset(v for v in e.value.members)
                assert alpha(e) == expected
            else:
                assert alpha(e) == Subset((e,))


def test_round_trip_monoidal_algebra_monoidal():
    for law in [exception_over_powerset(), writer_over_powerset(), identity_law()]:
        D = monoidal_to_algebra(law)
        back = algebra_to_monoidal(D, U2)
        for X in U2.objects:
            assert back.lam.component(X) == law.lam.component(X)


def test_five_axiom_on_registered_laws():
    for law in [exception_over_powerset(), writer_over_powerset()]:
        D = monoidal_to_algebra(law)
        report = check_five_axiom(D.alpha, D.T, D.P, U2, name=law.name)
        assert report.ok, report.summary()


def test_five_axiom_with_identity_p():
    T = builtin_monads()["exception"]
    P = identity_monad()
    report = check_five_axiom(T.mult, T, P, U2, name="m-as-alpha")
    assert report.ok, report.summary()


def test_three_axiom_algebra_implies_five_axiom():
    for law in [exception_over_powerset(), writer_over_powerset(), identity_law()]:
        D = monoidal_to_algebra(law)
        if check_algebra(D, U2).ok:
            assert check_five_axiom(D.alpha, D.T, D.P, U2).ok


# --- no-iteration form -------------------------------------------------------


def test_noiter_form_of_exception_law_passes():
    D = algebra_to_noiter(monoidal_to_algebra(exception_over_powerset()))
    report = check_noiter(D, U2)
    assert report.ok, report.summary()


def test_noiter_identity_monad_trivial():
    law = identity_law()
    D = algebra_to_noiter(monoidal_to_algebra(law))
    report = check_noiter(D, U2)
    assert report.ok, report.summary()


def test_noiter_broken_op_fails_unit():
    from decagon.distlaw import DistLawNoIteration

    good = algebra_to_noiter(monoidal_to_algebra(exception_over_powerset()))

    def bad_op(f):
        out = good.op(f)
        anchor = f(f.dom.elements[0]) if len(f.dom) else None
        if anchor is None:
            return out
        return FinFn(out.dom, out.cod, lambda _: anchor)

    bad = DistLawNoIteration("bad", good.T, good.P, bad_op)
    report = check_noiter(bad, U2)
    assert not report.verdict("op-unit").passed


def test_round_trip_algebra_noiter_algebra():
    for law in [exception_over_powerset(), writer_over_powerset()]:
        D = monoidal_to_algebra(law)
        ni = algebra_to_noiter(D)
        back = noiter_to_algebra(ni, U2, D.P)
        for X in U2.objects:
            assert back.alpha.component(X) == D.alpha.component(X)


def test_op_on_unit_shaped_morphisms():
    # op(eta TX) = eta TX . m X is the second operator equation; and for
    # f = eta TX . u X the eta-square plus the unit law collapse op(f) to
    # eta TX.  Both expected tables computed from the monad data directly.
    D = monoidal_to_algebra(exception_over_powerset())
    ni = algebra_to_noiter(D)
    X = atoms("a")
    TX = apply_obj(D.T.functor, X)
    eta_tx = D.P.unit.component(TX)
    m = D.T.mult.component(X)
    assert ni.op(eta_tx) == compose(eta_tx, m)
    u = D.T.unit.component(X)
    assert ni.op(compose(eta_tx, u)) == eta_tx


# --- composite monad and Kleisli extension ----------------------------------


def test_compose_monads_identity_cases():
    monads = builtin_monads()
    # P = identity: composite is T itself
    T = monads["exception"]
    P = identity_monad()
    lam = formula(T.functor, T.functor, lambda e: e, "id")
    comp = compose_monads(monoidal_to_algebra(DistLaw("l", T, P, lam)))
    for X in U2.objects:
        assert comp.unit.component(X) == T.unit.component(X)
        assert comp.mult.component(X) == T.mult.component(X)
    # T = identity: composite is P itself
    P2 = powerset_monad()
    T2 = identity_monad()
    lam2 = formula(P2.functor, P2.functor, lambda e: e, "id")
    comp2 = compose_monads(monoidal_to_algebra(DistLaw("l2", T2, P2, lam2)))
    for X in U2.objects:
        assert comp2.unit.component(X) == P2.unit.component(X)
        assert comp2.mult.component(X) == P2.mult.component(X)


def test_composite_monad_passes_laws():
    for law in [exception_over_powerset(), writer_over_powerset()]:
        comp = compose_monads(monoidal_to_algebra(law), U2)
        report = check_monad_monoidal(comp, U2)
        assert report.ok, report.summary()
        assert all(v.checked > 0 for v in report.verdicts)


def test_extend_to_kleisli_unit_table():
    D = monoidal_to_algebra(exception_over_powerset())
    ext = extend = __import__("decagon.distlaw", fromlist=["extend_to_kleisli"]).extend_to_kleisli(D)
    X = atoms("a")
    unit = ext.unit_at(X)
    assert unit(Atom("a")) == Subset((Inl(Atom("a")),))


def test_extend_to_kleisli_passes_extensive_laws():
    from decagon.distlaw import extend_to_kleisli

    for law in [exception_over_powerset(), writer_over_powerset()]:
        ext = extend_to_kleisli(monoidal_to_algebra(law))
        report = check_monad_extensive(ext, U2)
        assert report.ok, report.summary()


def test_extend_to_kleisli_identity_p_recovers_t():
    from decagon.distlaw import extend_to_kleisli

    T = builtin_monads()["exception"]
    P = identity_monad()
    lam = formula(T.functor, T.functor, lambda e: e, "id")
    ext = extend_to_kleisli(monoidal_to_algebra(DistLaw("l", T, P, lam)))
    direct = monoidal_to_extensive(T)
    for X in U2.objects:
        assert ext.unit_at(X) == direct.unit_at(X)
        for f in all_functions(X, direct.obj(X))[:6]:
            assert ext.ext(f) == direct.ext(f)


# --- mixed laws --------------------------------------------------------------


def test_coreader_strength_passes_both_mixed_suites():
    law = coreader_over_powerset()
    rep1 = check_mixed_decagon(law, U2)
    rep2 = check_mixed_classic(law, U2)
    assert rep1.ok, rep1.summary()
    assert rep2.ok, rep2.summary()


def test_mixed_lambda_empty_fails_epsilon_triangle():
    law = coreader_over_powerset()
    bad = MixedLaw(
        "bad", law.L, law.R,
        formula(law.lam.src, law.lam.tgt, lambda e: Subset(()), "bad"),
    )
    report = check_mixed_decagon(bad, U2)
    assert not report.verdict("epsilon-triangle").passed


def test_mixed_delta_mutation_fails_delta_pentagon():
    # A uniform formula mutation commutes with the strength on both routes,
    # so the mutation must be object-dependent: it swaps the outer tag only
    # at singleton objects.  The pentagon compares delta at X against delta
    # at RX, whose sizes differ, and the two branches disagree.
    from decagon.monads import ComonadMonoidal
    from decagon.transforms import NatTrans

    law = coreader_over_powerset()
    L = law.L.functor
    swap = {Atom("a1"): Atom("a2"), Atom("a2"): Atom("a1")}

    def rule(X):
        if len(X) == 1:
            return lambda e: Pair(swap[e.fst], Pair(e.fst, e.snd))
        return lambda e: Pair(e.fst, Pair(e.fst, e.snd))

    bad_delta = NatTrans(L, compose_functors(L, L), rule, name="delta", needs_object=True)
    badL = ComonadMonoidal("bad", L, law.L.counit, bad_delta)
    bad = MixedLaw("bad", badL, law.R, law.lam)
    report = check_mixed_classic(bad, U2)
    assert not report.verdict("delta-pentagon").passed


def test_mixed_identity_comonad_trivial():
    from decagon.functors import Id
    from decagon.monads import ComonadMonoidal

    R = powerset_monad()
    I = Id()
    L = ComonadMonoidal("id", I, formula(I, I, lambda e: e), formula(I, I, lambda e: e))
    lam = formula(R.functor, R.functor, lambda e: e, "id")
    law = MixedLaw("id-over-powerset", L, R, lam)
    assert check_mixed_decagon(law, U2).ok
    assert check_mixed_classic(law, U2).ok


# --- registry ----------------------------------------------------------------


def test_law_from_config_round_trip():
    cfg = {
        "law": "exception-over-powerset",
        "T": {"name": "exception", "E": ["e"]},
        "P": {"name": "powerset"},
        "lambda": "builtin:exception-dist",
    }
    law = law_from_config(cfg)
    assert isinstance(law, DistLaw)
    reference = exception_over_powerset()
    for X in U2.objects:
        assert law.lam.component(X) == reference.lam.component(X)


def test_law_from_config_writer():
    cfg = {
        "law": "writer-over-powerset",
        "T": {"name": "writer",
              "monoid": {"elems": ["1", "s"], "op": [["1", "s"], ["s", "1"]], "unit": "1"}},
        "P": {"name": "powerset"},
        "lambda": "builtin:writer-strength",
    }
    assert check_beck(law_from_config(cfg), U1).ok


def test_builtin_laws_registry():
    laws = builtin_laws()
    assert set(laws) == {"exception-over-powerset", "writer-over-powerset",
                         "coreader-over-powerset"}


def test_builtin_law_components_are_natural():
    from decagon.transforms import check_naturality

    for law in builtin_laws().values():
        assert check_naturality(law.lam, U2.all_morphisms()) is None, law.name


def test_identity_monad_extension_is_identity_operator():
    ext = monoidal_to_extensive(identity_monad())
    X, Y = atoms("a", "b"), atoms("c")
    for f in all_functions(X, Y):
        assert ext.ext(f) == f


def test_converters_refuse_failing_preconditions():
    from decagon.monads import ConstructionRefused

    good = monoidal_to_algebra(exception_over_powerset())
    bad = DistLawAlgebra(
        "bad", good.T, good.P,
        formula(good.alpha.src, good.alpha.tgt, lambda e: Subset(()), "bad"),
    )
    with pytest.raises(ConstructionRefused) as err:
        algebra_to_monoidal(bad, U1)
    assert "eta-square" in str(err.value) or "unit-triangle" in str(err.value)
    with pytest.raises(ConstructionRefused):
        compose_monads(bad, U1)


def test_extensive_to_monoidal_checks_object_action():
    from decagon.functors import Power
    from decagon.monads import ConversionError, exception_monad, extensive_to_monoidal

    ext = monoidal_to_extensive(exception_monad(["e"]))
    with pytest.raises(ConversionError):
        extensive_to_monoidal(ext, Power(), U1)
