import pytest

from decagon.elements import (
    Atom,
    FinFn,
    FinSet,
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
from decagon.functors import Id, Power, apply_obj
from decagon.monads import (
    GROUP_Z2,
    ConstructionRefused,
    Monoid,
    MonadMonoidal,
    TestUniverse,
    builtin_monads,
    check_category,
    check_comonad,
    check_monad_extensive,
    check_monad_monoidal,
    coreader_comonad,
    exception_monad,
    extensive_to_monoidal,
    identity_monad,
    kleisli,
    monoidal_to_extensive,
    powerset_monad,
    writer_monad,
)
from decagon.transforms import formula

U2 = TestUniverse.sizes(2)
MONAD_NAMES = ["identity", "maybe", "exception", "exception2", "writer", "reader", "powerset"]


@pytest.mark.parametrize("name", MONAD_NAMES)
def test_builtin_monads_pass_monoidal_laws(name):
    report = check_monad_monoidal(builtin_monads()[name], U2)
    assert report.ok, report.summary()


@pytest.mark.parametrize("name", MONAD_NAMES)
def test_builtin_monads_pass_extensive_laws(name):
    ext = monoidal_to_extensive(builtin_monads()[name])
    report = check_monad_extensive(ext, U2)
    assert report.ok, report.summary()


def test_identity_monad_trivially_passes():
    assert check_monad_monoidal(identity_monad(), U2).ok


def test_broken_multiplication_detected_with_witness():
    # multiplication that collapses everything onto the error tag
    M = exception_monad(["e"])
    T = M.functor
    from decagon.functors import compose_functors

    broken = MonadMonoidal(
        "broken", T, M.unit,
        formula(compose_functors(T, T), T, lambda e: Inr(Atom("e")), "m"),
    )
    report = check_monad_monoidal(broken, U2)
    assert not report.ok
    failing = [v for v in report.verdicts if not v.passed]
    assert failing and failing[0].witness is not None


def test_extension_of_unit_is_identity():
    for name in MONAD_NAMES:
        M = builtin_monads()[name]
        ext = monoidal_to_extensive(M)
        for X in U2.objects:
            assert ext.ext(ext.unit_at(X)) == identity(ext.obj(X))


def test_maybe_extension_table():
    # X = {a}, f(a) = inr(e): the extension sends inl(a) to inr(e) and
    # inr(e) to inr(e); expected table computed by evaluating m(T f) by hand.
    M = exception_monad(["e"])
    ext = monoidal_to_extensive(M)
    X = atoms("a")
    TX = ext.obj(X)
    f = FinFn(X, TX, {Atom("a"): Inr(Atom("e"))})
    table = ext.ext(f)
    assert table(Inl(Atom("a"))) == Inr(Atom("e"))
    assert table(Inr(Atom("e"))) == Inr(Atom("e"))


def test_extension_constant_unit_fails_axiom_one():
    M = exception_monad(["e"])
    good = monoidal_to_extensive(M)

    def bad_ext(f):
        dom = good.obj(f.dom)
        anchor = f(f.dom.elements[0]) if len(f.dom) else f.cod.elements[0]
        return FinFn(dom, f.cod, lambda _: anchor)

    from decagon.monads import MonadExtensive

    bad = MonadExtensive("bad", good.obj, good.unit_at, bad_ext)
    report = check_monad_extensive(bad, U2)
    assert not report.verdict("extension-unit").passed


def test_round_trip_monoidal_extensive_monoidal():
    for name in MONAD_NAMES:
        M = builtin_monads()[name]
        back = extensive_to_monoidal(monoidal_to_extensive(M), M.functor, U2)
        for X in U2.objects:
            assert back.unit.component(X) == M.unit.component(X)
            assert back.mult.component(X) == M.mult.component(X)


def test_round_trip_extensive_monoidal_extensive():
    for name in MONAD_NAMES:
        M = builtin_monads()[name]
        ext = monoidal_to_extensive(M)
        back = monoidal_to_extensive(extensive_to_monoidal(ext, M.functor, U2))
        for X in U2.objects:
            for Y in U2.objects:
                for f in all_functions(X, ext.obj(Y))[:8]:
                    assert back.ext(f) == ext.ext(f)


def test_powerset_multiplication_is_union():
    # m = extension of the identity on PX; on X = {a} the four elements of
    # PPX flatten by union: evaluated directly here as the oracle.
    M = powerset_monad()
    ext = monoidal_to_extensive(M)
    X = atoms("a")
    PX = ext.obj(X)
    m = ext.ext(identity(PX))
    for e in apply_obj(Power(), PX):
        expected = subset(x for s in e.members for x in s.members)
        assert m(e) == expected


def test_writer_monoid_validation():
    # non-associative: (a.b).b = b but a.(b.b) = a
    bad_assoc = Monoid(
        elems=("1", "a", "b"),
        op=(("1", "a", "b"), ("a", "1", "1"), ("b", "a", "1")),
        unit="1",
    )
    with pytest.raises(ValueError):
        writer_monad(bad_assoc)
    with pytest.raises(ValueError):
        writer_monad(Monoid(elems=("1", "s"), op=(("s", "1"), ("1", "s")), unit="1"))
    writer_monad(GROUP_Z2)


def test_kleisli_category_laws():
    P = monoidal_to_extensive(powerset_monad())
    U1 = TestUniverse.sizes(1)
    kl = kleisli(P, U1)
    # identity at {a} is the singleton map
    X = atoms("a")
    assert kl.identity(X)(Atom("a")) == Subset((Atom("a"),))
    report = check_category(kl, U1)
    assert report.ok, report.summary()


def test_kleisli_associativity_exception_size2():
    P = monoidal_to_extensive(exception_monad(["e"]))
    kl = kleisli(P)
    report = check_category(kl, TestUniverse.sizes(2))
    assert report.ok


def test_kleisli_identity_for_identity_monad():
    P = monoidal_to_extensive(identity_monad())
    kl = kleisli(P)
    X, Y = atoms("a", "b"), atoms("c")
    for f in all_functions(X, Y):
        for g in all_functions(Y, X):
            assert kl.compose(g, f) == compose(g, f)


def test_kleisli_refuses_broken_monad():
    good = monoidal_to_extensive(exception_monad(["e"]))

    def bad_ext(f):
        dom = good.obj(f.dom)
        anchor = f.cod.elements[0]
        return FinFn(dom, f.cod, lambda _: anchor)

    from decagon.monads import MonadExtensive

    bad = MonadExtensive("bad", good.obj, good.unit_at, bad_ext)
    with pytest.raises(ConstructionRefused):
        kleisli(bad, TestUniverse.sizes(1))


def test_coreader_comonad_passes():
    C = coreader_comonad(["a1", "a2"])
    report = check_comonad(C, U2)
    assert report.ok, report.summary()


def test_coreader_broken_comult_fails_counit():
    from decagon.functors import compose_functors
    from decagon.monads import ComonadMonoidal

    C = coreader_comonad(["a1", "a2"])
    L = C.functor
    fixed = Atom("a1")
    bad = ComonadMonoidal(
        "bad", L, C.counit,
        formula(L, compose_functors(L, L), lambda e: Pair(e.fst, Pair(fixed, e.snd)), "delta"),
    )
    report = check_comonad(bad, U2)
    assert not report.verdict("counit-left").passed or not report.verdict("counit-right").passed


def test_identity_comonad_trivially_passes():
    from decagon.monads import ComonadMonoidal

    I = Id()
    C = ComonadMonoidal("id", I, formula(I, I, lambda e: e), formula(I, I, lambda e: e))
    assert check_comonad(C, U2).ok


def test_naturality_of_builtin_units():
    from decagon.transforms import check_naturality

    for name in MONAD_NAMES:
        M = builtin_monads()[name]
        assert check_naturality(M.unit, U2.all_morphisms()) is None
        assert check_naturality(M.mult, U2.all_morphisms()) is None
