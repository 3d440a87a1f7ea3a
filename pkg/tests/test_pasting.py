import pytest

from decagon.monads import TestUniverse
from decagon.pasting import (
    BoundaryError,
    CellRef,
    IdCell,
    Inverse,
    Path,
    VComp,
    Whisker,
    Word,
    boundary,
    build_H,
    build_kleisli_extension_cells,
    build_omega_from_pentagons,
    build_pentagons_from_omega,
    builtin_signature,
    check_axiom_degenerate,
    evaluate_cell,
    exception_powerset_interpretation,
    identity_interpretation,
    parse_signature,
    signature_to_text,
)
from decagon.pasting.evaluate import law_interpretation

SIG = builtin_signature()
U1 = TestUniverse.sizes(1)
U2 = TestUniverse.sizes(2)

AXIOMS = ["W1", "W2", "W3", "W4", "W5", "W6", "W7", "W8", "W9", "W10",
          "D1", "D2", "M1", "M2", "I1", "I2"]


def test_signature_declares_all_axioms():
    assert list(SIG.axioms) == AXIOMS


def test_axiom_pairs_are_parallel():
    for name, (lhs, rhs) in SIG.axioms.items():
        assert boundary(lhs, SIG) == boundary(rhs, SIG), name


def test_boundary_of_idcell():
    p = SIG.cells["Omega"].src
    assert boundary(IdCell(p), SIG) == (p, p)


def test_boundary_of_decagon_reference():
    src, tgt = boundary(CellRef("Omega"), SIG)
    assert src.start == Word.of("TPTPT") and src.end == Word.of("PT")
    assert len(src) == 5 and len(tgt) == 5


def test_boundary_junction_mismatch_reported():
    bad = VComp(CellRef("omega1"), CellRef("omega2"))
    with pytest.raises(BoundaryError):
        boundary(bad, SIG)


def test_inverse_restricted_to_cells():
    t = Inverse(CellRef("Omega"))
    src, tgt = boundary(t, SIG)
    assert (tgt, src) == boundary(CellRef("Omega"), SIG)


def test_whisker_boundary():
    t = Whisker(Word.of("T"), CellRef("omega3"), Word.of(""))
    src, tgt = boundary(t, SIG)
    assert src.start == Word.of("TTTP")
    assert tgt.end == Word.of("TPT")


def test_omega_builder_matches_declared_boundary():
    t = build_omega_from_pentagons(SIG)
    assert boundary(t, SIG) == (SIG.cells["Omega"].src, SIG.cells["Omega"].tgt)


def test_pentagon_builders_match_declared_boundaries():
    w4, w3 = build_pentagons_from_omega(SIG)
    assert boundary(w4, SIG) == (SIG.cells["omega4"].src, SIG.cells["omega4"].tgt)
    assert boundary(w3, SIG) == (SIG.cells["omega3"].src, SIG.cells["omega3"].tgt)


def test_extension_cell_builders_match_declared_boundaries():
    phi, theta, delta = build_kleisli_extension_cells(SIG)
    assert boundary(phi, SIG) == (SIG.cells["phi"].src, SIG.cells["phi"].tgt)
    assert boundary(theta, SIG) == (SIG.cells["theta"].src, SIG.cells["theta"].tgt)
    assert boundary(delta, SIG) == (SIG.cells["delta"].src, SIG.cells["delta"].tgt)


def test_h_builder_matches_declared_boundary():
    t = build_H(SIG)
    assert boundary(t, SIG) == (SIG.cells["H"].src, SIG.cells["H"].tgt)


def test_theta_boundary_shape():
    # source: the extension of the Kleisli unit; target: the Kleisli identity
    theta = SIG.cells["theta"]
    assert theta.src.start == Word.of("TX") and theta.src.end == Word.of("PTX")
    assert len(theta.tgt) == 1 and theta.tgt.atoms[0].gen.name == "eta"


def test_textual_round_trip():
    text = signature_to_text(SIG)
    sig2 = parse_signature(text)
    assert sig2.alphabet == SIG.alphabet
    assert sig2.arrows == SIG.arrows
    assert {n: (c.src, c.tgt) for n, c in sig2.cells.items()} == {
        n: (c.src, c.tgt) for n, c in SIG.cells.items()
    }
    assert sig2.axioms == SIG.axioms


def test_shipped_asset_matches_builtin():
    import importlib.resources as res

    text = (res.files("decagon.pasting") / "assets" / "builtin_signature.sexp").read_text()
    sig2 = parse_signature(text)
    assert sig2.axioms == SIG.axioms
    assert {n: (c.src, c.tgt) for n, c in sig2.cells.items()} == {
        n: (c.src, c.tgt) for n, c in SIG.cells.items()
    }


# --- degenerate evaluation ---------------------------------------------------


@pytest.mark.parametrize("axiom", AXIOMS)
def test_identity_interpretation_degenerate(axiom):
    rep = check_axiom_degenerate(axiom, identity_interpretation(), U1)
    assert rep.ok, rep.summary()


@pytest.mark.parametrize("axiom", ["W1", "W5", "W10", "D1", "M1", "I1"])
def test_exception_powerset_degenerate_fast_axioms(axiom):
    rep = check_axiom_degenerate(axiom, exception_powerset_interpretation(), U2)
    assert rep.ok, rep.summary()


def test_degenerate_check_catches_broken_interpretation():
    from decagon.distlaw import DistLaw, exception_over_powerset
    from decagon.elements import Inl, Subset, subset
    from decagon.transforms import formula

    good = exception_over_powerset()

    def lam_fn(e):
        if type(e) is Inl:
            return subset(Inl(x) for x in e.value.members)
        return Subset(())  # drops the error: omega2's equation fails

    bad_law = DistLaw("broken", good.T, good.P,
                      formula(good.lam.src, good.lam.tgt, lam_fn, "bad"))
    rep = check_axiom_degenerate("W2", law_interpretation(bad_law), U1)
    assert not rep.ok
    failing = {v.axiom for v in rep.verdicts if not v.passed}
    assert "cell:omega2" in failing


def test_builder_terms_evaluate_degenerately():
    # under a strict interpretation the boundary composites of each built
    # term must be equal tables, and delta's sides must match the
    # extension's composition tables computed by the concrete converter
    from decagon.elements import FinSet, atoms, iter_functions
    from decagon.transforms import composite_map

    interp = exception_powerset_interpretation()
    phi, theta, delta = build_kleisli_extension_cells(SIG)
    cell = SIG.cells["delta"]
    X0, Y0, Z0 = atoms("a"), atoms("b"), atoms("c")
    from decagon.functors import apply_obj, compose_functors

    PT = compose_functors(interp.functors["P"], interp.functors["T"])
    f0 = next(iter_functions(X0, apply_obj(PT, Y0)))
    g0 = next(iter_functions(Y0, apply_obj(PT, Z0)))
    objects = {"X": X0, "Y": Y0, "Z": Z0}
    generics = {"f": f0, "g": g0}
    amb = FinSet()
    lhs = composite_map(interp.path_steps(cell.src, objects, generics), amb, 10 ** 6)
    rhs = composite_map(interp.path_steps(cell.tgt, objects, generics), amb, 10 ** 6)
    assert lhs == rhs

    # cross-check against the Kleisli extension built in the concrete layer
    from decagon.distlaw import exception_over_powerset, extend_to_kleisli, monoidal_to_algebra
    from decagon.elements import compose

    ext = extend_to_kleisli(monoidal_to_algebra(exception_over_powerset()))
    kl = ext.ambient
    lhs_table = ext.ext(kl.compose(ext.ext(g0), f0))
    for x, v in lhs.items():
        assert lhs_table(x) == v


def test_evaluate_cell_quantifies_generics():
    interp = exception_powerset_interpretation()
    v = evaluate_cell(SIG.cells["xc-u-e-f"], interp, U1)
    assert v.passed and v.checked > 1


@pytest.mark.parametrize("axiom", AXIOMS)
def test_writer_interpretation_degenerate(axiom):
    from decagon.distlaw import writer_over_powerset

    interp = law_interpretation(writer_over_powerset())
    rep = check_axiom_degenerate(axiom, interp, U1)
    assert rep.ok, rep.summary()


def test_depth_bound_guards_deep_words():
    shallow = TestUniverse.sizes(1)
    shallow.depth_bound = 4
    with pytest.raises(ValueError):
        check_axiom_degenerate("D2", identity_interpretation(), shallow)
    # the decagon needs words of length 7 (its interchangers span TP.TPP.TT)
    shallow.depth_bound = 7
    assert check_axiom_degenerate("D2", identity_interpretation(), shallow).ok
