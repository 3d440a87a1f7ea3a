"""Monads on finite sets in monoidal and extensive form.

The monoidal form is an endofunctor with unit and multiplication subject to
two unit laws and associativity; the extensive (Kleisli triple) form is an
object map, a unit family and an extension operator subject to three
equations quantified over morphisms.  Converters translate between the
two, and ``kleisli`` builds the Kleisli category of an extensive monad.

Monads come from a built-in registry (identity, maybe, exception, writer,
reader, finite powerset) parameterized by finite data, so that the functor
grammar stays closed under iteration.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional

from .elements import (
    Atom,
    Element,
    FinFn,
    FinSet,
    FnTable,
    Inl,
    Pair,
    Subset,
    all_functions,
    atoms,
    compose,
    element_repr,
    identity,
    iter_functions,
    subset,
)
from .functors import (
    Const,
    Exp,
    FunctorExpr,
    Id,
    Power,
    Prod,
    Sum,
    apply_elem,
    apply_obj,
    compose_functors,
)
from .report import AxiomVerdict, LawReport, Witness
from .transforms import (
    ComponentUnavailable,
    NatTrans,
    OversizeCarrier,
    Step,
    composite_map,
    formula,
    identity_map,
)

DEFAULT_CARRIER_CAP = 200_000


@dataclass
class TestUniverse:
    """Objects and morphism policy over which all exhaustive checks run."""

    __test__ = False  # not a pytest class

    objects: list[FinSet]
    morphism_policy: str = "all"  # "all" | "sample"
    seed: Optional[int] = None
    sample_size: int = 20
    depth_bound: int = 7
    carrier_cap: int = DEFAULT_CARRIER_CAP

    @staticmethod
    def sizes(max_size: int = 2, policy: str = "all", seed: Optional[int] = None,
              carrier_cap: int = DEFAULT_CARRIER_CAP) -> "TestUniverse":
        labels = ["a", "b", "c", "d"]
        objs = [atoms(*labels[:n]) for n in range(max_size + 1)]
        return TestUniverse(objs, morphism_policy=policy, seed=seed, carrier_cap=carrier_cap)

    def morphisms(self, X: FinSet, Y: FinSet) -> Iterator[FinFn]:
        fns = iter_functions(X, Y)
        if self.morphism_policy == "all":
            yield from fns
            return
        pool = list(fns)
        rng = random.Random(self.seed)
        k = min(self.sample_size, len(pool))
        yield from (pool[i] for i in sorted(rng.sample(range(len(pool)), k)))

    def all_morphisms(self) -> Iterator[FinFn]:
        for X in self.objects:
            for Y in self.objects:
                yield from self.morphisms(X, Y)

    def describe(self) -> str:
        sizes = ",".join(str(len(X)) for X in self.objects)
        seed = "-" if self.seed is None else str(self.seed)
        return f"sizes={sizes} policy={self.morphism_policy} seed={seed} cap={self.carrier_cap}"


@dataclass
class MonadMonoidal:
    name: str
    functor: FunctorExpr
    unit: NatTrans
    mult: NatTrans


@dataclass
class ComonadMonoidal:
    name: str
    functor: FunctorExpr
    counit: NatTrans
    comult: NatTrans


@dataclass
class Category:
    """Ambient-category interface: homs as FinFns with a chosen composition.

    ``hom(X, Y)`` enumerates the morphisms X -> Y as concrete function
    tables (for a Kleisli category these are functions into P applied to
    the target).
    """

    name: str
    hom: Callable[[FinSet, FinSet], list[FinFn]]
    compose: Callable[[FinFn, FinFn], FinFn]
    identity: Callable[[FinSet], FinFn]


BASE_CATEGORY = Category("finset", all_functions, compose, identity)


@dataclass
class MonadExtensive:
    """Kleisli-triple presentation: object map, unit family, extension."""

    name: str
    obj: Callable[[FinSet], FinSet]
    unit_at: Callable[[FinSet], FinFn]
    ext: Callable[[FinFn], FinFn]
    ambient: Category = field(default_factory=lambda: BASE_CATEGORY)


# ---------------------------------------------------------------------------
# axiom evaluation helpers


def _eval_sides(
    report: LawReport,
    axiom: str,
    universe: TestUniverse,
    lhs_steps,
    rhs_steps,
    src_functor: FunctorExpr,
) -> None:
    """Compare two composites (or identity when steps are None) per object."""
    checked = 0
    skipped = 0
    witness = None
    for X in universe.objects:
        try:
            left = (
                composite_map(lhs_steps, X, universe.carrier_cap)
                if lhs_steps
                else identity_map(src_functor, X, universe.carrier_cap)
            )
            right = (
                composite_map(rhs_steps, X, universe.carrier_cap)
                if rhs_steps
                else identity_map(src_functor, X, universe.carrier_cap)
            )
        except (OversizeCarrier, ComponentUnavailable):
            skipped += 1
            continue
        checked += 1
        if witness is None and left != right:
            for e, v in left.items():
                if right[e] != v:
                    witness = Witness(
                        at=f"|X|={len(X)}",
                        element=element_repr(e),
                        lhs=element_repr(v),
                        rhs=element_repr(right[e]),
                    )
                    break
    report.verdicts.append(
        AxiomVerdict(axiom, passed=(witness is None and checked > 0), checked=checked,
                     skipped=skipped, witness=witness)
    )


def check_monad_monoidal(M: MonadMonoidal, universe: TestUniverse) -> LawReport:
    """Two unit triangles and associativity, evaluated exhaustively."""
    T = M.functor
    I = Id()
    report = LawReport(f"monad:{M.name}", universe.describe())
    _eval_sides(
        report, "unit-left", universe,
        [Step(I, M.unit, T), Step(I, M.mult, I)], None, T,
    )
    _eval_sides(
        report, "unit-right", universe,
        [Step(T, M.unit, I), Step(I, M.mult, I)], None, T,
    )
    _eval_sides(
        report, "associativity", universe,
        [Step(T, M.mult, I), Step(I, M.mult, I)],
        [Step(I, M.mult, T), Step(I, M.mult, I)],
        compose_functors(T, T, T),
    )
    return report


def check_comonad(C: ComonadMonoidal, universe: TestUniverse) -> LawReport:
    L = C.functor
    I = Id()
    report = LawReport(f"comonad:{C.name}", universe.describe())
    _eval_sides(
        report, "counit-left", universe,
        [Step(I, C.comult, I), Step(I, C.counit, L)], None, L,
    )
    _eval_sides(
        report, "counit-right", universe,
        [Step(I, C.comult, I), Step(L, C.counit, I)], None, L,
    )
    _eval_sides(
        report, "coassociativity", universe,
        [Step(I, C.comult, I), Step(I, C.comult, L)],
        [Step(I, C.comult, I), Step(L, C.comult, I)],
        L,
    )
    return report


def check_monad_extensive(M: MonadExtensive, universe: TestUniverse) -> LawReport:
    """The three Kleisli-triple equations, quantified over ambient homs."""
    amb = M.ambient
    report = LawReport(f"monad-extensive:{M.name}", universe.describe())

    def verdicts(axiom: str, instances) -> None:
        checked = 0
        witness = None
        for descr, lhs, rhs in instances:
            checked += 1
            if witness is None and lhs != rhs:
                for x in lhs.dom.elements:
                    if lhs(x) != rhs(x):
                        witness = Witness(
                            at=descr, element=element_repr(x),
                            lhs=element_repr(lhs(x)), rhs=element_repr(rhs(x)),
                        )
                        break
        report.verdicts.append(
            AxiomVerdict(axiom, passed=(witness is None and checked > 0), checked=checked,
                         witness=witness)
        )

    def axiom1():
        for X in universe.objects:
            for Y in universe.objects:
                for f in amb.hom(X, M.obj(Y)):
                    yield (f"f:{len(X)}->{len(Y)}", amb.compose(M.ext(f), M.unit_at(X)), f)

    def axiom2():
        for X in universe.objects:
            yield (f"|X|={len(X)}", M.ext(M.unit_at(X)), amb.identity(M.obj(X)))

    def axiom3():
        for X in universe.objects:
            for Y in universe.objects:
                fs = amb.hom(X, M.obj(Y))
                for Z in universe.objects:
                    gs = amb.hom(Y, M.obj(Z))
                    for g in gs:
                        eg = M.ext(g)
                        for f in fs:
                            yield (
                                f"f:{len(X)}->{len(Y)},g:{len(Y)}->{len(Z)}",
                                M.ext(amb.compose(eg, f)),
                                amb.compose(eg, M.ext(f)),
                            )

    verdicts("extension-unit", axiom1())
    verdicts("unit-extension", axiom2())
    verdicts("extension-composition", axiom3())
    return report


# ---------------------------------------------------------------------------
# converters and the Kleisli category


def monoidal_to_extensive(M: MonadMonoidal, ambient: Category = BASE_CATEGORY) -> MonadExtensive:
    """Extension of f: X -> TY as multiplication after T(f)."""
    T = M.functor
    mult = M.mult

    def mult_fn_for(f: FinFn) -> Callable[[Element], Element]:
        # Formula components ignore the object; tabulated ones must locate
        # the Y with T(Y) = f.cod among their tabulated objects.
        if not mult.needs_object:
            return mult.rule(f.dom)
        for Y in mult.tabulated_objects or ():
            if apply_obj(T, Y) == f.cod:
                return mult.rule(Y)
        raise ComponentUnavailable(f"no multiplication component with T(Y) = {f.cod!r}")

    def ext(f: FinFn) -> FinFn:
        dom = apply_obj(T, f.dom)
        m_fn = mult_fn_for(f)
        return FinFn._raw(dom, f.cod, {e: m_fn(apply_elem(T, f, e)) for e in dom.elements})

    return MonadExtensive(
        M.name,
        obj=lambda X: apply_obj(T, X),
        unit_at=lambda X: M.unit.component(X),
        ext=ext,
        ambient=ambient,
    )


class ConversionError(ValueError):
    pass


def extensive_to_monoidal(M: MonadExtensive, F: FunctorExpr, universe: TestUniverse) -> MonadMonoidal:
    """Recover multiplication as the extension of the identity on TX."""
    for X in universe.objects:
        if apply_obj(F, X) != M.obj(X):
            raise ConversionError(f"functor disagrees with object map at |X|={len(X)}")

    tables_u: dict[FinSet, FinFn] = {X: M.unit_at(X) for X in universe.objects}
    tables_m: dict[FinSet, FinFn] = {
        X: M.ext(identity(M.obj(X))) for X in universe.objects
    }
    from .transforms import tabulated

    unit = tabulated(Id(), F, tables_u, name=f"{M.name}.unit")
    mult = tabulated(compose_functors(F, F), F, tables_m, name=f"{M.name}.mult")
    return MonadMonoidal(M.name, F, unit, mult)


@dataclass
class KleisliCat(Category):
    """Kleisli category of an extensive monad: hom(X, Y) = hom(X, PY)."""

    monad: MonadExtensive = None  # type: ignore[assignment]


class ConstructionRefused(ValueError):
    """A construction's precondition check failed."""


def kleisli(M: MonadExtensive, universe: Optional[TestUniverse] = None) -> KleisliCat:
    if universe is not None:
        pre = check_monad_extensive(M, universe)
        if not pre.ok:
            failing = [v.axiom for v in pre.verdicts if not v.passed]
            raise ConstructionRefused(f"extensive laws fail for {M.name}: {failing}")
    base = M.ambient
    ext_cache: dict[FinFn, FinFn] = {}

    def cached_ext(g: FinFn) -> FinFn:
        out = ext_cache.get(g)
        if out is None:
            out = M.ext(g)
            ext_cache[g] = out
        return out

    return KleisliCat(
        name=f"kleisli({M.name})",
        hom=lambda X, Y: base.hom(X, M.obj(Y)),
        compose=lambda g, f: base.compose(cached_ext(g), f),
        identity=lambda X: M.unit_at(X),
        monad=M,
    )


def check_category(C: Category, universe: TestUniverse) -> LawReport:
    """Associativity and unitality of a finite category's composition."""
    report = LawReport(f"category:{C.name}", universe.describe())
    objs = universe.objects

    unit_checked, unit_witness = 0, None
    for X in objs:
        for Y in objs:
            for f in C.hom(X, Y):
                unit_checked += 2
                if unit_witness is None and C.compose(f, C.identity(X)) != f:
                    unit_witness = Witness(f"|X|={len(X)},|Y|={len(Y)}", "id-right", repr(f), "f")
                if unit_witness is None and C.compose(C.identity(Y), f) != f:
                    unit_witness = Witness(f"|X|={len(X)},|Y|={len(Y)}", "id-left", repr(f), "f")
    report.verdicts.append(
        AxiomVerdict("unitality", passed=unit_witness is None and unit_checked > 0,
                     checked=unit_checked, witness=unit_witness)
    )

    assoc_checked, assoc_witness = 0, None
    for X in objs:
        for Y in objs:
            for Z in objs:
                for W in objs:
                    for f in C.hom(X, Y):
                        for g in C.hom(Y, Z):
                            gf = C.compose(g, f)
                            for h in C.hom(Z, W):
                                assoc_checked += 1
                                if assoc_witness is None and C.compose(h, gf) != C.compose(C.compose(h, g), f):
                                    assoc_witness = Witness(
                                        f"|X|={len(X)},|Y|={len(Y)},|Z|={len(Z)},|W|={len(W)}",
                                        "assoc", repr(f), repr(g))
    report.verdicts.append(
        AxiomVerdict("associativity", passed=assoc_witness is None and assoc_checked > 0,
                     checked=assoc_checked, witness=assoc_witness)
    )
    return report


# ---------------------------------------------------------------------------
# the monad registry


@dataclass(frozen=True)
class Monoid:
    """Finite monoid given by element labels, an operation table and a unit."""

    elems: tuple[str, ...]
    op: tuple[tuple[str, ...], ...]
    unit: str

    def validate(self) -> None:
        n = len(self.elems)
        index = {e: i for i, e in enumerate(self.elems)}
        if len(index) != n:
            raise ValueError("monoid elements must be distinct")
        if self.unit not in index:
            raise ValueError("monoid unit must be an element")
        if len(self.op) != n or any(len(row) != n for row in self.op):
            raise ValueError("operation table must be square over the elements")
        for row in self.op:
            for v in row:
                if v not in index:
                    raise ValueError(f"operation value {v!r} is not an element")
        for a in self.elems:
            if self.mul(self.unit, a) != a or self.mul(a, self.unit) != a:
                raise ValueError("unit law fails in the monoid table")
        for a in self.elems:
            for b in self.elems:
                for c in self.elems:
                    if self.mul(a, self.mul(b, c)) != self.mul(self.mul(a, b), c):
                        raise ValueError(f"monoid is not associative at ({a},{b},{c})")

    def mul(self, a: str, b: str) -> str:
        i = self.elems.index(a)
        j = self.elems.index(b)
        return self.op[i][j]


GROUP_Z2 = Monoid(elems=("1", "s"), op=(("1", "s"), ("s", "1")), unit="1")


def identity_monad() -> MonadMonoidal:
    I = Id()
    return MonadMonoidal("identity", I, identity_nat_named(I, "u"), identity_nat_named(I, "m"))


def identity_nat_named(F: FunctorExpr, name: str) -> NatTrans:
    return formula(F, F, lambda e: e, name=name)


def exception_monad(labels: Iterable[str]) -> MonadMonoidal:
    """T X = X + E with units into the left summand."""
    E = atoms(*labels)
    T = Sum(Id(), Const(E))

    def m_fn(e: Element) -> Element:
        if type(e) is Inl:
            return e.value  # inner tag survives
        return e

    name = f"exception[{len(E)}]"
    return MonadMonoidal(
        name,
        T,
        formula(Id(), T, lambda e: Inl(e), name="u"),
        formula(compose_functors(T, T), T, m_fn, name="m"),
    )


def maybe_monad() -> MonadMonoidal:
    M = exception_monad(["nothing"])
    M.name = "maybe"
    return M


def writer_monad(monoid: Monoid) -> MonadMonoidal:
    monoid.validate()
    M = atoms(*monoid.elems)
    T = Prod(Const(M), Id())
    unit_elem = Atom(monoid.unit)

    def m_fn(e: Element) -> Element:
        inner = e.snd
        return Pair(Atom(monoid.mul(e.fst.label, inner.fst.label)), inner.snd)

    return MonadMonoidal(
        f"writer[{len(monoid.elems)}]",
        T,
        formula(Id(), T, lambda e: Pair(unit_elem, e), name="u"),
        formula(compose_functors(T, T), T, m_fn, name="m"),
    )


def reader_monad(labels: Iterable[str]) -> MonadMonoidal:
    R = atoms(*labels)
    T = Exp(R)
    rs = R.elements

    def m_fn(e: Element) -> Element:
        # e : R -> (R -> X); diagonalize
        outer = dict(e.entries)
        return FnTable(tuple((r, dict(outer[r].entries)[r]) for r in rs))

    return MonadMonoidal(
        f"reader[{len(R)}]",
        T,
        formula(Id(), T, lambda e: FnTable(tuple((r, e) for r in rs)), name="u"),
        formula(compose_functors(T, T), T, m_fn, name="m"),
    )


def powerset_monad() -> MonadMonoidal:
    T = Power()

    def m_fn(e: Element) -> Element:
        out = []
        for s in e.members:
            out.extend(s.members)
        return subset(out)

    return MonadMonoidal(
        "powerset",
        T,
        formula(Id(), T, lambda e: Subset((e,)), name="u"),
        formula(compose_functors(T, T), T, m_fn, name="m"),
    )


def coreader_comonad(labels: Iterable[str]) -> ComonadMonoidal:
    """L X = A x X with projection counit and duplicating comultiplication."""
    A = atoms(*labels)
    L = Prod(Const(A), Id())
    return ComonadMonoidal(
        f"coreader[{len(A)}]",
        L,
        formula(L, Id(), lambda e: e.snd, name="epsilon"),
        formula(L, compose_functors(L, L), lambda e: Pair(e.fst, Pair(e.fst, e.snd)), name="delta"),
    )


def monad_from_config(cfg: dict) -> MonadMonoidal | ComonadMonoidal:
    """Build a registry monad from its JSON description."""
    name = cfg.get("name")
    if name == "identity":
        return identity_monad()
    if name == "maybe":
        return maybe_monad()
    if name == "exception":
        return exception_monad(cfg["E"])
    if name == "writer":
        m = cfg["monoid"]
        return writer_monad(Monoid(tuple(m["elems"]), tuple(tuple(r) for r in m["op"]), m["unit"]))
    if name == "reader":
        return reader_monad(cfg["R"])
    if name == "powerset":
        return powerset_monad()
    if name == "coreader":
        return coreader_comonad(cfg["A"])
    raise KeyError(f"unknown monad {name!r}")


def builtin_monads() -> dict[str, MonadMonoidal | ComonadMonoidal]:
    return {
        "identity": identity_monad(),
        "maybe": maybe_monad(),
        "exception": exception_monad(["e"]),
        "exception2": exception_monad(["e1", "e2"]),
        "writer": writer_monad(GROUP_Z2),
        "reader": reader_monad(["r1", "r2"]),
        "powerset": powerset_monad(),
        "coreader": coreader_comonad(["a1", "a2"]),
    }
