"""Degenerate (strict, concrete) evaluation of the symbolic layer.

An interpretation assigns finite-set functors to the functor symbols and
component families to the arrow generators; every cell generator then
asserts an equation: its source-path composite equals its target-path
composite.  Checking an axiom degenerately means checking that equation
for every cell generator occurring in either side.  Generic-morphism
symbols and the object symbols in their boundaries are quantified over
the test universe, which is where the hom-set quantification of the
operator-form axioms lives.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from ..elements import FinFn, FinSet, element_repr, iter_functions
from ..functors import Const, FunctorExpr, Id, apply_obj, compose_functors
from ..monads import TestUniverse
from ..report import AxiomVerdict, LawReport, Witness
from ..transforms import (
    ComponentUnavailable,
    NatTrans,
    OversizeCarrier,
    Step,
    composite_map,
    identity_map,
)
from .signature import Signature
from .terms import CellGen, cells_used
from .words import Path, Word

OBJECT_SYMBOLS = ("X", "Y", "Z", "W")
GENERIC_ARROWS = ("f", "g", "h")


@dataclass
class Interpretation:
    """Concrete data for the symbolic layer.

    ``functors`` maps monad symbols (T, P) to functor expressions;
    ``arrows`` maps arrow generators to transformation families.  Object
    symbols and generic morphisms stay unassigned and are quantified
    during checking.
    """

    name: str
    functors: dict[str, FunctorExpr]
    arrows: dict[str, NatTrans]

    def word_functor(self, w: Word, objects: dict[str, FinSet]) -> FunctorExpr:
        parts: list[FunctorExpr] = []
        for s in w.symbols:
            if s in self.functors:
                parts.append(self.functors[s])
            elif s in objects:
                parts.append(Const(objects[s]))
            else:
                raise KeyError(f"no assignment for symbol {s!r}")
        return compose_functors(*parts)

    def path_steps(
        self, path: Path, objects: dict[str, FinSet], generics: dict[str, FinFn]
    ) -> list[Step]:
        steps = []
        for atom in path.atoms:
            name = atom.gen.name
            if name in self.arrows:
                nt = self.arrows[name]
            elif name in generics:
                fn = generics[name]
                nt = NatTrans(
                    self.word_functor(atom.gen.src, objects),
                    self.word_functor(atom.gen.tgt, objects),
                    lambda X, _f=fn: _f,
                    name=name,
                )
            else:
                raise KeyError(f"no assignment for arrow {name!r}")
            steps.append(
                Step(
                    self.word_functor(atom.prefix, objects),
                    nt,
                    self.word_functor(atom.suffix, objects),
                )
            )
        return steps


def identity_interpretation() -> Interpretation:
    """T = P = identity; every arrow is an identity family."""
    I = Id()
    ident = NatTrans(I, I, lambda X: (lambda e: e), name="id")
    return Interpretation(
        "identity",
        {"T": I, "P": I},
        {k: ident for k in ("u", "m", "eta", "mu", "lambda", "alpha")},
    )


def law_interpretation(law) -> Interpretation:
    """Strict interpretation induced by a concrete distributive law."""
    from ..distlaw import DistLaw, monoidal_to_algebra

    alg = monoidal_to_algebra(law)
    return Interpretation(
        law.name,
        {"T": law.T.functor, "P": law.P.functor},
        {
            "u": law.T.unit,
            "m": law.T.mult,
            "eta": law.P.unit,
            "mu": law.P.mult,
            "lambda": law.lam,
            "alpha": alg.alpha,
        },
    )


def exception_powerset_interpretation() -> Interpretation:
    from ..distlaw import exception_over_powerset

    return law_interpretation(exception_over_powerset())


def _mentioned_symbols(cell: CellGen) -> tuple[set[str], set[str]]:
    objs: set[str] = set()
    gens: set[str] = set()
    for path in (cell.src, cell.tgt):
        for atom in path.atoms:
            for w in (atom.prefix, atom.suffix, atom.gen.src, atom.gen.tgt):
                objs.update(s for s in w.symbols if s in OBJECT_SYMBOLS)
            if atom.gen.name in GENERIC_ARROWS:
                gens.add(atom.gen.name)
        objs.update(s for s in path.start.symbols if s in OBJECT_SYMBOLS)
    return objs, gens


_GENERIC_BOUNDARY = {"f": ("X", "Y"), "g": ("Y", "Z"), "h": ("Z", "W")}


def evaluate_cell(
    cell: CellGen,
    interp: Interpretation,
    universe: TestUniverse,
) -> AxiomVerdict:
    """Check source-composite = target-composite for one cell generator,
    quantifying object symbols over the universe and generic arrows over
    the corresponding hom-sets."""
    def functor_depth(w: Word) -> int:
        return sum(1 for s in w.symbols if s not in OBJECT_SYMBOLS)

    words = [cell.src.start] + [a.tgt for a in cell.src.atoms + cell.tgt.atoms]
    depth = max(functor_depth(w) for w in words)
    if depth > universe.depth_bound:
        raise ValueError(
            f"cell {cell.name} needs functor words of length {depth}, "
            f"universe depth bound is {universe.depth_bound}"
        )
    objs, gens = _mentioned_symbols(cell)
    obj_names = sorted(objs | {o for g in gens for o in _GENERIC_BOUNDARY[g]})
    checked = 0
    skipped = 0
    witness: Optional[Witness] = None

    def pt_of(Y: FinSet) -> FinSet:
        PT = compose_functors(interp.functors["P"], interp.functors["T"])
        return apply_obj(PT, Y)

    def instances():
        nonlocal skipped
        if not obj_names:
            yield {}, {}
            return
        for combo in product(universe.objects, repeat=len(obj_names)):
            assignment = dict(zip(obj_names, combo))
            if not gens:
                yield assignment, {}
                continue
            pools = []
            feasible = True
            for g in sorted(gens):
                a, b = _GENERIC_BOUNDARY[g]
                target = pt_of(assignment[b])
                if len(target) ** len(assignment[a]) > 4096:
                    feasible = False
                    break
                pools.append([(g, fn) for fn in iter_functions(assignment[a], target)])
            if not feasible:
                skipped += 1
                continue
            for chosen in product(*pools):
                yield assignment, dict(chosen)

    for assignment, generics in instances():
        ambient_objects = universe.objects if not obj_names else [universe.objects[0]]
        for X in ambient_objects:
            try:
                lhs_steps = interp.path_steps(cell.src, assignment, generics)
                rhs_steps = interp.path_steps(cell.tgt, assignment, generics)
                src_F = interp.word_functor(cell.src.start, assignment)
                left = (
                    composite_map(lhs_steps, X, universe.carrier_cap)
                    if lhs_steps
                    else identity_map(src_F, X, universe.carrier_cap)
                )
                right = (
                    composite_map(rhs_steps, X, universe.carrier_cap)
                    if rhs_steps
                    else identity_map(src_F, X, universe.carrier_cap)
                )
            except (OversizeCarrier, ComponentUnavailable):
                skipped += 1
                continue
            checked += 1
            if witness is None and left != right:
                for e, v in left.items():
                    if right[e] != v:
                        at = f"|X|={len(X)}" + (
                            "," + ",".join(f"{k}={len(v0)}" for k, v0 in assignment.items())
                            if assignment else ""
                        )
                        witness = Witness(at, element_repr(e), element_repr(v),
                                          element_repr(right[e]))
                        break
    return AxiomVerdict(
        f"cell:{cell.name}",
        passed=(witness is None and checked > 0),
        checked=checked,
        skipped=skipped,
        witness=witness,
    )


def check_axiom_degenerate(
    axiom_name: str,
    interp: Interpretation,
    universe: TestUniverse,
    sig: Signature | None = None,
) -> LawReport:
    """Evaluate every cell generator occurring in the named axiom."""
    from .builtin import builtin_signature

    sig = sig or builtin_signature()
    lhs, rhs = sig.axioms[axiom_name]
    names = sorted(cells_used(lhs) | cells_used(rhs))
    report = LawReport(f"axiom:{axiom_name}[{interp.name}]", universe.describe())
    for name in names:
        report.verdicts.append(evaluate_cell(sig.cells[name], interp, universe))
    return report
