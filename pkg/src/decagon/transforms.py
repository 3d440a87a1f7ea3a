"""Natural transformations as per-object component builders.

A ``NatTrans`` carries its boundary functors and a rule that, given an
object, yields the component as a function on elements.  Built-in families
(units, multiplications, strengths, distributive-law components) are
object-independent formulas, so they can be evaluated pointwise at
arbitrarily deep carriers.  Tabulated families (search candidates,
operators recovered from extension data) know their components only on a
small universe; they transport along the canonical order-preserving
bijection to same-size objects and raise ``ComponentUnavailable`` beyond
that, which exhaustive checkers count as a skipped instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .elements import Element, FinFn, FinSet, compose
from .functors import FunctorExpr, apply_mor, apply_obj

ComponentRule = Callable[[FinSet], Callable[[Element], Element]]


class ComponentUnavailable(Exception):
    """A component was requested at an object where it is not defined."""


@dataclass
class NatTrans:
    """Transformation src => tgt given by a component rule."""

    src: FunctorExpr
    tgt: FunctorExpr
    rule: ComponentRule
    name: str = ""
    needs_object: bool = False
    tabulated_objects: Optional[list[FinSet]] = None

    def component_fn(self, X: FinSet) -> Callable[[Element], Element]:
        return self.rule(X)

    def component(self, X: FinSet) -> FinFn:
        """Materialised component table at X."""
        dom = apply_obj(self.src, X)
        cod = apply_obj(self.tgt, X)
        fn = self.rule(X)
        return FinFn._raw(dom, cod, {e: fn(e) for e in dom.elements})


def formula(src: FunctorExpr, tgt: FunctorExpr, fn: Callable[[Element], Element], name: str = "") -> NatTrans:
    """Object-independent component family given by one element formula."""
    return NatTrans(src, tgt, lambda X: fn, name=name)


def identity_nat(F: FunctorExpr, name: str = "id") -> NatTrans:
    return formula(F, F, lambda e: e, name=name)


def _canonical_iso(W: FinSet, V: FinSet) -> FinFn:
    """Order-preserving bijection between same-size carriers."""
    if len(W) != len(V):
        raise ComponentUnavailable(f"no canonical bijection {len(W)} -> {len(V)}")
    return FinFn._raw(W, V, dict(zip(W.elements, V.elements)))


def tabulated(
    src: FunctorExpr,
    tgt: FunctorExpr,
    tables: dict[FinSet, FinFn],
    name: str = "",
) -> NatTrans:
    """Family given by explicit tables on a few objects.

    At any other object of matching size the component is transported along
    the canonical bijection; a natural family is invariant under this choice
    because permutations of the tabulated objects were checked already.
    """
    by_size: dict[int, tuple[FinSet, FinFn]] = {len(X): (X, t) for X, t in tables.items()}

    def rule(X: FinSet) -> Callable[[Element], Element]:
        direct = tables.get(X)
        if direct is not None:
            return direct
        hit = by_size.get(len(X))
        if hit is None:
            raise ComponentUnavailable(f"{name or 'tabulated family'} has no component at size {len(X)}")
        base, table = hit
        iso = _canonical_iso(X, base)
        inv = FinFn._raw(base, X, dict(zip(base.elements, X.elements)))
        fwd = apply_mor(src, iso)
        back = apply_mor(tgt, inv)
        return lambda e: back(table(fwd(e)))

    return NatTrans(src, tgt, rule, name=name, needs_object=True,
                    tabulated_objects=list(tables))


@dataclass(frozen=True)
class Step:
    """One whiskered component in a composite: prefix . nt . suffix."""

    prefix: FunctorExpr
    nt: NatTrans
    suffix: FunctorExpr


def step_source(s: Step) -> FunctorExpr:
    from .functors import compose_functors

    return compose_functors(s.prefix, s.nt.src, s.suffix)


def step_target(s: Step) -> FunctorExpr:
    from .functors import compose_functors

    return compose_functors(s.prefix, s.nt.tgt, s.suffix)


class OversizeCarrier(Exception):
    """A composite evaluation would need a carrier above the configured cap."""


def composite_map(
    steps: Sequence[Step], X: FinSet, cap: int
) -> dict[Element, Element]:
    """Evaluate a composite of whiskered components pointwise at X.

    Only the source carrier is enumerated; every element is pushed through
    each step with the element-level functor action.  Raises
    ``OversizeCarrier`` when the source carrier would exceed ``cap`` and
    ``ComponentUnavailable`` when a tabulated component is missing.
    """
    if not steps:
        raise ValueError("empty composite")
    from .functors import size_within

    src_F = step_source(steps[0])
    if size_within(src_F, len(X), cap) > cap:
        raise OversizeCarrier(f"source carrier exceeds cap {cap}")
    from .functors import compiled_action

    fns = []
    for s in steps:
        if s.nt.needs_object:
            if size_within(s.suffix, len(X), cap) > cap:
                raise OversizeCarrier(f"inner object exceeds cap {cap}")
            inner = apply_obj(s.suffix, X)
        else:
            inner = X
        fns.append(compiled_action(s.prefix, s.nt.component_fn(inner)))
    dom = apply_obj(src_F, X)
    out: dict[Element, Element] = {}
    for e in dom.elements:
        v = e
        for fn in fns:
            v = fn(v)
        out[e] = v
    return out


def identity_map(F: FunctorExpr, X: FinSet, cap: int) -> dict[Element, Element]:
    from .functors import size_within

    if size_within(F, len(X), cap) > cap:
        raise OversizeCarrier(f"source carrier exceeds cap {cap}")
    return {e: e for e in apply_obj(F, X).elements}


def check_naturality(
    nt: NatTrans, morphisms: Iterable[FinFn]
) -> Optional[tuple[FinFn, Element]]:
    """First naturality failure of nt against the given morphisms, if any."""
    for f in morphisms:
        try:
            src_f = apply_mor(nt.src, f)
            tgt_f = apply_mor(nt.tgt, f)
            left = compose(tgt_f, nt.component(f.dom))
            right = compose(nt.component(f.cod), src_f)
        except ComponentUnavailable:
            continue
        if left != right:
            for x in left.dom.elements:
                if left(x) != right(x):
                    return (f, x)
    return None
