"""A closed grammar of finitary endofunctors on finite sets.

Grammar: Id | Const(A) | Sum(F,G) | Prod(F,G) | Power | Exp(R) | Comp(F,G).
Power is the covariant finite powerset (direct image on morphisms); Exp(R)
is X -> X^R with postcomposition.  Comp(F,G) applies G first: it sends X to
F(G(X)).

Besides the table-level action ``apply_mor`` there is a pointwise action
``apply_elem`` that pushes a single element through F(f) without ever
materialising intermediate carriers.  Deeply iterated words (powersets of
powersets) are only tractable pointwise, so every exhaustive checker in
this package is built on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Union

from .elements import (
    Element,
    FinFn,
    FinSet,
    FnTable,
    Inl,
    Inr,
    Pair,
    Subset,
    subset,
)


@dataclass(frozen=True)
class Id:
    def __repr__(self):
        return "Id"


@dataclass(frozen=True)
class Const:
    value: FinSet

    def __repr__(self):
        return f"Const({len(self.value)})"


@dataclass(frozen=True)
class Sum:
    left: "FunctorExpr"
    right: "FunctorExpr"

    def __repr__(self):
        return f"Sum({self.left!r},{self.right!r})"


@dataclass(frozen=True)
class Prod:
    left: "FunctorExpr"
    right: "FunctorExpr"

    def __repr__(self):
        return f"Prod({self.left!r},{self.right!r})"


@dataclass(frozen=True)
class Power:
    def __repr__(self):
        return "Power"


@dataclass(frozen=True)
class Exp:
    exponent: FinSet

    def __repr__(self):
        return f"Exp({len(self.exponent)})"


@dataclass(frozen=True)
class Comp:
    outer: "FunctorExpr"
    inner: "FunctorExpr"

    def __repr__(self):
        return f"Comp({self.outer!r},{self.inner!r})"


FunctorExpr = Union[Id, Const, Sum, Prod, Power, Exp, Comp]

_OBJ_CACHE: dict[tuple[FunctorExpr, FinSet], FinSet] = {}


def apply_obj(F: FunctorExpr, X: FinSet) -> FinSet:
    """Carrier of F at X, fully materialised and canonically ordered."""
    key = (F, X)
    cached = _OBJ_CACHE.get(key)
    if cached is not None:
        return cached
    if isinstance(F, Id):
        out = X
    elif isinstance(F, Const):
        out = F.value
    elif isinstance(F, Sum):
        L = apply_obj(F.left, X)
        R = apply_obj(F.right, X)
        out = FinSet([Inl(e) for e in L] + [Inr(e) for e in R])
    elif isinstance(F, Prod):
        L = apply_obj(F.left, X)
        R = apply_obj(F.right, X)
        out = FinSet(Pair(a, b) for a in L for b in R)
    elif isinstance(F, Power):
        xs = X.elements
        members = []
        for r in range(len(xs) + 1):
            for combo in combinations(xs, r):
                members.append(Subset(combo))  # combinations of a sorted tuple stay sorted
        out = FinSet(members)
    elif isinstance(F, Exp):
        rs = F.exponent.elements
        out = FinSet(
            FnTable(tuple(zip(rs, values))) for values in product(X.elements, repeat=len(rs))
        )
    elif isinstance(F, Comp):
        out = apply_obj(F.outer, apply_obj(F.inner, X))
    else:
        raise TypeError(f"not a FunctorExpr: {F!r}")
    _OBJ_CACHE[key] = out
    return out


def apply_elem(F: FunctorExpr, fn: Callable[[Element], Element], e: Element) -> Element:
    """Push one element of F(X) through F(f), where fn is f on elements."""
    if isinstance(F, Id):
        return fn(e)
    if isinstance(F, Const):
        return e
    if isinstance(F, Sum):
        if type(e) is Inl:
            return Inl(apply_elem(F.left, fn, e.value))
        return Inr(apply_elem(F.right, fn, e.value))
    if isinstance(F, Prod):
        return Pair(apply_elem(F.left, fn, e.fst), apply_elem(F.right, fn, e.snd))
    if isinstance(F, Power):
        return subset(fn(m) for m in e.members)
    if isinstance(F, Exp):
        return FnTable(tuple((k, fn(v)) for k, v in e.entries))
    if isinstance(F, Comp):
        return apply_elem(F.outer, lambda y: apply_elem(F.inner, fn, y), e)
    raise TypeError(f"not a FunctorExpr: {F!r}")


def compiled_action(F: FunctorExpr, fn: Callable[[Element], Element]) -> Callable[[Element], Element]:
    """F(f) as a closure tree with one memo dict per node.

    Nested carriers share members heavily, so per-node caching cuts deep
    evaluations by orders of magnitude; giving every node its own dict
    keeps results from different component functions apart.
    """
    if isinstance(F, Const):
        return lambda e: e
    if isinstance(F, Comp):
        return compiled_action(F.outer, compiled_action(F.inner, fn))

    if isinstance(F, Id):
        inner = fn
    elif isinstance(F, Sum):
        lf = compiled_action(F.left, fn)
        rf = compiled_action(F.right, fn)
        inner = lambda e: Inl(lf(e.value)) if type(e) is Inl else Inr(rf(e.value))
    elif isinstance(F, Prod):
        ff = compiled_action(F.left, fn)
        sf = compiled_action(F.right, fn)
        inner = lambda e: Pair(ff(e.fst), sf(e.snd))
    elif isinstance(F, Power):
        member_memo: dict = {}

        def inner(e, _fn=fn, _memo=member_memo):
            out = []
            for m in e.members:
                v = _memo.get(m)
                if v is None:
                    v = _fn(m)
                    _memo[m] = v
                out.append(v)
            return subset(out)

    elif isinstance(F, Exp):
        entry_memo: dict = {}

        def inner(e, _fn=fn, _memo=entry_memo):
            out = []
            for k, v in e.entries:
                w = _memo.get(v)
                if w is None:
                    w = _fn(v)
                    _memo[v] = w
                out.append((k, w))
            return FnTable(tuple(out))

    else:
        raise TypeError(f"not a FunctorExpr: {F!r}")

    memo: dict = {}

    def run(e, _inner=inner, _memo=memo):
        out = _memo.get(e)
        if out is None:
            out = _inner(e)
            _memo[e] = out
        return out

    return run


def apply_mor(F: FunctorExpr, f: FinFn) -> FinFn:
    """Full table of F(f); boundaries are F applied to f's boundaries."""
    dom = apply_obj(F, f.dom)
    cod = apply_obj(F, f.cod)
    return FinFn._raw(dom, cod, {e: apply_elem(F, f, e) for e in dom.elements})


def carrier_size(F: FunctorExpr, n: int) -> int:
    """|F(X)| as a function of |X| = n, computed arithmetically."""
    if isinstance(F, Id):
        return n
    if isinstance(F, Const):
        return len(F.value)
    if isinstance(F, Sum):
        return carrier_size(F.left, n) + carrier_size(F.right, n)
    if isinstance(F, Prod):
        return carrier_size(F.left, n) * carrier_size(F.right, n)
    if isinstance(F, Power):
        return 2 ** n
    if isinstance(F, Exp):
        return n ** len(F.exponent)
    if isinstance(F, Comp):
        return carrier_size(F.outer, carrier_size(F.inner, n))
    raise TypeError(f"not a FunctorExpr: {F!r}")


def size_within(F: FunctorExpr, n: int, cap: int) -> int:
    """|F(X)| saturated at cap + 1, without forming huge exponentials.

    All grammar constructors are monotone in the carrier size, so
    propagating the saturation value stays sound: the result is exact
    whenever it is at most cap.
    """
    clamp = cap + 1
    n = min(n, clamp)
    if isinstance(F, Id):
        return n
    if isinstance(F, Const):
        return min(len(F.value), clamp)
    if isinstance(F, Sum):
        return min(size_within(F.left, n, cap) + size_within(F.right, n, cap), clamp)
    if isinstance(F, Prod):
        return min(size_within(F.left, n, cap) * size_within(F.right, n, cap), clamp)
    if isinstance(F, Power):
        if n > clamp.bit_length():
            return clamp
        return min(2 ** n, clamp)
    if isinstance(F, Exp):
        out = 1
        for _ in range(len(F.exponent)):
            out = min(out * n, clamp)
            if out >= clamp:
                break
        return out
    if isinstance(F, Comp):
        return size_within(F.outer, size_within(F.inner, n, cap), cap)
    raise TypeError(f"not a FunctorExpr: {F!r}")


def compose_functors(*fs: FunctorExpr) -> FunctorExpr:
    """Right-nested composite, Id units stripped: compose(T,P)(X) = T(P(X))."""
    acc: FunctorExpr | None = None
    for F in reversed(fs):
        if isinstance(F, Id):
            continue
        acc = F if acc is None else Comp(F, acc)
    return acc if acc is not None else Id()
