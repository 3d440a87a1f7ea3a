"""Canonical finite sets, structured elements, and total functions.

Elements are closed structured terms (atoms, tagged sums, pairs, subsets,
function tables).  A fixed total order on terms, by constructor tag first
and then recursively, makes every carrier canonical: two equal sets always
have identical representations.  All values are immutable after
construction.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator


class Element:
    """Base class for structured elements; hash is cached at construction."""

    __slots__ = ("_hash",)

    def __hash__(self) -> int:
        return self._hash


class Atom(Element):
    __slots__ = ("label",)

    def __init__(self, label: str):
        self.label = label
        self._hash = hash((0, label))

    def __eq__(self, other):
        return self is other or (
            type(other) is Atom and self._hash == other._hash and self.label == other.label
        )

    __hash__ = Element.__hash__

    def __repr__(self):
        return f"Atom({self.label!r})"


class Inl(Element):
    __slots__ = ("value",)

    def __init__(self, value: Element):
        self.value = value
        self._hash = hash((1, value))

    def __eq__(self, other):
        return self is other or (
            type(other) is Inl and self._hash == other._hash and self.value == other.value
        )

    __hash__ = Element.__hash__

    def __repr__(self):
        return f"Inl({self.value!r})"


class Inr(Element):
    __slots__ = ("value",)

    def __init__(self, value: Element):
        self.value = value
        self._hash = hash((2, value))

    def __eq__(self, other):
        return self is other or (
            type(other) is Inr and self._hash == other._hash and self.value == other.value
        )

    __hash__ = Element.__hash__

    def __repr__(self):
        return f"Inr({self.value!r})"


class Pair(Element):
    __slots__ = ("fst", "snd")

    def __init__(self, fst: Element, snd: Element):
        self.fst = fst
        self.snd = snd
        self._hash = hash((3, fst, snd))

    def __eq__(self, other):
        return self is other or (
            type(other) is Pair
            and self._hash == other._hash
            and self.fst == other.fst
            and self.snd == other.snd
        )

    __hash__ = Element.__hash__

    def __repr__(self):
        return f"Pair({self.fst!r}, {self.snd!r})"


class Subset(Element):
    """Sorted duplicate-free member tuple; build through ``subset``."""

    __slots__ = ("members",)

    def __init__(self, members: tuple):
        self.members = members
        self._hash = hash((4, members))

    def __eq__(self, other):
        return self is other or (
            type(other) is Subset and self._hash == other._hash and self.members == other.members
        )

    __hash__ = Element.__hash__

    def __repr__(self):
        return f"Subset({list(self.members)!r})"


class FnTable(Element):
    """Sorted entry tuple with duplicate-free keys; build through ``fn_table``."""

    __slots__ = ("entries",)

    def __init__(self, entries: tuple):
        self.entries = entries
        self._hash = hash((5, entries))

    def __eq__(self, other):
        return self is other or (
            type(other) is FnTable and self._hash == other._hash and self.entries == other.entries
        )

    __hash__ = Element.__hash__

    def __repr__(self):
        return f"FnTable({list(self.entries)!r})"


_KEY_CACHE: dict[Element, tuple] = {}


def element_key(e: Element) -> tuple:
    """Total-order key: constructor tag, then recursive comparison data."""
    k = _KEY_CACHE.get(e)
    if k is not None:
        return k
    if type(e) is Atom:
        k = (0, e.label)
    elif type(e) is Inl:
        k = (1, element_key(e.value))
    elif type(e) is Inr:
        k = (2, element_key(e.value))
    elif type(e) is Pair:
        k = (3, element_key(e.fst), element_key(e.snd))
    elif type(e) is Subset:
        k = (4, tuple(element_key(m) for m in e.members))
    elif type(e) is FnTable:
        k = (5, tuple((element_key(a), element_key(b)) for a, b in e.entries))
    else:
        raise TypeError(f"not an Element: {e!r}")
    _KEY_CACHE[e] = k
    return k


def subset(members: Iterable[Element]) -> Subset:
    """Canonical subset: members sorted by the global order, duplicates removed."""
    seen = {}
    for m in members:
        seen[m] = None
    return Subset(tuple(sorted(seen, key=element_key)))


def fn_table(entries: Iterable[tuple[Element, Element]]) -> FnTable:
    """Canonical function table: entries sorted by key; keys must be distinct."""
    by_key = {}
    for k, v in entries:
        if k in by_key and by_key[k] != v:
            raise ValueError(f"conflicting entries for key {k!r}")
        by_key[k] = v
    return FnTable(tuple(sorted(by_key.items(), key=lambda kv: element_key(kv[0]))))


def element_repr(e: Element) -> str:
    """Compact printer used in witnesses and reports."""
    if type(e) is Atom:
        return e.label
    if type(e) is Inl:
        return f"inl({element_repr(e.value)})"
    if type(e) is Inr:
        return f"inr({element_repr(e.value)})"
    if type(e) is Pair:
        return f"({element_repr(e.fst)},{element_repr(e.snd)})"
    if type(e) is Subset:
        return "{" + ",".join(element_repr(m) for m in e.members) + "}"
    if type(e) is FnTable:
        return "[" + ",".join(f"{element_repr(k)}->{element_repr(v)}" for k, v in e.entries) + "]"
    raise TypeError(f"not an Element: {e!r}")


class FinSet:
    """Finite carrier with canonically ordered, duplicate-free elements."""

    __slots__ = ("elements", "_members", "_hash")

    def __init__(self, elements: Iterable[Element] = ()):
        seen = {}
        for e in elements:
            seen[e] = None
        self.elements = tuple(sorted(seen, key=element_key))
        self._members = frozenset(self.elements)
        self._hash = hash(self.elements)

    def __contains__(self, e: Element) -> bool:
        return e in self._members

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other):
        return self is other or (
            isinstance(other, FinSet) and self._hash == other._hash and self.elements == other.elements
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "FinSet({" + ",".join(element_repr(e) for e in self.elements) + "})"


def atoms(*labels: str) -> FinSet:
    return FinSet(Atom(l) for l in labels)


class CompositionError(ValueError):
    """Raised when boundaries of a composition do not match."""


class FinFn:
    """Total function between finite carriers, stored as a full table."""

    __slots__ = ("dom", "cod", "pairs", "_map", "_hash")

    def __init__(self, dom: FinSet, cod: FinSet, mapping):
        """``mapping``: dict, iterable of pairs, or callable on dom elements."""
        if callable(mapping):
            table = {x: mapping(x) for x in dom.elements}
        elif isinstance(mapping, dict):
            table = dict(mapping)
        else:
            table = dict(mapping)
        if set(table) != set(dom.elements):
            missing = [e for e in dom.elements if e not in table]
            extra = [e for e in table if e not in dom]
            raise ValueError(f"table is not total on dom (missing={missing!r}, extra={extra!r})")
        for x, y in table.items():
            if y not in cod:
                raise ValueError(f"value {y!r} for {x!r} is not in the codomain")
        self.dom = dom
        self.cod = cod
        self.pairs = tuple((x, table[x]) for x in dom.elements)
        self._map = table
        self._hash = hash((dom, cod, self.pairs))

    @classmethod
    def _raw(cls, dom: FinSet, cod: FinSet, table: dict) -> "FinFn":
        """Internal constructor for tables already known to be total and
        well-typed; skips validation."""
        fn = cls.__new__(cls)
        fn.dom = dom
        fn.cod = cod
        fn.pairs = tuple((x, table[x]) for x in dom.elements)
        fn._map = table
        fn._hash = hash((dom, cod, fn.pairs))
        return fn

    def __call__(self, x: Element) -> Element:
        return self._map[x]

    def __eq__(self, other):
        return self is other or (
            isinstance(other, FinFn)
            and self._hash == other._hash
            and self.dom == other.dom
            and self.cod == other.cod
            and self.pairs == other.pairs
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        body = ",".join(f"{element_repr(x)}->{element_repr(y)}" for x, y in self.pairs)
        return f"FinFn({body})"


def identity(X: FinSet) -> FinFn:
    return FinFn._raw(X, X, {x: x for x in X.elements})


def compose(g: FinFn, f: FinFn) -> FinFn:
    """g after f; boundaries must match syntactically."""
    if f.cod != g.dom:
        raise CompositionError(
            f"cannot compose: codomain {f.cod!r} does not equal domain {g.dom!r}"
        )
    gm, fm = g._map, f._map
    return FinFn._raw(f.dom, g.cod, {x: gm[fm[x]] for x in f.dom.elements})


def fn_equal(f: FinFn, g: FinFn) -> bool:
    return f == g


def iter_functions(X: FinSet, Y: FinSet) -> Iterator[FinFn]:
    """All total functions X -> Y in deterministic order; |Y|^|X| of them."""
    xs = X.elements
    for values in product(Y.elements, repeat=len(xs)):
        yield FinFn._raw(X, Y, dict(zip(xs, values)))


def all_functions(X: FinSet, Y: FinSet) -> list[FinFn]:
    return list(iter_functions(X, Y))


def function_count(X: FinSet, Y: FinSet) -> int:
    return len(Y) ** len(X)
