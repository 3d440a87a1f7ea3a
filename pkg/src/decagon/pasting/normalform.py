"""Interchange normal form for pastings.

A pasting term flattens to its source path plus a sequence of whiskered
cell occurrences; vertical composition is concatenation and identity cells
vanish.  Two adjacent occurrences acting on disjoint atom ranges of the
running path may be interchanged, so the normal form greedily emits, among
all occurrences that can be bubbled to the front, the one with the least
(atom index, whisker offset, name, inverse) key.  The front position of a
movable occurrence is an invariant of the pasting, which makes the greedy
choice canonical on each interchange class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .terms import (
    BoundaryError,
    CellRef,
    HComp,
    IdCell,
    Inverse,
    PastingTerm,
    VComp,
    Whisker,
    boundary,
)
from .words import Path, Word


@dataclass(frozen=True)
class Occurrence:
    """A whiskered cell applied at an atom index of the running path."""

    index: int
    left: Word
    cell: str
    inverse: bool = False

    def key(self) -> tuple:
        return (self.index, len(self.left), self.cell, self.inverse)


@dataclass(frozen=True)
class NormalPasting:
    source: Path
    occurrences: tuple[Occurrence, ...]

    def __str__(self):
        steps = ", ".join(
            f"{'~' if o.inverse else ''}{o.cell}@{o.index}+{len(o.left)}" for o in self.occurrences
        )
        return f"<{self.source} | {steps}>"


def _cell_paths(sig, occ: Occurrence) -> tuple[Path, Path]:
    cell = sig.cells[occ.cell]
    return (cell.tgt, cell.src) if occ.inverse else (cell.src, cell.tgt)


def apply_occurrence(sig, path: Path, occ: Occurrence) -> tuple[Path, Word]:
    """Rewrite ``path`` by one occurrence; returns the new path and the
    right whisker word that made the match."""
    src, tgt = _cell_paths(sig, occ)
    i, n = occ.index, len(src)
    if i < 0 or i + n > len(path.atoms):
        raise BoundaryError(f"occurrence {occ} out of range")
    if n:
        # derive the right whisker from the first matched atom
        first = path.atoms[i]
        inner = src.atoms[0]
        if first.suffix.symbols[: len(inner.suffix)] != inner.suffix.symbols:
            raise BoundaryError(f"occurrence {occ}: atom {first} does not match {inner}")
        right = Word(first.suffix.symbols[len(inner.suffix):])
    else:
        at = path.start if i == 0 else path.atoms[i - 1].tgt
        middle = occ.left + src.start
        if not at.startswith(middle):
            raise BoundaryError(f"occurrence {occ}: junction word {at} does not begin with {middle}")
        right = at.drop_prefix(middle)
    whiskered_src = src.whisker(occ.left, right)
    actual = Path(whiskered_src.start, tuple(path.atoms[i: i + n]))
    if actual != whiskered_src:
        raise BoundaryError(
            f"occurrence {occ}: subpath {actual} does not match {whiskered_src}"
        )
    new_atoms = path.atoms[:i] + tgt.whisker(occ.left, right).atoms + path.atoms[i + n:]
    return Path(path.start, new_atoms), right


def flatten(t: PastingTerm, sig) -> tuple[Path, list[Occurrence]]:
    """Source path and occurrence sequence of a term (identities erased)."""
    src, _ = boundary(t, sig)

    def go(term: PastingTerm) -> tuple[list[Occurrence], int, int]:
        """occurrences plus source/target path lengths, in local coordinates."""
        if isinstance(term, CellRef):
            cell = sig.cells[term.name]
            return [Occurrence(0, Word(()), term.name, False)], len(cell.src), len(cell.tgt)
        if isinstance(term, Inverse):
            cell = sig.cells[term.term.name]
            return [Occurrence(0, Word(()), term.term.name, True)], len(cell.tgt), len(cell.src)
        if isinstance(term, IdCell):
            return [], len(term.path), len(term.path)
        if isinstance(term, Whisker):
            occs, s, t = go(term.term)
            L = term.left
            return [Occurrence(o.index, L + o.left, o.cell, o.inverse) for o in occs], s, t
        if isinstance(term, VComp):
            occs1, s1, t1 = go(term.upper)
            occs2, s2, t2 = go(term.lower)
            return occs1 + occs2, s1, t2
        if isinstance(term, HComp):
            occs1, s1, t1 = go(term.first)
            occs2, s2, t2 = go(term.second)
            shifted = [Occurrence(o.index + t1, o.left, o.cell, o.inverse) for o in occs2]
            return occs1 + shifted, s1 + s2, t1 + t2
        raise BoundaryError(f"not a pasting term: {term!r}")

    occs, _, _ = go(t)
    return src, occs


def _lengths(sig, occ: Occurrence) -> tuple[int, int]:
    src, tgt = _cell_paths(sig, occ)
    return len(src), len(tgt)


def swap_adjacent(sig, o1: Occurrence, o2: Occurrence) -> tuple[Occurrence, Occurrence] | None:
    """Interchange o1; o2 into o2'; o1' when their atom ranges are disjoint."""
    s1, t1 = _lengths(sig, o1)
    s2, t2 = _lengths(sig, o2)
    if o2.index >= o1.index + t1:
        return (
            Occurrence(o2.index - t1 + s1, o2.left, o2.cell, o2.inverse),
            o1,
        )
    if o2.index + s2 <= o1.index:
        return (
            o2,
            Occurrence(o1.index + t2 - s2, o1.left, o1.cell, o1.inverse),
        )
    return None


def _bubble_to_front(sig, occs: list[Occurrence], j: int) -> list[Occurrence] | None:
    """Move occs[j] before occs[0..j) by successive swaps, if independent."""
    seq = list(occs[: j + 1])
    for k in range(j, 0, -1):
        swapped = swap_adjacent(sig, seq[k - 1], seq[k])
        if swapped is None:
            return None
        seq[k - 1], seq[k] = swapped
    return seq + list(occs[j + 1:])


def normalize(t: PastingTerm, sig) -> NormalPasting:
    source, occs = flatten(t, sig)
    out: list[Occurrence] = []
    rest = list(occs)
    while rest:
        best_j, best_seq, best_key = None, None, None
        for j in range(len(rest)):
            seq = _bubble_to_front(sig, rest, j)
            if seq is None:
                continue
            key = seq[0].key()
            if best_key is None or key < best_key:
                best_j, best_seq, best_key = j, seq, key
        if best_seq is None:  # nothing movable: emit as-is (fully dependent head)
            out.append(rest.pop(0))
            continue
        out.append(best_seq[0])
        rest = best_seq[1:]
    return NormalPasting(source, tuple(out))


def occurrences_to_term(sig, source: Path, occs: list[Occurrence]) -> PastingTerm:
    """Re-embed an occurrence sequence as a vertical composite term."""
    if not occs:
        return IdCell(source)
    path = source
    term = None
    for occ in occs:
        new_path, right = apply_occurrence(sig, path, occ)
        ref: PastingTerm = Inverse(CellRef(occ.cell)) if occ.inverse else CellRef(occ.cell)
        step: PastingTerm = Whisker(occ.left, ref, right)
        src_len, _ = _lengths(sig, occ)
        before = Path(path.start, path.atoms[: occ.index])
        after = Path(
            path.atoms[occ.index + src_len].src if occ.index + src_len < len(path.atoms) else path.end,
            path.atoms[occ.index + src_len:],
        )
        step = HComp(HComp(IdCell(before), step), IdCell(after))
        term = step if term is None else VComp(term, step)
        path = new_path
    return term
