"""Words, arrow generators, whiskered atoms and paths.

Words over the functor alphabet are the 0-cells; concatenation is their
monoid operation and the empty word is the identity functor.  An arrow
atom is a generator whiskered by a prefix and suffix word; a path is a
composable sequence of atoms and carries its start word explicitly so the
empty path at a word is representable.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Word:
    symbols: tuple[str, ...] = ()

    @staticmethod
    def of(text: str) -> "Word":
        """Parse juxtaposed one-letter symbols; 'epsilon' or '' is empty."""
        text = text.strip()
        if text in ("", "epsilon"):
            return Word(())
        return Word(tuple(text.replace(" ", "")))

    def __add__(self, other: "Word") -> "Word":
        return Word(self.symbols + other.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def startswith(self, prefix: "Word") -> bool:
        return self.symbols[: len(prefix)] == prefix.symbols

    def endswith(self, suffix: "Word") -> bool:
        return len(suffix) == 0 or self.symbols[-len(suffix):] == suffix.symbols

    def drop_prefix(self, prefix: "Word") -> "Word":
        if not self.startswith(prefix):
            raise ValueError(f"{self} does not start with {prefix}")
        return Word(self.symbols[len(prefix):])

    def drop_suffix(self, suffix: "Word") -> "Word":
        if not self.endswith(suffix):
            raise ValueError(f"{self} does not end with {suffix}")
        return Word(self.symbols[: len(self.symbols) - len(suffix)])

    def __str__(self) -> str:
        return "".join(self.symbols) if self.symbols else "1"

    def __repr__(self) -> str:
        return f"Word({''.join(self.symbols)!r})"


@dataclass(frozen=True)
class ArrowGen:
    """Generating 1-cell with declared boundary words."""

    name: str
    src: Word
    tgt: Word

    def __repr__(self):
        return f"{self.name}:{self.src}->{self.tgt}"


@dataclass(frozen=True)
class ArrowAtom:
    """prefix . gen . suffix, acting on the word interval it occupies."""

    prefix: Word
    gen: ArrowGen
    suffix: Word

    @property
    def src(self) -> Word:
        return self.prefix + self.gen.src + self.suffix

    @property
    def tgt(self) -> Word:
        return self.prefix + self.gen.tgt + self.suffix

    def whisker(self, left: Word, right: Word) -> "ArrowAtom":
        return ArrowAtom(left + self.prefix, self.gen, self.suffix + right)

    def __str__(self):
        p = str(self.prefix) if len(self.prefix) else "epsilon"
        s = str(self.suffix) if len(self.suffix) else "epsilon"
        return f"[{p} . {self.gen.name} . {s}]"

    def __repr__(self):
        return str(self)


@dataclass(frozen=True)
class Path:
    """Composable atom sequence; ``start`` names the word of an empty path."""

    start: Word
    atoms: tuple[ArrowAtom, ...] = ()

    def __post_init__(self):
        at = self.start
        for a in self.atoms:
            if a.src != at:
                raise ValueError(f"path breaks at {a}: expected source {at}, got {a.src}")
            at = a.tgt

    @property
    def end(self) -> Word:
        return self.atoms[-1].tgt if self.atoms else self.start

    def __len__(self) -> int:
        return len(self.atoms)

    def whisker(self, left: Word, right: Word) -> "Path":
        return Path(left + self.start + right, tuple(a.whisker(left, right) for a in self.atoms))

    def then(self, other: "Path") -> "Path":
        if other.start != self.end:
            raise ValueError(f"paths do not chain: {self.end} vs {other.start}")
        return Path(self.start, self.atoms + other.atoms)

    def __str__(self):
        if not self.atoms:
            return f"@ {self.start}" if len(self.start) else "@ epsilon"
        return " ; ".join(str(a) for a in self.atoms)

    def __repr__(self):
        return f"Path({self})"
