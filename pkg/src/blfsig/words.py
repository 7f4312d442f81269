"""Words in the standard twist generators of the hyperelliptic mapping
class group of a closed genus-g surface.

Generators are the Dehn twists t_1, ..., t_{2g+1} along the standard chain
of simple closed curves, the hyperelliptic involution ``iota``, and (for
internal use by the fibration machinery) the twist along the standard
separating curve splitting off genus h.  A word is a sequence of
(item, exponent) pairs where an item is a generator or a nested word, so
powers of subwords stay symbolic and evaluate in O(log exponent) group
operations.

The text grammar (used by the command line and the spec file format) is

    word := term { term }
    term := atom [ '^' signed-int ]
    atom := 't' index | 'iota' | '(' word ')'

with whitespace between terms and chain indices in 1..2g+1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterator, Union


@dataclass(frozen=True)
class ChainTwist:
    """Right-handed Dehn twist along the index-th chain curve."""
    index: int

    def __str__(self):
        return f"t{self.index}"


@dataclass(frozen=True)
class Iota:
    """The hyperelliptic involution."""

    def __str__(self):
        return "iota"


@dataclass(frozen=True)
class SeparatingTwist:
    """Right-handed twist along the standard separating curve bounding
    subsurfaces of genus h and g-h.  Not part of the text grammar; built
    structurally by the fibration layer."""
    h: int

    def __str__(self):
        return f"sep{self.h}"


Generator = Union[ChainTwist, Iota, SeparatingTwist]
IOTA = Iota()


class WordError(ValueError):
    """Malformed word: bad index, zero exponent, or genus mismatch."""


@dataclass(frozen=True)
class Word:
    """A word in the generators at a fixed genus.

    ``items`` is a tuple of (item, exponent) pairs; an item is a generator
    or a nested Word of the same genus, and exponents are nonzero ints.
    """
    genus: int
    items: tuple = ()

    def __post_init__(self):
        if self.genus < 0:
            raise WordError(f"genus must be >= 0, got {self.genus}")
        for item, exp in self.items:
            if not isinstance(exp, int) or exp == 0:
                raise WordError(f"exponent must be a nonzero integer, got {exp!r}")
            if isinstance(item, Word):
                if item.genus != self.genus:
                    raise WordError("nested word has mismatched genus")
            elif isinstance(item, ChainTwist):
                if not 1 <= item.index <= 2 * self.genus + 1:
                    raise WordError(
                        f"t{item.index} out of range for genus {self.genus} "
                        f"(max index {2 * self.genus + 1})")
            elif isinstance(item, SeparatingTwist):
                if not 0 <= item.h <= self.genus:
                    raise WordError(f"sep{item.h} out of range for genus {self.genus}")
            elif not isinstance(item, Iota):
                raise WordError(f"unknown generator {item!r}")

    def __mul__(self, other: "Word") -> "Word":
        if self.genus != other.genus:
            raise WordError("cannot concatenate words of different genus")
        return Word(self.genus, self.items + other.items)

    def __pow__(self, e: int) -> "Word":
        if e == 0:
            return Word(self.genus)
        if len(self.items) == 1:
            item, exp = self.items[0]
            return Word(self.genus, ((item, exp * e),))
        return Word(self.genus, ((self, e),))

    def inverse(self) -> "Word":
        return Word(self.genus, tuple((item, -exp) for item, exp in reversed(self.items)))

    def letters(self) -> Iterator[tuple[Generator, int]]:
        """Flat left-to-right stream of (generator, +1/-1) letters."""
        for item, exp in self.items:
            sign = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                if isinstance(item, Word):
                    sub = item if sign > 0 else item.inverse()
                    yield from sub.letters()
                else:
                    yield item, sign

    def letter_count(self) -> int:
        return sum(1 for _ in self.letters())

    def generators(self) -> set:
        return {gen for gen, _ in self.letters()}

    def substitute(self, fn: Callable[[Generator], Generator | None],
                   genus: int) -> "Word":
        """Map each generator through ``fn`` (None drops it), re-rooted at
        the given genus; word structure and exponents are preserved."""
        out = []
        for item, exp in self.items:
            if isinstance(item, Word):
                sub = item.substitute(fn, genus)
                if sub.items:
                    out.append((sub, exp))
            else:
                image = fn(item)
                if image is not None:
                    out.append((image, exp))
        return Word(genus, tuple(out))

    def __str__(self):
        return format_word(self)


def empty_word(genus: int) -> Word:
    return Word(genus)


def gen_word(genus: int, gen: Generator, exp: int = 1) -> Word:
    return Word(genus, ((gen, exp),))


def chain_word(genus: int, indices, exp: int = 1) -> Word:
    """Word ``(t_{i1} t_{i2} ...)^exp`` for a sequence of chain indices."""
    inner = Word(genus, tuple((ChainTwist(i), 1) for i in indices))
    return inner ** exp


_TOKEN = re.compile(r"t(\d+)|iota|\(|\)|\^(-?\d+)|\S")


def _tokenize(text: str) -> list:
    tokens = []
    for m in _TOKEN.finditer(text):
        tok = m.group(0)
        if m.group(1) is not None:
            tokens.append(("gen", int(m.group(1))))
        elif tok == "iota":
            tokens.append(("iota", None))
        elif tok == "(":
            tokens.append(("open", None))
        elif tok == ")":
            tokens.append(("close", None))
        elif m.group(2) is not None:
            tokens.append(("pow", int(m.group(2))))
        else:
            raise WordError(f"unexpected token {tok!r}")
    return tokens


def parse_word(text: str, genus: int) -> Word:
    """Parse the text grammar into a Word at the given genus."""
    if genus < 1:
        raise WordError("words need genus >= 1")
    tokens = _tokenize(text)
    pos = 0

    def parse_seq(depth: int) -> Word:
        nonlocal pos
        items = []
        while pos < len(tokens):
            kind, val = tokens[pos]
            if kind == "close":
                if depth == 0:
                    raise WordError("unbalanced ')'")
                break
            pos += 1
            if kind == "gen":
                item = ChainTwist(val)
            elif kind == "iota":
                item = IOTA
            elif kind == "open":
                item = parse_seq(depth + 1)
                if pos >= len(tokens) or tokens[pos][0] != "close":
                    raise WordError("unbalanced '('")
                pos += 1
            else:
                raise WordError("exponent without a preceding atom")
            exp = 1
            if pos < len(tokens) and tokens[pos][0] == "pow":
                exp = tokens[pos][1]
                if exp == 0:
                    raise WordError("zero exponent")
                pos += 1
            items.append((item, exp))
        return Word(genus, tuple(items))

    w = parse_seq(0)
    if pos != len(tokens):
        raise WordError("unbalanced ')'")
    return w


def format_word(w: Word) -> str:
    """Inverse of parse_word on the parsed structure."""
    parts = []
    for item, exp in w.items:
        if isinstance(item, Word):
            atom = f"( {format_word(item)} )"
        elif isinstance(item, SeparatingTwist):
            raise WordError("separating twists have no text form")
        else:
            atom = str(item)
        parts.append(atom if exp == 1 else f"{atom}^{exp}")
    return " ".join(parts)
