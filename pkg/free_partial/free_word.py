"""Words in the free group F_n on x_1, ..., x_n"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

from errors import WordParseError

Letter = Tuple[int, int]  # (generator index, exponent ±1)

_LETTER_RE = re.compile(r"^x(\d+)(?:\^(-?1))?$")


@dataclass(frozen=True)
class FreeWord:
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for index, exponent in self.letters:
            if index < 1 or exponent not in (1, -1):
                raise WordParseError(f"bad free-group letter ({index}, {exponent})")

    @classmethod
    def generator(cls, i: int) -> "FreeWord":
        return cls(((i, 1),))

    @property
    def is_reduced(self) -> bool:
        return all(a[0] != b[0] or a[1] != -b[1] for a, b in zip(self.letters, self.letters[1:]))

    def indices(self) -> set:
        return {index for index, _ in self.letters}

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((i, -e) for i, e in reversed(self.letters)))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return reduce_free(FreeWord(self.letters + other.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{i}" if e == 1 else f"x{i}^-1" for i, e in self.letters)

    @classmethod
    def parse(cls, text: str) -> "FreeWord":
        tokens = text.split()
        if tokens == ["1"]:
            return cls()
        letters = []
        for token in tokens:
            match = _LETTER_RE.match(token)
            if not match:
                raise WordParseError(f"cannot read free-group letter {token!r}")
            letters.append((int(match.group(1)), int(match.group(2) or 1)))
        return cls(tuple(letters))


def reduce_free(w: FreeWord) -> FreeWord:
    """Cancel adjacent x_i x_i^-1 and x_i^-1 x_i until none remain"""
    stack = []
    for index, exponent in w.letters:
        if stack and stack[-1] == (index, -exponent):
            stack.pop()
        else:
            stack.append((index, exponent))
    return FreeWord(tuple(stack))


def kill_generators(w: FreeWord, alive: Iterable[int]) -> FreeWord:
    """Set x_j = 1 for every j outside ``alive``, then reduce"""
    alive = set(alive)
    return reduce_free(FreeWord(tuple(letter for letter in w.letters if letter[0] in alive)))
