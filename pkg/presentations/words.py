"""Generator symbols and words over the IB(B_n) alphabet"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Optional, Sequence, Tuple

import numpy as np

from errors import PreconditionError, RankMismatchError, WordParseError


class Kind(Enum):
    SIGMA = "s"
    SIGMA_INV = "S"
    TAU = "t"
    TAU_INV = "T"
    EPS = "e"
    EPS_I = "e_i"


_INDEXED = {Kind.SIGMA, Kind.SIGMA_INV, Kind.EPS_I}
_INVERSES = {
    Kind.SIGMA: Kind.SIGMA_INV,
    Kind.SIGMA_INV: Kind.SIGMA,
    Kind.TAU: Kind.TAU_INV,
    Kind.TAU_INV: Kind.TAU,
    Kind.EPS: Kind.EPS,
    Kind.EPS_I: Kind.EPS_I,
}
_TOKEN_RE = re.compile(r"^(s|S|t|T|e)(\d*)$")


@dataclass(frozen=True)
class GeneratorSymbol:
    kind: Kind
    index: Optional[int] = None

    def __post_init__(self):
        if (self.kind in _INDEXED) != (self.index is not None):
            raise WordParseError(f"{self.kind.name} {'needs' if self.kind in _INDEXED else 'takes no'} index")

    @property
    def is_epsilon(self) -> bool:
        return self.kind in (Kind.EPS, Kind.EPS_I)

    @property
    def is_sigma(self) -> bool:
        return self.kind in (Kind.SIGMA, Kind.SIGMA_INV)

    @property
    def is_tau(self) -> bool:
        return self.kind in (Kind.TAU, Kind.TAU_INV)

    @property
    def exponent(self) -> int:
        """+1 or -1 for σ and τ letters, 0 for ε letters"""
        if self.is_epsilon:
            return 0
        return -1 if self.kind in (Kind.SIGMA_INV, Kind.TAU_INV) else 1

    @property
    def strand(self) -> Optional[int]:
        """The string an ε letter deletes; ε is ε_1"""
        if self.kind is Kind.EPS:
            return 1
        if self.kind is Kind.EPS_I:
            return self.index
        return None

    def inverse(self) -> "GeneratorSymbol":
        return GeneratorSymbol(_INVERSES[self.kind], self.index)

    def is_valid(self, n: int) -> bool:
        if self.is_sigma:
            return 1 <= self.index <= n - 1
        if self.kind is Kind.EPS_I:
            return 1 <= self.index <= n
        return n >= 1

    def min_rank(self) -> int:
        if self.is_sigma:
            return self.index + 1
        if self.kind is Kind.EPS_I:
            return self.index
        return 1

    @property
    def token(self) -> str:
        if self.kind is Kind.EPS_I:
            return f"e{self.index}"
        if self.index is None:
            return self.kind.value
        return f"{self.kind.value}{self.index}"

    @classmethod
    def parse(cls, token: str) -> "GeneratorSymbol":
        match = _TOKEN_RE.match(token)
        if not match:
            raise WordParseError(f"unknown generator token {token!r}")
        letter, digits = match.groups()
        if letter in ("s", "S"):
            if not digits:
                raise WordParseError(f"{token!r} needs an index")
            kind = Kind.SIGMA if letter == "s" else Kind.SIGMA_INV
            return cls(kind, int(digits))
        if letter in ("t", "T"):
            if digits:
                raise WordParseError(f"{token!r}: tau takes no index")
            return TAU if letter == "t" else TAU_INV
        if digits:
            return cls(Kind.EPS_I, int(digits))
        return EPS

    def __str__(self) -> str:
        return self.token


TAU = GeneratorSymbol(Kind.TAU)
TAU_INV = GeneratorSymbol(Kind.TAU_INV)
EPS = GeneratorSymbol(Kind.EPS)


def sigma(i: int) -> GeneratorSymbol:
    return GeneratorSymbol(Kind.SIGMA, i)


def sigma_inv(i: int) -> GeneratorSymbol:
    return GeneratorSymbol(Kind.SIGMA_INV, i)


def eps(i: int) -> GeneratorSymbol:
    return GeneratorSymbol(Kind.EPS_I, i)


@dataclass(frozen=True)
class Word:
    """
    Finite sequence of generator symbols at an ambient rank.

    The empty word is the identity and prints as ``1``.
    """

    letters: Tuple[GeneratorSymbol, ...]
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if not letter.is_valid(self.rank):
                raise WordParseError(f"letter {letter} is not valid at rank {self.rank}")

    @classmethod
    def empty(cls, n: int) -> "Word":
        return cls((), n)

    @classmethod
    def parse(cls, text: str, n: Optional[int] = None) -> "Word":
        """
        Read ``t s1 e2 S1`` (spaces or ``*`` between tokens).

        Without an explicit rank, the smallest rank accepting every letter is used.
        """
        tokens = [tok for tok in re.split(r"[\s*]+", text.strip()) if tok]
        if tokens == ["1"]:
            tokens = []
        letters = tuple(GeneratorSymbol.parse(tok) for tok in tokens)
        if n is None:
            n = max((letter.min_rank() for letter in letters), default=1)
        return cls(letters, n)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(letter.token for letter in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[GeneratorSymbol]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item], self.rank)
        return self.letters[item]

    def __mul__(self, other: "Word") -> "Word":
        if self.rank != other.rank:
            raise RankMismatchError(self.rank, other.rank)
        return Word(self.letters + other.letters, self.rank)

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return self.inverse() ** -k
        return Word(self.letters * k, self.rank)

    def inverse(self) -> "Word":
        """Reversal with letter-wise inverses; ε letters are self-inverse"""
        return Word(tuple(letter.inverse() for letter in reversed(self.letters)), self.rank)

    def with_rank(self, n: int) -> "Word":
        return Word(self.letters, n)

    def has_epsilon(self) -> bool:
        return any(letter.is_epsilon for letter in self.letters)

    def has_tau(self) -> bool:
        return any(letter.is_tau for letter in self.letters)


def word(n: int, text: str) -> Word:
    return Word.parse(text, n)


def concat(words: Iterable[Word], n: int) -> Word:
    letters = []
    for w in words:
        if w.rank != n:
            raise RankMismatchError(n, w.rank)
        letters.extend(w.letters)
    return Word(tuple(letters), n)


def free_reduce(w: Word) -> Word:
    """Cancel adjacent σ_i σ_i⁻¹, σ_i⁻¹ σ_i, τ τ⁻¹ and τ⁻¹ τ until none remain"""
    stack = []
    for letter in w.letters:
        if stack and not letter.is_epsilon and stack[-1] == letter.inverse():
            stack.pop()
        else:
            stack.append(letter)
    return Word(tuple(stack), w.rank)


def alphabet(n: int, signed: bool = True, epsilon: bool = True, inverses: bool = True) -> Tuple[GeneratorSymbol, ...]:
    """All letters valid at rank n, optionally without τ, ε or inverse letters"""
    letters = []
    for i in range(1, n):
        letters.append(sigma(i))
        if inverses:
            letters.append(sigma_inv(i))
    if signed and n >= 1:
        letters.append(TAU)
        if inverses:
            letters.append(TAU_INV)
    if epsilon and n >= 1:
        letters.append(EPS)
        letters.extend(eps(i) for i in range(1, n + 1))
    return tuple(letters)


def random_word(n: int, length: int, rng: np.random.Generator, letters: Sequence[GeneratorSymbol] = None) -> Word:
    """Uniform random word of the given length over ``letters`` (default: full alphabet)"""
    letters = tuple(letters) if letters is not None else alphabet(n)
    if not letters:
        if length:
            raise PreconditionError(f"no letters available at rank {n}")
        return Word.empty(n)
    picks = rng.integers(0, len(letters), size=length)
    return Word(tuple(letters[p] for p in picks), n)
