"""The monoid EF_n of partial conjugating isomorphisms x_i -> w_i^-1 x_a(i) w_i"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from config import Config
from errors import ConjugatorShapeError, ElementParseError, PreconditionError, RankMismatchError, WordParseError
from free_partial.free_word import FreeWord, kill_generators, reduce_free
from monoids.partial_perm import SignedPartialPerm, compose, json_int

logger = logging.getLogger(__name__)


def canonical_conjugator(w: FreeWord, target: int) -> FreeWord:
    """
    Reduce w and drop leading powers of x_target.

    w and x_target^m w conjugate x_target to the same element, so this picks
    one representative per realized map.
    """
    letters = reduce_free(w).letters
    start = 0
    while start < len(letters) and letters[start][0] == target:
        start += 1
    return FreeWord(letters[start:])


def split_conjugate(image: FreeWord) -> Tuple[int, FreeWord]:
    """Read a reduced word u^-1 x_t u back as (t, u)"""
    letters = reduce_free(image).letters
    if len(letters) % 2 == 0:
        raise ConjugatorShapeError(f"{image} is not a conjugate of a generator")
    middle = len(letters) // 2
    target, exponent = letters[middle]
    conjugator = FreeWord(letters[middle + 1:])
    if exponent != 1 or FreeWord(letters[:middle]) != conjugator.inverse():
        raise ConjugatorShapeError(f"{image} is not of the form u^-1 x_t u")
    return target, conjugator


@dataclass(frozen=True)
class PartialFreeIso:
    """
    f_a: x_i -> w_i^-1 x_a(i) w_i for i in dom a, undefined elsewhere.

    ``conj[i - 1]`` is w_i (None off the domain). Conjugators are stored in
    canonical form and only use generators in the image of a.
    """

    perm: SignedPartialPerm
    conj: Tuple[Optional[FreeWord], ...]

    def __post_init__(self):
        if not self.perm.is_unsigned():
            raise PreconditionError(f"EF_n needs an unsigned partial permutation, got {self.perm}")
        if len(self.conj) != self.perm.n:
            raise PreconditionError(f"expected {self.perm.n} conjugators, got {len(self.conj)}")
        alive = set(self.perm.codomain())
        canonical = []
        for entry, w in zip(self.perm.image, self.conj):
            if entry is None:
                if w is not None:
                    raise PreconditionError("conjugator given outside the domain")
                canonical.append(None)
                continue
            w = canonical_conjugator(w if w is not None else FreeWord(), entry[0])
            if not w.indices() <= alive:
                raise PreconditionError(f"conjugator {w} uses generators outside the image {sorted(alive)}")
            canonical.append(w)
        object.__setattr__(self, "conj", tuple(canonical))

    @property
    def n(self) -> int:
        return self.perm.n

    @classmethod
    def identity(cls, n: int) -> "PartialFreeIso":
        return include_In(SignedPartialPerm.identity(n))

    def image_of(self, i: int) -> Optional[FreeWord]:
        """Reduced image of x_i, or None if i is outside the domain"""
        entry = self.perm.image[i - 1]
        if entry is None:
            return None
        w = self.conj[i - 1]
        return w.inverse() * FreeWord.generator(entry[0]) * w

    def apply(self, w: FreeWord) -> FreeWord:
        """Extend to F_n as a homomorphism, sending generators outside the domain to 1"""
        letters = []
        for index, exponent in w.letters:
            image = self.image_of(index)
            if image is None:
                continue
            letters.extend(image.letters if exponent == 1 else image.inverse().letters)
        return reduce_free(FreeWord(tuple(letters)))

    def __mul__(self, other: "PartialFreeIso") -> "PartialFreeIso":
        return compose_efn(self, other)

    # Text form: x1 -> x2^-1 x1 x2 ; x2 -> x2

    def to_text(self) -> str:
        parts = [f"x{i} -> {self.image_of(i)}" for i in self.perm.domain()]
        return " ; ".join(parts) if parts else "empty"

    @classmethod
    def parse(cls, text: str, n: int) -> "PartialFreeIso":
        mapping = {}
        conj = [None] * n
        body = text.strip()
        if body != "empty":
            for segment in body.split(";"):
                source_text, arrow, image_text = segment.partition("->")
                if not arrow:
                    raise WordParseError(f"missing '->' in {segment.strip()!r}")
                source = FreeWord.parse(source_text)
                if len(source) != 1 or source.letters[0][1] != 1:
                    raise WordParseError(f"left side must be a generator: {source_text.strip()!r}")
                i = source.letters[0][0]
                if not 1 <= i <= n or i in mapping:
                    raise WordParseError(f"generator x{i} is out of range or repeated")
                target, w = split_conjugate(FreeWord.parse(image_text))
                mapping[i] = (target, 1)
                conj[i - 1] = w
        try:
            return cls(SignedPartialPerm.from_mapping(n, mapping), tuple(conj))
        except PreconditionError as e:
            raise ElementParseError(str(e)) from e

    def to_dict(self) -> dict:
        rows = []
        for entry, w in zip(self.perm.image, self.conj):
            rows.append(None if entry is None else [entry[0], [list(letter) for letter in w.letters]])
        return {"n": self.n, "map": rows}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "PartialFreeIso":
        try:
            n = json_int(data["n"], "n")
            mapping, conj = {}, []
            for i, row in enumerate(data["map"], start=1):
                if row is None:
                    conj.append(None)
                    continue
                mapping[i] = (json_int(row[0], "target"), 1)
                conj.append(FreeWord(tuple((json_int(j, "index"), json_int(e, "exponent")) for j, e in row[1])))
            return cls(SignedPartialPerm.from_mapping(n, mapping), tuple(conj))
        except (KeyError, TypeError, ValueError) as e:
            raise ElementParseError(f"malformed EF_n element: {e}") from e

    def __str__(self) -> str:
        return self.to_text()


def compose_efn(f: PartialFreeIso, g: PartialFreeIso) -> PartialFreeIso:
    """
    f then g, defined on the x_i with i in dom(a∘b).

    The conjugator of x_i is u_a(i) g(w_i), where g(w_i) first sets to 1 the
    generators outside dom g; the result is then restricted to the image of
    the composite.
    """
    if f.n != g.n:
        raise RankMismatchError(f.n, g.n)
    perm = compose(f.perm, g.perm)
    alive = perm.codomain()
    conj = []
    for i, entry in enumerate(perm.image, start=1):
        if entry is None:
            conj.append(None)
            continue
        middle = f.perm.image[i - 1][0]
        w = g.conj[middle - 1] * g.apply(f.conj[i - 1])
        conj.append(kill_generators(w, alive))
    result = PartialFreeIso(perm, tuple(conj))

    if Config.CHECK_CONJUGATOR_SHAPE:
        for i in perm.domain():
            realized = kill_generators(g.apply(f.image_of(i)), alive)
            if realized != result.image_of(i):
                raise ConjugatorShapeError(f"x{i}: composite gives {realized}, stored form gives {result.image_of(i)}")
    return result


def include_In(a: SignedPartialPerm) -> PartialFreeIso:
    """I_n -> EF_n with all conjugators trivial"""
    if not a.is_unsigned():
        raise PreconditionError(f"include_In needs an element of I_n, got {a}")
    return PartialFreeIso(a, tuple(None if entry is None else FreeWord() for entry in a.image))


def project_EFn(f: PartialFreeIso) -> SignedPartialPerm:
    """EF_n -> I_n, forgetting the conjugators"""
    return f.perm
