"""Signed partial permutations: the elements of I(B_n) and I_n"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from config import Config
from errors import ElementParseError, PreconditionError, RankMismatchError

# Image of +v_j: (target index, sign) or None when v_j is outside the domain
Entry = Optional[Tuple[int, int]]

_ENTRY_RE = re.compile(r"^\s*(\d+)\s*->\s*(?:([+-])(\d+)|\.)\s*$")


def json_int(value, field: str) -> int:
    """JSON integers only: no floats, strings or booleans"""
    if isinstance(value, bool) or not isinstance(value, int):
        raise ElementParseError(f"{field} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class SignedPartialPerm:
    """
    Partial bijection of {±v_1, ..., ±v_n} commuting with negation.

    Only the row of +v_j is stored; the image of -v_j is its negation, so the
    domain is closed under negation by construction. Composition is left to
    right: ``a * b`` means "apply a, then b".
    """

    n: int
    image: Tuple[Entry, ...]

    def __post_init__(self):
        if not 0 <= self.n <= Config.MAX_RANK:
            raise PreconditionError(f"rank must lie in 0..{Config.MAX_RANK}, got {self.n}")
        if len(self.image) != self.n:
            raise PreconditionError(f"expected {self.n} entries, got {len(self.image)}")
        seen = set()
        for j, entry in enumerate(self.image, start=1):
            if entry is None:
                continue
            target, sign = entry
            if not 1 <= target <= self.n:
                raise PreconditionError(f"v_{j} maps outside 1..{self.n}: {target}")
            if sign not in (1, -1):
                raise PreconditionError(f"sign of v_{j} must be +1 or -1, got {sign}")
            if target in seen:
                raise PreconditionError(f"target {target} is hit twice")
            seen.add(target)

    # Constructors

    @classmethod
    def identity(cls, n: int) -> "SignedPartialPerm":
        return cls(n, tuple((j, 1) for j in range(1, n + 1)))

    @classmethod
    def empty(cls, n: int) -> "SignedPartialPerm":
        """The zero of the monoid: defined nowhere"""
        return cls(n, (None,) * n)

    @classmethod
    def partial_identity(cls, n: int, domain) -> "SignedPartialPerm":
        keep = set(domain)
        return cls(n, tuple((j, 1) if j in keep else None for j in range(1, n + 1)))

    @classmethod
    def from_mapping(cls, n: int, mapping) -> "SignedPartialPerm":
        """Build from {source: (target, sign)}"""
        return cls(n, tuple(mapping.get(j) for j in range(1, n + 1)))

    # Predicates

    def domain(self) -> Tuple[int, ...]:
        return tuple(j for j, entry in enumerate(self.image, start=1) if entry is not None)

    def codomain(self) -> Tuple[int, ...]:
        """Image set, sorted"""
        return tuple(sorted(entry[0] for entry in self.image if entry is not None))

    @property
    def rank(self) -> int:
        return len(self.domain())

    def is_unsigned(self) -> bool:
        return all(entry[1] == 1 for entry in self.image if entry is not None)

    def is_unit(self) -> bool:
        return all(entry is not None for entry in self.image)

    def is_idempotent(self) -> bool:
        return all(entry == (j, 1) for j, entry in enumerate(self.image, start=1) if entry is not None)

    def apply(self, j: int, sign: int = 1) -> Entry:
        """Image of sign * v_j, or None if undefined"""
        entry = self.image[j - 1]
        if entry is None:
            return None
        return entry[0], entry[1] * sign

    def __iter__(self) -> Iterator[Entry]:
        return iter(self.image)

    def __mul__(self, other: "SignedPartialPerm") -> "SignedPartialPerm":
        return compose(self, other)

    # Text form: [1->+2, 2->-1, 3->.]

    def to_text(self) -> str:
        parts = []
        for j, entry in enumerate(self.image, start=1):
            if entry is None:
                parts.append(f"{j}->.")
            else:
                target, sign = entry
                parts.append(f"{j}->{'+' if sign > 0 else '-'}{target}")
        return "[" + ", ".join(parts) + "]"

    @classmethod
    def from_text(cls, text: str) -> "SignedPartialPerm":
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ElementParseError(f"element must be enclosed in brackets: {text!r}")
        body = body[1:-1].strip()
        if not body:
            return cls.empty(0)
        entries = []
        for position, chunk in enumerate(body.split(","), start=1):
            match = _ENTRY_RE.match(chunk)
            if not match:
                raise ElementParseError(f"cannot read entry {chunk.strip()!r}")
            source = int(match.group(1))
            if source != position:
                raise ElementParseError(f"entries must be listed in order: expected {position}, got {source}")
            if match.group(2) is None:
                entries.append(None)
            else:
                sign = 1 if match.group(2) == "+" else -1
                entries.append((int(match.group(3)), sign))
        try:
            return cls(len(entries), tuple(entries))
        except PreconditionError as e:
            raise ElementParseError(str(e)) from e

    # JSON form: {"n":3,"map":[[2,1],[1,-1],null]}

    def to_dict(self) -> dict:
        return {"n": self.n, "map": [None if e is None else [e[0], e[1]] for e in self.image]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "SignedPartialPerm":
        try:
            n = json_int(data["n"], "n")
            entries = []
            for e in data["map"]:
                if e is None:
                    entries.append(None)
                    continue
                if len(e) != 2:
                    raise ElementParseError(f"entry must be [target, sign], got {e!r}")
                entries.append((json_int(e[0], "target"), json_int(e[1], "sign")))
            return cls(n, tuple(entries))
        except ElementParseError:
            raise
        except (KeyError, TypeError, IndexError, ValueError, PreconditionError) as e:
            raise ElementParseError(f"malformed element: {e}") from e

    @classmethod
    def from_json(cls, text: str) -> "SignedPartialPerm":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ElementParseError(f"invalid JSON: {e}") from e
        return cls.from_dict(data)

    @classmethod
    def parse(cls, text: str) -> "SignedPartialPerm":
        """Accept either the bracket text form or the JSON form"""
        if text.lstrip().startswith("{"):
            return cls.from_json(text)
        return cls.from_text(text)

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class Decomposition:
    """Factorisation a = idem * unit"""

    idem: SignedPartialPerm
    unit: SignedPartialPerm


def compose(a: SignedPartialPerm, b: SignedPartialPerm) -> SignedPartialPerm:
    """a then b; signs multiply along the way"""
    if a.n != b.n:
        raise RankMismatchError(a.n, b.n)
    entries = []
    for entry in a.image:
        if entry is None:
            entries.append(None)
            continue
        middle, sign = entry
        entries.append(b.apply(middle, sign))
    return SignedPartialPerm(a.n, tuple(entries))


def inverse_of(a: SignedPartialPerm) -> SignedPartialPerm:
    """Reverse every arrow; the unique b with aba = a and bab = b"""
    mapping = {}
    for j, entry in enumerate(a.image, start=1):
        if entry is not None:
            target, sign = entry
            # +v_j -> s v_t means +v_t -> s v_j
            mapping[target] = (j, sign)
    return SignedPartialPerm.from_mapping(a.n, mapping)


def factorise(a: SignedPartialPerm) -> Decomposition:
    """
    Split a into its domain idempotent and a unit extending it.

    Unused sources are matched to unused targets in increasing order with
    sign +1, so the completion is deterministic.
    """
    idem = SignedPartialPerm.partial_identity(a.n, a.domain())
    free_sources = [j for j in range(1, a.n + 1) if a.image[j - 1] is None]
    used_targets = set(a.codomain())
    free_targets = [t for t in range(1, a.n + 1) if t not in used_targets]
    entries = list(a.image)
    for source, target in zip(free_sources, free_targets):
        entries[source - 1] = (target, 1)
    return Decomposition(idem=idem, unit=SignedPartialPerm(a.n, tuple(entries)))
