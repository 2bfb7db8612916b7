"""Exhaustive enumeration of I(B_n) and I_n, and the counting formulas"""
import logging
from itertools import combinations, permutations, product
from math import comb, factorial
from typing import Iterator, Optional

from config import Config
from errors import EnumerationCapError, PreconditionError
from monoids.partial_perm import SignedPartialPerm

logger = logging.getLogger(__name__)


def enumeration_cap(signed: bool) -> int:
    return Config.ENUMERATION_CAP_SIGNED if signed else Config.ENUMERATION_CAP_UNSIGNED


def check_cap(n: int, signed: bool = True, cap: Optional[int] = None):
    cap = enumeration_cap(signed) if cap is None else cap
    if n > cap:
        raise EnumerationCapError(n, cap, signed)


def enumerate_elements(n: int, signed: bool = True, cap: Optional[int] = None) -> Iterator[SignedPartialPerm]:
    """
    Yield every element of I(B_n) (signed) or I_n (unsigned) exactly once.

    Order: by domain size k ascending; within a size, domain subsets in
    lexicographic order, then target arrangements (ordered k-tuples of
    distinct targets) lexicographically, then sign vectors with + before -.
    """
    if n < 0:
        raise PreconditionError(f"rank must be non-negative, got {n}")
    check_cap(n, signed, cap)
    logger.debug("Enumerating %s elements at n=%d", "signed" if signed else "unsigned", n)
    sign_choices = (1, -1) if signed else (1,)
    for k in range(n + 1):
        for domain in combinations(range(1, n + 1), k):
            for targets in permutations(range(1, n + 1), k):
                for signs in product(sign_choices, repeat=k):
                    entries = [None] * n
                    for source, target, sign in zip(domain, targets, signs):
                        entries[source - 1] = (target, sign)
                    yield SignedPartialPerm(n, tuple(entries))


def enumerate_units(n: int, signed: bool = True) -> Iterator[SignedPartialPerm]:
    """W(B_n) (signed) or Σ_n (unsigned), in the same order as enumerate_elements"""
    sign_choices = (1, -1) if signed else (1,)
    for targets in permutations(range(1, n + 1)):
        for signs in product(sign_choices, repeat=n):
            yield SignedPartialPerm(n, tuple(zip(targets, signs)))


def enumerate_idempotents(n: int) -> Iterator[SignedPartialPerm]:
    for k in range(n + 1):
        for domain in combinations(range(1, n + 1), k):
            yield SignedPartialPerm.partial_identity(n, domain)


def cardinality_formula(n: int, signed: bool = True) -> int:
    """Σ_k 2^k C(n,k)^2 k! (signed) or Σ_k C(n,k)^2 k! (unsigned)"""
    if n < 0:
        raise PreconditionError(f"rank must be non-negative, got {n}")
    base = 2 if signed else 1
    return sum(base ** k * comb(n, k) ** 2 * factorial(k) for k in range(n + 1))


def unit_group_order(n: int, signed: bool = True) -> int:
    """|W(B_n)| = 2^n n! or |Σ_n| = n!"""
    if n < 0:
        raise PreconditionError(f"rank must be non-negative, got {n}")
    return (2 ** n if signed else 1) * factorial(n)
