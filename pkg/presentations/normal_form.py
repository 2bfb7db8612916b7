"""ε_{k+1,n} blocks and the representative words of partial braids"""
from enum import Enum
from typing import Sequence

from errors import PreconditionError
from presentations.words import EPS, Word, eps, sigma


class EpsilonVariant(str, Enum):
    CONJUGATED = "conjugated"  # ε as the only idempotent letter
    PRODUCT = "product"  # ε_{k+1} ε_{k+2} ... ε_n


def descending_run(top, bottom, n) -> Word:
    """σ_top σ_{top-1} ... σ_bottom; empty when top < bottom"""
    return Word(tuple(sigma(i) for i in range(top, bottom - 1, -1)), n)


def ascending_run(bottom, top, n) -> Word:
    """σ_bottom σ_{bottom+1} ... σ_top; empty when top < bottom"""
    return Word(tuple(sigma(i) for i in range(bottom, top + 1)), n)


def conjugated_epsilon(j, n) -> Word:
    """σ_{j-1}...σ_1 ε σ_1...σ_{j-1}, which deletes string j"""
    return descending_run(j - 1, 1, n) * Word((EPS,), n) * ascending_run(1, j - 1, n)


def epsilon_block(k, n, variant=EpsilonVariant.PRODUCT) -> Word:
    """
    Word for ε_{k+1,n}: strings 1..k kept, strings k+1..n deleted.

    Args:
        k: number of kept strings, 0 <= k <= n
        n: ambient rank
        variant: EpsilonVariant.PRODUCT or EpsilonVariant.CONJUGATED

    Returns:
        The empty word when k == n.
    """
    if not 0 <= k <= n:
        raise PreconditionError(f"need 0 <= k <= n, got k={k}, n={n}")
    variant = EpsilonVariant(variant)
    if variant is EpsilonVariant.PRODUCT:
        return Word(tuple(eps(j) for j in range(k + 1, n + 1)), n)
    block = Word.empty(n)
    for j in range(k + 1, n + 1):
        block = block * conjugated_epsilon(j, n)
    return block


def _check_indices(name, seq, k, n):
    if len(seq) != k:
        raise PreconditionError(f"{name} must have length {k}, got {len(seq)}")
    if any(not 0 <= i <= n - 1 for i in seq):
        raise PreconditionError(f"{name} entries must lie in 0..{n - 1}: {list(seq)}")
    if any(a >= b for a, b in zip(seq, seq[1:])):
        raise PreconditionError(f"{name} must be strictly ascending: {list(seq)}")


def normal_form_word(k, i_seq: Sequence[int], j_seq: Sequence[int], x: Word, n,
                     variant=EpsilonVariant.PRODUCT) -> Word:
    """
    Assemble σ_{i_1}..σ_1 ... σ_{i_k}..σ_k ε_{k+1,n} x ε_{k+1,n} σ_k..σ_{j_k} ... σ_1..σ_{j_1}.

    A run σ_{i_m}...σ_m is empty when i_m < m, so index 0 (or any i_m = m - 1)
    leaves string m in place. Under left-to-right evaluation the prefix carries
    v_{i_m + 1} to v_m and the suffix carries v_m to v_{j_m + 1}.
    """
    if not 0 <= k <= n:
        raise PreconditionError(f"need 0 <= k <= n, got k={k}, n={n}")
    _check_indices("i_seq", list(i_seq), k, n)
    _check_indices("j_seq", list(j_seq), k, n)
    for letter in x:
        if letter.is_epsilon or not letter.is_valid(k):
            raise PreconditionError(f"x must be a word in Br(B_{k}); {letter} is not allowed")

    prefix = Word.empty(n)
    for m, i in enumerate(i_seq, start=1):
        prefix = prefix * descending_run(i, m, n)
    suffix = Word.empty(n)
    for m in range(k, 0, -1):
        suffix = suffix * ascending_run(m, j_seq[m - 1], n)
    block = epsilon_block(k, n, variant)
    return prefix * block * x.with_rank(n) * block * suffix
