"""Action of the generators on SN and evaluation of words (ρ_B and ρ_n)"""
from dataclasses import dataclass
from functools import lru_cache

from errors import PreconditionError
from monoids.partial_perm import SignedPartialPerm, compose
from presentations.words import GeneratorSymbol, Kind, Word


@dataclass(frozen=True)
class EvalContext:
    """rank n, and whether words are evaluated in I(B_n) (ρ_B) or I_n (ρ_n)"""

    rank: int
    signed: bool = True


@lru_cache(maxsize=4096)
def eval_generator(g: GeneratorSymbol, ctx: EvalContext) -> SignedPartialPerm:
    """
    Partial signed permutation of a single generator.

    σ_i swaps v_i and v_{i+1} keeping signs, τ negates v_1, ε_i (and ε = ε_1)
    is the identity off v_i. σ_i⁻¹ and τ⁻¹ give the same images as σ_i and τ.
    """
    n = ctx.rank
    if not g.is_valid(n):
        raise PreconditionError(f"generator {g} is not valid at rank {n}")
    if g.is_tau and not ctx.signed:
        raise PreconditionError(f"{g} has no image in the unsigned monoid I_{n}")
    entries = [(j, 1) for j in range(1, n + 1)]
    if g.is_sigma:
        i = g.index
        entries[i - 1] = (i + 1, 1)
        entries[i] = (i, 1)
    elif g.kind in (Kind.TAU, Kind.TAU_INV):
        entries[0] = (1, -1)
    else:
        entries[g.strand - 1] = None
    return SignedPartialPerm(n, tuple(entries))


def eval_word(w: Word, ctx: EvalContext = None) -> SignedPartialPerm:
    """Left-to-right product of the generator images; the empty word is the identity"""
    ctx = ctx or EvalContext(w.rank)
    if ctx.rank != w.rank:
        w = w.with_rank(ctx.rank)
    result = SignedPartialPerm.identity(ctx.rank)
    for letter in w:
        result = compose(result, eval_generator(letter, ctx))
    return result
