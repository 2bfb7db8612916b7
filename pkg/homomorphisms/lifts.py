"""Sections of ρ_B: Weyl lifts, εg words, representative words, surjectivity"""
import logging
from itertools import combinations
from typing import List

from errors import PreconditionError, RankMismatchError
from homomorphisms.action import EvalContext, eval_word
from monoids.enumeration import enumerate_elements, enumerate_units
from monoids.partial_perm import SignedPartialPerm, factorise
from presentations.normal_form import (
    EpsilonVariant,
    ascending_run,
    descending_run,
    normal_form_word,
)
from presentations.words import TAU, Word, eps, sigma

logger = logging.getLogger(__name__)


def weyl_lift(u: SignedPartialPerm, n: int = None) -> Word:
    """
    Word in τ and the σ_i evaluating to the unit u.

    Negative signs are fixed first with the conjugates σ_{j-1}..σ_1 τ σ_1..σ_{j-1}
    (each negates v_j alone), then the underlying permutation is built by an
    insertion sort using adjacent transpositions.
    """
    n = u.n if n is None else n
    if u.n != n:
        raise RankMismatchError(u.n, n)
    if not u.is_unit():
        raise PreconditionError(f"weyl_lift needs a unit, got {u}")

    lift = Word.empty(n)
    for j, (_, sign) in enumerate(u.image, start=1):
        if sign < 0:
            lift = lift * descending_run(j - 1, 1, n) * Word((TAU,), n) * ascending_run(1, j - 1, n)

    target = {j: entry[0] for j, entry in enumerate(u.image, start=1)}
    arrangement = list(range(1, n + 1))  # arrangement[p] is the strand at position p + 1
    swaps = []
    for p in range(1, n):
        q = p
        while q > 0 and target[arrangement[q - 1]] > target[arrangement[q]]:
            arrangement[q - 1], arrangement[q] = arrangement[q], arrangement[q - 1]
            swaps.append(sigma(q))
            q -= 1
    return lift * Word(tuple(swaps), n)


def factorised_word(a: SignedPartialPerm) -> Word:
    """ε_i over the strings missing from dom a, followed by the Weyl lift of the completing unit"""
    decomposition = factorise(a)
    kept = set(a.domain())
    idem = Word(tuple(eps(j) for j in range(1, a.n + 1) if j not in kept), a.n)
    return idem * weyl_lift(decomposition.unit)


def normal_form_of(a: SignedPartialPerm, variant=EpsilonVariant.PRODUCT) -> Word:
    """Representative word of the form σ..σ ε_{k+1,n} x ε_{k+1,n} σ..σ evaluating to a"""
    domain = a.domain()
    targets = a.codomain()
    k = len(domain)
    position = {t: p for p, t in enumerate(targets, start=1)}
    entries = []
    for source in domain:
        target, sign = a.image[source - 1]
        entries.append((position[target], sign))
    x = weyl_lift(SignedPartialPerm(k, tuple(entries)))
    return normal_form_word(
        k,
        [d - 1 for d in domain],
        [t - 1 for t in targets],
        x,
        a.n,
        variant,
    )


def normal_form_images(n: int, signed: bool = True, variant=EpsilonVariant.PRODUCT) -> List[SignedPartialPerm]:
    """
    Images of every admissible representative word, x ranging over Weyl lifts.

    One image per generated word; the family is complete and non-redundant when
    the list has no repeats and its length is the cardinality of the monoid.
    """
    ctx = EvalContext(n, signed)
    images = []
    for k in range(n + 1):
        lifts = [weyl_lift(u) for u in enumerate_units(k, signed)]
        for i_seq in combinations(range(n), k):
            for j_seq in combinations(range(n), k):
                for x in lifts:
                    images.append(eval_word(normal_form_word(k, i_seq, j_seq, x, n, variant), ctx))
    logger.info("Generated %d representative words at n=%d", len(images), n)
    return images


def certify_surjectivity(n: int, signed: bool = True) -> bool:
    """Every element of I(B_n) is the image of its εg word"""
    ctx = EvalContext(n, signed)
    checked = 0
    ok = True
    for a in enumerate_elements(n, signed):
        checked += 1
        if eval_word(factorised_word(a), ctx) != a:
            logger.warning("No preimage found for %s", a)
            ok = False
    logger.info("Checked %d elements at n=%d: %s", checked, n, "surjective" if ok else "FAILED")
    return ok
