"""Verification of presentations and of the commuting square"""
import json
import logging

import numpy as np
import pandas as pd

from config import Config
from errors import PreconditionError
from homomorphisms.action import EvalContext, eval_word
from homomorphisms.weyl_group import matrix_element, word_matrix
from monoids.enumeration import check_cap
from presentations.registry import get_presentation
from presentations.words import Word, alphabet, random_word

logger = logging.getLogger(__name__)


class PairResult:
    """Outcome of evaluating both sides of one relation"""

    def __init__(self, relation, image_lhs, image_rhs):
        self.relation = relation
        self.image_lhs = image_lhs
        self.image_rhs = image_rhs
        self.equal = image_lhs == image_rhs

    def to_dict(self):
        return {
            'lhs': str(self.relation.lhs),
            'rhs': str(self.relation.rhs),
            'image_lhs': self.image_lhs.to_text(),
            'image_rhs': self.image_rhs.to_text(),
            'equal': self.equal
        }


class VerificationReport:
    """All pair results for one presentation at one rank"""

    def __init__(self, presentation_id, n, results):
        self.id = presentation_id
        self.n = n
        self.results = list(results)

    @property
    def all_equal(self):
        return all(r.equal for r in self.results)

    def failures(self):
        return [r for r in self.results if not r.equal]

    def to_dict(self):
        return {
            'id': self.id,
            'n': self.n,
            'pairs': [r.to_dict() for r in self.results],
            'all_equal': self.all_equal
        }

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def to_frame(self):
        """One row per relation, with its family"""
        if not self.results:
            return pd.DataFrame(columns=['family', 'lhs', 'rhs', 'image_lhs', 'image_rhs', 'equal'])
        rows = [dict(family=r.relation.family, **r.to_dict()) for r in self.results]
        return pd.DataFrame(rows)

    def summary(self):
        failures = len(self.failures())
        return f"{self.id} n={self.n}: {len(self.results)} relations, {failures} failures"


class VerificationEngine:
    """Evaluates every relation of a presentation through ρ_B (or ρ_n)"""

    def __init__(self, presentation_id, signed=None):
        self.presentation = get_presentation(presentation_id)
        self.signed = self.presentation.signed if signed is None else signed
        self.report = None

    def run(self, n):
        """
        Verify the presentation at rank n

        Args:
            n: ambient rank, within the enumeration cap for the target monoid

        Returns:
            VerificationReport; unequal pairs are recorded, never raised
        """
        check_cap(n, self.signed)
        table = self.presentation.table(n)
        logger.info("Verifying %s at n=%d (%d relations)...", table.id, n, len(table))
        ctx = EvalContext(n, self.signed)
        results = []
        for relation in table:
            result = PairResult(relation, eval_word(relation.lhs, ctx), eval_word(relation.rhs, ctx))
            if not result.equal:
                logger.debug("Relation %s fails: %s vs %s", relation, result.image_lhs, result.image_rhs)
            results.append(result)
        self.report = VerificationReport(table.id, n, results)
        return self.report


def verify_presentation(presentation_id, n) -> VerificationReport:
    return VerificationEngine(presentation_id).run(n)


def check_diagram(w: Word, n: int = None) -> bool:
    """
    Compare the W(B_n) route (signed permutation matrices) with ρ_B on an ε-free word
    """
    n = w.rank if n is None else n
    if w.has_epsilon():
        raise PreconditionError(f"check_diagram takes words in Br(B_n); {w} contains ε")
    w = w.with_rank(n)
    group_image = matrix_element(word_matrix(w))
    return group_image == eval_word(w, EvalContext(n, True))


def check_diagram_batch(n, trials=None, length=None, seed=None) -> int:
    """Run check_diagram on random ε-free words; returns the number of failures"""
    trials = trials or Config.RANDOM_TRIALS
    length = length or Config.RANDOM_WORD_LENGTH
    rng = np.random.default_rng(Config.RANDOM_SEED if seed is None else seed)
    letters = alphabet(n, signed=True, epsilon=False)
    failures = 0
    for _ in range(trials):
        w = random_word(n, int(rng.integers(0, length + 1)), rng, letters)
        if not check_diagram(w):
            logger.warning("Diagram fails for %s", w)
            failures += 1
    logger.info("Diagram check at n=%d: %d/%d failures", n, failures, trials)
    return failures
