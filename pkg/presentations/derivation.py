"""Bounded search for derivations of one relation from a relation table"""
import logging
from collections import deque
from typing import Dict, List, Optional, Tuple

from config import Config
from errors import RankMismatchError
from presentations.base_presentation import RelationTable
from presentations.words import Word

logger = logging.getLogger(__name__)

Letters = Tuple


def _rules(table: RelationTable) -> List[Tuple[Letters, Letters]]:
    """Both orientations of every relation, skipping empty left sides (no insertions)"""
    rules = []
    for relation in table:
        lhs, rhs = relation.lhs.letters, relation.rhs.letters
        if lhs:
            rules.append((lhs, rhs))
        if rhs:
            rules.append((rhs, lhs))
    return rules


def _rewrites(letters: Letters, rules):
    for pattern, replacement in rules:
        width = len(pattern)
        for start in range(len(letters) - width + 1):
            if letters[start:start + width] == pattern:
                yield letters[:start] + replacement + letters[start + width:]


def find_derivation(lhs: Word, rhs: Word, table: RelationTable,
                    max_nodes=None, max_length=None) -> Optional[List[Word]]:
    """
    Breadth-first search for a chain of single relation applications from lhs to rhs.

    Args:
        lhs, rhs: words at the table's rank
        table: relations usable in either direction
        max_nodes: stop after visiting this many words
        max_length: never visit words longer than this

    Returns:
        The list of words from lhs to rhs, or None if none was found within the bounds.
    """
    if lhs.rank != table.rank or rhs.rank != table.rank:
        raise RankMismatchError(table.rank, lhs.rank if lhs.rank != table.rank else rhs.rank)
    max_nodes = max_nodes or Config.DERIVATION_MAX_NODES
    max_length = max_length or max(Config.DERIVATION_MAX_LENGTH, len(lhs), len(rhs))
    rules = _rules(table)
    goal = rhs.letters
    parents: Dict[Letters, Optional[Letters]] = {lhs.letters: None}
    queue = deque([lhs.letters])
    if lhs.letters == goal:
        return [lhs]
    while queue:
        current = queue.popleft()
        for candidate in _rewrites(current, rules):
            if candidate in parents or len(candidate) > max_length:
                continue
            parents[candidate] = current
            if candidate == goal:
                chain = []
                while candidate is not None:
                    chain.append(Word(candidate, table.rank))
                    candidate = parents[candidate]
                return chain[::-1]
            if len(parents) > max_nodes:
                logger.info("Derivation search for %s = %s hit %d nodes", lhs, rhs, max_nodes)
                return None
            queue.append(candidate)
    return None


def derives(lhs: Word, rhs: Word, table: RelationTable, **bounds) -> bool:
    return find_derivation(lhs, rhs, table, **bounds) is not None
