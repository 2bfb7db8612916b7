"""Base presentation class for all relation tables"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Iterator, List, Tuple

from presentations.words import Word


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word
    family: str

    def __str__(self):
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True)
class RelationTable:
    """Fully instantiated relations of one presentation at one rank"""

    id: str
    rank: int
    relations: Tuple[Relation, ...]
    signed: bool = True

    @property
    def pairs(self) -> List[Tuple[Word, Word]]:
        return [(r.lhs, r.rhs) for r in self.relations]

    def families(self) -> List[str]:
        return sorted({r.family for r in self.relations})

    def __len__(self):
        return len(self.relations)

    def __iter__(self) -> Iterator[Relation]:
        return iter(self.relations)


class BasePresentation(ABC):
    """Abstract base class for monoid and group presentations"""

    # Whether the target of evaluation is I(B_n) (True) or I_n (False)
    signed = False

    def __init__(self, name):
        self.name = name

    @abstractmethod
    def generate_relations(self, n):
        """
        Generate every relation of the presentation at rank n

        Args:
            n: ambient rank

        Returns:
            List of Relation, with index ranges fully expanded. Families that
            need more strings than n provides contribute nothing.
        """
        pass

    def table(self, n):
        return RelationTable(self.name, n, tuple(self.generate_relations(n)), self.signed)

    def get_presentation_info(self):
        """Return presentation description"""
        return {
            'name': self.name,
            'signed': self.signed,
            'description': self.__doc__
        }

    @staticmethod
    def relation(n, lhs, rhs, family):
        return Relation(Word.parse(lhs, n), Word.parse(rhs, n), family)
