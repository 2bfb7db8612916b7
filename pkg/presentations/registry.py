"""Lookup of presentations by identifier"""
from enum import Enum

from errors import PreconditionError, UnknownPresentationError
from presentations.base_presentation import RelationTable
from presentations.braid_presentations import ArtinBraidPresentation, TypeBBraidPresentation
from presentations.inverse_presentations import (
    BalancedInverseBraidPresentation,
    EpsilonDefinitionPresentation,
    InverseBraidPresentation,
    InverseBraidQuotientPresentation,
    SymmetricInversePresentation,
)
from presentations.type_b_presentations import (
    BalancedTypeBInverseBraidPresentation,
    RedundantSignedQuotientPresentation,
    SignedInverseQuotientPresentation,
    TypeBInverseBraidPresentation,
)


class PresentationId(str, Enum):
    BR = "BR"
    IBN = "IBN"
    IBN_BAL = "IBN_BAL"
    IN = "IN"
    IBN_QUOT = "IBN_QUOT"
    BRB = "BRB"
    IBB = "IBB"
    IBB_BAL = "IBB_BAL"
    IBB_QUOT = "IBB_QUOT"
    IBB_QUOT_FULL = "IBB_QUOT_FULL"
    EPS_DEF = "EPS_DEF"


PRESENTATIONS = {
    PresentationId.BR: ArtinBraidPresentation(),
    PresentationId.IBN: InverseBraidPresentation(),
    PresentationId.IBN_BAL: BalancedInverseBraidPresentation(),
    PresentationId.IN: SymmetricInversePresentation(),
    PresentationId.IBN_QUOT: InverseBraidQuotientPresentation(),
    PresentationId.BRB: TypeBBraidPresentation(),
    PresentationId.IBB: TypeBInverseBraidPresentation(),
    PresentationId.IBB_BAL: BalancedTypeBInverseBraidPresentation(),
    PresentationId.IBB_QUOT: SignedInverseQuotientPresentation(),
    PresentationId.IBB_QUOT_FULL: RedundantSignedQuotientPresentation(),
    PresentationId.EPS_DEF: EpsilonDefinitionPresentation(),
}


def get_presentation(presentation_id):
    name = presentation_id.value if isinstance(presentation_id, PresentationId) else str(presentation_id)
    try:
        key = PresentationId(name.upper())
    except ValueError:
        known = ", ".join(p.value for p in PresentationId)
        raise UnknownPresentationError(f"unknown presentation {presentation_id!r} (known: {known})") from None
    return PRESENTATIONS[key]


def relations_for(presentation_id, n) -> RelationTable:
    """Complete relation table of a presentation at rank n"""
    if n < 1:
        raise PreconditionError(f"presentations need rank >= 1, got {n}")
    return get_presentation(presentation_id).table(n)
