"""Presentations of the type-B inverse braid monoid IB(B_n) and of I(B_n)"""
from presentations.base_presentation import BasePresentation
from presentations.braid_presentations import (
    TypeBBraidPresentation,
    braid_relations,
    far_commutation,
    sigma_involutions,
    tau_involution,
    tau_invertibility,
    type_b_relations,
)
from presentations.inverse_presentations import (
    BalancedInverseBraidPresentation,
    epsilon_relations,
)


def epsilon_absorbs_tau(n, letter="e"):
    rel = BasePresentation.relation
    return [
        rel(n, f"{letter} t", letter, "epsilon-absorbs-tau"),
        rel(n, f"t {letter}", letter, "epsilon-absorbs-tau"),
    ]


class TypeBInverseBraidPresentation(TypeBBraidPresentation):
    """
    IB(B_n): Br(B_n) plus ε with the IB_n relations for ε and ετ = τε = ε.
    """

    def __init__(self, name="IBB"):
        super().__init__(name)

    def generate_relations(self, n):
        return super().generate_relations(n) + epsilon_relations(n) + epsilon_absorbs_tau(n)


class BalancedTypeBInverseBraidPresentation(BalancedInverseBraidPresentation):
    """
    IB(B_n) from the balanced IB_n presentation: add τ, the type-B relations,
    ττ⁻¹ = τ⁻¹τ = 1 and ε_1τ = τε_1 = ε_1.
    """

    signed = True

    def __init__(self, name="IBB_BAL"):
        super().__init__(name)

    def generate_relations(self, n):
        return (
            super().generate_relations(n)
            + tau_invertibility(n)
            + type_b_relations(n)
            + epsilon_absorbs_tau(n, "e1")
        )


class SignedInverseQuotientPresentation(BasePresentation):
    """
    Monoid of partial signed permutations I(B_n): the IB(B_n) presentation with
    σ_iσ_i⁻¹ = 1 replaced by σ_i² = 1, ττ⁻¹ = 1 replaced by τ² = 1 and the
    superfluous ε = εσ_1² = σ_1²ε deleted.
    """

    signed = True

    def __init__(self, name="IBB_QUOT"):
        super().__init__(name)

    def generate_relations(self, n):
        return (
            sigma_involutions(n)
            + tau_involution(n)
            + far_commutation(n)
            + braid_relations(n)
            + type_b_relations(n)
            + epsilon_relations(n, superfluous=False)
            + epsilon_absorbs_tau(n)
        )


class RedundantSignedQuotientPresentation(TypeBInverseBraidPresentation):
    """
    I(B_n), redundant form: IB(B_n) with σ_i² = 1 and τ² = 1 simply added.
    """

    def __init__(self, name="IBB_QUOT_FULL"):
        super().__init__(name)

    def generate_relations(self, n):
        return super().generate_relations(n) + sigma_involutions(n) + tau_involution(n)
