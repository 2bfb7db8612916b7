"""Presentations of the inverse braid monoid IB_n and the symmetric inverse monoid I_n"""
from presentations.base_presentation import BasePresentation
from presentations.braid_presentations import (
    ArtinBraidPresentation,
    braid_relations,
    far_commutation,
    sigma_involutions,
)


def epsilon_relations(n, superfluous=True):
    """
    Relations between ε and the σ_i.

    Args:
        n: ambient rank
        superfluous: include ε = εσ_1² = σ_1²ε, which follow from σ_1² = 1
            once the group part is a quotient
    """
    rel = BasePresentation.relation
    relations = [rel(n, f"e s{i}", f"s{i} e", "epsilon-commutation") for i in range(2, n)]
    if n >= 2:
        relations.append(rel(n, "e s1 e", "s1 e s1 e", "epsilon-sigma"))
        relations.append(rel(n, "e s1 e", "e s1 e s1", "epsilon-sigma"))
    relations.append(rel(n, "e", "e e", "epsilon-idempotent"))
    if superfluous and n >= 2:
        relations.append(rel(n, "e", "e s1 s1", "epsilon-absorbs-sigma-square"))
        relations.append(rel(n, "e", "s1 s1 e", "epsilon-absorbs-sigma-square"))
    return relations


def balanced_epsilon_relations(n):
    rel = BasePresentation.relation
    relations = []
    for i in range(1, n):
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                relations.append(rel(n, f"e{j} s{i}", f"s{i} e{j}", "epsilon-commutation"))
        relations.append(rel(n, f"e{i} s{i}", f"s{i} e{i + 1}", "epsilon-transport"))
        relations.append(rel(n, f"e{i + 1} s{i}", f"s{i} e{i}", "epsilon-transport"))
    for i in range(1, n + 1):
        relations.append(rel(n, f"e{i}", f"e{i} e{i}", "epsilon-idempotent"))
    for i in range(1, n):
        relations.append(rel(n, f"e{i + 1} s{i} s{i}", f"e{i + 1}", "epsilon-absorbs-sigma-square"))
        relations.append(rel(n, f"s{i} s{i} e{i + 1}", f"e{i + 1}", "epsilon-absorbs-sigma-square"))
        relations.append(rel(n, f"e{i} e{i + 1} s{i}", f"e{i} e{i + 1}", "double-epsilon-absorbs-sigma"))
        relations.append(rel(n, f"s{i} e{i} e{i + 1}", f"e{i} e{i + 1}", "double-epsilon-absorbs-sigma"))
    return relations


class InverseBraidPresentation(ArtinBraidPresentation):
    """
    Inverse braid monoid IB_n on σ_i, σ_i⁻¹ and ε (ε: first string absent):
    εσ_i = σ_iε for i >= 2, εσ_1ε = σ_1εσ_1ε = εσ_1εσ_1,
    ε = ε² = εσ_1² = σ_1²ε, plus the braid relations.
    """

    def __init__(self, name="IBN"):
        super().__init__(name)

    def generate_relations(self, n):
        return super().generate_relations(n) + epsilon_relations(n)


class BalancedInverseBraidPresentation(ArtinBraidPresentation):
    """
    Inverse braid monoid IB_n on σ_i, σ_i⁻¹ and ε_1..ε_n (ε_i: string i absent),
    with relations symmetric in the strings.
    """

    def __init__(self, name="IBN_BAL"):
        super().__init__(name)

    def generate_relations(self, n):
        return super().generate_relations(n) + balanced_epsilon_relations(n)


class SymmetricInversePresentation(BasePresentation):
    """
    Symmetric inverse monoid I_n: the IB_n presentation with σ_iσ_i⁻¹ = 1
    replaced by σ_i² = 1 and the superfluous ε = εσ_1² = σ_1²ε deleted.
    """

    def __init__(self, name="IN"):
        super().__init__(name)

    def generate_relations(self, n):
        return (
            sigma_involutions(n)
            + far_commutation(n)
            + braid_relations(n)
            + epsilon_relations(n, superfluous=False)
        )


class InverseBraidQuotientPresentation(InverseBraidPresentation):
    """
    Symmetric inverse monoid I_n, redundant form: IB_n with σ_i² = 1 simply added.
    """

    def __init__(self, name="IBN_QUOT"):
        super().__init__(name)

    def generate_relations(self, n):
        return super().generate_relations(n) + sigma_involutions(n)


class EpsilonDefinitionPresentation(BasePresentation):
    """
    How the balanced generators are defined from ε:
    ε_1 = ε and ε_{i+1} = σ_i^{±1} ε_i σ_i^{±1}.
    """

    def __init__(self, name="EPS_DEF"):
        super().__init__(name)

    def generate_relations(self, n):
        rel = BasePresentation.relation
        relations = [rel(n, "e1", "e", "epsilon-first")] if n >= 1 else []
        for i in range(1, n):
            for left in ("s", "S"):
                for right in ("s", "S"):
                    relations.append(
                        rel(n, f"e{i + 1}", f"{left}{i} e{i} {right}{i}", "epsilon-conjugate")
                    )
        return relations
