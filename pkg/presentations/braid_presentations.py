"""Artin presentations of the braid groups Br_n and Br(B_n)"""
from presentations.base_presentation import BasePresentation


def sigma_invertibility(n):
    rel = BasePresentation.relation
    relations = []
    for i in range(1, n):
        relations.append(rel(n, f"s{i} S{i}", "1", "sigma-invertibility"))
        relations.append(rel(n, f"S{i} s{i}", "1", "sigma-invertibility"))
    return relations


def tau_invertibility(n):
    rel = BasePresentation.relation
    return [
        rel(n, "t T", "1", "tau-invertibility"),
        rel(n, "T t", "1", "tau-invertibility"),
    ]


def far_commutation(n):
    rel = BasePresentation.relation
    return [
        rel(n, f"s{i} s{j}", f"s{j} s{i}", "far-commutation")
        for i in range(1, n)
        for j in range(i + 2, n)
    ]


def braid_relations(n):
    rel = BasePresentation.relation
    return [
        rel(n, f"s{i} s{i + 1} s{i}", f"s{i + 1} s{i} s{i + 1}", "braid")
        for i in range(1, n - 1)
    ]


def sigma_involutions(n):
    rel = BasePresentation.relation
    return [rel(n, f"s{i} s{i}", "1", "sigma-involution") for i in range(1, n)]


def tau_involution(n):
    return [BasePresentation.relation(n, "t t", "1", "tau-involution")]


def type_b_relations(n):
    """The relations involving τ; the braid and far-commutation ones are shared with Br_n"""
    rel = BasePresentation.relation
    relations = []
    if n >= 2:
        relations.append(rel(n, "t s1 t s1", "s1 t s1 t", "type-b-braid"))
    for i in range(2, n):
        relations.append(rel(n, f"t s{i}", f"s{i} t", "tau-commutation"))
    return relations


class ArtinBraidPresentation(BasePresentation):
    """
    Braid group Br_n:
    σ_i σ_j = σ_j σ_i for |i - j| > 1 and σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1},
    with the invertibility relations of the σ_i made explicit.
    """

    def __init__(self, name="BR"):
        super().__init__(name)

    def generate_relations(self, n):
        return sigma_invertibility(n) + far_commutation(n) + braid_relations(n)


class TypeBBraidPresentation(ArtinBraidPresentation):
    """
    Artin-Brieskorn group Br(B_n): Br_n plus a generator τ with
    τσ_1τσ_1 = σ_1τσ_1τ and τσ_i = σ_iτ for i > 1.
    """

    signed = True

    def __init__(self, name="BRB"):
        super().__init__(name)

    def generate_relations(self, n):
        return super().generate_relations(n) + tau_invertibility(n) + type_b_relations(n)
