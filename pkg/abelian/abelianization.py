"""Ab(IBB_n) = (E ⊕ Z²)/(ε + τ = ε, ε + σ = ε) and the map to Ab(I(B_n))"""
from __future__ import annotations

import json
from dataclasses import dataclass

from sympy.combinatorics import Permutation

from monoids.partial_perm import SignedPartialPerm
from presentations.words import Word


@dataclass(frozen=True)
class AbelianImage:
    """
    Either the absorbing class of ε, or a free pair (τ-degree, σ-degree).

    Written additively: ``x + y`` is the product in the abelianization.
    """

    absorbed: bool = False
    tau_deg: int = 0
    sigma_deg: int = 0

    def __post_init__(self):
        if self.absorbed and (self.tau_deg or self.sigma_deg):
            raise ValueError("the absorbed class carries no degrees")

    @classmethod
    def eps(cls) -> "AbelianImage":
        return cls(absorbed=True)

    @classmethod
    def free(cls, tau_deg: int = 0, sigma_deg: int = 0) -> "AbelianImage":
        return cls(False, tau_deg, sigma_deg)

    def __add__(self, other: "AbelianImage") -> "AbelianImage":
        return ab_add(self, other)

    def __str__(self) -> str:
        return "eps" if self.absorbed else f"({self.tau_deg}, {self.sigma_deg})"

    def to_dict(self) -> dict:
        if self.absorbed:
            return {"absorbed": True}
        return {"absorbed": False, "tau_deg": self.tau_deg, "sigma_deg": self.sigma_deg}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


@dataclass(frozen=True)
class AbelianImageMod2:
    absorbed: bool = False
    tau_parity: int = 0
    sigma_parity: int = 0

    def __post_init__(self):
        if self.absorbed and (self.tau_parity or self.sigma_parity):
            raise ValueError("the absorbed class carries no parities")
        if self.tau_parity not in (0, 1) or self.sigma_parity not in (0, 1):
            raise ValueError("parities must be 0 or 1")

    @classmethod
    def eps(cls) -> "AbelianImageMod2":
        return cls(absorbed=True)

    def __add__(self, other: "AbelianImageMod2") -> "AbelianImageMod2":
        if self.absorbed or other.absorbed:
            return AbelianImageMod2.eps()
        return AbelianImageMod2(False, (self.tau_parity + other.tau_parity) % 2,
                                (self.sigma_parity + other.sigma_parity) % 2)

    def __str__(self) -> str:
        return "eps" if self.absorbed else f"({self.tau_parity}, {self.sigma_parity})"

    def to_dict(self) -> dict:
        if self.absorbed:
            return {"absorbed": True}
        return {"absorbed": False, "tau_parity": self.tau_parity, "sigma_parity": self.sigma_parity}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def ab_add(x: AbelianImage, y: AbelianImage) -> AbelianImage:
    if x.absorbed or y.absorbed:
        return AbelianImage.eps()
    return AbelianImage.free(x.tau_deg + y.tau_deg, x.sigma_deg + y.sigma_deg)


def abelianize(w: Word) -> AbelianImage:
    """a(ε_i) = ε, a(τ) = τ, a(σ_i) = σ, extended additively"""
    if w.has_epsilon():
        return AbelianImage.eps()
    tau_deg = sum(letter.exponent for letter in w if letter.is_tau)
    sigma_deg = sum(letter.exponent for letter in w if letter.is_sigma)
    return AbelianImage.free(tau_deg, sigma_deg)


def to_mod2(x: AbelianImage) -> AbelianImageMod2:
    if x.absorbed:
        return AbelianImageMod2.eps()
    return AbelianImageMod2(False, x.tau_deg % 2, x.sigma_deg % 2)


def permutation_parity(targets) -> int:
    """0 for even, 1 for odd; targets are 1-based images of 1..n"""
    if len(targets) < 2:
        return 0
    return Permutation([t - 1 for t in targets]).parity()


def abelianize_element(a: SignedPartialPerm) -> AbelianImageMod2:
    """
    Canonical map I(B_n) -> Ab(I(B_n)).

    Non-units contain an idempotent factor and are absorbed; a unit goes to
    (number of negative signs, parity of the underlying permutation) mod 2.
    """
    if not a.is_unit():
        return AbelianImageMod2.eps()
    negatives = sum(1 for _, sign in a.image if sign < 0)
    targets = [target for target, _ in a.image]
    return AbelianImageMod2(False, negatives % 2, permutation_parity(targets))
