"""The infinite dihedral group D∞ = ⟨b′⟩₂ ⋉ ⟨a′⟩∞ in normal form b′^eps·a′^k."""
from dataclasses import dataclass
from typing import Optional

from verbclosure.core.errors import CarrierMismatch
from verbclosure.models.carrier import Carrier, format_power, power_by_squaring


@dataclass(frozen=True, order=True)
class DihedralElt:
    eps: int = 0
    k: int = 0

    carrier = Carrier.D

    def __post_init__(self) -> None:
        if self.eps not in (0, 1):
            raise ValueError(f"b′-exponent must be 0 or 1, got {self.eps}")

    @classmethod
    def identity(cls) -> "DihedralElt":
        return cls(0, 0)

    @property
    def is_identity(self) -> bool:
        return self.eps == 0 and self.k == 0

    def __mul__(self, other: "DihedralElt") -> "DihedralElt":
        if type(other) is not DihedralElt:
            raise CarrierMismatch(f"cannot multiply D∞ element by {other!r}")
        if other.eps:
            return DihedralElt(self.eps ^ 1, other.k - self.k)
        return DihedralElt(self.eps, self.k + other.k)

    def inverse(self) -> "DihedralElt":
        # every b′a′^k is an involution
        if self.eps:
            return self
        return DihedralElt(0, -self.k)

    def __pow__(self, n: int) -> "DihedralElt":
        if n < 0:
            return power_by_squaring(self.inverse(), -n, DihedralElt.identity())
        return power_by_squaring(self, n, DihedralElt.identity())

    def order(self) -> Optional[int]:
        if self.eps:
            return 2
        return 1 if self.k == 0 else None

    def __str__(self) -> str:
        parts = [p for p in (format_power("b", self.eps), format_power("a", self.k)) if p]
        return "*".join(parts) if parts else "1"


A_PRIME = DihedralElt(0, 1)
B_PRIME = DihedralElt(1, 0)
