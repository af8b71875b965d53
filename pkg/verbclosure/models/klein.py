"""The Klein bottle group K = ⟨a, b | a^b = a⁻¹⟩ in normal form b^l·a^k."""
from dataclasses import dataclass
from typing import Optional

from verbclosure.core.errors import CarrierMismatch
from verbclosure.models.carrier import Carrier, format_power, sign


@dataclass(frozen=True, order=True)
class KleinElt:
    l: int = 0
    k: int = 0

    carrier = Carrier.K

    @classmethod
    def identity(cls) -> "KleinElt":
        return cls(0, 0)

    @property
    def is_identity(self) -> bool:
        return self.l == 0 and self.k == 0

    def __mul__(self, other: "KleinElt") -> "KleinElt":
        if type(other) is not KleinElt:
            raise CarrierMismatch(f"cannot multiply K element by {other!r}")
        # a^k·b^l' = b^l'·a^(k·(−1)^l')
        if other.l & 1:
            return KleinElt(self.l + other.l, other.k - self.k)
        return KleinElt(self.l + other.l, self.k + other.k)

    def inverse(self) -> "KleinElt":
        return KleinElt(-self.l, self.k if self.l & 1 else -self.k)

    def __pow__(self, n: int) -> "KleinElt":
        if n < 0:
            return self.inverse() ** -n
        if self.l & 1:
            return KleinElt(n * self.l, self.k if n & 1 else 0)
        return KleinElt(n * self.l, n * self.k)

    def order(self) -> Optional[int]:
        return 1 if self.is_identity else None

    def conjugate(self, by: "KleinElt") -> "KleinElt":
        return by.inverse() * self * by

    def __str__(self) -> str:
        parts = [p for p in (format_power("b", self.l), format_power("a", self.k)) if p]
        return "*".join(parts) if parts else "1"


A = KleinElt(0, 1)
B = KleinElt(1, 0)
