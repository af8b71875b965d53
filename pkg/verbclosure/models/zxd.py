from dataclasses import dataclass
from typing import Optional

from verbclosure.core.errors import CarrierMismatch
from verbclosure.models.carrier import Carrier, power_by_squaring
from verbclosure.models.dihedral import DihedralElt


@dataclass(frozen=True, order=True)
class ZxDElt:
    """Element (i, w) of ℤ × D∞, multiplied componentwise."""
    i: int = 0
    d: DihedralElt = DihedralElt()

    carrier = Carrier.ZD

    @classmethod
    def identity(cls) -> "ZxDElt":
        return cls(0, DihedralElt.identity())

    @property
    def is_identity(self) -> bool:
        return self.i == 0 and self.d.is_identity

    def __mul__(self, other: "ZxDElt") -> "ZxDElt":
        if type(other) is not ZxDElt:
            raise CarrierMismatch(f"cannot multiply ℤ×D∞ element by {other!r}")
        return ZxDElt(self.i + other.i, self.d * other.d)

    def inverse(self) -> "ZxDElt":
        return ZxDElt(-self.i, self.d.inverse())

    def __pow__(self, n: int) -> "ZxDElt":
        if n < 0:
            return power_by_squaring(self.inverse(), -n, ZxDElt.identity())
        return power_by_squaring(self, n, ZxDElt.identity())

    def order(self) -> Optional[int]:
        if self.i != 0:
            return None
        return self.d.order()

    def __str__(self) -> str:
        return f"({self.i}; {self.d})"
