"""
The group G = (V₄ × ⟨b⟩∞) ⋉ (⟨a₁⟩∞ × ⟨a₂⟩∞ × ⟨a₃⟩∞).

Action: a_i^b = a_i⁻¹, a_i^{d_i} = a_i, a_i^{d_j} = a_i⁻¹ for i ≠ j.
Normal form d·b^l·a₁^k₁·a₂^k₂·a₃^k₃.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from verbclosure.core.errors import CarrierMismatch
from verbclosure.models.carrier import Carrier, format_power, power_by_squaring

Triple = Tuple[int, int, int]


class VFour(Enum):
    """Klein four-group; the value is a 2-bit code so that the product is XOR."""
    E = 0
    D1 = 1
    D2 = 2
    D3 = 3

    def __init__(self, code: int):
        # equals value, read without the Enum descriptor
        self.code = code

    def __mul__(self, other: "VFour") -> "VFour":
        return _V4_MEMBERS[self.code ^ other.code]

    def __lt__(self, other: "VFour") -> bool:
        return self.code < other.code

    @property
    def index(self) -> int:
        return self.code

    def sigma(self) -> Triple:
        """Signs σ_i(d): +1 when d fixes a_i, −1 when d inverts it."""
        return _SIGMA[self.code]

    @property
    def delta(self) -> int:
        """1 iff d ∈ {d₂, d₃}, i.e. d maps to b′ in D∞."""
        return 1 if self.code >= 2 else 0

    def __str__(self) -> str:
        return "1" if self is VFour.E else f"d{self.code}"


_V4_MEMBERS = (VFour.E, VFour.D1, VFour.D2, VFour.D3)
_SIGMA: Tuple[Triple, ...] = (
    (1, 1, 1),
    (1, -1, -1),
    (-1, 1, -1),
    (-1, -1, 1),
)


@dataclass(frozen=True, order=True)
class GElt:
    d: VFour = VFour.E
    l: int = 0
    k: Triple = (0, 0, 0)

    carrier = Carrier.G

    @classmethod
    def identity(cls) -> "GElt":
        return cls(VFour.E, 0, (0, 0, 0))

    @property
    def is_identity(self) -> bool:
        return self.d is VFour.E and self.l == 0 and self.k == (0, 0, 0)

    def __mul__(self, other: "GElt") -> "GElt":
        if type(other) is not GElt:
            raise CarrierMismatch(f"cannot multiply G element by {other!r}")
        s1, s2, s3 = _SIGMA[other.d.code]
        if other.l & 1:
            s1, s2, s3 = -s1, -s2, -s3
        k1, k2, k3 = self.k
        o1, o2, o3 = other.k
        return GElt(
            _V4_MEMBERS[self.d.code ^ other.d.code],
            self.l + other.l,
            (k1 * s1 + o1, k2 * s2 + o2, k3 * s3 + o3),
        )

    def inverse(self) -> "GElt":
        s1, s2, s3 = _SIGMA[self.d.code]
        if self.l & 1:
            s1, s2, s3 = -s1, -s2, -s3
        k1, k2, k3 = self.k
        # (d,l,k)⁻¹ = (d, −l, −k·σ(d)·(−1)^l)
        return GElt(self.d, -self.l, (-k1 * s1, -k2 * s2, -k3 * s3))

    def __pow__(self, n: int) -> "GElt":
        if n < 0:
            return power_by_squaring(self.inverse(), -n, GElt.identity())
        return power_by_squaring(self, n, GElt.identity())

    def order(self) -> Optional[int]:
        if self.l != 0:
            return None
        if self.d is VFour.E:
            return 1 if self.k == (0, 0, 0) else None
        # d_i·a^k squares to a_i^(2k_i)
        return 2 if self.k[self.d.code - 1] == 0 else None

    def conjugate(self, by: "GElt") -> "GElt":
        return by.inverse() * self * by

    def __str__(self) -> str:
        parts = [
            None if self.d is VFour.E else str(self.d),
            format_power("b", self.l),
            format_power("a1", self.k[0]),
            format_power("a2", self.k[1]),
            format_power("a3", self.k[2]),
        ]
        parts = [p for p in parts if p]
        return "*".join(parts) if parts else "1"


D1 = GElt(VFour.D1)
D2 = GElt(VFour.D2)
D3 = GElt(VFour.D3)
B_G = GElt(VFour.E, 1)
A1 = GElt(k=(1, 0, 0))
A2 = GElt(k=(0, 1, 0))
A3 = GElt(k=(0, 0, 1))
B_SQUARED = GElt(VFour.E, 2)


@dataclass(frozen=True)
class IndexPerm:
    """Permutation p of {1,2,3}: relabels d_i ↦ d_p(i) and a_i ↦ a_p(i)."""
    images: Triple = (1, 2, 3)

    def __post_init__(self) -> None:
        if sorted(self.images) != [1, 2, 3]:
            raise ValueError(f"not a permutation of 1..3: {self.images}")

    @classmethod
    def transposition(cls, i: int, j: int) -> "IndexPerm":
        images = [1, 2, 3]
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @property
    def is_identity(self) -> bool:
        return self.images == (1, 2, 3)

    def relabel(self, d: VFour) -> VFour:
        if d is VFour.E:
            return d
        return _V4_MEMBERS[self.images[d.code - 1]]

    def __call__(self, g: GElt) -> GElt:
        k = [0, 0, 0]
        for i, target in enumerate(self.images):
            k[target - 1] = g.k[i]
        return GElt(self.relabel(g.d), g.l, (k[0], k[1], k[2]))

    def __str__(self) -> str:
        return "(" + " ".join(str(i) for i in self.images) + ")"
