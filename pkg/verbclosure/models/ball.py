"""Finite enumeration domains with a fixed lexicographic order."""
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Union

from verbclosure.models.carrier import Carrier
from verbclosure.models.dihedral import DihedralElt
from verbclosure.models.gelt import GElt, VFour
from verbclosure.models.klein import KleinElt
from verbclosure.models.zxd import ZxDElt

Element = Union[KleinElt, DihedralElt, GElt, ZxDElt]

ELEMENT_TYPES = {
    Carrier.K: KleinElt,
    Carrier.D: DihedralElt,
    Carrier.G: GElt,
    Carrier.ZD: ZxDElt,
}


@dataclass(frozen=True)
class Ball:
    """
    Elements whose normal-form exponents satisfy |l| ≤ lmax (|i| for ℤ×D∞)
    and |k| ≤ kmax (each k_i for G). D∞ has no l-field and ignores lmax;
    V₄ and the b′-bit always range fully.

    Order: lexicographic ascending on (d index, l, k₁, k₂, k₃) restricted
    to the fields the carrier has; for ℤ×D∞ on (i, eps, k).
    """
    group: Carrier
    lmax: int = 1
    kmax: int = 1

    def __post_init__(self) -> None:
        if self.lmax < 0 or self.kmax < 0:
            raise ValueError(f"ball bounds must be nonnegative: {self.lmax}, {self.kmax}")

    def __iter__(self) -> Iterator[Element]:
        ls = range(-self.lmax, self.lmax + 1)
        ks = range(-self.kmax, self.kmax + 1)
        if self.group is Carrier.K:
            for l, k in product(ls, ks):
                yield KleinElt(l, k)
        elif self.group is Carrier.D:
            for eps, k in product((0, 1), ks):
                yield DihedralElt(eps, k)
        elif self.group is Carrier.G:
            for d, l, k1, k2, k3 in product(VFour, ls, ks, ks, ks):
                yield GElt(d, l, (k1, k2, k3))
        else:
            for i, eps, k in product(ls, (0, 1), ks):
                yield ZxDElt(i, DihedralElt(eps, k))

    @property
    def size(self) -> int:
        nl = 2 * self.lmax + 1
        nk = 2 * self.kmax + 1
        return {
            Carrier.K: nl * nk,
            Carrier.D: 2 * nk,
            Carrier.G: 4 * nl * nk ** 3,
            Carrier.ZD: nl * 2 * nk,
        }[self.group]

    def __contains__(self, g: Element) -> bool:
        if g.carrier is not self.group:
            return False
        if isinstance(g, KleinElt):
            return abs(g.l) <= self.lmax and abs(g.k) <= self.kmax
        if isinstance(g, DihedralElt):
            return abs(g.k) <= self.kmax
        if isinstance(g, GElt):
            return abs(g.l) <= self.lmax and all(abs(x) <= self.kmax for x in g.k)
        return abs(g.i) <= self.lmax and abs(g.d.k) <= self.kmax

    def __str__(self) -> str:
        return f"{self.group.value}-ball(|l|≤{self.lmax}, |k|≤{self.kmax})"
