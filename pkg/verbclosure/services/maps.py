"""
Homomorphisms and substitutions between K, D∞, G and ℤ×D∞.

Every map has a closed form on normal forms. The generator-image versions
(`*_from_generators`) evaluate the defining images on the normal-form
expression and are used to validate the closed forms.
"""
import logging
from typing import Optional

from verbclosure.core.errors import NotInImage, NotInSubgroup
from verbclosure.models.dihedral import A_PRIME, B_PRIME, DihedralElt
from verbclosure.models.gelt import GElt, IndexPerm, VFour
from verbclosure.models.klein import A, B, KleinElt
from verbclosure.models.zxd import ZxDElt

logger = logging.getLogger(__name__)

# f(d) for the V₄ part: f(d₁) = 1, f(d₂) = f(d₃) = b′
_F_OF_D = {
    VFour.E: DihedralElt.identity(),
    VFour.D1: DihedralElt.identity(),
    VFour.D2: B_PRIME,
    VFour.D3: B_PRIME,
}
# substitution (4): d₁ ↦ 1, d₂, d₃ ↦ b
_HAT_OF_D = {
    VFour.E: KleinElt.identity(),
    VFour.D1: KleinElt.identity(),
    VFour.D2: B,
    VFour.D3: B,
}


def f_hom(g: GElt) -> DihedralElt:
    """The first coordinate G → D∞."""
    return DihedralElt((g.l + g.d.delta) % 2, g.k[0])


def f_from_generators(g: GElt) -> DihedralElt:
    # f(a₁) = a′, f(a₂) = f(a₃) = 1, f(b) = b′
    return _F_OF_D[g.d] * B_PRIME ** g.l * A_PRIME ** g.k[0]


def deg_hom(g: GElt) -> int:
    return g.l


def embed_K(e: KleinElt) -> GElt:
    """K ↪ G with a = a₁a₂a₃."""
    return GElt(VFour.E, e.l, (e.k, e.k, e.k))


def decompose_K(g: GElt) -> Optional[KleinElt]:
    """Inverse of embed_K; None when g is not in K."""
    if g.d is not VFour.E or not g.k[0] == g.k[1] == g.k[2]:
        return None
    return KleinElt(g.l, g.k[0])


def hat_subst(g: GElt) -> KleinElt:
    """
    Substitution a₁ ↦ a, a₂, a₃ ↦ 1, d₁ ↦ 1, d₂, d₃ ↦ b, b ↦ b applied to
    the normal form. Not a homomorphism, but f(embed_K(hat_subst(g))) = f(g).
    """
    return KleinElt(g.l + g.d.delta, g.k[0])


def hat_from_generators(g: GElt) -> KleinElt:
    return _HAT_OF_D[g.d] * B ** g.l * A ** g.k[0]


def perm_aut(p: IndexPerm, g: GElt) -> GElt:
    return p(g)


def pi_quotient(e: KleinElt) -> DihedralElt:
    """K → K/⟨b²⟩ = D∞."""
    return DihedralElt(e.l % 2, e.k)


def dihedral_shift(k: int, e: DihedralElt) -> DihedralElt:
    """Automorphism of D∞ fixing a′ with b′ ↦ b′a′^(−k); sends b′a′^k to b′."""
    return DihedralElt(e.eps, e.k - k * e.eps)


def phi(g: GElt) -> ZxDElt:
    """Φ(g) = (deg g, f(g))."""
    return ZxDElt(deg_hom(g), f_hom(g))


def in_fibred_product(z: ZxDElt) -> bool:
    return z.i % 2 == z.d.eps


def phi_inv_on_K(z: ZxDElt) -> KleinElt:
    if not in_fibred_product(z):
        raise NotInImage(f"{z} has degree parity {z.i % 2} but b′-exponent {z.d.eps}")
    return KleinElt(z.i, z.d.k)


def in_H(g: GElt) -> bool:
    """Membership in Φ⁻¹(Φ(K)); equivalently d ∈ {1, d₁}."""
    return g.d.delta == 0


def rho_retract(g: GElt) -> KleinElt:
    """The retraction Φ⁻¹(Φ(K)) → K, φ⁻¹∘Φ."""
    if not in_H(g):
        raise NotInSubgroup(f"{g} lies outside Φ⁻¹(Φ(K)) (d-part {g.d})")
    return phi_inv_on_K(phi(g))
