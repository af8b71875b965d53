import pytest
from hypothesis import given

from verbclosure.core.errors import NotInImage, NotInSubgroup
from verbclosure.models import Ball, Carrier, DihedralElt, GElt, IndexPerm, KleinElt, VFour, ZxDElt
from verbclosure.models.gelt import D2
from verbclosure.services.maps import (
    decompose_K,
    deg_hom,
    dihedral_shift,
    embed_K,
    f_from_generators,
    f_hom,
    hat_from_generators,
    hat_subst,
    in_fibred_product,
    in_H,
    perm_aut,
    phi,
    phi_inv_on_K,
    pi_quotient,
    rho_retract,
)
from tests.strategies import dihedral_elts, g_elts, klein_elts

G_BALL = tuple(Ball(Carrier.G, 1, 1))


def test_f_examples():
    assert f_hom(GElt(VFour.E, 0, (1, 0, 0))) == DihedralElt(0, 1)
    assert f_hom(GElt(VFour.D1, 0, (0, 5, 7))) == DihedralElt.identity()
    assert f_hom(GElt(VFour.D2, 1, (2, 0, 1))) == DihedralElt(0, 2)


def test_deg_examples():
    assert deg_hom(GElt(VFour.E, 1)) == 1
    assert deg_hom(GElt(VFour.D3, -2, (9, 9, 9))) == -2
    assert deg_hom(GElt.identity()) == 0


@given(g_elts, g_elts)
def test_homomorphism_laws(g, h):
    assert f_hom(g * h) == f_hom(g) * f_hom(h)
    assert deg_hom(g * h) == deg_hom(g) + deg_hom(h)
    assert phi(g * h) == phi(g) * phi(h)


@given(klein_elts, klein_elts)
def test_embed_and_quotient_are_homomorphisms(e, e2):
    assert embed_K(e * e2) == embed_K(e) * embed_K(e2)
    assert pi_quotient(e * e2) == pi_quotient(e) * pi_quotient(e2)
    assert decompose_K(embed_K(e)) == e


def test_embed_and_decompose():
    assert embed_K(KleinElt(0, 1)) == GElt(VFour.E, 0, (1, 1, 1))
    assert embed_K(KleinElt(2, 3)) == GElt(VFour.E, 2, (3, 3, 3))
    assert decompose_K(GElt(VFour.E, 2, (3, 3, 3))) == KleinElt(2, 3)
    assert decompose_K(GElt.identity()) == KleinElt.identity()
    assert decompose_K(GElt(VFour.D1)) is None


def test_hat_substitution():
    assert hat_subst(GElt(VFour.D1, 2, (3, 1, -1))) == KleinElt(2, 3)
    assert hat_subst(GElt(VFour.D2, 0, (0, 4, 0))) == KleinElt(1, 0)
    assert hat_subst(embed_K(KleinElt(-3, 4))) == KleinElt(-3, 4)


@pytest.mark.parametrize("g", G_BALL[::7])
def test_generator_images_agree_with_closed_forms(g):
    assert f_from_generators(g) == f_hom(g)
    assert hat_from_generators(g) == hat_subst(g)


def test_hat_preserves_first_coordinate():
    for g in G_BALL:
        assert f_hom(embed_K(hat_subst(g))) == f_hom(g)


def test_index_permutation():
    swap = IndexPerm.transposition(1, 2)
    assert perm_aut(swap, GElt(VFour.D2, 1, (2, 0, 1))) == GElt(VFour.D1, 1, (0, 2, 1))
    assert perm_aut(swap, embed_K(KleinElt(3, -2))) == embed_K(KleinElt(3, -2))
    assert perm_aut(IndexPerm(), GElt(VFour.D3, 1, (1, 2, 3))) == GElt(VFour.D3, 1, (1, 2, 3))
    with pytest.raises(ValueError):
        IndexPerm((1, 1, 2))


@given(g_elts, g_elts)
def test_permutation_is_automorphism(g, h):
    for images in ((2, 1, 3), (3, 2, 1), (2, 3, 1)):
        p = IndexPerm(images)
        assert perm_aut(p, g * h) == perm_aut(p, g) * perm_aut(p, h)


def test_pi_quotient():
    assert pi_quotient(KleinElt(3, 5)) == DihedralElt(1, 5)
    assert pi_quotient(KleinElt(2, 0)).is_identity
    assert pi_quotient(KleinElt(0, 1)) == DihedralElt(0, 1)


@given(dihedral_elts, dihedral_elts)
def test_dihedral_shift_is_automorphism(e, e2):
    for k in (-3, 1, 4):
        assert dihedral_shift(k, e * e2) == dihedral_shift(k, e) * dihedral_shift(k, e2)


def test_dihedral_shift_moves_reflection():
    assert dihedral_shift(4, DihedralElt(1, 4)) == DihedralElt(1, 0)
    assert dihedral_shift(-4, DihedralElt(1, 0)) == DihedralElt(1, 4)
    assert dihedral_shift(4, DihedralElt(0, 3)) == DihedralElt(0, 3)


def test_phi():
    assert phi(embed_K(KleinElt(1, 1))) == ZxDElt(1, DihedralElt(1, 1))
    assert phi(GElt.identity()) == ZxDElt.identity()
    assert phi(D2) == ZxDElt(0, DihedralElt(1, 0))


def test_fibred_product():
    assert in_fibred_product(ZxDElt(1, DihedralElt(1, 1)))
    assert in_fibred_product(ZxDElt.identity())
    assert not in_fibred_product(ZxDElt(0, DihedralElt(1, 0)))


def test_phi_inverse():
    assert phi_inv_on_K(ZxDElt(3, DihedralElt(1, 5))) == KleinElt(3, 5)
    assert phi_inv_on_K(ZxDElt.identity()) == KleinElt.identity()
    with pytest.raises(NotInImage):
        phi_inv_on_K(ZxDElt(2, DihedralElt(1, 4)))


def test_phi_injective_on_k():
    ball = list(Ball(Carrier.K, 5, 5))
    assert len({phi(embed_K(e)) for e in ball}) == len(ball)


def test_index_two_subgroup():
    assert in_H(GElt(VFour.D1, 5, (1, 2, 3)))
    assert in_H(embed_K(KleinElt(7, -1)))
    assert not in_H(D2)
    for g in G_BALL:
        assert in_H(g) != in_H(D2 * g)


def test_retraction():
    assert rho_retract(GElt(VFour.D1, 3, (5, -2, 7))) == KleinElt(3, 5)
    assert rho_retract(embed_K(KleinElt(-2, 9))) == KleinElt(-2, 9)
    with pytest.raises(NotInSubgroup):
        rho_retract(GElt(VFour.D2, 1))


def test_retraction_is_homomorphism_on_h():
    h_ball = [g for g in G_BALL if in_H(g)]
    for g in h_ball[::5]:
        for h in h_ball[::7]:
            assert rho_retract(g * h) == rho_retract(g) * rho_retract(h)
