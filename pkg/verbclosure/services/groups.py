"""
Carrier-generic arithmetic plus the square/root toolkit of K.

Elements carry their own group law; the functions here add the carrier
checks, word evaluation, ball enumeration and the facts about squares in K.
"""
import logging
from typing import Iterable, Iterator, Optional, Sequence, Tuple, Union

from verbclosure.core.errors import ArityMismatch, CarrierMismatch, NotInDomain
from verbclosure.models.ball import ELEMENT_TYPES, Ball, Element
from verbclosure.models.carrier import Carrier
from verbclosure.models.equation import SolutionTuple
from verbclosure.models.klein import B, KleinElt
from verbclosure.models.word import FreeWord

logger = logging.getLogger(__name__)


def identity_of(carrier: Carrier) -> Element:
    return ELEMENT_TYPES[carrier].identity()


def _same_carrier(g: Element, h: Element) -> None:
    if type(g) is not type(h):
        raise CarrierMismatch(f"{g} is in {g.carrier.value}, {h} is in {h.carrier.value}")


def mul(g: Element, h: Element) -> Element:
    _same_carrier(g, h)
    return g * h


def inv(g: Element) -> Element:
    return g.inverse()


def pow(g: Element, n: int) -> Element:  # noqa: A001
    return g ** n


def order_of(g: Element) -> Optional[int]:
    """Exact order, None when infinite."""
    return g.order()


def commutator(g: Element, h: Element) -> Element:
    """[g, h] = g⁻¹h⁻¹gh."""
    _same_carrier(g, h)
    return g.inverse() * h.inverse() * g * h


def evaluate_word(
    w: FreeWord,
    values: Union[SolutionTuple, Sequence[Element]],
    carrier: Optional[Carrier] = None,
) -> Element:
    values = tuple(values)
    if len(values) < w.used_arity and not w.is_identity:
        raise ArityMismatch(f"word {w} needs {w.used_arity} values, got {len(values)}")
    if values:
        kind = type(values[0])
        for v in values:
            if type(v) is not kind:
                raise CarrierMismatch(f"mixed carriers in tuple: {v} vs {values[0]}")
        result = kind.identity()
    elif carrier is not None:
        result = identity_of(carrier)
    else:
        raise ArityMismatch("cannot evaluate on an empty tuple without a carrier")
    for var, exp in w.letters:
        result = result * (values[var - 1] ** exp)
    return result


def enumerate_ball(ball: Ball) -> Iterator[Element]:
    return iter(ball)


def abelianize_K(e: KleinElt) -> Tuple[int, int]:
    """K → K/K' = ⟨a⟩₂ × ⟨b⟩∞, returned as (k mod 2, l)."""
    return e.k % 2, e.l


def is_square_K(g: KleinElt) -> bool:
    """Squares of K: ⟨b²⟩ ∪ ⟨a², b⁴⟩."""
    return (g.k == 0 and g.l % 2 == 0) or (g.l % 4 == 0 and g.k % 2 == 0)


def unique_sqrt_K(g: KleinElt) -> KleinElt:
    """The unique root of an element of ⟨a², b⁴⟩."""
    if g.l % 4 != 0 or g.k % 2 != 0:
        raise NotInDomain(
            f"{g} is not in ⟨a², b⁴⟩; roots exist uniquely only for b^(4m)·a^(2k)"
        )
    return KleinElt(g.l // 2, g.k // 2)


def centralizes_squares_K(g: KleinElt) -> bool:
    """Elements outside b⟨a, b²⟩ (even degree) commute with every square."""
    return g.l % 2 == 0


def square_roots(g: Element, ball: Iterable[Element]) -> Tuple[Element, ...]:
    return tuple(r for r in ball if r * r == g)


def involutions_K() -> Tuple[KleinElt, ...]:
    """
    Solution set of g² = 1 in K, read off the square map.

    (l, k)² = (2l, k·(1 + (−1)^l)). The first coordinate is affine in l for
    every k, which pins l; at that l the second is affine in k, which pins k.
    """
    l_offset = (KleinElt(0, 0) ** 2).l
    l_slope = (KleinElt(1, 0) ** 2).l - l_offset
    if l_slope == 0:
        raise ArithmeticError("g ↦ g² does not see the b-exponent")
    if l_offset % l_slope:
        return ()
    l = -l_offset // l_slope

    k_offset = (KleinElt(l, 0) ** 2).k
    k_slope = (KleinElt(l, 1) ** 2).k - k_offset
    if k_slope == 0:
        raise ArithmeticError(f"every b^{l}·a^k squares to the same element")
    if k_offset % k_slope:
        return ()
    return (KleinElt(l, -k_offset // k_slope),)


def b_conjugation_commutator(k: int, m: int) -> KleinElt:
    """[b, a^{2k}·b^{4m}], which equals a^{4k}."""
    h = KleinElt(0, 2 * k) * KleinElt(4 * m, 0)
    return commutator(B, h)
