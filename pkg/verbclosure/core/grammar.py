"""
Grammars for words and group elements.

Words:    x1..x9 (x, y, z, t alias x1..x4), products by juxtaposition or `*`,
          `^` with a signed integer, `[u,v]` = u⁻¹v⁻¹uv, parentheses, `1`.
Elements: K and D∞ use a, b; G uses d1, d2, d3, b, a1, a2, a3; ℤ×D∞ uses
          pairs `(i; w)` with w a D∞ expression. Same operators as words.
Parsing multiplies out whatever product is given, so the result is always
a normal form.
"""
import logging
import operator
from functools import lru_cache, reduce
from typing import Callable, Dict, Optional

import pyparsing as pp

from verbclosure.core.errors import ParseError
from verbclosure.models.carrier import Carrier
from verbclosure.models.dihedral import A_PRIME, B_PRIME, DihedralElt
from verbclosure.models.gelt import A1, A2, A3, B_G, D1, D2, D3, GElt
from verbclosure.models.klein import A, B, KleinElt
from verbclosure.models.word import FreeWord
from verbclosure.models.zxd import ZxDElt

logger = logging.getLogger(__name__)

_WORD_ALIASES = {"x": 1, "y": 2, "z": 3, "t": 4}
_K_GENERATORS = {"a": A, "b": B}
_D_GENERATORS = {"a": A_PRIME, "b": B_PRIME}
_G_GENERATORS = {"d1": D1, "d2": D2, "d3": D3, "b": B_G, "a1": A1, "a2": A2, "a3": A3}


def _integer() -> pp.ParserElement:
    return pp.Regex(r"[+-]?\d+").set_name("integer").set_parse_action(lambda t: int(t[0]))


def _product(atom: pp.ParserElement, identity: Callable[[], object]) -> pp.ParserElement:
    expr = pp.Forward().set_name("product")
    one = pp.Literal("1").set_parse_action(lambda: identity())
    parens = pp.Suppress("(") + expr + pp.Suppress(")")
    bracket = (pp.Suppress("[") + expr + pp.Suppress(",") + expr + pp.Suppress("]")).set_parse_action(
        lambda t: t[0].inverse() * t[1].inverse() * t[0] * t[1]
    )
    base = atom | one | bracket | parens
    factor = (base + pp.Opt(pp.Suppress("^") + _integer())).set_parse_action(
        lambda t: t[0] ** t[1] if len(t) > 1 else t[0]
    )
    expr <<= (factor + pp.ZeroOrMore(pp.Opt(pp.Suppress("*")) + factor)).set_parse_action(
        lambda t: reduce(operator.mul, t)
    )
    return expr


def _generator_atom(pattern: str, table: Dict[str, object], name: str) -> pp.ParserElement:
    return pp.Regex(pattern).set_name(name).set_parse_action(lambda t: table[t[0]])


def _word_atom() -> pp.ParserElement:
    def to_generator(t):
        name = t[0]
        index = _WORD_ALIASES[name] if name in _WORD_ALIASES else int(name[1:])
        return FreeWord.generator(index, index)

    return pp.Regex(r"x[1-9]|[xyzt]").set_name("variable").set_parse_action(to_generator)


@lru_cache(maxsize=None)
def _grammar(kind: str) -> pp.ParserElement:
    if kind == "word":
        return _product(_word_atom(), FreeWord.identity)
    if kind == Carrier.K.value:
        return _product(_generator_atom(r"[ab](?!\d)", _K_GENERATORS, "K generator"), KleinElt.identity)
    if kind == Carrier.D.value:
        return _product(_generator_atom(r"[ab](?!\d)", _D_GENERATORS, "D generator"), DihedralElt.identity)
    if kind == Carrier.G.value:
        return _product(_generator_atom(r"d[1-3]|a[1-3]|b", _G_GENERATORS, "G generator"), GElt.identity)
    if kind == Carrier.ZD.value:
        pair = (
            pp.Suppress("(") + _integer() + pp.Suppress(";") + _grammar(Carrier.D.value) + pp.Suppress(")")
        ).set_name("pair").set_parse_action(lambda t: ZxDElt(t[0], t[1]))
        return _product(pair, ZxDElt.identity)
    raise ValueError(f"Unknown grammar: {kind}")


def _parse(kind: str, text: str, what: str):
    try:
        return _grammar(kind).parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as exc:
        logger.debug("parse failure for %s %r at %s", what, text, exc.loc)
        raise ParseError(text, exc.loc, exc.msg, what) from exc


def parse_word(text: str, arity: Optional[int] = None) -> FreeWord:
    """Parse a word; its arity is the largest variable index unless `arity` is given."""
    word = _parse("word", text, "word")
    return word.with_arity(arity) if arity is not None else word


def parse_element(text: str, carrier: Carrier):
    return _parse(carrier.value, text, f"{carrier.value} element")
