from hypothesis import strategies as st

from verbclosure.models import DihedralElt, FreeAut, FreeWord, GElt, KleinElt, NielsenMove, VFour, ZxDElt
from verbclosure.models.word import free_reduce

small = st.integers(min_value=-6, max_value=6)

klein_elts = st.builds(KleinElt, small, small)
dihedral_elts = st.builds(DihedralElt, st.integers(0, 1), small)
g_elts = st.builds(GElt, st.sampled_from(list(VFour)), small, st.tuples(small, small, small))
zxd_elts = st.builds(ZxDElt, small, dihedral_elts)


@st.composite
def free_words(draw, max_arity: int = 4, max_len: int = 12) -> FreeWord:
    arity = draw(st.integers(1, max_arity))
    raw = draw(st.lists(st.tuples(st.integers(1, arity), st.sampled_from((1, -1))), max_size=max_len))
    return FreeWord(free_reduce(raw), arity)


@st.composite
def nielsen_moves(draw, arity: int) -> NielsenMove:
    if arity == 1:
        return NielsenMove("invert", 1)
    kind = draw(st.sampled_from(("swap", "invert", "multiply")))
    i, j = draw(st.permutations(range(1, arity + 1)))[:2]
    if kind == "invert":
        return NielsenMove("invert", i)
    if kind == "swap":
        return NielsenMove("swap", i, j)
    return NielsenMove("multiply", i, j, draw(st.sampled_from((1, -1))))


@st.composite
def words_with_auts(draw, max_arity: int = 4, max_len: int = 12, max_moves: int = 8):
    """A word and a random automorphism of the same arity."""
    w = draw(free_words(max_arity, max_len))
    moves = draw(st.lists(nielsen_moves(w.arity), max_size=max_moves))
    return w, FreeAut(tuple(moves), w.arity)


raw_letters = st.lists(st.tuples(st.integers(1, 4), st.integers(-3, 3).filter(bool)), max_size=16)
