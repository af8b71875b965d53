"""
Free-group words: reduction, exponent sums and the change of variables
bringing any word to x₁^m·u with u in the commutator subgroup.
"""
import logging
from functools import lru_cache
from math import gcd
from typing import Iterable, List, NamedTuple, Optional, Tuple

from verbclosure.core.errors import VarIndexError
from verbclosure.models.word import FreeAut, FreeWord, Letter, NielsenMove, free_reduce

logger = logging.getLogger(__name__)


def reduce(letters: Iterable[Letter], arity: Optional[int] = None) -> FreeWord:
    raw = list(letters)
    for var, _ in raw:
        if var < 1:
            raise VarIndexError(f"variable index {var} must be positive")
    if arity is None:
        arity = max((var for var, _ in raw), default=1)
    return FreeWord.from_letters(raw, arity)


def exponent_sums(w: FreeWord) -> Tuple[int, ...]:
    sums = [0] * w.arity
    for var, exp in w.letters:
        sums[var - 1] += exp
    return tuple(sums)


def in_commutator_subgroup(w: FreeWord) -> bool:
    return not any(exponent_sums(w))


def exponent_gcd(w: FreeWord) -> int:
    result = 0
    for s in exponent_sums(w):
        result = gcd(result, s)
    return result


class NielsenForm(NamedTuple):
    m: int
    u: FreeWord
    alpha: FreeAut


@lru_cache(maxsize=8192)
def nielsen_normalize(w: FreeWord) -> NielsenForm:
    """
    Euclidean reduction of the exponent-sum vector by elementary moves.

    Pivot: the variable with the smallest nonzero |sum|, ties to the lowest
    index. Every other nonzero sum is reduced modulo the pivot by repeated
    xp ↦ xp·xj^±1. When one nonzero sum is left it is swapped into position 1
    and made positive.
    """
    n = w.arity
    sums = list(exponent_sums(w))
    moves: List[NielsenMove] = []

    while sum(1 for s in sums if s) > 1:
        pivot = min((i for i, s in enumerate(sums) if s), key=lambda i: (abs(sums[i]), i))
        for j, s in enumerate(sums):
            if j == pivot or s == 0:
                continue
            q = s // sums[pivot]
            step = -1 if q > 0 else 1
            moves.extend(NielsenMove("multiply", pivot + 1, j + 1, step) for _ in range(abs(q)))
            sums[j] = s - q * sums[pivot]

    nonzero = [i for i, s in enumerate(sums) if s]
    if nonzero:
        p = nonzero[0]
        if p != 0:
            moves.append(NielsenMove("swap", 1, p + 1))
            sums[0], sums[p] = sums[p], 0
        if sums[0] < 0:
            moves.append(NielsenMove("invert", 1))
            sums[0] = -sums[0]

    m = sums[0]
    alpha = FreeAut(tuple(moves), n)
    image = alpha.apply(w)
    u = FreeWord.generator(1, n) ** (-m) * image
    logger.debug("nielsen %s -> m=%s u=%s via %d moves", w, m, u, len(moves))
    return NielsenForm(m, u, alpha)


def aut_apply(alpha: FreeAut, w: FreeWord) -> FreeWord:
    return alpha.apply(w)


@lru_cache(maxsize=8192)
def aut_generator_image(alpha: FreeAut, i: int) -> FreeWord:
    return alpha.generator_image(i)


@lru_cache(maxsize=64)
def enumerate_reduced_words(max_len: int, arity: int) -> Tuple[FreeWord, ...]:
    """
    All reduced words of length ≤ max_len (length counts unit letters),
    breadth first, extending by the letters x, x⁻¹, y, y⁻¹, … in that order.
    """
    words = [FreeWord.identity(arity)]
    frontier = list(words)
    for _ in range(max_len):
        next_frontier = []
        for word in frontier:
            last = None
            if word.letters:
                var, exp = word.letters[-1]
                last = (var, 1 if exp > 0 else -1)
            for var in range(1, arity + 1):
                for s in (1, -1):
                    if last == (var, -s):
                        continue
                    next_frontier.append(FreeWord(free_reduce(word.letters + ((var, s),)), arity))
        words.extend(next_frontier)
        frontier = next_frontier
    return tuple(words)
