"""
Free-group words and Nielsen changes of variables.

A word is stored as syllables (var, exp): var is a 1-based variable index,
exp a nonzero integer, and adjacent syllables never share a variable.
"""
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Literal, Tuple

from verbclosure.core.errors import ArityMismatch, VarIndexError
from verbclosure.models.carrier import power_by_squaring

Letter = Tuple[int, int]

VAR_NAMES = {1: "x", 2: "y", 3: "z", 4: "t"}


def var_name(index: int) -> str:
    return VAR_NAMES.get(index, f"x{index}")


def free_reduce(raw: Iterable[Letter]) -> Tuple[Letter, ...]:
    stack: List[Letter] = []
    for var, exp in raw:
        if exp == 0:
            continue
        if stack and stack[-1][0] == var:
            merged = stack.pop()[1] + exp
            if merged:
                stack.append((var, merged))
        else:
            stack.append((var, exp))
    return tuple(stack)


def _check_indices(raw: Iterable[Letter], arity: int) -> None:
    for var, _ in raw:
        if not 1 <= var <= arity:
            raise VarIndexError(f"variable index {var} outside 1..{arity}")


@dataclass(frozen=True)
class FreeWord:
    letters: Tuple[Letter, ...] = ()
    arity: int = 1

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise ArityMismatch(f"arity must be positive, got {self.arity}")
        _check_indices(self.letters, self.arity)
        if free_reduce(self.letters) != self.letters:
            raise ValueError(f"letters are not freely reduced: {self.letters}")

    @classmethod
    def from_letters(cls, raw: Iterable[Letter], arity: int) -> "FreeWord":
        raw = list(raw)
        _check_indices(raw, arity)
        return cls(free_reduce(raw), arity)

    @classmethod
    def identity(cls, arity: int = 1) -> "FreeWord":
        return cls((), arity)

    @classmethod
    def generator(cls, index: int, arity: int) -> "FreeWord":
        return cls.from_letters([(index, 1)], arity)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    @property
    def length(self) -> int:
        return sum(abs(exp) for _, exp in self.letters)

    @property
    def support(self) -> frozenset:
        return frozenset(var for var, _ in self.letters)

    @property
    def used_arity(self) -> int:
        return max(self.support, default=1)

    def with_arity(self, arity: int) -> "FreeWord":
        return FreeWord.from_letters(self.letters, arity)

    def unit_letters(self) -> Iterator[Letter]:
        for var, exp in self.letters:
            step = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                yield var, step

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((var, -exp) for var, exp in reversed(self.letters)), self.arity)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if not isinstance(other, FreeWord):
            return NotImplemented
        return FreeWord(free_reduce(self.letters + other.letters), max(self.arity, other.arity))

    def __pow__(self, n: int) -> "FreeWord":
        base = self if n >= 0 else self.inverse()
        return power_by_squaring(base, abs(n), FreeWord.identity(self.arity))

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        parts = []
        for var, exp in self.letters:
            name = var_name(var)
            parts.append(name if exp == 1 else f"{name}^{exp}")
        return "*".join(parts)


def commutator_word(u: FreeWord, v: FreeWord) -> FreeWord:
    """[u, v] = u⁻¹v⁻¹uv."""
    return u.inverse() * v.inverse() * u * v


MoveKind = Literal["swap", "invert", "multiply"]


@dataclass(frozen=True)
class NielsenMove:
    """
    One elementary substitution of F(x1..xn):
      swap(i, j):          xi ↦ xj, xj ↦ xi
      invert(i):           xi ↦ xi⁻¹
      multiply(i, j, ±1):  xi ↦ xi·xj^±1
    Generators not named are fixed.
    """
    kind: MoveKind
    i: int
    j: int = 0
    sign: int = 1

    def generator_image(self, var: int) -> Tuple[Letter, ...]:
        if self.kind == "swap":
            if var == self.i:
                return ((self.j, 1),)
            if var == self.j:
                return ((self.i, 1),)
        elif self.kind == "invert":
            if var == self.i:
                return ((var, -1),)
        elif var == self.i:
            return ((self.i, 1), (self.j, self.sign))
        return ((var, 1),)

    def inverse(self) -> "NielsenMove":
        if self.kind == "multiply":
            return NielsenMove("multiply", self.i, self.j, -self.sign)
        return self

    def indices(self) -> Tuple[int, ...]:
        if self.kind == "invert":
            return (self.i,)
        return (self.i, self.j)

    def apply(self, word: FreeWord) -> FreeWord:
        raw: List[Letter] = []
        for var, exp in word.letters:
            image = self.generator_image(var)
            if exp < 0:
                image = tuple((v, -e) for v, e in reversed(image))
            raw.extend(image * abs(exp))
        return FreeWord(free_reduce(raw), word.arity)

    def __str__(self) -> str:
        if self.kind == "swap":
            return f"swap({var_name(self.i)},{var_name(self.j)})"
        if self.kind == "invert":
            return f"invert({var_name(self.i)})"
        return f"{var_name(self.i)}:={var_name(self.i)}*{var_name(self.j)}^{self.sign}"


@dataclass(frozen=True)
class FreeAut:
    """Composite of Nielsen moves; moves are applied to a word first to last."""
    moves: Tuple[NielsenMove, ...] = ()
    arity: int = 1

    def __post_init__(self) -> None:
        for move in self.moves:
            if move.kind == "multiply" and move.sign not in (1, -1):
                raise ValueError(f"multiply move needs sign ±1, got {move.sign}")
            if move.kind != "invert" and move.i == move.j:
                raise ValueError(f"move {move.kind} needs two distinct indices")
            for index in move.indices():
                if not 1 <= index <= self.arity:
                    raise VarIndexError(f"move index {index} outside 1..{self.arity}")

    @classmethod
    def identity(cls, arity: int) -> "FreeAut":
        return cls((), arity)

    @property
    def is_identity(self) -> bool:
        return not self.moves

    def then(self, *moves: NielsenMove) -> "FreeAut":
        return FreeAut(self.moves + moves, self.arity)

    def inverse(self) -> "FreeAut":
        return FreeAut(tuple(move.inverse() for move in reversed(self.moves)), self.arity)

    def apply(self, word: FreeWord) -> FreeWord:
        if word.arity != self.arity:
            raise ArityMismatch(f"word has arity {word.arity}, automorphism has {self.arity}")
        for move in self.moves:
            word = move.apply(word)
        return word

    def generator_image(self, index: int) -> FreeWord:
        if not 1 <= index <= self.arity:
            raise VarIndexError(f"generator index {index} outside 1..{self.arity}")
        return self.apply(FreeWord.generator(index, self.arity))

    def __str__(self) -> str:
        if not self.moves:
            return "id"
        return ", ".join(
            f"{var_name(i)}↦{self.generator_image(i)}" for i in range(1, self.arity + 1)
        )
