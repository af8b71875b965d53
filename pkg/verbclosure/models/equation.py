from dataclasses import dataclass, field
from typing import Optional, Tuple

from verbclosure.core.errors import CarrierMismatch
from verbclosure.models.ball import ELEMENT_TYPES, Element
from verbclosure.models.carrier import Carrier
from verbclosure.models.gelt import GElt, IndexPerm
from verbclosure.models.klein import KleinElt
from verbclosure.models.word import FreeAut, FreeWord
from verbclosure.schemas.certificate import Certificate


@dataclass(frozen=True)
class SolutionTuple:
    """Assignment of one group element per variable, all from one carrier."""
    values: Tuple[Element, ...]

    def __post_init__(self) -> None:
        carriers = {v.carrier for v in self.values}
        if len(carriers) > 1:
            raise CarrierMismatch(f"mixed carriers in tuple: {sorted(c.value for c in carriers)}")

    @property
    def carrier(self) -> Optional[Carrier]:
        return self.values[0].carrier if self.values else None

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index: int) -> Element:
        return self.values[index]

    def __iter__(self):
        return iter(self.values)

    def __str__(self) -> str:
        return "[" + ", ".join(str(v) for v in self.values) + "]"


@dataclass(frozen=True)
class Equation:
    """w(x, y, …) = target over the group named by `group`."""
    word: FreeWord
    group: Carrier
    target: Element

    def __post_init__(self) -> None:
        if not isinstance(self.target, ELEMENT_TYPES[self.group]):
            raise CarrierMismatch(f"target {self.target} is not an element of {self.group.value}")

    def __str__(self) -> str:
        return f"{self.word} = {self.target} in {self.group.value}"


@dataclass(frozen=True)
class TransferReport:
    """Full trace of one G-solution being moved into K."""
    word: FreeWord
    g_solution: SolutionTuple
    target: KleinElt
    m: int
    u: FreeWord
    alpha: FreeAut
    renamed: SolutionTuple
    perm: IndexPerm
    hat: SolutionTuple
    k_solution: SolutionTuple
    verified: bool
    bookkeeping: Tuple[Tuple[str, bool], ...] = field(default=())

    @property
    def renamed_x(self) -> GElt:
        return self.renamed[0]


@dataclass(frozen=True)
class DihedralSolution:
    """Answer of the case solver over D∞; `values` is None for NotFound."""
    values: Optional[SolutionTuple]
    case: str
    searched: bool
    certificate: Optional[Certificate] = None

    @property
    def found(self) -> bool:
        return self.values is not None
