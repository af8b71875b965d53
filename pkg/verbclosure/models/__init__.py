from .ball import ELEMENT_TYPES, Ball, Element  # noqa
from .carrier import Carrier  # noqa
from .dihedral import DihedralElt  # noqa
from .equation import DihedralSolution, Equation, SolutionTuple, TransferReport  # noqa
from .gelt import GElt, IndexPerm, VFour  # noqa
from .klein import KleinElt  # noqa
from .word import FreeAut, FreeWord, NielsenMove  # noqa
from .zxd import ZxDElt  # noqa
