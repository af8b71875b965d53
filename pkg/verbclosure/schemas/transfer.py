from typing import List

from pydantic import BaseModel

from verbclosure.models.equation import TransferReport


class NielsenOut(BaseModel):
    m: int
    u: str
    alpha: str
    moves: List[str]


class BookkeepingOut(BaseModel):
    name: str
    holds: bool


class TransferOut(BaseModel):
    word: str
    g_solution: List[str]
    target: str
    nielsen: NielsenOut
    renamed: List[str]
    perm: str
    hat: List[str]
    k_solution: List[str]
    verified: bool
    bookkeeping: List[BookkeepingOut] = []

    @classmethod
    def from_report(cls, report: TransferReport) -> "TransferOut":
        return cls(
            word=str(report.word),
            g_solution=[str(v) for v in report.g_solution],
            target=str(report.target),
            nielsen=NielsenOut(
                m=report.m,
                u=str(report.u),
                alpha=str(report.alpha),
                moves=[str(move) for move in report.alpha.moves],
            ),
            renamed=[str(v) for v in report.renamed],
            perm=str(report.perm),
            hat=[str(v) for v in report.hat],
            k_solution=[str(v) for v in report.k_solution],
            verified=report.verified,
            bookkeeping=[BookkeepingOut(name=n, holds=h) for n, h in report.bookkeeping],
        )
