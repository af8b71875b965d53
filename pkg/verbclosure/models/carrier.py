from enum import Enum
from typing import Optional, TypeVar

T = TypeVar("T")


class Carrier(str, Enum):
    K = "K"
    D = "D"
    G = "G"
    ZD = "ZD"


def power_by_squaring(g: T, n: int, identity: T) -> T:
    """g^n for n ≥ 0 by repeated squaring."""
    result = identity
    base = g
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


def sign(parity: int) -> int:
    """(−1)^parity."""
    return -1 if parity & 1 else 1


def format_power(name: str, exp: int) -> Optional[str]:
    if exp == 0:
        return None
    if exp == 1:
        return name
    return f"{name}^{exp}"
