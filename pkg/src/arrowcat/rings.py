"""Base rings: prime fields F_p and the integers."""

from __future__ import annotations

from dataclasses import dataclass

_P_LIMIT = 2**31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class BaseRing:
    """Either F_p (p a prime below 2**31) or Z (p is None)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not (2 <= self.p < _P_LIMIT):
                raise ValueError(f"field characteristic out of range: {self.p}")
            if not _is_prime(self.p):
                raise ValueError(f"not a prime: {self.p}")

    @property
    def is_field(self) -> bool:
        return self.p is not None

    def __str__(self) -> str:
        return f"F{self.p}" if self.p is not None else "Z"


ZZ = BaseRing(None)


def GF(p: int) -> BaseRing:
    return BaseRing(p)
