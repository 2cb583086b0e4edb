"""Seeded 64-bit LCG shared by every randomized check."""
from __future__ import annotations

from fractions import Fraction

from .scalar import ExtScalar

MULT = 6364136223846793005
INC = 1442695040888963407
MASK = (1 << 64) - 1


class Rng:
    __slots__ = ("state",)

    def __init__(self, seed: int = 0):
        self.state = seed & MASK

    def next_u64(self) -> int:
        self.state = (self.state * MULT + INC) & MASK
        return self.state

    def below(self, n: int) -> int:
        return (self.next_u64() >> 32) % n

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def rational(self) -> Fraction:
        # numerator in [-9, 9], denominator in {1, 2, 3}, both from the high word
        x = self.next_u64()
        num = ((x >> 40) % 19) - 9
        den = ((x >> 33) % 3) + 1
        return Fraction(num, den)

    def real(self) -> ExtScalar:
        return ExtScalar(self.rational())

    def gaussian(self) -> ExtScalar:
        return ExtScalar(self.rational(), self.rational())

    def scalar(self) -> ExtScalar:
        return ExtScalar(self.rational(), self.rational(), self.rational(), self.rational())

    def nonzero(self, draw=None) -> ExtScalar:
        draw = draw or self.gaussian
        while True:
            x = draw()
            if x:
                return x

    def scalars(self, n: int, kind: str = "gaussian"):
        draw = getattr(self, kind)
        return [draw() for _ in range(n)]
