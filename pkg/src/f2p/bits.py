"""Raw bit patterns: the stored form of every number in this library."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BitPattern:
    """An unsigned bit pattern with a declared width (1..64).

    ``bits`` is the pattern read MSB-first as an unsigned integer, so the
    6-bit string "010001" is ``BitPattern(0b010001, 6)``.
    """

    bits: int
    width: int

    def __post_init__(self) -> None:
        if not 1 <= self.width <= 64:
            raise ValueError(f"width must be in 1..64, got {self.width}")
        if not 0 <= self.bits < (1 << self.width):
            raise ValueError(f"bits {self.bits:#b} do not fit in width {self.width}")

    @classmethod
    def from_string(cls, text: str) -> "BitPattern":
        """Parse a binary string such as "010001" (MSB first)."""
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a binary string: {text!r}")
        return cls(int(text, 2), len(text))

    def __str__(self) -> str:
        return format(self.bits, f"0{self.width}b")
