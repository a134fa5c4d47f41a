"""Fixed-width binary states and no-carry arithmetic.

A state of width N is an integer in [0, 2^N) whose bit b is the
coefficient of 2^b.  An arithmetic function is a formal signed sum of
powers of two; it moves a state only when every term can be applied
without a carry, and fixes the state otherwise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .opalgebra.sparse import SparseOperator


@dataclass(frozen=True, order=True)
class BasisState:
    width: int
    value: int

    def __post_init__(self):
        if self.width < 1:
            raise ValueError("width must be positive")
        if not 0 <= self.value < 1 << self.width:
            raise ValueError(f"value {self.value} does not fit in {self.width} bits")

    def bit(self, b: int) -> int:
        return (self.value >> b) & 1

    def __str__(self) -> str:
        return format(self.value, f"0{self.width}b")

    @classmethod
    def parse(cls, text: str) -> "BasisState":
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a binary string: {text!r}")
        return cls(len(text), int(text, 2))

    @classmethod
    def all(cls, width: int) -> list["BasisState"]:
        return [cls(width, m) for m in range(1 << width)]


_TERM = re.compile(r"([+-])(\d+)")


@dataclass(frozen=True)
class ArithmeticFunction:
    """Formal sum of signed powers of two on width-N states.

    ``terms`` holds ``(sign, bit)`` pairs with sign in {+1, -1}.  Negative
    bit positions are dropped on construction; positions at or beyond the
    width are kept and can never apply.
    """

    width: int
    terms: tuple[tuple[int, int], ...]

    def __init__(self, width: int, terms: Iterable[tuple[int, int]] = ()):
        if width < 1:
            raise ValueError("width must be positive")
        kept = []
        seen = set()
        for sign, b in terms:
            if sign not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {sign!r}")
            if b < 0:
                continue
            if b in seen:
                raise ValueError(f"duplicate bit position {b}")
            seen.add(b)
            kept.append((sign, b))
        object.__setattr__(self, "width", width)
        object.__setattr__(self, "terms", tuple(sorted(kept, key=lambda t: -t[1])))

    @property
    def displacement(self) -> int:
        return sum(s << b for s, b in self.terms)

    @classmethod
    def parse(cls, text: str, width: int) -> "ArithmeticFunction":
        """Parse e.g. ``"+4-1"``; every term must be a power of two."""
        text = text.replace(" ", "")
        if _TERM.sub("", text):
            raise ValueError(f"cannot parse arithmetic function {text!r}")
        terms = []
        for sign, num in _TERM.findall(text):
            k = int(num)
            if k <= 0 or k & (k - 1):
                raise ValueError(f"term {num} is not a power of two")
            terms.append((1 if sign == "+" else -1, k.bit_length() - 1))
        return cls(width, terms)

    def __str__(self) -> str:
        return "".join(f"{'+' if s > 0 else '-'}{1 << b}" for s, b in self.terms)


def _check(f: ArithmeticFunction, s: BasisState) -> None:
    if f.width != s.width:
        raise ValueError(f"width mismatch: function {f.width}, state {s.width}")


def _applies(terms, width: int, value: int) -> bool:
    for sign, b in terms:
        if b >= width:
            return False
        bit = (value >> b) & 1
        if (sign > 0 and bit) or (sign < 0 and not bit):
            return False
    return True


def applies_without_carry(f: ArithmeticFunction, s: BasisState) -> bool:
    _check(f, s)
    return _applies(f.terms, f.width, s.value)


def eval_arith(f: ArithmeticFunction, s: BasisState) -> BasisState:
    _check(f, s)
    if not _applies(f.terms, f.width, s.value):
        return s
    return BasisState(s.width, s.value + f.displacement)


def promote(f: ArithmeticFunction) -> SparseOperator:
    """Linear operator sending m to f(m) when f moves m, and to 0 otherwise."""
    shift = f.displacement
    entries = {}
    if shift:
        for m in range(1 << f.width):
            if _applies(f.terms, f.width, m):
                entries[(m + shift, m)] = 1
    return SparseOperator(f.width, entries)


def arith_op(width: int, *terms: tuple[int, int]) -> SparseOperator:
    """Shorthand: ``arith_op(N, (+1, 2), (-1, 0))`` is the operator of +4-1."""
    return promote(ArithmeticFunction(width, terms))


def parity_op(k: int, width: int) -> SparseOperator:
    """Diagonal (-1)^bit, where label k reads bit k-1."""
    if not 1 <= k <= width:
        raise ValueError(f"parity label {k} outside [1, {width}]")
    b = k - 1
    return SparseOperator.diagonal(width, (-1 if (m >> b) & 1 else 1 for m in range(1 << width)))


def parity_string(labels: Iterable[int], width: int) -> SparseOperator:
    """Product of parity operators; the identity for no labels."""
    b_mask = 0
    for k in labels:
        if not 1 <= k <= width:
            raise ValueError(f"parity label {k} outside [1, {width}]")
        b_mask ^= 1 << (k - 1)
    return SparseOperator.diagonal(
        width, (-1 if bin(m & b_mask).count("1") % 2 else 1 for m in range(1 << width))
    )


def flip_all(s: BasisState) -> BasisState:
    return BasisState(s.width, s.value ^ ((1 << s.width) - 1))
