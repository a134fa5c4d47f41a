"""Sparse linear operators on the 2^N-dimensional state space."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .scalar import ZERO, GaussianRational, as_scalar, fraction_text


def _check_width(a: "SparseOperator", b: "SparseOperator") -> None:
    if a.width != b.width:
        raise ValueError(f"width mismatch: {a.width} != {b.width}")


class SparseOperator:
    """Exact operator stored column-wise: ``cols[c][r]`` is the (r, c) entry.

    Instances are treated as immutable; every operation returns a new one.
    Row and column indices are basis-state values.
    """

    __slots__ = ("width", "_cols", "_hash")

    def __init__(self, width: int, entries: Mapping[tuple[int, int], object] | Iterable = ()):
        if width < 0:
            raise ValueError("width must be non-negative")
        self.width = width
        dim = 1 << width
        cols: dict[int, dict[int, GaussianRational]] = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for (r, c), v in items:
            if not (0 <= r < dim and 0 <= c < dim):
                raise ValueError(f"entry ({r}, {c}) out of range for width {width}")
            v = as_scalar(v)
            if v:
                col = cols.setdefault(c, {})
                if r in col:
                    v = col[r] + v
                    if not v:
                        del col[r]
                        continue
                col[r] = v
        self._cols = {c: col for c, col in cols.items() if col}
        self._hash = None

    @classmethod
    def _from_cols(cls, width: int, cols: dict[int, dict[int, GaussianRational]]) -> "SparseOperator":
        obj = object.__new__(cls)
        obj.width = width
        obj._cols = {c: col for c, col in cols.items() if col}
        obj._hash = None
        return obj

    @classmethod
    def identity(cls, width: int) -> "SparseOperator":
        one = as_scalar(1)
        return cls._from_cols(width, {m: {m: one} for m in range(1 << width)})

    @classmethod
    def zero(cls, width: int) -> "SparseOperator":
        return cls._from_cols(width, {})

    @classmethod
    def diagonal(cls, width: int, values: Iterable) -> "SparseOperator":
        values = list(values)
        if len(values) != 1 << width:
            raise ValueError("diagonal length must be 2**width")
        return cls(width, {(m, m): v for m, v in enumerate(values)})

    @property
    def dim(self) -> int:
        return 1 << self.width

    def entries(self) -> list[tuple[int, int, GaussianRational]]:
        """Nonzero entries as ``(row, col, value)`` sorted by (col, row)."""
        out = []
        for c in sorted(self._cols):
            col = self._cols[c]
            out.extend((r, c, col[r]) for r in sorted(col))
        return out

    def items(self) -> Iterator[tuple[tuple[int, int], GaussianRational]]:
        for c, col in self._cols.items():
            for r, v in col.items():
                yield (r, c), v

    def nnz(self) -> int:
        return sum(len(col) for col in self._cols.values())

    def __getitem__(self, rc: tuple[int, int]) -> GaussianRational:
        r, c = rc
        return self._cols.get(c, {}).get(r, ZERO)

    def column(self, c: int) -> dict[int, GaussianRational]:
        """Image of basis state ``c`` as a mapping state -> coefficient."""
        return dict(self._cols.get(c, {}))

    def apply(self, vector: Mapping[int, object]) -> dict[int, GaussianRational]:
        out: dict[int, GaussianRational] = {}
        for c, x in vector.items():
            x = as_scalar(x)
            for r, v in self._cols.get(c, {}).items():
                out[r] = out.get(r, ZERO) + v * x
        return {r: v for r, v in out.items() if v}

    def is_zero(self) -> bool:
        return not self._cols

    def is_diagonal(self) -> bool:
        return all(len(col) == 1 and c in col for c, col in self._cols.items())

    def diagonal_values(self) -> list[GaussianRational]:
        return [self[m, m] for m in range(self.dim)]

    def is_real(self) -> bool:
        return all(v.is_real() for _, v in self.items())

    def trace(self) -> GaussianRational:
        total = ZERO
        for c, col in self._cols.items():
            if c in col:
                total = total + col[c]
        return total

    # -- algebra ---------------------------------------------------------

    def __add__(self, other: "SparseOperator") -> "SparseOperator":
        if not isinstance(other, SparseOperator):
            return NotImplemented
        _check_width(self, other)
        cols = {c: dict(col) for c, col in self._cols.items()}
        for c, ocol in other._cols.items():
            col = cols.setdefault(c, {})
            for r, v in ocol.items():
                s = col.get(r, ZERO) + v
                if s:
                    col[r] = s
                else:
                    col.pop(r, None)
        return SparseOperator._from_cols(self.width, cols)

    def __neg__(self) -> "SparseOperator":
        return SparseOperator._from_cols(
            self.width, {c: {r: -v for r, v in col.items()} for c, col in self._cols.items()}
        )

    def __sub__(self, other: "SparseOperator") -> "SparseOperator":
        if not isinstance(other, SparseOperator):
            return NotImplemented
        return self + (-other)

    def scale(self, factor) -> "SparseOperator":
        factor = as_scalar(factor)
        if not factor:
            return SparseOperator.zero(self.width)
        return SparseOperator._from_cols(
            self.width, {c: {r: v * factor for r, v in col.items()} for c, col in self._cols.items()}
        )

    def __mul__(self, factor) -> "SparseOperator":
        if isinstance(factor, SparseOperator):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def __matmul__(self, other: "SparseOperator") -> "SparseOperator":
        """Composition ``self ∘ other``."""
        if not isinstance(other, SparseOperator):
            return NotImplemented
        _check_width(self, other)
        out: dict[int, dict[int, GaussianRational]] = {}
        mine = self._cols
        for c, ocol in other._cols.items():
            acc: dict[int, GaussianRational] = {}
            for k, bv in ocol.items():
                acol = mine.get(k)
                if not acol:
                    continue
                for r, av in acol.items():
                    p = av * bv
                    if r in acc:
                        acc[r] = acc[r] + p
                    else:
                        acc[r] = p
            acc = {r: v for r, v in acc.items() if v}
            if acc:
                out[c] = acc
        return SparseOperator._from_cols(self.width, out)

    def adjoint(self) -> "SparseOperator":
        cols: dict[int, dict[int, GaussianRational]] = {}
        for c, col in self._cols.items():
            for r, v in col.items():
                cols.setdefault(r, {})[c] = v.conjugate()
        return SparseOperator._from_cols(self.width, cols)

    def transpose(self) -> "SparseOperator":
        cols: dict[int, dict[int, GaussianRational]] = {}
        for c, col in self._cols.items():
            for r, v in col.items():
                cols.setdefault(r, {})[c] = v
        return SparseOperator._from_cols(self.width, cols)

    def conjugate(self) -> "SparseOperator":
        return SparseOperator._from_cols(
            self.width, {c: {r: v.conjugate() for r, v in col.items()} for c, col in self._cols.items()}
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseOperator):
            return NotImplemented
        return self.width == other.width and self._cols == other._cols

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.width, tuple((r, c, v) for r, c, v in self.entries())))
        return self._hash

    def __repr__(self) -> str:
        return f"SparseOperator(width={self.width}, nnz={self.nnz()})"

    # -- flattening and export -------------------------------------------

    def flatten(self) -> dict[int, GaussianRational]:
        """Sparse vector of length 4^N, index ``col * dim + row``."""
        d = self.dim
        return {c * d + r: v for c, col in self._cols.items() for r, v in col.items()}

    @classmethod
    def unflatten(cls, width: int, vector: Mapping[int, GaussianRational]) -> "SparseOperator":
        d = 1 << width
        cols: dict[int, dict[int, GaussianRational]] = {}
        for idx, v in vector.items():
            if v:
                c, r = divmod(idx, d)
                cols.setdefault(c, {})[r] = v
        return cls._from_cols(width, cols)

    def to_dense(self) -> list[list[GaussianRational]]:
        d = self.dim
        rows = [[ZERO] * d for _ in range(d)]
        for (r, c), v in self.items():
            rows[r][c] = v
        return rows

    @classmethod
    def from_dense(cls, width: int, rows) -> "SparseOperator":
        return cls(width, {(r, c): v for r, row in enumerate(rows) for c, v in enumerate(row) if v})

    def to_numpy(self):
        import numpy as np

        out = np.zeros((self.dim, self.dim), dtype=complex)
        for (r, c), v in self.items():
            out[r, c] = complex(v)
        return out

    def to_dict(self, as_float: bool = False) -> dict:
        def part(q: Fraction):
            return float(q) if as_float else fraction_text(q)

        return {
            "width": self.width,
            "dim": self.dim,
            "entries": [
                {"row": r, "col": c, "re": part(v.real), "im": part(v.imag)}
                for r, c, v in self.entries()
            ],
        }

    def to_json(self, as_float: bool = False) -> str:
        return json.dumps(self.to_dict(as_float=as_float))

    @classmethod
    def from_dict(cls, data: Mapping) -> "SparseOperator":
        width = int(data["width"])
        if "dim" in data and int(data["dim"]) != 1 << width:
            raise ValueError("dim does not match width")
        return cls(
            width,
            {
                (int(e["row"]), int(e["col"])): GaussianRational(Fraction(e["re"]), Fraction(e["im"]))
                for e in data["entries"]
            },
        )

    @classmethod
    def from_json(cls, text: str) -> "SparseOperator":
        return cls.from_dict(json.loads(text))


def compose(a: SparseOperator, b: SparseOperator) -> SparseOperator:
    return a @ b


def add(a: SparseOperator, b: SparseOperator) -> SparseOperator:
    return a + b


def scale(a: SparseOperator, factor) -> SparseOperator:
    return a.scale(factor)


def bracket(a: SparseOperator, b: SparseOperator) -> SparseOperator:
    return a @ b - b @ a


def anticommutator(a: SparseOperator, b: SparseOperator) -> SparseOperator:
    return a @ b + b @ a


def adjoint(a: SparseOperator) -> SparseOperator:
    return a.adjoint()


def product(ops: Iterable[SparseOperator], width: int) -> SparseOperator:
    """Left-to-right composition ``ops[0] ∘ ops[1] ∘ ...``; identity if empty."""
    out = SparseOperator.identity(width)
    for op in ops:
        out = out @ op
    return out


def grade_of(a: SparseOperator) -> int | str:
    """Common displacement ``row - col`` of all entries, or "zero" / "mixed"."""
    grades = {r - c for (r, c), _ in a.items()}
    if not grades:
        return "zero"
    if len(grades) > 1:
        return "mixed"
    return grades.pop()
