"""Lie brackets, closure, structure constants and invariant forms."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

import numpy as np

from .linalg import SparseEchelon
from .scalar import ZERO, GaussianRational
from .sparse import SparseOperator, bracket

Constants = dict[tuple[int, int], dict[int, GaussianRational]]


@dataclass(frozen=True)
class LieBasis:
    """Independent operators closed under the bracket.

    ``constants[(i, j)]`` for ``i < j`` holds the nonzero coordinates
    ``k -> c`` of ``[ops[i], ops[j]]``; the remaining index orders follow
    from antisymmetry.
    """

    width: int
    ops: tuple[SparseOperator, ...]
    constants: Constants = field(repr=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.ops)

    def bracket_coords(self, i: int, j: int) -> dict[int, GaussianRational]:
        if i == j:
            return {}
        if i < j:
            return dict(self.constants.get((i, j), {}))
        return {k: -c for k, c in self.constants.get((j, i), {}).items()}

    def structure_constant(self, i: int, j: int, k: int) -> GaussianRational:
        return self.bracket_coords(i, j).get(k, ZERO)

    def structure_tensor(self) -> list[list[list[GaussianRational]]]:
        n = self.dim
        out = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (i, j), row in self.constants.items():
            for k, c in row.items():
                out[i][j][k] = c
                out[j][i][k] = -c
        return out

    def has_real_constants(self) -> bool:
        return all(c.is_real() for row in self.constants.values() for c in row.values())

    @classmethod
    def from_ops(cls, ops: Sequence[SparseOperator]) -> "LieBasis":
        """Verify independence and bracket closure, then record constants.

        Raises ValueError if the operators are dependent or their span is
        not closed under the bracket.
        """
        ops = tuple(ops)
        if not ops:
            raise ValueError("need at least one operator")
        width = _common_width(ops)
        ech = SparseEchelon(track=True)
        for idx, op in enumerate(ops):
            if not ech.add(op.flatten(), idx):
                raise ValueError(f"operator {idx} is linearly dependent on its predecessors")
        constants: Constants = {}
        for i in range(len(ops)):
            for j in range(i + 1, len(ops)):
                b = bracket(ops[i], ops[j])
                if b.is_zero():
                    continue
                coords = ech.coordinates(b.flatten())
                if coords is None:
                    raise ValueError(f"bracket of operators {i} and {j} leaves the span")
                constants[(i, j)] = coords
        return cls(width, ops, constants)


def _common_width(ops: Iterable[SparseOperator]) -> int:
    widths = {op.width for op in ops}
    if len(widths) != 1:
        raise ValueError(f"operators have mismatched widths {sorted(widths)}")
    return widths.pop()


def lie_closure(gens: Sequence[SparseOperator]) -> LieBasis:
    """Breadth-first bracket closure with FIFO pair scheduling.

    Generators are kept in input order (skipping dependent ones).  Whenever
    an element is appended, the pairs (existing, new) join the back of the
    queue, so the resulting basis is fully determined by the input order.
    """
    if not gens:
        raise ValueError("need at least one generator")
    width = _common_width(gens)
    ech = SparseEchelon(track=True)
    basis: list[SparseOperator] = []
    queue: deque[tuple[int, int]] = deque()

    def push(op: SparseOperator) -> None:
        if ech.add(op.flatten(), len(basis)):
            n = len(basis)
            basis.append(op)
            queue.extend((i, n) for i in range(n))

    for g in gens:
        push(g)
    brackets: dict[tuple[int, int], SparseOperator] = {}
    while queue:
        i, j = queue.popleft()
        b = bracket(basis[i], basis[j])
        brackets[(i, j)] = b
        if not b.is_zero():
            push(b)
    constants: Constants = {}
    for (i, j), b in brackets.items():
        if b.is_zero():
            continue
        coords = ech.coordinates(b.flatten())
        assert coords is not None
        constants[(i, j)] = coords
    return LieBasis(width, tuple(basis), constants)


def span_dim(ops: Iterable[SparseOperator]) -> int:
    ech = SparseEchelon()
    for op in ops:
        ech.add(op.flatten())
    return ech.rank


def in_span(op: SparseOperator, ops: Iterable[SparseOperator]) -> bool:
    ech = SparseEchelon()
    for o in ops:
        ech.add(o.flatten())
    return ech.contains(op.flatten())


def same_span(a: Iterable[SparseOperator], b: Iterable[SparseOperator]) -> bool:
    a, b = list(a), list(b)
    ech = SparseEchelon()
    for op in a:
        ech.add(op.flatten())
    r = ech.rank
    return all(ech.contains(op.flatten()) for op in b) and span_dim(b) == r


def coordinates(op: SparseOperator, ops: Sequence[SparseOperator]) -> list[GaussianRational] | None:
    """Exact coordinates of ``op`` in the (independent) list ``ops``."""
    ech = SparseEchelon(track=True)
    for idx, o in enumerate(ops):
        if not ech.add(o.flatten(), idx):
            raise ValueError("reference operators are dependent")
    coords = ech.coordinates(op.flatten())
    if coords is None:
        return None
    return [coords.get(i, ZERO) for i in range(len(ops))]


def commutant_dim(basis: LieBasis | Sequence[SparseOperator]) -> int:
    """Dimension of {X : [X, b] = 0 for every b}.

    Each matrix entry of [X, b] = X b - b X is one sparse linear equation
    in the 4^N unknown entries of X; the commutant is the null space.
    Diagonal operators go first since their equations have one term and
    collapse most of the unknowns immediately.
    """
    ops = list(basis.ops if isinstance(basis, LieBasis) else basis)
    width = _common_width(ops)
    d = 1 << width
    ops.sort(key=lambda op: not op.is_diagonal())
    ech = SparseEchelon()
    for b in ops:
        eqs: dict[tuple[int, int], dict[int, GaussianRational]] = {}
        for (k, c), v in b.items():
            # (X b)[r, c] gains X[r, k] * v for every r
            for r in range(d):
                row = eqs.setdefault((r, c), {})
                idx = k * d + r
                row[idx] = row.get(idx, ZERO) + v
            # (b X)[k, c'] gains v * X[c, c'] for every c'
            for c2 in range(d):
                row = eqs.setdefault((k, c2), {})
                idx = c2 * d + c
                row[idx] = row.get(idx, ZERO) - v
        for key in sorted(eqs):
            row = {i: x for i, x in eqs[key].items() if x}
            if row:
                ech.add(row)
        if ech.rank == d * d - 1:
            break
    return d * d - ech.rank


# -- dense structure-constant computations ----------------------------------
#
# Structure constants are rescaled to integers by their common denominator
# so that contractions run in numpy integer arithmetic without rounding.


def _integer_tensor(basis: LieBasis) -> tuple[np.ndarray, np.ndarray, int]:
    n = basis.dim
    den = 1
    for row in basis.constants.values():
        for c in row.values():
            den = lcm(den, c.real.denominator, c.imag.denominator)
    re = np.zeros((n, n, n), dtype=object)
    im = np.zeros((n, n, n), dtype=object)
    for (i, j), row in basis.constants.items():
        for k, c in row.items():
            a = int(c.real * den)
            b = int(c.imag * den)
            re[i, j, k], re[j, i, k] = a, -a
            im[i, j, k], im[j, i, k] = b, -b
    return _narrow(re), _narrow(im), den


def _narrow(a: np.ndarray) -> np.ndarray:
    """Use int64 when products of entries summed over any axis cannot overflow."""
    if a.size == 0:
        return a.astype(np.int64)
    bound = max(abs(int(x)) for x in a.flat)
    if bound * bound * 4 * max(a.shape) ** 2 < 2**62:
        return a.astype(np.int64)
    return a


def _complex_matmul(ar, ai, br, bi):
    return ar @ br - ai @ bi, ar @ bi + ai @ br


def killing_form(basis: LieBasis) -> list[list[GaussianRational]]:
    """``K[i][j] = trace(ad e_i ∘ ad e_j)`` in the adjoint representation."""
    n = basis.dim
    re, im, den = _integer_tensor(basis)
    # ad_i[l, k] = c_{ik}^l, so trace(ad_i ad_j) = sum_{k,l} c_{ik}^l c_{jl}^k
    a_re, a_im = re.reshape(n, n * n), im.reshape(n, n * n)
    b_re = re.transpose(0, 2, 1).reshape(n, n * n)
    b_im = im.transpose(0, 2, 1).reshape(n, n * n)
    k_re, k_im = _complex_matmul(a_re, a_im, b_re.T, b_im.T)
    scale = den * den
    return [
        [GaussianRational(Fraction(int(k_re[i, j]), scale), Fraction(int(k_im[i, j]), scale)) for j in range(n)]
        for i in range(n)
    ]


def jacobi_holds(basis: LieBasis, triples: Iterable[tuple[int, int, int]] | None = None) -> bool:
    """Check the Jacobi identity on the structure constants, exactly.

    With ``triples=None`` every index triple is checked at once by tensor
    contraction; otherwise only the listed triples are.
    """
    n = basis.dim
    re, im, _ = _integer_tensor(basis)
    if triples is None:
        def contract(x, y):
            return np.tensordot(x, y, axes=([2], [0]))

        t_re = contract(re, re) - contract(im, im)
        t_im = contract(re, im) + contract(im, re)
        for t in (t_re, t_im):
            total = t + t.transpose(2, 0, 1, 3) + t.transpose(1, 2, 0, 3)
            if np.any(total != 0):
                return False
        return True
    for i, j, k in triples:
        acc_re = np.zeros(n, dtype=re.dtype)
        acc_im = np.zeros(n, dtype=re.dtype)
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            # sum_m c_{ab}^m c_{mc}^l
            x_re, x_im = _complex_matmul(re[a, b][None, :], im[a, b][None, :], re[:, c, :], im[:, c, :])
            acc_re = acc_re + x_re[0]
            acc_im = acc_im + x_im[0]
        if np.any(acc_re != 0) or np.any(acc_im != 0):
            return False
    return True
