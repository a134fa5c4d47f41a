"""The compact real form so(2N+1) on the spin module and its real structure."""

from __future__ import annotations

from .bitcore import parity_op
from .opalgebra import I, LieBasis, SparseOperator, as_scalar, killing_form, same_span
from .opalgebra.linalg import inverse, symmetric_pivots
from .report import Report
from .spinodd import B, odd_basis, positive_elements


def compact_generators(n: int) -> list[SparseOperator]:
    """``Q^k_+ = B^k - B^-k`` and ``Q^k_- = i(B^k + B^-k)`` for each k, then ``i p_l``."""
    if n < 1:
        raise ValueError("N must be at least 1")
    out = []
    for k in range(1, n + 1):
        up, down = B(k, 1, n), B(k, -1, n)
        out.append(up - down)
        out.append((up + down).scale(I))
    out.extend(parity_op(l, n).scale(I) for l in range(1, n + 1))
    return out


def compact_basis(n: int) -> list[SparseOperator]:
    """Skew-Hermitian combinations of each sign-flipped pair, then ``i p_l``.

    For every positive-grade basis element X (and its partner X† obtained
    by flipping all signs) the two elements ``X - X†`` and ``i(X + X†)``
    are listed in the order of the positive part of the odd basis.
    """
    if n < 1:
        raise ValueError("N must be at least 1")
    out = []
    for e in positive_elements(n):
        up, down = e.operator(n), e.negated().operator(n)
        out.append(up - down)
        out.append((up + down).scale(I))
    out.extend(parity_op(l, n).scale(I) for l in range(1, n + 1))
    return out


def is_skew_hermitian(op: SparseOperator) -> bool:
    return (op + op.adjoint()).is_zero()


def negative_definite(matrix) -> bool:
    """Exact test via the pivots of elimination, i.e. ratios of leading minors."""
    pivots = symmetric_pivots(matrix)
    return len(pivots) == len(matrix) and all(p.is_real() and p.real < 0 for p in pivots)


def verify_compact(n: int, max_n: int = 8) -> Report:
    if not 1 <= n <= max_n:
        raise ValueError(f"N must lie in [1, {max_n}]")
    report = Report(f"compact N={n}")
    ops = compact_basis(n)
    try:
        basis = LieBasis.from_ops(ops)
        real = basis.has_real_constants()
        report.add("a.real_closure", real, f"closed, dim={basis.dim}, real structure constants: {real}")
    except ValueError as exc:
        basis = None
        report.add("a.real_closure", False, str(exc))

    bad = [i for i, op in enumerate(ops) if not is_skew_hermitian(op)]
    report.add("b.skew_hermitian", not bad, f"violations {bad}" if bad else f"all {len(ops)} elements")

    if basis is not None:
        k = killing_form(basis)
        neg = negative_definite(k)
        report.add("c.killing_negative_definite", neg, "leading minors alternate in sign" if neg else "not definite")
    else:
        report.add("c.killing_negative_definite", False, "no basis")

    spans = same_span(ops, odd_basis(n))
    report.add("d.complexified_span", spans, "complex span equals the odd basis span" if spans else "span differs")
    return report


def real_structure_basis(n: int) -> list[list]:
    """Columns ``[m] + i τ[m]`` and ``i [m] + τ[m]`` for m < 2^(N-1), interleaved.

    Returned as a dense matrix (rows indexed by state) whose columns are
    the new basis vectors.
    """
    if n < 1:
        raise ValueError("N must be at least 1")
    d = 1 << n
    mask = d - 1
    cols = []
    for m in range(d >> 1):
        tm = m ^ mask
        v0 = [0] * d
        v1 = [0] * d
        v0[m], v0[tm] = 1, I
        v1[m], v1[tm] = I, 1
        cols.extend([v0, v1])
    return [[as_scalar(cols[j][i]) for j in range(d)] for i in range(d)]


def to_real_structure(ops: list[SparseOperator], n: int) -> list[SparseOperator]:
    """Conjugate ``ops`` into the τ-basis: ``T^{-1} X T``."""
    t_rows = real_structure_basis(n)
    t = SparseOperator.from_dense(n, t_rows)
    t_inv = SparseOperator.from_dense(n, inverse(t_rows))
    return [t_inv @ x @ t for x in ops]


def realness_report(n: int, max_n: int = 8) -> dict:
    if not 1 <= n <= max_n:
        raise ValueError(f"N must lie in [1, {max_n}]")
    conj = to_real_structure(compact_basis(n), n)
    real = [i for i, x in enumerate(conj) if x.is_real()]
    return {"N": n, "all_real": len(real) == len(conj), "real_elements": real}


def parity_rows_real(n: int) -> bool:
    """Whether every ``i p_l`` has purely real entries in the τ-basis."""
    conj = to_real_structure([parity_op(l, n).scale(I) for l in range(1, n + 1)], n)
    return all(x.is_real() for x in conj)


__all__ = [
    "compact_basis",
    "compact_generators",
    "is_skew_hermitian",
    "negative_definite",
    "parity_rows_real",
    "real_structure_basis",
    "realness_report",
    "to_real_structure",
    "verify_compact",
]
