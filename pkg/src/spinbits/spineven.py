"""The even spin algebra so(2N, C) inside g_N, and its half-spin split."""

from __future__ import annotations

from .bitcore import arith_op, parity_op, parity_string
from .opalgebra import (
    HALF,
    LieBasis,
    SparseOperator,
    bracket,
    commutant_dim,
    lie_closure,
    same_span,
    span_dim,
)
from .opalgebra.linalg import SparseEchelon, rank
from .report import Report
from .spinodd import generators, odd_basis


def _require(n: int) -> None:
    if n < 2:
        raise ValueError("the even spin algebra needs N >= 2")


def chirality(n: int) -> SparseOperator:
    """``X_top``: the involution swapping m and m + 2^{N-1}."""
    _require(n)
    return arith_op(n, (1, n - 1)) + arith_op(n, (-1, n - 1))


def even_extra(n: int) -> SparseOperator:
    """``D = p_{N-1} ... p_1 ∘ X_top``, the generator adjoined to g_{N-1}."""
    _require(n)
    return parity_string(range(1, n), n) @ chirality(n)


def even_pairs(n: int) -> list[SparseOperator]:
    """``(p_{b+2} ... p_{N-1}) ∘ [±2^b] ∘ X_top`` for b = 0..N-2, + before -."""
    _require(n)
    x = chirality(n)
    return [
        parity_string(range(b + 2, n), n) @ arith_op(n, (s, b)) @ x
        for b in range(n - 1)
        for s in (1, -1)
    ]


def even_basis(n: int) -> list[SparseOperator]:
    """odd_basis(N-1) on the low bits, the paired elements, then D."""
    _require(n)
    return odd_basis(n - 1, width=n) + even_pairs(n) + [even_extra(n)]


def even_lie_basis(n: int) -> LieBasis:
    return LieBasis.from_ops(even_basis(n))


def even_cartan(n: int) -> list[SparseOperator]:
    """``D, p_1, ..., p_{N-2}`` completed to rank N.

    The completion is the first element of ``even_basis`` (in order) that
    commutes with the partial list and is independent of it.
    """
    _require(n)
    partial = [even_extra(n)] + [parity_op(k, n) for k in range(1, n - 1)]
    ech = SparseEchelon()
    for h in partial:
        ech.add(h.flatten())
    out = list(partial)
    for b in even_basis(n):
        if len(out) == n:
            break
        if all(bracket(b, h).is_zero() for h in out) and ech.add(b.flatten()):
            out.append(b)
    if len(out) != n:
        raise RuntimeError("could not complete the Cartan subalgebra")
    return out


def half_spin_projectors(n: int) -> tuple[SparseOperator, SparseOperator]:
    x = chirality(n)
    ident = SparseOperator.identity(n)
    return (ident + x).scale(HALF), (ident - x).scale(HALF)


def verify_even(n: int, max_n: int = 8) -> Report:
    if not 2 <= n <= max_n:
        raise ValueError(f"N must lie in [2, {max_n}]")
    report = Report(f"even N={n}")
    ops = even_basis(n)
    expected = n * (2 * n - 1)
    try:
        basis = LieBasis.from_ops(ops)
        ok, why = basis.dim == expected, f"independent and closed, dim={basis.dim} expected={expected}"
    except ValueError as exc:
        basis, ok, why = None, False, str(exc)
    report.add("a.basis_closure", ok, why)

    low = generators(n - 1, width=n)
    x = chirality(n)
    via_d = lie_closure(low + [even_extra(n)])
    via_intro = lie_closure(low + [arith_op(n, (1, n - 2)) @ x])
    agree = same_span(via_d.ops, ops) and same_span(via_intro.ops, ops)
    report.add("b.generating_sets", agree, f"closure dims {via_d.dim} and {via_intro.dim}")

    central = [i for i, b in enumerate(ops) if not bracket(x, b).is_zero()]
    report.add("c.chirality_central", not central, f"non-commuting: {central}" if central else "X_top central")

    plus, minus = half_spin_projectors(n)
    ranks = [rank(p.to_dense()) for p in (plus, minus)]
    leaks = [
        i for i, b in enumerate(ops) if not (minus @ b @ plus).is_zero() or not (plus @ b @ minus).is_zero()
    ]
    half = 1 << (n - 1)
    report.add(
        "d.half_spin_split",
        ranks == [half, half] and not leaks,
        f"projector ranks {ranks}, expected {half}; leaking elements {leaks}",
    )

    cdim = commutant_dim(basis if basis is not None else ops)
    report.add("e.commutant", cdim == 2, f"commutant_dim={cdim}")

    sub = [
        arith_op(n, (1, 0)),
        arith_op(n, (-1, 0)),
        parity_op(1, n),
        even_extra(n),
        parity_string(range(2, n), n) @ arith_op(n, (1, 0)) @ x,
        parity_string(range(2, n), n) @ arith_op(n, (-1, 0)) @ x,
    ]
    sub_dim = lie_closure(sub).dim
    report.add("f.sl2_plus_sl2", sub_dim == 6, f"subalgebra dim={sub_dim}")
    return report


def contains_extra_only_via_d(n: int) -> bool:
    """True iff D lies outside the span of odd_basis(N-1) and the paired elements."""
    rest = odd_basis(n - 1, width=n) + even_pairs(n)
    return span_dim(rest + [even_extra(n)]) == span_dim(rest) + 1
