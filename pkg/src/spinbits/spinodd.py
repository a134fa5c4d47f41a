"""The odd spin algebra so(2N+1, C) built from two-bit shift operators."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .bitcore import arith_op, parity_op, parity_string
from .opalgebra import (
    HALF,
    LieBasis,
    SparseOperator,
    bracket,
    commutant_dim,
    grade_of,
    lie_closure,
    same_span,
    span_dim,
)
from .report import Report


def _sign(sign) -> int:
    if sign in (1, "+"):
        return 1
    if sign in (-1, "-"):
        return -1
    raise ValueError(f"sign must be + or -, got {sign!r}")


@dataclass(frozen=True)
class GeneratorSpec:
    k: int
    sign: int
    width: int

    def __post_init__(self):
        object.__setattr__(self, "sign", _sign(self.sign))
        if not 1 <= self.k <= self.width:
            raise ValueError(f"generator index {self.k} outside [1, {self.width}]")


def gen_B(spec: GeneratorSpec) -> SparseOperator:
    """``B^{±k}``: the operator of ±2^{k-1} ∓ 2^{k-2} (just ±1 for k = 1)."""
    s, k = spec.sign, spec.k
    return arith_op(spec.width, (s, k - 1), (-s, k - 2))


def B(k: int, sign, width: int) -> SparseOperator:
    return gen_B(GeneratorSpec(k, sign, width))


def generators(n: int, width: int | None = None) -> list[SparseOperator]:
    """``B^{+1}, B^{-1}, ..., B^{+n}, B^{-n}`` acting on the low n bits."""
    width = n if width is None else width
    return [B(k, s, width) for k in range(1, n + 1) for s in (1, -1)]


@dataclass(frozen=True)
class OddBasisElement:
    """Symbolic description of one closed-form basis element.

    ``pair``: parity string over the bits strictly between ``lo`` and ``hi``
    composed with the operator of s_hi 2^hi + s_lo 2^lo.
    ``single``: parity string over all bits below ``hi`` composed with
    the operator of s_hi 2^hi.
    ``parity``: the parity operator with label ``label``.
    """

    kind: Literal["pair", "single", "parity"]
    hi: int = -1
    lo: int = -1
    s_hi: int = 0
    s_lo: int = 0
    label: int = 0

    @property
    def parity_labels(self) -> tuple[int, ...]:
        if self.kind == "pair":
            return tuple(range(self.lo + 2, self.hi + 1))
        if self.kind == "single":
            return tuple(range(1, self.hi + 1))
        return ()

    @property
    def grade(self) -> int:
        if self.kind == "parity":
            return 0
        g = self.s_hi << self.hi
        if self.kind == "pair":
            g += self.s_lo << self.lo
        return g

    def negated(self) -> "OddBasisElement":
        if self.kind == "parity":
            return self
        return OddBasisElement(self.kind, self.hi, self.lo, -self.s_hi, -self.s_lo)

    def operator(self, width: int) -> SparseOperator:
        if self.kind == "parity":
            return parity_op(self.label, width)
        terms = [(self.s_hi, self.hi)]
        if self.kind == "pair":
            terms.append((self.s_lo, self.lo))
        return parity_string(self.parity_labels, width) @ arith_op(width, *terms)

    def __str__(self) -> str:
        if self.kind == "parity":
            return f"p{self.label}"
        terms = f"{'+' if self.s_hi > 0 else '-'}{1 << self.hi}"
        if self.kind == "pair":
            terms += f"{'+' if self.s_lo > 0 else '-'}{1 << self.lo}"
        prefix = "".join(f"p{j}" for j in self.parity_labels)
        return f"{prefix}∘[{terms}]" if prefix else f"[{terms}]"


def positive_elements(n: int) -> list[OddBasisElement]:
    """Positive-grade elements ordered by top bit, then by grade."""
    out = []
    for hi in range(n):
        out.extend(OddBasisElement("pair", hi, lo, 1, -1) for lo in range(hi - 1, -1, -1))
        out.append(OddBasisElement("single", hi, -1, 1, 0))
        out.extend(OddBasisElement("pair", hi, lo, 1, 1) for lo in range(hi))
    return out


def odd_basis_elements(n: int) -> list[OddBasisElement]:
    """Positive part, parities p_1..p_n, then the negations of the positive part."""
    if n < 1:
        raise ValueError("N must be at least 1")
    pos = positive_elements(n)
    parities = [OddBasisElement("parity", label=k) for k in range(1, n + 1)]
    return pos + parities + [e.negated() for e in pos]


def odd_basis(n: int, width: int | None = None) -> list[SparseOperator]:
    """The N(2N+1) closed-form basis operators of g_N.

    ``width`` embeds g_n into a wider state space acting on its low n bits.
    """
    width = n if width is None else width
    return [e.operator(width) for e in odd_basis_elements(n)]


def odd_cartan(n: int, width: int | None = None) -> list[SparseOperator]:
    """``½(p_N - p_{N-1}), ..., ½(p_2 - p_1), p_1``."""
    width = n if width is None else width
    out = [(parity_op(k, width) - parity_op(k - 1, width)).scale(HALF) for k in range(n, 1, -1)]
    out.append(parity_op(1, width))
    return out


def odd_lie_basis(n: int) -> LieBasis:
    return LieBasis.from_ops(odd_basis(n))


def verify_odd(n: int, max_n: int = 8) -> Report:
    if not 1 <= n <= max_n:
        raise ValueError(f"N must lie in [1, {max_n}]")
    report = Report(f"odd N={n}")
    bad = []
    for k in range(1, n + 1):
        h = bracket(B(k, -1, n), B(k, 1, n))
        want = parity_op(1, n) if k == 1 else (parity_op(k, n) - parity_op(k - 1, n)).scale(HALF)
        if h != want:
            bad.append(k)
    report.add("a.cartan_bracket", not bad, f"[B^-k, B^k] mismatch for k={bad}" if bad else f"k=1..{n}")

    bad = []
    for k in range(1, n + 1):
        h = bracket(B(k, -1, n), B(k, 1, n))
        for s in (1, -1):
            # [B^{∓k}, h] = ∓2 B^{∓k}
            if bracket(B(k, -s, n), h) != B(k, -s, n).scale(-2 * s):
                bad.append((k, s))
    report.add("b.triple_normalization", not bad, f"failed {bad}" if bad else "[B^∓k, h_k] = ∓2 B^∓k")

    ops = odd_basis(n)
    try:
        basis = LieBasis.from_ops(ops)
        closed = True
        why = "independent and closed"
    except ValueError as exc:
        basis, closed, why = None, False, str(exc)
    closure = lie_closure(generators(n))
    spans = closed and same_span(ops, closure.ops)
    report.add("c.basis_closure", spans, why + ("; spans closure of B^±k" if spans else "; span differs"))

    dim = span_dim(ops)
    expected = n * (2 * n + 1)
    report.add("d.dimension", dim == expected == closure.dim, f"dim={dim} closure={closure.dim} expected={expected}")

    positive = [op for op in ops if _grade_sign(op) > 0]
    negative = [op for op in ops if _grade_sign(op) < 0]
    top = (1 << n) - 1
    killed_by_pos = [m for m in range(1 << n) if all(not op.column(m) for op in positive)]
    killed_by_neg = [m for m in range(1 << n) if all(not op.column(m) for op in negative)]
    report.add(
        "e.extremal_vectors",
        killed_by_pos == [top] and killed_by_neg == [0],
        f"annihilated by positive: {killed_by_pos}, by negative: {killed_by_neg}",
    )

    cdim = commutant_dim(basis if basis is not None else ops)
    report.add("f.commutant", cdim == 1, f"commutant_dim={cdim}")

    bad = []
    for k in range(0, n):
        for s in (1, -1):
            if arith_op(n, (s, k), (-s, k - 1)) != B(k + 1, s, n):
                bad.append((k, s))
    report.add("g.intro_generators", not bad, f"failed {bad}" if bad else "±2^k ∓ 2^(k-1) = B^±(k+1)")

    return report


def _grade_sign(op: SparseOperator) -> int:
    g = grade_of(op)
    if not isinstance(g, int):
        raise ValueError(f"operator is not grade-pure ({g})")
    return (g > 0) - (g < 0)
