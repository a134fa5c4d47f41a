"""Independent spin representations from Kronecker products of Pauli matrices.

This is the textbook Clifford-algebra route, kept deliberately separate
from the arithmetic construction so that it can serve as an oracle.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .opalgebra import (
    HALF,
    I,
    LieBasis,
    SparseOperator,
    anticommutator,
    bracket,
    commutant_dim,
)
from .report import Report
from .spineven import chirality, even_basis, even_extra
from .spinodd import odd_basis
from .bitcore import parity_op
from .structure import classify, module_weights

PAULI_X = ((0, 1), (1, 0))
PAULI_Y = ((0, -1j), (1j, 0))
PAULI_Z = ((1, 0), (0, -1))
EYE = ((1, 0), (0, 1))


def kron_chain(factors) -> SparseOperator:
    """Kronecker product of 2x2 factors, leftmost factor on the top bit."""
    width = len(factors)
    entries = {(0, 0): 1}
    for f in factors:
        nxt = {}
        for (r, c), v in entries.items():
            for a in (0, 1):
                for b in (0, 1):
                    x = f[a][b]
                    if x:
                        nxt[(2 * r + a, 2 * c + b)] = v * x
        entries = nxt
    return SparseOperator(width, entries)


@dataclass(frozen=True)
class GammaSystem:
    n: int
    gammas: tuple[SparseOperator, ...]

    @property
    def width(self) -> int:
        return self.n // 2


def gamma_system(n: int) -> GammaSystem:
    """n anticommuting gammas on 2^(n//2) dimensions (Jordan-Wigner layout)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    half = n // 2
    if half == 0:
        # a single gamma on a one-dimensional space
        return GammaSystem(n, (SparseOperator(0, {(0, 0): 1}),))
    gammas = []
    for j in range(1, half + 1):
        left = [PAULI_Z] * (j - 1)
        right = [EYE] * (half - j)
        gammas.append(kron_chain(left + [PAULI_X] + right))
        gammas.append(kron_chain(left + [PAULI_Y] + right))
    if n % 2:
        gammas.append(kron_chain([PAULI_Z] * half))
    return GammaSystem(n, tuple(gammas))


def clifford_relations_hold(system: GammaSystem) -> bool:
    ident = SparseOperator.identity(system.width)
    for a, ga in enumerate(system.gammas):
        for b, gb in enumerate(system.gammas):
            want = ident.scale(2) if a == b else SparseOperator.zero(system.width)
            if anticommutator(ga, gb) != want:
                return False
    return True


def clifford_so(n: int) -> LieBasis:
    """``¼[γ_a, γ_b]`` for a < b, a basis of so(n) on spinors."""
    if n < 2:
        raise ValueError("n must be at least 2")
    g = gamma_system(n).gammas
    quarter = Fraction(1, 4)
    ops = [bracket(g[a], g[b]).scale(quarter) for a in range(n) for b in range(a + 1, n)]
    return LieBasis.from_ops(ops)


def clifford_cartan(n: int) -> list[SparseOperator]:
    """``-i ¼[γ_{2j-1}, γ_{2j}] = ½ Z_j`` for j = 1..n//2."""
    g = gamma_system(n).gammas
    return [bracket(g[2 * j], g[2 * j + 1]).scale(Fraction(1, 4) * -I) for j in range(n // 2)]


def clifford_chirality(n: int) -> SparseOperator:
    return kron_chain([PAULI_Z] * (n // 2))


def _weights_text(weights: Counter) -> str:
    return "{" + ", ".join(f"{'(' + ','.join(str(x) for x in w) + ')'}x{m}" for w, m in sorted(weights.items())) + "}"


def oracle_compare(n: int, parity: Literal["odd", "even"] = "odd") -> Report:
    """Compare the arithmetic construction with the Clifford route by invariants."""
    if parity == "odd":
        if n < 1:
            raise ValueError("odd comparison needs N >= 1")
        arith = LieBasis.from_ops(odd_basis(n))
        arith_cartan = [parity_op(k, n).scale(HALF) for k in range(1, n + 1)]
        expected_commutant = 1
        dim_n = 2 * n + 1
    elif parity == "even":
        if n < 2:
            raise ValueError("even comparison needs N >= 2")
        arith = LieBasis.from_ops(even_basis(n))
        arith_cartan = [parity_op(k, n).scale(HALF) for k in range(1, n)] + [even_extra(n).scale(HALF)]
        expected_commutant = 2
        dim_n = 2 * n
    else:
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")

    oracle = clifford_so(dim_n)
    oracle_cartan = clifford_cartan(dim_n)
    report = Report(f"oracle {parity} N={n}")

    report.add("a.dimension", arith.dim == oracle.dim, f"arithmetic {arith.dim}, clifford {oracle.dim}")

    t_arith = classify(arith, arith_cartan).type
    t_oracle = classify(oracle, oracle_cartan).type
    report.add("b.type", t_arith == t_oracle, f"arithmetic {t_arith}, clifford {t_oracle}")

    w_arith = Counter(module_weights(arith_cartan))
    w_oracle = Counter(module_weights(oracle_cartan))
    half = Fraction(1, 2)
    spinor = {tuple(half if (m >> i) & 1 == 0 else -half for i in range(n)) for m in range(1 << n)}
    full = set(w_arith) == spinor and all(v == 1 for v in w_arith.values())
    report.add(
        "c.weights",
        w_arith == w_oracle and full,
        f"arithmetic {_weights_text(w_arith)}, clifford {_weights_text(w_oracle)}",
    )
    if parity == "even":
        split_arith = Counter(module_weights(arith_cartan + [chirality(n)]))
        split_oracle = Counter(module_weights(oracle_cartan + [clifford_chirality(dim_n)]))
        # chirality +1 carries the weights with an even number of minus signs
        ok = split_arith == split_oracle and all(
            (sum(1 for x in w[:-1] if x < 0) % 2 == 0) == (w[-1] == 1) for w in split_arith
        )
        report.add("c.half_spin_weights", ok, "chirality splits weights by sign-change parity")

    c_arith = commutant_dim(arith)
    c_oracle = commutant_dim(oracle)
    report.add(
        "d.commutant",
        c_arith == c_oracle == expected_commutant,
        f"arithmetic {c_arith}, clifford {c_oracle}, expected {expected_commutant}",
    )
    return report
