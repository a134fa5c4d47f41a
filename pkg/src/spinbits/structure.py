"""Weights, roots, Cartan matrices and Dynkin type labels.

Everything is computed on the module: the Cartan elements are diagonalized
exactly on the state space, every basis operator is rewritten in that
eigenbasis, and its matrix entries are sorted by the weight difference of
their row and column.  Because the algebra is stable under ad of its
Cartan, each such component is again in the algebra, so this is the root
space decomposition without ever forming ad matrices.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

from .opalgebra import LieBasis, SparseOperator, bracket, killing_form
from .opalgebra.linalg import SparseEchelon, inverse, nullspace, rank, rref
from .opalgebra.scalar import ONE, ZERO, GaussianRational

Weight = tuple[Fraction, ...]


class NotSemisimpleError(ValueError):
    pass


# -- exact simultaneous diagonalization --------------------------------------


def _rational_eigenvalues(matrix: list[list[GaussianRational]]) -> list[Fraction]:
    """Candidate eigenvalues, guessed in floating point and snapped to Q.

    The caller certifies them exactly; this only proposes values.
    """
    a = np.array([[complex(x) for x in row] for row in matrix], dtype=complex)
    guesses = np.linalg.eigvals(a)
    out = []
    for z in guesses:
        if abs(z.imag) > 1e-6:
            raise ValueError(f"eigenvalue {z} is not real; spectrum is not rational")
        q = Fraction(float(z.real)).limit_denominator(1000)
        if q not in out:
            out.append(q)
    return sorted(out)


def joint_eigenspaces(ops: Sequence[SparseOperator]) -> list[tuple[Weight, list[list[GaussianRational]]]]:
    """Split the state space into joint eigenspaces of commuting operators.

    Returns ``(weight, vectors)`` pairs sorted by weight, with vectors as
    dense columns.  Raises ValueError if the operators do not commute or
    are not diagonalizable over Q.
    """
    ops = list(ops)
    if not ops:
        raise ValueError("need at least one operator")
    width = ops[0].width
    d = 1 << width
    for a, b in combinations(ops, 2):
        if not bracket(a, b).is_zero():
            raise ValueError("operators do not commute")
    if all(op.is_diagonal() for op in ops):
        groups: dict[Weight, list[list[GaussianRational]]] = {}
        for m in range(d):
            w = tuple(_as_rational(op[m, m]) for op in ops)
            vec = [ZERO] * d
            vec[m] = ONE
            groups.setdefault(w, []).append(vec)
        return sorted(groups.items())

    spaces: list[tuple[Weight, list[list[GaussianRational]]]] = [
        ((), [[ONE if i == j else ZERO for i in range(d)] for j in range(d)])
    ]
    for op in ops:
        refined = []
        for w, vecs in spaces:
            images = [_dense_apply(op, v) for v in vecs]
            m = len(vecs)
            # coordinates of op(v_j) in the basis vecs: solve vecs @ R = images
            aug = [[vecs[j][i] for j in range(m)] + [images[j][i] for j in range(m)] for i in range(d)]
            red, pivots = rref(aug)
            if pivots[:m] != list(range(m)) or any(p >= m for p in pivots):
                raise ValueError("subspace is not invariant; operators do not commute")
            restricted = [row[m:] for row in red[:m]]
            found = 0
            for lam in _rational_eigenvalues(restricted):
                shifted = [[x - (lam if i == j else 0) for j, x in enumerate(row)] for i, row in enumerate(restricted)]
                kernel = nullspace(shifted)
                if not kernel:
                    continue
                found += len(kernel)
                new_vecs = [[sum((vecs[j][i] * c[j] for j in range(m) if c[j]), ZERO) for i in range(d)] for c in kernel]
                refined.append((w + (lam,), new_vecs))
            if found != m:
                raise ValueError("operator is not diagonalizable over the rationals")
        spaces = refined
    return sorted(spaces, key=lambda item: item[0])


def _as_rational(x: GaussianRational) -> Fraction:
    if not x.is_real():
        raise ValueError(f"eigenvalue {x} is not rational")
    return x.real


def _dense_apply(op: SparseOperator, vec: list[GaussianRational]) -> list[GaussianRational]:
    out = [ZERO] * len(vec)
    for (r, c), v in op.items():
        if vec[c]:
            out[r] = out[r] + v * vec[c]
    return out


def module_weights(cartan: Sequence[SparseOperator]) -> list[Weight]:
    """Joint eigenvalue vectors on the state space, with multiplicity, sorted."""
    out = []
    for w, vecs in joint_eigenspaces(cartan):
        out.extend([w] * len(vecs))
    return out


def weight_adapted(ops: Sequence[SparseOperator], cartan: Sequence[SparseOperator]):
    """Rewrite ``ops`` and ``cartan`` in a joint eigenbasis of ``cartan``.

    Returns ``(ops', cartan')`` where every element of ``cartan'`` is diagonal.
    """
    if all(h.is_diagonal() for h in cartan):
        return list(ops), list(cartan)
    width = cartan[0].width
    cols = [v for _, vecs in joint_eigenspaces(cartan) for v in vecs]
    p_rows = [list(r) for r in zip(*cols)]
    p = SparseOperator.from_dense(width, p_rows)
    p_inv = SparseOperator.from_dense(width, inverse(p_rows))
    conj = [p_inv @ x @ p for x in ops]
    conj_h = [p_inv @ h @ p for h in cartan]
    return conj, conj_h


# -- roots -------------------------------------------------------------------


def root_spaces(ops: Sequence[SparseOperator], cartan: Sequence[SparseOperator]) -> dict[Weight, int]:
    """Dimension of each ad-weight space (the zero weight included)."""
    ops_h, cartan_h = weight_adapted(ops, cartan)
    d = cartan_h[0].dim
    state_weight = [tuple(_as_rational(h[m, m]) for h in cartan_h) for m in range(d)]
    echelons: dict[Weight, SparseEchelon] = {}
    for x in ops_h:
        parts: dict[Weight, dict[int, GaussianRational]] = {}
        for (r, c), v in x.items():
            alpha = tuple(a - b for a, b in zip(state_weight[r], state_weight[c]))
            parts.setdefault(alpha, {})[c * d + r] = v
        for alpha, vec in parts.items():
            echelons.setdefault(alpha, SparseEchelon()).add(vec)
    spaces = {alpha: e.rank for alpha, e in echelons.items()}
    if sum(spaces.values()) != len(ops):
        raise ValueError("operators are not stable under the Cartan: span is not ad-invariant")
    return spaces


def roots(basis: LieBasis | Sequence[SparseOperator], cartan) -> list[Weight]:
    """Nonzero roots with multiplicity, sorted.

    ``cartan`` may be operators or indices into ``basis.ops``.
    """
    ops = list(basis.ops if isinstance(basis, LieBasis) else basis)
    cartan = _resolve_cartan(ops, cartan)
    spaces = root_spaces(ops, cartan)
    zero = tuple(Fraction(0) for _ in cartan)
    if spaces.get(zero, 0) != len(cartan):
        raise ValueError(f"zero weight space has dimension {spaces.get(zero, 0)}, expected {len(cartan)}")
    out = []
    for alpha, mult in sorted(spaces.items()):
        if alpha != zero:
            out.extend([alpha] * mult)
    return out


def _resolve_cartan(ops, cartan) -> list[SparseOperator]:
    return [ops[c] if isinstance(c, int) else c for c in cartan]


def _is_positive(alpha: Weight) -> bool:
    for a in alpha:
        if a:
            return a > 0
    return False


def cartan_killing(root_list: Sequence[Weight]) -> list[list[Fraction]]:
    """Killing form on the Cartan: sum over roots of alpha alpha^T."""
    r = len(root_list[0]) if root_list else 0
    out = [[Fraction(0)] * r for _ in range(r)]
    for alpha in root_list:
        for i in range(r):
            if alpha[i]:
                for j in range(r):
                    out[i][j] += alpha[i] * alpha[j]
    return out


class RootForm:
    """Bilinear form on weights induced by the Killing form on the Cartan."""

    def __init__(self, root_list: Sequence[Weight]):
        k = cartan_killing(root_list)
        if not k or rank(k) < len(k):
            raise NotSemisimpleError("Killing form is degenerate on the Cartan subalgebra")
        self._g = [[x.real for x in row] for row in inverse(k)]

    def __call__(self, a: Weight, b: Weight) -> Fraction:
        return sum((a[i] * self._g[i][j] * b[j] for i in range(len(a)) for j in range(len(b))), Fraction(0))


def simple_roots(root_list: Sequence[Weight]) -> list[Weight]:
    """Positive roots that are not a sum of two positive roots, sorted."""
    positive = sorted({a for a in root_list if _is_positive(a)})
    decomposable = {tuple(x + y for x, y in zip(a, b)) for a, b in combinations(positive, 2)}
    return [a for a in positive if a not in decomposable]


def cartan_matrix(simple: Sequence[Weight], form) -> list[list[int]]:
    out = []
    for a in simple:
        row = []
        for b in simple:
            v = 2 * form(a, b) / form(b, b)
            if v.denominator != 1:
                raise ValueError(f"non-integral Cartan entry {v}")
            row.append(int(v))
        out.append(row)
    return out


# -- type labels ---------------------------------------------------------------


def _euclid_cartan(vectors: list[list[Fraction]]) -> list[list[int]]:
    def dot(a, b):
        return sum(x * y for x, y in zip(a, b))

    return [[int(2 * dot(a, b) / dot(b, b)) for b in vectors] for a in vectors]


def _unit(n: int, i: int) -> list[Fraction]:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


def _minus(a, b):
    return [x - y for x, y in zip(a, b)]


def _standard_simple_roots(family: str, r: int) -> list[list[Fraction]] | None:
    e = _unit
    h = Fraction(1, 2)
    if family == "A" and r >= 1:
        return [_minus(e(r + 1, i), e(r + 1, i + 1)) for i in range(r)]
    if family == "B" and r >= 2:
        return [_minus(e(r, i), e(r, i + 1)) for i in range(r - 1)] + [e(r, r - 1)]
    if family == "C" and r >= 3:
        return [_minus(e(r, i), e(r, i + 1)) for i in range(r - 1)] + [[2 * x for x in e(r, r - 1)]]
    if family == "D" and r >= 3:
        return [_minus(e(r, i), e(r, i + 1)) for i in range(r - 1)] + [
            [x + y for x, y in zip(e(r, r - 2), e(r, r - 1))]
        ]
    if family == "G" and r == 2:
        return [[Fraction(1), Fraction(-1), Fraction(0)], [Fraction(-2), Fraction(1), Fraction(1)]]
    if family == "F" and r == 4:
        return [_minus(e(4, 1), e(4, 2)), _minus(e(4, 2), e(4, 3)), e(4, 3), [h, -h, -h, -h]]
    if family == "E" and r in (6, 7, 8):
        e8 = [[h, -h, -h, -h, -h, -h, -h, h], [x + y for x, y in zip(e(8, 0), e(8, 1))]]
        e8.append(_minus(e(8, 1), e(8, 0)))
        e8.extend(_minus(e(8, i + 1), e(8, i)) for i in range(1, 6))
        return e8[:r]
    return None


# D before A so that the rank-3 member of the even family reads "D3";
# B before C so that rank 2 reads "B2".
_FAMILY_ORDER = ("B", "D", "A", "C", "G", "F", "E")


def _isomorphic(m: list[list[int]], s: list[list[int]]) -> bool:
    n = len(m)
    if n != len(s):
        return False
    perm: list[int] = []
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for j in range(n):
            if used[j]:
                continue
            if all(m[i][k] == s[j][perm[k]] and m[k][i] == s[perm[k]][j] for k in range(i)):
                used[j] = True
                perm.append(j)
                if extend(i + 1):
                    return True
                perm.pop()
                used[j] = False
        return False

    return extend(0)


def _components(m: list[list[int]]) -> list[list[int]]:
    n = len(m)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and (m[i][j] or m[j][i]):
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def label_component(m: list[list[int]]) -> str:
    r = len(m)
    for family in _FAMILY_ORDER:
        std = _standard_simple_roots(family, r)
        if std is not None and _isomorphic(m, _euclid_cartan(std)):
            return f"{family}{r}"
    raise ValueError(f"unrecognised Cartan matrix {m}")


def label_cartan_matrix(m: list[list[int]]) -> str:
    labels = []
    for comp in _components(m):
        sub = [[m[i][j] for j in comp] for i in comp]
        labels.append(label_component(sub))
    labels.sort(key=lambda s: (-int(s[1:]), s))
    return "+".join(labels)


@dataclass(frozen=True)
class CartanMatrixResult:
    matrix: tuple[tuple[int, ...], ...]
    type: str
    rank: int
    dim: int
    num_roots: int
    short_simple_roots: int
    simple_roots: tuple[Weight, ...] = ()
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "type": self.type,
            "rank": self.rank,
            "dim": self.dim,
            "num_roots": self.num_roots,
            "short_simple_roots": self.short_simple_roots,
        }


def _count_short(simple, form, matrix) -> int:
    count = 0
    for comp in _components(matrix):
        lengths = [form(simple[i], simple[i]) for i in comp]
        top = max(lengths)
        count += sum(1 for x in lengths if x < top)
    return count


def classify(basis: LieBasis, cartan, check_killing: bool = True) -> CartanMatrixResult:
    """Dynkin type of ``basis`` relative to the commuting list ``cartan``."""
    if check_killing:
        k = killing_form(basis)
        if rank(k) < basis.dim:
            raise NotSemisimpleError("Killing form is degenerate: not semisimple")
    cartan_ops = _resolve_cartan(basis.ops, cartan)
    root_list = roots(basis, cartan_ops)
    if len(root_list) + len(cartan_ops) != basis.dim:
        raise ValueError("roots and Cartan do not account for the whole algebra")
    if len(set(root_list)) != len(root_list):
        raise ValueError("root spaces are not one-dimensional")
    form = RootForm(root_list)
    simple = simple_roots(root_list)
    if len(simple) != len(cartan_ops):
        raise ValueError(f"found {len(simple)} simple roots for rank {len(cartan_ops)}")
    matrix = cartan_matrix(simple, form)
    label = label_cartan_matrix(matrix)
    note = "=A3" if "D3" in label.split("+") else ""
    return CartanMatrixResult(
        matrix=tuple(tuple(row) for row in matrix),
        type=label,
        rank=len(cartan_ops),
        dim=basis.dim,
        num_roots=len(root_list),
        short_simple_roots=_count_short(simple, form, matrix),
        simple_roots=tuple(simple),
        note=note,
    )


def highest_weights(basis: LieBasis, cartan) -> list[tuple[Weight, tuple[int, ...]]]:
    """Module weights with no positive root above them, with Dynkin labels.

    Dynkin labels are ``2(λ, α_i)/(α_i, α_i)`` over the simple roots in
    :func:`simple_roots` order.
    """
    cartan_ops = _resolve_cartan(basis.ops, cartan)
    root_list = roots(basis, cartan_ops)
    form = RootForm(root_list)
    simple = simple_roots(root_list)
    weights = Counter(module_weights(cartan_ops))
    positive = [a for a in set(root_list) if _is_positive(a)]
    out = []
    for lam in sorted(weights):
        if any(tuple(x + y for x, y in zip(lam, a)) in weights for a in positive):
            continue
        labels = []
        for a in simple:
            v = 2 * form(lam, a) / form(a, a)
            if v.denominator != 1:
                raise ValueError(f"non-integral Dynkin label {v}")
            labels.append(int(v))
        out.extend([(lam, tuple(labels))] * weights[lam])
    return out


def root_lengths(root_list: Sequence[Weight]) -> Counter:
    form = RootForm(root_list)
    return Counter(form(a, a) for a in root_list)


__all__ = [
    "CartanMatrixResult",
    "NotSemisimpleError",
    "RootForm",
    "cartan_matrix",
    "classify",
    "highest_weights",
    "joint_eigenspaces",
    "label_cartan_matrix",
    "module_weights",
    "root_lengths",
    "root_spaces",
    "roots",
    "simple_roots",
    "weight_adapted",
]
