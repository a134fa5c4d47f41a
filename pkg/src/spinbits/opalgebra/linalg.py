"""Exact elimination over the Gaussian rationals.

Two flavours are provided: :class:`SparseEchelon` for incremental span
membership on long sparse vectors (flattened operators), and a handful of
dense helpers for the small square matrices that show up in Killing forms
and module bases.
"""

from __future__ import annotations

from typing import Hashable, Mapping, Sequence

from .scalar import ONE, ZERO, GaussianRational, as_scalar

SparseVector = dict[int, GaussianRational]


def _axpy(v: SparseVector, f: GaussianRational, row: Mapping[int, GaussianRational]) -> None:
    """In place ``v -= f * row``, dropping zeros."""
    for j, x in row.items():
        y = v.get(j)
        if y is None:
            v[j] = -(f * x)
        else:
            y = y - f * x
            if y:
                v[j] = y
            else:
                del v[j]


class SparseEchelon:
    """Incremental row echelon form keyed by the smallest nonzero index.

    Each stored row has pivot coefficient 1 at its smallest index.  When
    ``track`` is set, rows also remember their expansion in terms of the
    tags of the vectors that were inserted, so that :meth:`coordinates`
    can express any member of the span in the inserted vectors.
    """

    def __init__(self, track: bool = False):
        self.track = track
        self._rows: dict[int, SparseVector] = {}
        self._combos: dict[int, dict[Hashable, GaussianRational]] = {}
        self.tags: list[Hashable] = []

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, vector: Mapping[int, object]):
        v = {k: as_scalar(x) for k, x in vector.items()}
        v = {k: x for k, x in v.items() if x}
        combo: dict[Hashable, GaussianRational] = {}
        rows = self._rows
        while v:
            p = min(v)
            row = rows.get(p)
            if row is None:
                break
            f = v[p]
            _axpy(v, f, row)
            if self.track:
                for t, c in self._combos[p].items():
                    s = combo.get(t, ZERO) + f * c
                    if s:
                        combo[t] = s
                    else:
                        combo.pop(t, None)
        return v, combo

    def contains(self, vector: Mapping[int, object]) -> bool:
        residual, _ = self._reduce(vector)
        return not residual

    def add(self, vector: Mapping[int, object], tag: Hashable = None) -> bool:
        """Insert ``vector``; return True iff it was independent of the span."""
        residual, combo = self._reduce(vector)
        if not residual:
            return False
        p = min(residual)
        inv = ONE / residual[p]
        self._rows[p] = {k: x * inv for k, x in residual.items()}
        if self.track:
            # residual = vector - sum(combo[t] * inserted[t])
            expansion = {t: -(c * inv) for t, c in combo.items()}
            expansion[tag] = expansion.get(tag, ZERO) + inv
            self._combos[p] = {t: c for t, c in expansion.items() if c}
        self.tags.append(tag)
        return True

    def coordinates(self, vector: Mapping[int, object]) -> dict[Hashable, GaussianRational] | None:
        """Expansion of ``vector`` in inserted tags, or None if outside the span."""
        if not self.track:
            raise RuntimeError("coordinates require track=True")
        residual, combo = self._reduce(vector)
        if residual:
            return None
        return combo


# -- dense helpers -----------------------------------------------------------

Matrix = list[list[GaussianRational]]


def to_matrix(rows: Sequence[Sequence[object]]) -> Matrix:
    return [[as_scalar(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence[object]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form with first-nonzero-column pivoting."""
    m = to_matrix(rows)
    if not m:
        return m, []
    n_cols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence[object]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[object]], n_cols: int | None = None) -> list[list[GaussianRational]]:
    """Basis of {x : rows @ x = 0}, one vector per free column, in column order."""
    if not rows:
        if n_cols is None:
            raise ValueError("n_cols is required for an empty system")
        return [[ONE if i == j else ZERO for i in range(n_cols)] for j in range(n_cols)]
    m, pivots = rref(rows)
    n_cols = len(m[0])
    free = [c for c in range(n_cols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [ZERO] * n_cols
        x[f] = ONE
        for i, p in enumerate(pivots):
            x[p] = -m[i][f]
        basis.append(x)
    return basis


def det(rows: Sequence[Sequence[object]]) -> GaussianRational:
    m = to_matrix(rows)
    n = len(m)
    out = ONE
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c]), None)
        if pr is None:
            return ZERO
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            out = -out
        piv = m[c][c]
        out = out * piv
        inv = ONE / piv
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return out


def inverse(rows: Sequence[Sequence[object]]) -> Matrix:
    n = len(rows)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(to_matrix(rows))]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in m]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    out = []
    for row in a:
        out.append([sum((x * y for x, y in zip(row, col) if x and y), ZERO) for col in bt])
    return out


def solve(a: Sequence[Sequence[object]], b: Sequence[object]) -> list[GaussianRational] | None:
    """One exact solution of ``a @ x = b`` (free variables zero), or None."""
    n_cols = len(a[0])
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    m, pivots = rref(aug)
    if n_cols in pivots:
        return None
    x = [ZERO] * n_cols
    for i, p in enumerate(pivots):
        x[p] = m[i][n_cols]
    return x


def symmetric_pivots(rows: Sequence[Sequence[object]]) -> list[GaussianRational]:
    """Pivots of elimination without row exchange.

    The k-th pivot equals the ratio of the k-th to the (k-1)-th leading
    principal minor.  A zero pivot stops the elimination and is returned
    as the final entry.
    """
    m = to_matrix(rows)
    n = len(m)
    out = []
    for c in range(n):
        piv = m[c][c]
        out.append(piv)
        if not piv:
            break
        inv = ONE / piv
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return out


def leading_minors(rows: Sequence[Sequence[object]]) -> list[GaussianRational]:
    """All leading principal minors, computed from the elimination pivots."""
    minors = []
    acc = ONE
    n = len(rows)
    pivots = symmetric_pivots(rows)
    for k in range(n):
        if k < len(pivots) and pivots[k]:
            acc = acc * pivots[k]
            minors.append(acc)
        else:
            # fall back to direct determinants once a pivot vanishes
            minors.extend(det([row[: j + 1] for row in rows[: j + 1]]) for j in range(k, n))
            break
    return minors
