import itertools
import random
from collections import Counter
from fractions import Fraction

import pytest

from spinbits.bitcore import arith_op, parity_op
from spinbits.opalgebra import LieBasis
from spinbits.spineven import even_cartan, even_lie_basis
from spinbits.spinodd import odd_cartan, odd_lie_basis
from spinbits.structure import (
    NotSemisimpleError,
    RootForm,
    classify,
    highest_weights,
    joint_eigenspaces,
    label_cartan_matrix,
    module_weights,
    root_lengths,
    roots,
)

F = Fraction


def test_weights_of_parities():
    got = module_weights([parity_op(1, 2), parity_op(2, 2)])
    assert Counter(got) == Counter(itertools.product((F(1), F(-1)), repeat=2))
    assert module_weights([parity_op(1, 1)]) == [(F(-1),), (F(1),)]


def test_weights_of_odd_cartan_n2():
    got = module_weights(odd_cartan(2))
    # states 00, 01, 10, 11 read off the two diagonals
    assert Counter(got) == Counter([(F(0), F(1)), (F(1), F(-1)), (F(-1), F(1)), (F(0), F(-1))])


def test_eigenspaces_of_non_diagonal_involution():
    x = arith_op(1, (1, 0)) + arith_op(1, (-1, 0))
    spaces = joint_eigenspaces([x])
    assert [w for w, _ in spaces] == [(F(-1),), (F(1),)]
    assert all(len(v) == 1 for _, v in spaces)


def test_non_commuting_input_is_rejected():
    with pytest.raises(ValueError):
        joint_eigenspaces([parity_op(1, 1), arith_op(1, (1, 0)) + arith_op(1, (-1, 0))])


def test_roots_of_triple():
    assert roots(odd_lie_basis(1), [parity_op(1, 1)]) == [(F(-2),), (F(2),)]


def test_b2_root_lengths():
    rs = roots(odd_lie_basis(2), odd_cartan(2))
    assert len(rs) == 8
    assert sorted(root_lengths(rs).values()) == [4, 4]


def test_d3_root_lengths():
    rs = roots(even_lie_basis(3), even_cartan(3))
    assert len(rs) == 12
    assert len(root_lengths(rs)) == 1


@pytest.mark.parametrize("n, label", [(1, "A1"), (2, "B2"), (3, "B3"), (4, "B4"), (5, "B5")])
def test_classify_odd(n, label):
    result = classify(odd_lie_basis(n), odd_cartan(n))
    assert result.type == label
    assert result.rank == n
    assert result.num_roots + result.rank == result.dim == n * (2 * n + 1)
    assert result.short_simple_roots == (1 if n >= 2 else 0)


@pytest.mark.parametrize("n, label", [(2, "A1+A1"), (3, "D3"), (4, "D4"), (5, "D5")])
def test_classify_even(n, label):
    result = classify(even_lie_basis(n), even_cartan(n))
    assert result.type == label
    assert result.num_roots + result.rank == result.dim == n * (2 * n - 1)
    assert result.short_simple_roots == 0
    assert result.note == ("=A3" if n == 3 else "")


def test_classify_accepts_indices():
    basis = odd_lie_basis(2)
    idx = [basis.ops.index(parity_op(1, 2)), basis.ops.index(parity_op(2, 2))]
    assert classify(basis, idx).type == "B2"


def test_result_dict():
    d = classify(odd_lie_basis(3), odd_cartan(3)).to_dict()
    assert d == {"type": "B3", "rank": 3, "dim": 21, "num_roots": 18, "short_simple_roots": 1}


def test_solvable_algebra_is_rejected():
    solvable = LieBasis.from_ops([arith_op(1, (1, 0)), parity_op(1, 1)])
    with pytest.raises(NotSemisimpleError):
        classify(solvable, [parity_op(1, 1)])


@pytest.mark.parametrize("n", range(1, 6))
def test_odd_highest_weight_is_spin(n):
    basis, cartan = odd_lie_basis(n), odd_cartan(n)
    result = classify(basis, cartan)
    hw = highest_weights(basis, cartan)
    assert len(hw) == 1
    labels = hw[0][1]
    assert sorted(labels) == [0] * (n - 1) + [1]
    if n >= 2:
        # the nonzero label sits on the short simple root
        form = RootForm(roots(basis, cartan))
        lengths = [form(a, a) for a in result.simple_roots]
        assert lengths[labels.index(1)] == min(lengths) < max(lengths)


@pytest.mark.parametrize("n", range(3, 6))
def test_even_highest_weights_are_the_two_spin_nodes(n):
    basis, cartan = even_lie_basis(n), even_cartan(n)
    result = classify(basis, cartan)
    hw = highest_weights(basis, cartan)
    assert len(hw) == 2
    nodes = set()
    for _, labels in hw:
        assert sum(labels) == 1
        nodes.add(labels.index(1))
    # the spin nodes are the two leaves joined to the branch node
    m = result.matrix
    degree = [sum(1 for j in range(n) if j != i and m[i][j]) for i in range(n)]
    for i in nodes:
        assert degree[i] == 1
    a, b = nodes
    common = [j for j in range(n) if m[a][j] and m[b][j] and j not in nodes]
    assert len(common) == 1 and (n == 3 or degree[common[0]] == 3)


# standard Cartan matrices written out by hand
G2 = [[2, -1], [-3, 2]]
F4 = [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
E6 = [
    [2, 0, -1, 0, 0, 0],
    [0, 2, 0, -1, 0, 0],
    [-1, 0, 2, -1, 0, 0],
    [0, -1, -1, 2, -1, 0],
    [0, 0, 0, -1, 2, -1],
    [0, 0, 0, 0, -1, 2],
]
A3 = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
B3 = [[2, -1, 0], [-1, 2, -2], [0, -1, 2]]
C3 = [[2, -1, 0], [-1, 2, -1], [0, -2, 2]]


def _e_series(r):
    m = [[0] * r for _ in range(r)]
    for i in range(r):
        m[i][i] = 2
    edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, r - 1)]
    for i, j in edges:
        m[i][j] = m[j][i] = -1
    return m


def _permuted(m, seed):
    perm = list(range(len(m)))
    random.Random(seed).shuffle(perm)
    return [[m[perm[i]][perm[j]] for j in range(len(m))] for i in range(len(m))]


@pytest.mark.parametrize(
    "matrix, label",
    [
        (G2, "G2"),
        (F4, "F4"),
        (E6, "E6"),
        (_e_series(6), "E6"),
        (_e_series(7), "E7"),
        (_e_series(8), "E8"),
        (A3, "D3"),
        (B3, "B3"),
        (C3, "C3"),
        ([[2]], "A1"),
        ([[2, 0], [0, 2]], "A1+A1"),
    ],
)
def test_labels_of_standard_matrices(matrix, label):
    for seed in range(3):
        assert label_cartan_matrix(_permuted(matrix, seed)) == label


def test_sum_label_orders_by_rank():
    m = [[2, 0, 0, 0], [0, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    assert label_cartan_matrix(m) == "D3+A1"
