import pytest

from spinbits.bitcore import parity_op
from spinbits.compactreal import (
    compact_basis,
    compact_generators,
    is_skew_hermitian,
    negative_definite,
    parity_rows_real,
    real_structure_basis,
    realness_report,
    to_real_structure,
    verify_compact,
)
from spinbits.opalgebra import I, LieBasis, SparseOperator, killing_form, lie_closure, same_span
from spinbits.opalgebra.linalg import det
from spinbits.spinodd import B


def test_generator_examples():
    q_plus, q_minus, ip = compact_generators(1)
    up, down = B(1, 1, 1), B(1, -1, 1)
    assert q_plus == up - down
    assert q_minus == (up + down).scale(I)
    assert ip == parity_op(1, 1).scale(I)
    assert compact_basis(1) == compact_generators(1)


@pytest.mark.parametrize("n", range(1, 5))
def test_generators_close_to_compact_basis(n):
    assert same_span(lie_closure(compact_generators(n)).ops, compact_basis(n))


@pytest.mark.parametrize("n", range(1, 6))
def test_every_element_is_skew_hermitian(n):
    ops = compact_basis(n)
    assert len(ops) == n * (2 * n + 1)
    assert all(is_skew_hermitian(op) for op in ops)


def test_skew_hermitian_rejects_hermitian():
    assert not is_skew_hermitian(parity_op(1, 1))


def test_killing_form_n1():
    form = killing_form(LieBasis.from_ops(compact_basis(1)))
    assert form == [[-8, 0, 0], [0, -8, 0], [0, 0, -8]]
    assert negative_definite(form)


def test_negative_definite_examples():
    assert negative_definite([[-1, 0], [0, -2]])
    assert not negative_definite([[-1, 0], [0, 2]])
    assert not negative_definite([[-1, 0], [0, 0]])
    assert not negative_definite([[0, 1], [1, 0]])


@pytest.mark.parametrize("n", range(1, 5))
def test_verify_compact_passes(n):
    report = verify_compact(n)
    assert report.passed, report.to_text()
    assert [c.id for c in report.checks] == [
        "a.real_closure",
        "b.skew_hermitian",
        "c.killing_negative_definite",
        "d.complexified_span",
    ]


@pytest.mark.parametrize("n", range(1, 6))
def test_real_structure_basis_is_invertible(n):
    assert det(real_structure_basis(n)) != 0


def test_real_structure_n1_values():
    (conj,) = to_real_structure([parity_op(1, 1).scale(I)], 1)
    assert conj == SparseOperator(1, {(0, 1): -1, (1, 0): 1})


@pytest.mark.parametrize("n", range(1, 6))
def test_parity_rows_are_real(n):
    assert parity_rows_real(n)


def test_realness_report_n2():
    rep = realness_report(2)
    assert rep == {"N": 2, "all_real": False, "real_elements": [4, 5, 8, 9]}


@pytest.mark.parametrize("n", range(1, 5))
def test_realness_report_counts_parities(n):
    rep = realness_report(n)
    d = n * (2 * n + 1)
    # the i p_l tail is always real in the conjugated basis
    assert set(range(d - n, d)) <= set(rep["real_elements"])
