import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spinbits.bitcore import (
    ArithmeticFunction,
    BasisState,
    applies_without_carry,
    arith_op,
    eval_arith,
    flip_all,
    parity_op,
    parity_string,
    promote,
)
from spinbits.opalgebra import SparseOperator, grade_of


def af(text, width):
    return ArithmeticFunction.parse(text, width)


def st_(text):
    return BasisState.parse(text)


# -- states and functions ------------------------------------------------------


def test_state_text_form():
    assert str(BasisState(4, 6)) == "0110"
    assert st_("0110") == BasisState(4, 6)
    assert [str(s) for s in BasisState.all(3)] == ["000", "001", "010", "011", "100", "101", "110", "111"]
    with pytest.raises(ValueError):
        BasisState(2, 4)
    with pytest.raises(ValueError):
        BasisState.parse("012")


def test_function_text_form():
    f = af("+4-1", 3)
    assert f.terms == ((1, 2), (-1, 0))
    assert str(f) == "+4-1"
    assert f.displacement == 3
    with pytest.raises(ValueError):
        af("+3", 3)
    with pytest.raises(ValueError):
        af("+2+2", 3)
    with pytest.raises(ValueError):
        af("*2", 3)


def test_negative_positions_are_dropped():
    f = ArithmeticFunction(3, [(1, 1), (-1, -1)])
    assert f.terms == ((1, 1),)
    assert promote(f) == promote(af("+2", 3))


@pytest.mark.parametrize(
    "func, state, applies",
    [("+2", "00", True), ("+2", "10", False), ("+2-1", "01", True)],
)
def test_applies_without_carry(func, state, applies):
    assert applies_without_carry(af(func, 2), st_(state)) is applies


def test_two_bit_function_tables():
    # the +2 and +2-1 tables on two bits
    plus2 = {"00": "10", "01": "11", "10": "10", "11": "11"}
    plus2_minus1 = {"00": "00", "01": "10", "10": "10", "11": "11"}
    for table, text in ((plus2, "+2"), (plus2_minus1, "+2-1")):
        for src, dst in table.items():
            assert str(eval_arith(af(text, 2), st_(src))) == dst


def test_empty_sum_fixes_everything():
    empty = ArithmeticFunction(2, [])
    assert eval_arith(empty, st_("11")) == st_("11")
    assert promote(empty).is_zero()


def test_width_mismatch_is_rejected():
    with pytest.raises(ValueError):
        eval_arith(af("+1", 3), st_("01"))
    with pytest.raises(ValueError):
        applies_without_carry(af("+1", 3), st_("01"))


def test_promote_examples():
    op = promote(af("+2", 2))
    assert op.column(0b00) == {0b10: 1}
    assert op.column(0b01) == {0b11: 1}
    assert op.column(0b10) == {}
    assert op.column(0b11) == {}
    # bit position 2 does not fit in width 2: every state is fixed
    assert promote(af("+4", 2)).is_zero()


def test_promote_agrees_with_pointwise_evaluation():
    for width in range(1, 5):
        for terms in itertools.chain.from_iterable(
            itertools.combinations(range(width + 1), r) for r in range(1, 3)
        ):
            for signs in itertools.product((1, -1), repeat=len(terms)):
                f = ArithmeticFunction(width, zip(signs, terms))
                op = promote(f)
                for s in BasisState.all(width):
                    image = eval_arith(f, s)
                    want = {} if image == s else {image.value: 1}
                    assert op.column(s.value) == want


# -- parity ------------------------------------------------------------------------


def test_parity_examples():
    assert parity_op(1, 2).diagonal_values() == [1, -1, 1, -1]
    assert parity_op(2, 2).diagonal_values() == [1, 1, -1, -1]
    with pytest.raises(ValueError):
        parity_op(3, 2)
    with pytest.raises(ValueError):
        parity_op(0, 2)


@pytest.mark.parametrize("width", range(1, 7))
def test_parity_involution_and_commutation(width):
    ident = SparseOperator.identity(width)
    ps = [parity_op(k, width) for k in range(1, width + 1)]
    for p in ps:
        assert p @ p == ident
    for p, q in itertools.combinations(ps, 2):
        assert p @ q == q @ p


@pytest.mark.parametrize("width", range(1, 7))
def test_parity_anticommutes_with_own_bit_only(width):
    for k in range(1, width + 1):
        p = parity_op(k, width)
        for b in range(width):
            for s in (1, -1):
                a = arith_op(width, (s, b))
                if b == k - 1:
                    assert p @ a == -(a @ p)
                else:
                    assert p @ a == a @ p


def test_parity_string_is_product():
    assert parity_string([1, 3], 3) == parity_op(1, 3) @ parity_op(3, 3)
    assert parity_string([], 3) == SparseOperator.identity(3)


# -- composition of disjoint supports -----------------------------------------------


def _small_functions(width):
    for r in (1, 2):
        for bits in itertools.combinations(range(width), r):
            for signs in itertools.product((1, -1), repeat=r):
                yield tuple(zip(signs, bits))


@pytest.mark.parametrize("width", range(1, 6))
def test_disjoint_support_composition(width):
    funcs = list(_small_functions(width))
    for f, g in itertools.product(funcs, repeat=2):
        if {b for _, b in f} & {b for _, b in g}:
            continue
        pf, pg = arith_op(width, *f), arith_op(width, *g)
        both = arith_op(width, *(f + g))
        assert pf @ pg == both
        assert pg @ pf == both


@pytest.mark.parametrize("width", range(1, 5))
def test_promote_is_grade_pure(width):
    for f in _small_functions(width):
        func = ArithmeticFunction(width, f)
        op = promote(func)
        g = grade_of(op)
        assert g == func.displacement
        for (r, c), _ in op.items():
            assert r == c + func.displacement


# -- bit flip ----------------------------------------------------------------------


def test_flip_all_examples():
    assert flip_all(st_("0110")) == st_("1001")
    assert flip_all(st_("00")) == st_("11")
    for s in BasisState.all(4):
        assert flip_all(flip_all(s)) == s


@given(st.integers(1, 10).flatmap(lambda w: st.tuples(st.just(w), st.integers(0, 2**w - 1))))
def test_flip_all_complements_every_bit(wv):
    width, value = wv
    s = BasisState(width, value)
    t = flip_all(s)
    assert all(s.bit(b) != t.bit(b) for b in range(width))
