import itertools
from collections import Counter

import pytest

from spinbits.bitcore import arith_op, parity_op, parity_string
from spinbits.opalgebra import SparseOperator, bracket, grade_of, lie_closure, same_span, span_dim
from spinbits.spinodd import (
    B,
    GeneratorSpec,
    generators,
    odd_basis,
    odd_basis_elements,
    odd_cartan,
    positive_elements,
    verify_odd,
)


def test_generator_examples():
    assert B(2, 1, 2) == SparseOperator(2, {(0b10, 0b01): 1})
    assert B(1, 1, 2) == SparseOperator(2, {(0b01, 0b00): 1, (0b11, 0b10): 1})
    for n in range(1, 5):
        for k in range(1, n + 1):
            assert B(k, -1, n) == B(k, 1, n).adjoint()
    with pytest.raises(ValueError):
        GeneratorSpec(3, 1, 2)
    with pytest.raises(ValueError):
        B(1, 0, 2)


def test_generators_order():
    assert generators(2) == [B(1, 1, 2), B(1, -1, 2), B(2, 1, 2), B(2, -1, 2)]
    assert generators(1, width=3)[0] == arith_op(3, (1, 0))


def test_basis_n1():
    assert odd_basis(1) == [arith_op(1, (1, 0)), parity_op(1, 1), arith_op(1, (-1, 0))]


def test_basis_n2_rows():
    n = 2
    p1 = parity_op(1, n)
    positive = [arith_op(n, (1, 0)), arith_op(n, (1, 1), (-1, 0)), p1 @ arith_op(n, (1, 1)), arith_op(n, (1, 1), (1, 0))]
    negative = [arith_op(n, (-1, 0)), arith_op(n, (-1, 1), (1, 0)), p1 @ arith_op(n, (-1, 1)), arith_op(n, (-1, 1), (-1, 0))]
    assert odd_basis(n) == positive + [p1, parity_op(2, n)] + negative


def _parse_element(text, n):
    """Read 'p1p2∘[+4-1]' style labels back into an operator."""
    if text.startswith("p") and "∘" not in text and "[" not in text:
        return parity_op(int(text[1:]), n)
    prefix, _, terms = text.rpartition("[")
    labels = [int(x) for x in prefix.rstrip("∘").split("p")[1:]]
    body = terms.rstrip("]")
    parsed = []
    i = 0
    while i < len(body):
        j = i + 1
        while j < len(body) and body[j].isdigit():
            j += 1
        value = int(body[i + 1 : j])
        parsed.append((1 if body[i] == "+" else -1, value.bit_length() - 1))
        i = j
    return parity_string(labels, n) @ arith_op(n, *parsed)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_element_labels_round_trip(n):
    for elem, op in zip(odd_basis_elements(n), odd_basis(n)):
        assert _parse_element(str(elem), n) == op


def test_element_label_examples():
    assert [str(e) for e in positive_elements(2)] == ["[+1]", "[+2-1]", "p1∘[+2]", "[+2+1]"]
    assert [str(e) for e in odd_basis_elements(1)] == ["[+1]", "p1", "[-1]"]


@pytest.mark.parametrize("n", range(1, 6))
def test_basis_size_and_order(n):
    elems = odd_basis_elements(n)
    assert len(elems) == n * (2 * n + 1)
    pos = positive_elements(n)
    grades = [e.grade for e in pos]
    # ordered by top bit, then by displacement
    keys = [(e.hi, e.grade) for e in pos]
    assert keys == sorted(keys)
    assert [e.grade for e in elems[len(pos) + n :]] == [-g for g in grades]


@pytest.mark.parametrize("n", range(1, 6))
def test_positive_grades_are_the_expected_set(n):
    grades = Counter(grade_of(op) for op in odd_basis(n) if grade_of(op) > 0)
    expected = Counter()
    for hi in range(n):
        expected[1 << hi] += 1
        for lo in range(hi):
            expected[(1 << hi) + (1 << lo)] += 1
            expected[(1 << hi) - (1 << lo)] += 1
    assert grades == expected
    # equal integers such as 2+1 and 4-1 come from distinct formal sums
    pos = positive_elements(n)
    assert len({(e.hi, e.lo, e.s_lo) for e in pos}) == len(pos)


@pytest.mark.parametrize("n", range(1, 5))
def test_elements_are_grade_pure(n):
    for e, op in zip(odd_basis_elements(n), odd_basis(n)):
        assert grade_of(op) == e.grade


def test_cartan_n2_diagonals():
    first, second = odd_cartan(2)
    assert first.diagonal_values() == [0, 1, -1, 0]
    assert second.diagonal_values() == [1, -1, 1, -1]
    assert odd_cartan(1) == [parity_op(1, 1)]


@pytest.mark.parametrize("n", range(1, 6))
def test_cartan_is_abelian(n):
    cartan = odd_cartan(n)
    assert len(cartan) == n
    assert span_dim(cartan) == n
    for a, b in itertools.combinations(cartan, 2):
        assert bracket(a, b).is_zero()


@pytest.mark.parametrize("n", range(1, 5))
def test_closure_spans_basis(n):
    closure = lie_closure(generators(n))
    assert closure.dim == n * (2 * n + 1)
    assert same_span(closure.ops, odd_basis(n))


@pytest.mark.parametrize("n", range(1, 6))
def test_verify_odd_passes(n):
    report = verify_odd(n)
    assert report.passed, report.to_text()
    assert [c.id for c in report.checks] == [
        "a.cartan_bracket",
        "b.triple_normalization",
        "c.basis_closure",
        "d.dimension",
        "e.extremal_vectors",
        "f.commutant",
        "g.intro_generators",
    ]


def test_verify_odd_bounds():
    with pytest.raises(ValueError):
        verify_odd(0)
    with pytest.raises(ValueError):
        verify_odd(4, max_n=3)


def test_short_root_chain():
    n = 3
    b1, b2 = B(1, 1, n), B(2, 1, n)
    x = bracket(b2, b1)
    assert not x.is_zero()
    y = bracket(x, b1)
    assert not y.is_zero()
    assert bracket(y, b1).is_zero()


@pytest.mark.parametrize("n", [3, 4, 5])
def test_long_root_chains(n):
    for k in range(3, n + 1):
        x = bracket(B(k, 1, n), B(k - 1, 1, n))
        assert not x.is_zero()
        assert bracket(B(k - 1, 1, n), x).is_zero()
        assert bracket(B(k, 1, n), x).is_zero()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_chain_values(n):
    b1, b2 = B(1, 1, n), B(2, 1, n)
    p1 = parity_op(1, n)
    assert bracket(b2, b1) == p1 @ arith_op(n, (1, 1))
    assert bracket(p1 @ arith_op(n, (1, 1)), b1) == arith_op(n, (1, 1), (1, 0)).scale(-2)
    for k in range(3, n + 1):
        want = parity_op(k - 1, n) @ arith_op(n, (1, k - 1), (-1, k - 3))
        assert bracket(B(k, 1, n), B(k - 1, 1, n)) == want


@pytest.mark.parametrize("n", range(1, 6))
def test_bit_triples_commute_and_separate_states(n):
    triples = [(arith_op(n, (-1, k)), parity_op(k + 1, n), arith_op(n, (1, k))) for k in range(n)]
    for s, t in itertools.combinations(triples, 2):
        for a in s:
            for b in t:
                assert bracket(a, b).is_zero()
    patterns = Counter(tuple(parity_op(k, n).diagonal_values()[m] for k in range(1, n + 1)) for m in range(1 << n))
    assert set(patterns) == set(itertools.product((1, -1), repeat=n))
    assert set(patterns.values()) == {1}


@pytest.mark.parametrize("n", range(1, 6))
def test_all_ones_state_has_negative_parities(n):
    top = (1 << n) - 1
    assert [parity_op(k, n).diagonal_values()[top] for k in range(1, n + 1)] == [-1] * n


def test_embedding_in_wider_space():
    wide = odd_basis(2, width=3)
    assert all(op.width == 3 for op in wide)
    assert all(not op.column(0b100) or all(r >= 0b100 for r in op.column(0b100)) for op in wide)
    assert lie_closure(wide).dim == 10
