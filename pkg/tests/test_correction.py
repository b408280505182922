from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import oracles
from lenscorr.correction import (
    CorrectionTable,
    LensSpace,
    conjugate_spinc,
    conjugation_classes,
    d_closed,
    d_recursive,
    d_table,
    d_tange,
    normalize_lens,
    reciprocity_rhs,
    self_conjugate_labels,
)
from lenscorr.dedekind import dedekind_sum, rademacher_sum

L51 = (F(1), F(1, 5), F(-1, 5), F(-1, 5), F(1, 5))
L52 = (F(2, 5), F(2, 5), F(-2, 5), F(0), F(-2, 5))
METHODS = ("closed", "recursive", "tange")
POINTWISE = (d_closed, d_recursive, d_tange)


@st.composite
def lens_spaces(draw, p_max=150):
    p = draw(st.integers(2, p_max))
    q = draw(st.integers(1, p - 1))
    assume(gcd(p, q) == 1)
    return LensSpace(p, q)


@pytest.mark.parametrize(
    "p, q, expected",
    [
        (5, 7, LensSpace(5, 2)),
        (5, -2, LensSpace(5, 3)),
        (-5, 2, LensSpace(5, 2, True)),
        (1, 1, LensSpace(1, 0)),
        (-1, 4, LensSpace(1, 0, True)),
    ],
)
def test_normalize(p, q, expected):
    assert normalize_lens(p, q) == expected


@pytest.mark.parametrize("p, q", [(4, 2), (0, 1), (6, 9)])
def test_normalize_rejects(p, q):
    with pytest.raises(ValueError):
        normalize_lens(p, q)


@pytest.mark.parametrize("p, q", [(0, 0), (5, 0), (5, 5), (6, 4), (1, 1)])
def test_lens_space_invariants(p, q):
    with pytest.raises(ValueError):
        LensSpace(p, q)


@pytest.mark.parametrize("fn", POINTWISE)
def test_known_values_pointwise(fn):
    assert fn(normalize_lens(1, 1), 0) == 0
    assert fn(LensSpace(5, 1), 0) == 1
    assert fn(LensSpace(5, 1), 1) == F(1, 5)
    assert fn(LensSpace(5, 2), 3) == 0
    assert fn(LensSpace(27, 7), 9) == F(-1, 6)
    assert fn(LensSpace(2, 1), 0) == F(1, 4)
    assert fn(LensSpace(2, 1), 1) == F(-1, 4)


@pytest.mark.parametrize("method", METHODS)
def test_known_tables(method):
    assert d_table(LensSpace(5, 1), method).values == L51
    assert d_table(LensSpace(5, 2), method).values == L52
    assert d_table(LensSpace(2, 1), method).values == (F(1, 4), F(-1, 4))
    assert d_table(normalize_lens(1, 1), method).values == (F(0),)
    table = d_table(LensSpace(27, 7), method)
    assert [n for n, v in enumerate(table) if v == F(-1, 6)] == [9, 15, 18, 24]


def test_tange_at_zero_is_dedekind_part():
    assert d_tange(LensSpace(5, 1), 0) == 3 * F(1, 5) + F(4, 10)


def test_unknown_method():
    with pytest.raises(ValueError):
        d_table(LensSpace(5, 2), "magic")


def test_labels_reduced_mod_p():
    lens = LensSpace(5, 2)
    for fn in POINTWISE:
        assert fn(lens, 8) == fn(lens, 3) == fn(lens, -2)


def test_reciprocity_rhs_examples():
    assert reciprocity_rhs(2, 1, 0) == F(1, 4)
    assert reciprocity_rhs(2, 1, 0) == d_closed(LensSpace(2, 1), 0) + d_closed(LensSpace(1, 0), 0)
    assert reciprocity_rhs(5, 2, 6) == d_closed(LensSpace(5, 2), 1) + d_closed(LensSpace(2, 1), 0)


@pytest.mark.parametrize("p, q, n", [(5, 5, 0), (2, 4, 0), (5, 0, 0), (5, 2, 7), (5, 2, -1), (6, 4, 0)])
def test_reciprocity_rhs_rejects(p, q, n):
    with pytest.raises(ValueError):
        reciprocity_rhs(p, q, n)


def test_conjugation_examples():
    l27 = LensSpace(27, 7)
    assert conjugate_spinc(l27, 9) == 24
    assert conjugate_spinc(l27, 15) == 18
    assert conjugate_spinc(LensSpace(5, 2), 3) == 3
    assert conjugation_classes(LensSpace(5, 2)) == [(0, 1), (2, 4), (3,)]
    assert self_conjugate_labels(LensSpace(5, 2)) == [3]
    assert len(conjugation_classes(l27)) == 14


def test_orientation_flip_negates():
    flipped, plain = normalize_lens(-5, 2), LensSpace(5, 2)
    assert d_table(flipped).values == tuple(-v for v in L52)
    for fn in POINTWISE:
        assert fn(flipped, 1) == -fn(plain, 1)
    assert str(flipped) == "-L(5,2)"
    assert d_table(normalize_lens(5, -3)).values == L52


def test_table_statistics():
    table = d_table(LensSpace(5, 1))
    assert table.total == 1
    assert table.average == F(1, 5)
    assert table.zeros == []
    assert d_table(LensSpace(5, 2)).zeros == [3]
    assert table.is_integral() and table.is_conjugation_symmetric()
    with pytest.raises(ValueError):
        CorrectionTable(LensSpace(5, 1), (F(1),))


@given(lens_spaces(40), st.data())
def test_closed_against_oracle(lens, data):
    n = data.draw(st.integers(0, lens.p - 1))
    assert d_closed(lens, n) == oracles.d_value(lens.p, lens.q, n)


@given(lens_spaces(), st.data())
def test_three_routes_agree(lens, data):
    n = data.draw(st.integers(0, lens.p - 1))
    assert d_closed(lens, n) == d_recursive(lens, n) == d_tange(lens, n)


@given(lens_spaces(60))
def test_tables_agree(lens):
    tables = [d_table(lens, m).values for m in METHODS]
    assert tables[0] == tables[1] == tables[2]
    assert tables[0] == tuple(d_closed(lens, n) for n in lens.labels())


@given(lens_spaces(80), st.data())
def test_reciprocity(lens, data):
    p, q = lens.p, lens.q
    n = data.draw(st.integers(0, p + q - 1))
    other = LensSpace(q, p % q) if q > 1 else LensSpace(1, 0)
    assert d_closed(lens, n % p) + d_closed(other, n % q) == reciprocity_rhs(p, q, n)


@given(lens_spaces())
def test_conjugation_symmetry_and_integrality(lens):
    table = d_table(lens)
    assert table.is_conjugation_symmetric()
    assert table.is_integral()
    for n in lens.labels():
        assert conjugate_spinc(lens, conjugate_spinc(lens, n)) == n


@given(lens_spaces(), st.integers(-20, 20), st.data())
def test_well_defined_in_q(lens, k, data):
    n = data.draw(st.integers(0, lens.p - 1))
    assert d_closed(normalize_lens(lens.p, lens.q + k * lens.p), n) == d_closed(lens, n)


@given(lens_spaces(), st.data())
def test_t_function_from_sums(lens, data):
    # rebuilt from the public sum functions, not the kernel numerators
    p, q = lens.p, lens.q
    n = data.draw(st.integers(-p, 2 * p))
    assert d_closed(lens, n) == 2 * rademacher_sum(q, p, n) + dedekind_sum(q, p) - F(1, 2 * p)
