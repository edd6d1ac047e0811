import os

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gdet.core import (
    Assignment,
    bcde_decompose,
    character_transform,
    d2_closed_form,
    det_group,
    det_matrix_oracle,
    factor_step,
    factor_tree,
)

small_int = st.integers(min_value=-10, max_value=10)


def assignments(max_n=3, elements=small_int):
    return st.integers(min_value=0, max_value=max_n).flatmap(
        lambda n: st.tuples(
            st.just(n), st.lists(elements, min_size=1 << n, max_size=1 << n)
        )
    ).map(lambda t: Assignment(t[0], tuple(t[1])))


def test_transform_known_values():
    assert character_transform(Assignment(2, (2, 1, 1, 1))) == (5, 1, 1, 1)
    assert character_transform(Assignment(1, (8, 3))) == (11, 5)
    assert character_transform(Assignment(0, (7,))) == (7,)


def test_det_known_values():
    assert det_group(Assignment(1, (8, 3))) == 55
    assert det_group(Assignment(2, (2, 1, 1, 1))) == 5
    assert det_group(Assignment(4, (2,) + (1,) * 15)) == 17
    assert det_group(Assignment(4, (1,) + (0,) * 15)) == 1


def test_transform_is_involution_up_to_scale():
    a = Assignment(3, (3, -1, 4, 1, -5, 9, 2, -6))
    twice = character_transform(Assignment(3, character_transform(a)))
    assert twice == tuple(8 * v for v in a.values)


@given(assignments())
@settings(max_examples=200)
def test_group_det_matches_matrix_oracle(a):
    assert det_group(a) == det_matrix_oracle(a)


@given(assignments(max_n=4))
@settings(max_examples=200)
def test_factor_step_identity(a):
    if a.n == 0:
        with pytest.raises(ValueError):
            factor_step(a)
        return
    plus, minus = factor_step(a)
    assert det_group(a) == det_group(plus) * det_group(minus)


def test_factor_tree_shape():
    tree = factor_tree(Assignment(2, (3, 1, 0, 0)))
    assert tree.value == 64
    assert [child.values for child in tree.children] == [(3, 1), (3, 1)]
    assert all(child.is_leaf and child.value == 8 for child in tree.children)


def test_d2_closed_form_values():
    assert d2_closed_form(3, 1, 0, 0) == 64
    assert d2_closed_form(1, 0, 0, 0) == 1
    assert d2_closed_form(1, 1, 1, 0) == -3
    assert d2_closed_form(0, 3, 0, -1) == 64
    assert d2_closed_form(4, -1, 0, -1) == 192
    assert d2_closed_form(1, 1, 1, 3) == 48


@given(small_int, small_int, small_int, small_int)
@settings(max_examples=300)
def test_d2_closed_form_matches_det(x0, x1, x2, x3):
    assert d2_closed_form(x0, x1, x2, x3) == det_group(Assignment(2, (x0, x1, x2, x3)))


rank4_values = st.lists(small_int, min_size=16, max_size=16).map(tuple)


def test_bcde_known_decompositions():
    q = bcde_decompose(Assignment(4, (1,) * 16))
    assert q.b == (4, 4, 4, 4)
    assert q.c == q.d == q.e == (0, 0, 0, 0)

    f4 = (2, -1, 1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1, 0)
    q = bcde_decompose(Assignment(4, f4))
    assert q.b == (-1, -1, 4, 0)
    assert q.c == q.d == q.e == (3, -1, 0, 0)
    assert q.d2_product() == (1 << 24) * 3


@given(rank4_values)
@settings(max_examples=200)
def test_bcde_product_identity(values):
    a = Assignment(4, values)
    assert bcde_decompose(a).d2_product() == det_group(a)


@given(rank4_values)
@settings(max_examples=200)
def test_bcde_congruences(values):
    a = Assignment(4, values)
    q = bcde_decompose(a)
    for i in range(4):
        bi, ci, di, ei = q.b[i], q.c[i], q.d[i], q.e[i]
        assert bi % 2 == ci % 2 == di % 2 == ei % 2
        assert bi + ci + di + ei == 4 * a.values[i]


def test_bcde_requires_rank_4():
    with pytest.raises(ValueError):
        bcde_decompose(Assignment(2, (1, 2, 3, 4)))


def test_assignment_validation():
    with pytest.raises(ValueError):
        Assignment(2, (1, 2, 3))
    with pytest.raises(ValueError):
        Assignment(-1, ())
    a = Assignment(1, (True, 2.0))
    assert a.values == (1, 2) and all(type(v) is int for v in a.values)


def test_rank_cap_env_override(monkeypatch):
    monkeypatch.setenv("GDET_MAX_RANK", "3")
    with pytest.raises(ValueError):
        Assignment(4, (0,) * 16)
    monkeypatch.setenv("GDET_MAX_RANK", "5")
    assert Assignment(5, (0,) * 32).n == 5
    monkeypatch.delenv("GDET_MAX_RANK")
    with pytest.raises(ValueError):
        Assignment(9, (0,) * 512)


def test_matrix_oracle_cap():
    with pytest.raises(ValueError):
        det_matrix_oracle(Assignment(4, (0,) * 16), cap=3)
