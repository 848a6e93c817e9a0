import random
from fractions import Fraction

import pytest

import highwater.elements as el
from highwater import GF, QQ
from highwater.eigen import (eigendecompose, fusion_check, fusion_law,
                             miyamoto_consistency, miyamoto_map,
                             product_identity_suite, twisted_identity_suite)

from conftest import random_element


# -- eigenvectors of the distinguished axis ----------------------------------------

def test_spanning_eigenvectors(field):
    a0 = el.axis(field, 0)
    cases = [(el.u_elem(field, 2), field.scalar(0)),
             (el.v_elem(field, 2), field.scalar(2)),
             (el.w_elem(field, 2), field.scalar(1, 2)),
             (el.z_elem(field, 3), field.scalar(5, 2)),
             (el.w_tilde(field, 3), field.scalar(1, 2)),
             (a0, field.one)]
    for vec, lam in cases:
        assert a0 * vec == vec.scale(lam)


def test_eigendecomposition_total_and_exact(field):
    rng = random.Random(3)
    for _ in range(25):
        x = random_element(field, rng, support=8, index_bound=9)
        dec = eigendecompose(x, 0)
        assert dec.is_total
        total = el.zero(field)
        a0 = el.axis(field, 0)
        for q, comp in dec.components.items():
            total = total + comp
            if q != field.one:
                assert a0 * comp == comp.scale(q)
        assert total == x


def test_eigendecomposition_translated_axis(field):
    rng = random.Random(4)
    for axis_index in (-2, 1, 5):
        x = random_element(field, rng, support=6)
        dec = eigendecompose(x, axis_index)
        assert dec.is_total
        a = el.axis(field, axis_index)
        for q, comp in dec.components.items():
            if q != field.one:
                assert a * comp == comp.scale(q)


def test_axis_decomposes_as_itself(field):
    dec = eigendecompose(el.axis(field, 0), 0)
    assert dec.component(field.one) == el.axis(field, 0)
    for q, comp in dec.components.items():
        if q != field.one:
            assert comp.is_zero()


# -- the fusion law -----------------------------------------------------------------

def test_fusion_law_merge_char5():
    law0 = fusion_law(QQ)
    law5 = fusion_law(GF(5))
    # in characteristic 5 the eigenvalues 5/2 and 0 coincide
    assert GF(5).scalar(5, 2) == GF(5).zero
    z = GF(5).zero
    # merged rule: 0*0 must land back in {5/2, 0} = {0}
    assert law5.allowed(z, z) == frozenset({z})
    half0 = QQ.scalar(1, 2)
    assert law0.allowed(half0, half0) == frozenset(
        {QQ.scalar(5, 2), QQ.zero, QQ.scalar(2)})


def test_fusion_table_entries():
    law = fusion_law(QQ)
    one, two, half = QQ.one, QQ.scalar(2), QQ.scalar(1, 2)
    five2, zero = QQ.scalar(5, 2), QQ.zero
    assert law.allowed(one, zero) == frozenset()
    assert law.allowed(five2, two) == frozenset()
    assert law.allowed(one, one) == frozenset({one})
    assert law.allowed(two, half) == frozenset({half})
    assert law.allowed(zero, two) == frozenset({five2, two})


@pytest.mark.parametrize("p", [0, 5, 7, 11])
def test_fusion_check_small(p):
    F = QQ if p == 0 else GF(p)
    rep = fusion_check(F, 6)
    assert rep["ok"], rep["violations"]
    assert rep["checked"] > 0


# -- Miyamoto maps -------------------------------------------------------------------

def test_miyamoto_map_matches_index_route(field):
    rng = random.Random(9)
    for axis_index in (-1, 0, 2):
        aut = el.miyamoto(axis_index)
        for _ in range(10):
            x = random_element(field, rng, support=5)
            assert miyamoto_map(x, axis_index) == el.apply(aut, x)


def test_miyamoto_consistency_report(field):
    rep = miyamoto_consistency(field, 1, 9)
    assert rep["ok"]
    assert not rep["failures"]


# -- closed-form identity suites -----------------------------------------------------

@pytest.mark.parametrize("p", [0, 7])
def test_product_identity_suite(p):
    F = QQ if p == 0 else GF(p)
    entries = product_identity_suite(F, 6)
    bad = [e for e in entries if not e["ok"]]
    assert not bad, bad


def test_twisted_identity_suite(field):
    entries = twisted_identity_suite(field, 6)
    bad = [e for e in entries if not e["ok"]]
    assert not bad, bad
