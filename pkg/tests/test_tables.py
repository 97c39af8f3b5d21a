"""Multiplication tables against direct collection, on both code paths."""

import random

import pytest

import pgw
from pgw import presentation as pc
from pgw import tables

from conftest import ALL_NAMES


@pytest.mark.parametrize("name", ALL_NAMES)
def test_table_matches_collection(name):
    P = pgw.load(name)
    t = tables.get_tables(P)
    rng = random.Random(13)
    for _ in range(300):
        a = t.elements[rng.randrange(len(t.elements))]
        b = t.elements[rng.randrange(len(t.elements))]
        assert t.elem(t.mul_idx(t.idx(a), t.idx(b))) == pgw.mul(P, a, b)


@pytest.mark.parametrize("name", ALL_NAMES)
def test_inverse_table(name):
    P = pgw.load(name)
    t = tables.get_tables(P)
    for i, a in enumerate(t.elements):
        assert t.elem(t.inv[i]) == pgw.inv(P, a)


def test_elements_sorted_lexicographically():
    P = pgw.load("w81")
    t = tables.get_tables(P)
    assert list(t.elements) == sorted(t.elements)
    assert t.elements[0] == pgw.identity(P)


@pytest.mark.parametrize("name", ["h27", "x27", "w81"])
def test_pth_power_table(name):
    P = pgw.load(name)
    t = tables.get_tables(P)
    pth = t.pth_power()
    for i, a in enumerate(t.elements):
        assert t.elem(pth[i]) == pgw.pow_(P, a, P.p)


def test_comm_col_matches_collection():
    P = pgw.load("m243")
    t = tables.get_tables(P)
    rng = random.Random(5)
    for _ in range(20):
        g = rng.randrange(len(t.elements))
        col = t.comm_col(g)
        for i in rng.sample(range(len(t.elements)), 40):
            assert t.elem(col[i]) == pgw.comm(P, t.elements[i], t.elements[g])


def test_closure_mask_matches_bfs():
    P = pgw.load("g2187")
    t = tables.get_tables(P)
    seed = [t.idx(P.generator(3)), t.idx(P.generator(6))]
    mask = t.closure_mask(seed)
    H = pgw.closure(P, [P.generator(3), P.generator(6)])
    assert int(mask.sum()) == H.order
    assert {t.elements[i] for i in range(len(t.elements)) if mask[i]} == H.element_set


def test_pure_path_agrees_with_table_path(monkeypatch):
    # force the no-full-table code path and compare structure results
    monkeypatch.setattr(tables, "FULL_TABLE_CAP", 0)
    tables.get_tables.cache_clear()
    import pgw.structure as st
    P = pgw.load("w81")
    t = tables.get_tables(P)
    assert t.full is None
    pure_center = pgw.center(P).element_set
    pure_frattini = pgw.frattini(P).element_set
    pure_maxes = [M.element_set for M in pgw.maximal_subgroups(P)]
    pure_class = pgw.nilpotency_class(P)

    monkeypatch.setattr(tables, "FULL_TABLE_CAP", 6600)
    tables.get_tables.cache_clear()
    st.center.cache_clear()
    st.frattini.cache_clear()
    st.agemo.cache_clear()
    st.derived.cache_clear()
    st.maximal_subgroups.cache_clear()
    st.frattini_coordinates.cache_clear()
    st.upper_central_series.cache_clear()
    st.lower_central_series.cache_clear()
    st.whole_group.cache_clear()
    t2 = tables.get_tables(P)
    assert t2.full is not None
    assert pgw.center(P).element_set == pure_center
    assert pgw.frattini(P).element_set == pure_frattini
    assert [M.element_set for M in pgw.maximal_subgroups(P)] == pure_maxes
    assert pgw.nilpotency_class(P) == pure_class


@pytest.fixture(autouse=True)
def _reset_caches_after_monkeypatch():
    yield
    import pgw.structure as st
    tables.get_tables.cache_clear()
    st.center.cache_clear()
    st.frattini.cache_clear()
    st.agemo.cache_clear()
    st.derived.cache_clear()
    st.maximal_subgroups.cache_clear()
    st.frattini_coordinates.cache_clear()
    st.upper_central_series.cache_clear()
    st.lower_central_series.cache_clear()
    st.whole_group.cache_clear()


def test_perm_of_images_identity_and_conjugation():
    import numpy as np
    P = pgw.load("h27")
    t = tables.get_tables(P)
    ident = np.array([[t.idx(g) for g in P.generators()]], dtype=np.int32)
    perm = t.perm_of_images(ident)
    assert (perm[0] == np.arange(len(t.elements))).all()
    f1 = P.generator(1)
    conj_images = np.array(
        [[t.idx(pgw.conj(P, g, f1)) for g in P.generators()]], dtype=np.int32
    )
    perm = t.perm_of_images(conj_images)[0]
    for i, a in enumerate(t.elements):
        assert t.elements[perm[i]] == pgw.conj(P, a, f1)
