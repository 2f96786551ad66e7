from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcroots.classify import (
    COMINUSCULE,
    MINUSCULE,
    NOT,
    QUASI_CONSTANT,
    TRIVIAL,
    classify_general,
    classify_simple,
    k_simple_pieces,
    oracle_is_quasi_constant,
    verify_classification,
)
from qcroots.predicates import is_quasi_constant
from qcroots.rootdata import COCHARACTER, datum, fundamental_weight
from qcroots.weyl import GaloisAction, apply_word, is_dominant
from strategies import SMALL_TYPES


def test_minuscule_vertex_is_preferred():
    d = datum("A3")
    res = classify_simple(fundamental_weight(d, 2), d)
    assert res.verdict == QUASI_CONSTANT
    (k,) = res.kinds
    assert (k.kind, k.vertex, k.coefficient) == (MINUSCULE, 2, 1)
    assert res.multiplier == 1


def test_cominuscule_multiple():
    d = datum("C3")
    res = classify_simple(3 * fundamental_weight(d, 3), d)
    (k,) = res.kinds
    assert (k.kind, k.vertex, k.coefficient) == (COMINUSCULE, 3, 3)
    assert res.multiplier == 3


def test_non_dominant_input_is_moved_to_the_chamber():
    d = datum("B3")
    chi = apply_word(fundamental_weight(d, 1), [1, 2, 3], d)
    res = classify_simple(chi, d)
    assert res.is_quasi_constant
    assert is_dominant(res.dominant, d)
    assert apply_word(chi, res.word, d) == res.dominant
    assert res.reconstruct(d) == fundamental_weight(d, 1)


@pytest.mark.parametrize("name, label", [("G2", 1), ("G2", 2), ("F4", 2), ("B4", 2), ("E8", 8)])
def test_not_quasi_constant_has_witness(name, label):
    d = datum(name)
    chi = fundamental_weight(d, label)
    res = classify_simple(chi, d)
    assert res.verdict == NOT
    assert res.witness is not None and res.witness.check(chi, d)


def test_zero_is_trivial():
    d = datum("E6")
    res = classify_simple(0 * fundamental_weight(d, 1), d)
    assert res.is_quasi_constant
    assert all(k.kind == TRIVIAL for k in res.kinds)
    assert res.multiplier == 1


def test_classify_simple_rejects_products():
    d = datum("A1xA1")
    with pytest.raises(ValueError):
        classify_simple(fundamental_weight(d, 1), d)


def test_k_simple_pieces():
    d = datum("A2xA2xB2")
    assert k_simple_pieces(d, GaloisAction.trivial()) == ((0,), (1,), (2,))
    g = GaloisAction.swap(d, (0, 1))
    assert k_simple_pieces(d, g) == ((0, 1), (2,))


def test_product_with_galois():
    d = datum("B2xB2")
    g = GaloisAction.swap(d, (0, 1))
    eta = lambda i: fundamental_weight(d, i)  # noqa: E731
    # homogeneous kind and multiplier across a Galois orbit
    assert classify_general(eta(1) + eta(3), d, g).is_quasi_constant
    assert classify_general(2 * eta(2) + 2 * eta(4), d, g).multiplier == 2
    # mixed multipliers
    assert not classify_general(eta(1) + 2 * eta(3), d, g).is_quasi_constant
    # mixed kinds: a1 cominuscule only, a4 minuscule only
    assert not classify_general(eta(1) + eta(4), d, g).is_quasi_constant
    # without Galois the factors are independent
    assert classify_general(eta(1) + eta(4), d).is_quasi_constant
    res = classify_general(eta(1) + 2 * eta(4), d)
    assert res.is_quasi_constant and res.multiplier is None
    # a vanishing factor is allowed inside a Galois orbit
    assert classify_general(eta(1), d, g).is_quasi_constant


def test_cocharacter_classification_uses_coroot_data():
    d = datum("C3")
    mu = d.from_fw([0, 0, 1], COCHARACTER)
    res = classify_simple(mu, d)
    # eta(a3^vee) of C3 is minuscule on the cocharacter side
    assert res.kinds[0].kind == MINUSCULE


@pytest.mark.parametrize("name", ["G2", "F4"])
def test_no_quasi_constant_characters(name):
    for lattice in ("sc", "adjoint"):
        rep = verify_classification(datum(name, lattice), coeff_bound=4 if name == "G2" else 2)
        assert rep.ok
        assert rep.quasi_constant == 1  # only zero
        assert not rep.dominant_rays


@pytest.mark.parametrize("name", ["B3", "C3", "B4", "C4"])
def test_bc_rays_are_the_extremities(name):
    d = datum(name)
    rep = verify_classification(d, coeff_bound=2)
    n = d.rank
    assert rep.ok
    assert rep.dominant_rays == {tuple([1] + [0] * (n - 1)), tuple([0] * (n - 1) + [1])}


def test_box_search_on_cocharacters_and_products():
    rep = verify_classification(datum("A2xB2"), coeff_bound=2, side=COCHARACTER)
    assert rep.ok and rep.scanned == 5 ** 4
    d = datum("A2xA2")
    rep = verify_classification(d, GaloisAction.swap(d, (0, 1)), coeff_bound=2)
    assert rep.ok


def test_box_search_rejects_bad_bound():
    with pytest.raises(ValueError):
        verify_classification(datum("A2"), coeff_bound=0)


@given(st.sampled_from(SMALL_TYPES), st.sampled_from(["sc", "adjoint"]), st.data())
def test_classifier_agrees_with_oracle(name, lattice, data):
    d = datum(name, lattice)
    c = data.draw(st.lists(st.integers(-4, 4), min_size=d.rank, max_size=d.rank))
    side = data.draw(st.sampled_from(["character", "cocharacter"]))
    chi = d.from_lattice_coords(c, side)
    res = classify_general(chi, d)
    assert res.is_quasi_constant == oracle_is_quasi_constant(chi, d)
    assert res.is_quasi_constant == is_quasi_constant(chi, d)[0]
    if res.is_quasi_constant:
        assert res.reconstruct(d) == d.project(res.dominant)


@given(st.data())
def test_classifier_agrees_with_oracle_under_galois(data):
    name = data.draw(st.sampled_from(["A2xA2", "B2xB2", "A1xA1xA1", "D4"]))
    d = datum(name)
    if name == "D4":
        g = GaloisAction.from_labels([[3, 2, 4, 1]])
    elif name == "A1xA1xA1":
        g = GaloisAction.from_labels([[2, 3, 1]])
    else:
        g = GaloisAction.swap(d, (0, 1))
    x = data.draw(st.lists(st.integers(-3, 3), min_size=d.rank, max_size=d.rank))
    chi = d.from_fw([Fraction(v) for v in x])
    assert classify_general(chi, d, g).is_quasi_constant == oracle_is_quasi_constant(chi, d, g)
