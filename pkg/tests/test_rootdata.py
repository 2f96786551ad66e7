from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcroots import _linalg as la
from qcroots.rootdata import (
    CHARACTER,
    COCHARACTER,
    InvariantViolation,
    LatticeVector,
    RootSystemSpec,
    build,
    coroot_chain,
    coroot_sum,
    datum,
    fundamental_coweight,
    fundamental_weight,
    simple_coroot,
    simple_root,
    vertex_data,
)
from strategies import SMALL_TYPES

F = Fraction
ALL_TYPES = (
    [f"A{n}" for n in range(1, 9)]
    + [f"B{n}" for n in range(2, 9)]
    + [f"C{n}" for n in range(2, 9)]
    + [f"D{n}" for n in range(3, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)


def root_count(name):
    letter, n = name[0], int(name[1:])
    return {
        "A": n * (n + 1),
        "B": 2 * n * n,
        "C": 2 * n * n,
        "D": 2 * n * (n - 1),
        "E": {6: 72, 7: 126, 8: 240}.get(n),
        "F": 48,
        "G": 12,
    }[letter]


@pytest.mark.parametrize("name", ALL_TYPES)
def test_root_counts(name):
    d = datum(name)
    assert len(d.roots) == root_count(name)
    assert len(set(d.roots)) == len(d.roots)
    assert d.positive_root_count() == len(d.roots) // 2


@pytest.mark.parametrize(
    "name, cartan",
    [
        ("A1", ((2,),)),
        ("B2", ((2, -1), (-2, 2))),
        ("C2", ((2, -2), (-1, 2))),
        ("G2", ((2, -3), (-1, 2))),
        ("A3", ((2, -1, 0), (-1, 2, -1), (0, -1, 2))),
    ],
)
def test_cartan_matrices(name, cartan):
    # cartan[i][j] = <a_j, a_i^vee>; in B2 the short root a2 = e2 has a2^vee = 2e2
    assert datum(name).cartan == cartan


def _oracle_highest(vectors, simple):
    """The unique positive element to which no simple element can be added
    inside the set, in coordinates of the simple basis."""
    pool = set(vectors)
    tops = []
    for v in pool:
        c = la.solve_left(simple, v)
        if min(c) >= 0 and all(tuple(a + b for a, b in zip(v, s)) not in pool for s in simple):
            tops.append(c)
    assert len(tops) == 1
    return tops[0]


@pytest.mark.parametrize("name", ALL_TYPES)
def test_multiplicities_against_ambient_oracle(name):
    d = datum(name)
    vd = vertex_data(d)
    m = _oracle_highest(d.roots, d.simple_roots)
    m_vee = _oracle_highest(d.coroots, d.simple_coroots)
    assert tuple(vd.m) == tuple(int(x) for x in m)
    assert tuple(vd.m_vee) == tuple(int(x) for x in m_vee)


@pytest.mark.parametrize(
    "name, m, m_vee",
    [
        ("G2", (3, 2), (2, 3)),
        ("F4", (2, 3, 4, 2), (2, 4, 3, 2)),
        ("E6", (1, 2, 2, 3, 2, 1), (1, 2, 2, 3, 2, 1)),
        ("E7", (2, 2, 3, 4, 3, 2, 1), (2, 2, 3, 4, 3, 2, 1)),
        ("E8", (2, 3, 4, 6, 5, 4, 3, 2), (2, 3, 4, 6, 5, 4, 3, 2)),
    ],
)
def test_exceptional_multiplicities(name, m, m_vee):
    vd = vertex_data(datum(name))
    assert vd.m == m and vd.m_vee == m_vee


@pytest.mark.parametrize(
    "name, special, cospecial",
    [
        ("C3", {3}, {1}),
        ("B3", {1}, {3}),
        ("A4", {1, 2, 3, 4}, {1, 2, 3, 4}),
        ("D5", {1, 4, 5}, {1, 4, 5}),
        ("E6", {1, 6}, {1, 6}),
        ("E7", {7}, {7}),
        ("E8", set(), set()),
        ("F4", set(), set()),
        ("G2", set(), set()),
    ],
)
def test_special_and_cospecial(name, special, cospecial):
    vd = vertex_data(datum(name))
    assert vd.special == special
    assert vd.cospecial == cospecial


@pytest.mark.parametrize("name", ALL_TYPES + ["A2xB3", "G2xA1"])
def test_fundamental_weights_are_dual_to_simple_coroots(name):
    d = datum(name)
    for i in range(1, d.rank + 1):
        eta = fundamental_weight(d, i)
        ceta = fundamental_coweight(d, i)
        for j in range(1, d.rank + 1):
            assert la.dot(eta.coords, simple_coroot(d, j).coords) == (i == j)
            assert la.dot(simple_root(d, j).coords, ceta.coords) == (i == j)


def test_fundamental_weights_in_ambient_coordinates():
    g2 = datum("G2")
    assert fundamental_weight(g2, 1).coords == (0, -1, 1)
    assert fundamental_weight(g2, 2).coords == (-1, -1, 2)
    f4 = datum("F4")
    assert fundamental_weight(f4, 1).coords == (1, 1, 0, 0)
    assert fundamental_weight(f4, 2).coords == (2, 1, 1, 0)
    assert fundamental_weight(f4, 3).coords == (F(3, 2), F(1, 2), F(1, 2), F(1, 2))
    assert fundamental_weight(f4, 4).coords == (1, 0, 0, 0)
    c4, b4 = datum("C4"), datum("B4")
    assert fundamental_weight(c4, 4).coords == (1, 1, 1, 1)
    assert fundamental_weight(b4, 4).coords == (F(1, 2),) * 4
    assert fundamental_weight(b4, 2).coords == (1, 1, 0, 0)


@pytest.mark.parametrize("name", ALL_TYPES)
def test_lattice_index_is_cartan_determinant(name):
    d = datum(name)
    det = la.inverse(d.cartan)  # smoke check: invertible
    assert det
    sc, ad = datum(name, "sc"), datum(name, "adjoint")
    # the root lattice has index det(A) in the weight lattice
    index = abs(_det(ad.lattice_fw(CHARACTER)))
    assert index == abs(_det(d.cartan))
    assert _det(sc.lattice_fw(CHARACTER)) == 1


def _det(m):
    m = [list(r) for r in la.as_matrix(m)]
    n, det = len(m), F(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return F(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


@pytest.mark.parametrize("name", ["A2", "B3", "C3", "D4", "G2", "F4", "E6", "A1xA1", "B2xG2"])
@pytest.mark.parametrize("lattice", ["sc", "adjoint"])
def test_perfect_pairing(name, lattice):
    d = datum(name, lattice)
    chars = d.lattice_basis(CHARACTER)
    cochars = d.lattice_basis(COCHARACTER)
    gram = [[la.dot(x.coords, y.coords) for y in cochars] for x in chars]
    assert all(la.is_integral(row) for row in gram)
    assert abs(_det(gram)) == 1


def test_membership_in_root_and_weight_lattices():
    ad, sc = datum("A2", "adjoint"), datum("A2", "sc")
    eta = fundamental_weight(sc, 1)
    assert sc.in_lattice(eta)
    assert not ad.in_lattice(eta)
    assert ad.in_lattice(3 * eta)
    assert ad.in_lattice(simple_root(ad, 2))
    # a component orthogonal to the root span is not in the lattice
    assert not sc.in_lattice(LatticeVector((1, 1, 1)))


def test_explicit_lattice_for_so4():
    # A1 x A1 with the character lattice generated by the roots and eta1 + eta2
    d = build(RootSystemSpec((("A", 1), ("A", 1)), ((1, 1), (2, 0))))
    assert d.lattice_kind == "explicit"
    assert not d.in_lattice(fundamental_weight(d, 1))
    assert d.in_lattice(fundamental_weight(d, 1) + fundamental_weight(d, 2))
    cochars = d.lattice_basis(COCHARACTER)
    gram = [[la.dot(x.coords, y.coords) for y in cochars] for x in d.lattice_basis(CHARACTER)]
    assert abs(_det(gram)) == 1


def test_explicit_lattice_rejects_non_lattices():
    with pytest.raises(ValueError):
        build(RootSystemSpec((("A", 2),), ((1, 0), (0, F(1, 2)))))  # not in the weight lattice
    with pytest.raises(ValueError):
        build(RootSystemSpec((("A", 2),), ((3, 0), (0, 3))))  # misses the roots
    with pytest.raises(ValueError):
        build(RootSystemSpec((("A", 2),), "sc", "adjoint"))  # not a dual pair


@pytest.mark.parametrize("bad", ["B1", "C1", "D2", "E5", "E9", "F3", "G3", "Z2", "A0", "Ax"])
def test_invalid_types_rejected(bad):
    with pytest.raises(ValueError):
        datum(bad)


def test_vectors_reject_floats_and_bad_sides():
    with pytest.raises(TypeError):
        LatticeVector((0.5, 1))
    with pytest.raises(ValueError):
        LatticeVector((1, 2), "weights")
    with pytest.raises(TypeError):
        LatticeVector((1,), CHARACTER) + LatticeVector((1,), COCHARACTER)


def test_label_checks():
    d = datum("A2")
    with pytest.raises(ValueError):
        fundamental_weight(d, 0)
    with pytest.raises(ValueError):
        fundamental_weight(d, 3)


@pytest.mark.parametrize("name", ["B3", "C4", "F4", "G2", "A2xB2"])
def test_dual_exchanges_roots_and_lattices(name):
    d = datum(name, "sc")
    dd = d.dual()
    assert dd.dual() is d
    assert dd.cartan == tuple(zip(*d.cartan))
    assert set(dd.roots) == set(d.coroots)
    assert dd.lattice_fw(CHARACTER) == d.lattice_fw(COCHARACTER)


@pytest.mark.parametrize("name", ALL_TYPES + ["A2xG2"])
def test_coroot_chain(name):
    d = datum(name)
    coroots = {tuple(c) for c in d.coroots}
    for f in range(len(d.factors)):
        chain = coroot_chain(d, f)
        for k in range(1, len(chain) + 1):
            assert coroot_sum(d, chain[:k]).coords in coroots
        total = tuple(chain.count(i + 1) for i in range(d.rank))
        assert total == d.highest_coroot(f)


def test_invariant_violation_is_runtime_error():
    assert issubclass(InvariantViolation, RuntimeError)


@given(st.sampled_from(SMALL_TYPES), st.data())
def test_reflections_permute_roots(name, data):
    d = datum(name)
    roots = set(d.roots)
    a = data.draw(st.sampled_from(d.roots))
    b = data.draw(st.sampled_from(d.roots))
    av = d.coroots[d.root_index[a]]
    image = tuple(x - la.dot(b, av) * y for x, y in zip(b, a))
    assert image in roots


@given(st.sampled_from(SMALL_TYPES), st.sampled_from(["sc", "adjoint"]), st.data())
def test_lattice_coordinates_round_trip(name, lattice, data):
    d = datum(name, lattice)
    side = data.draw(st.sampled_from([CHARACTER, COCHARACTER]))
    c = data.draw(st.lists(st.integers(-4, 4), min_size=d.rank, max_size=d.rank))
    v = d.from_lattice_coords(c, side)
    assert d.in_lattice(v)
    assert d.lattice_coords(v) == tuple(c)
