"""Hypothesis strategies shared by the property tests."""
from hypothesis import strategies as st

from qcroots.rootdata import datum

SMALL_TYPES = ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "F4", "A1xA1", "A2xB2", "B2xB2"]


def data_and_lattice():
    return st.tuples(st.sampled_from(SMALL_TYPES), st.sampled_from(["sc", "adjoint"])).map(
        lambda t: datum(t[0], t[1])
    )


def fw_vector(d, bound=3):
    return st.lists(st.integers(-bound, bound), min_size=d.rank, max_size=d.rank)
