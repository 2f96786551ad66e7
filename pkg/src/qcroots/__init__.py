"""Quasi-constant characters and cocharacters of root data.

Exact (rational) computations with root data, Weyl and Galois orbits,
minuscule / cominuscule / quasi-constant predicates, the classification of
quasi-constant (co)characters, the duality between quasi-constant rays, and
prime bounds for Levi types.
"""
from qcroots.classify import (
    ClassificationResult,
    classify_general,
    classify_simple,
    oracle_is_quasi_constant,
    verify_classification,
)
from qcroots.duality import (
    Ray,
    centralizer_levi,
    dualize_ray,
    dualize_ray_inverse,
    quasi_constant_rays,
    verify_duality,
)
from qcroots.hasse import BoundReport, HasseCertificate, bound_for_levi, full_table, hasse_generator, orbital_ratio
from qcroots.predicates import (
    LeviType,
    is_cominuscule,
    is_L_ample,
    is_minuscule,
    is_orbitally_p_close,
    is_p_L_admissible,
    is_quasi_constant,
)
from qcroots.rootdata import (
    ADJOINT,
    CHARACTER,
    COCHARACTER,
    SIMPLY_CONNECTED,
    LatticeVector,
    RootDatum,
    RootSystemSpec,
    build,
    coroot_chain,
    datum,
    fundamental_coweight,
    fundamental_weight,
    vertex_data,
)
from qcroots.weyl import GaloisAction, dominant_representative, orbit

__version__ = "0.1.0"
