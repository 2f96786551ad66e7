"""Classification of quasi-constant (co)characters with certificates, and a
literal definitional oracle used to check it exhaustively on coefficient boxes.

The classifier works on the dominant representative: on each absolutely
simple factor a quasi-constant vector is a positive multiple of a fundamental
weight at a cospecial (minuscule) or special (cominuscule) vertex, and on
each Galois orbit of factors the nonzero multiples agree and the kinds are
homogeneous.
"""
from __future__ import annotations

import itertools
import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from qcroots import _linalg as la
from qcroots.predicates import PredicateWitness, is_quasi_constant
from qcroots.rootdata import CHARACTER, LatticeVector, RootDatum, vertex_data
from qcroots.weyl import GaloisAction, dominant_fw, permute

log = logging.getLogger(__name__)

QUASI_CONSTANT = "QuasiConstant"
NOT = "Not"
TRIVIAL = "trivial"
MINUSCULE = "minuscule"
COMINUSCULE = "cominuscule"


@dataclass(frozen=True)
class FactorKind:
    """Shape of the dominant representative on one absolutely simple factor:
    ``coefficient * eta(vertex)`` of the given kind, or trivial."""

    factor: int
    kind: str
    vertex: int | None = None
    coefficient: Fraction = Fraction(0)

    def __str__(self):
        if self.kind == TRIVIAL:
            return "Trivial"
        return f"{self.kind.capitalize()}(a{self.vertex})x{self.coefficient}"


@dataclass(frozen=True)
class ClassificationResult:
    verdict: str
    kinds: tuple[FactorKind, ...] = ()
    multiplier: Fraction | None = None
    witness: PredicateWitness | None = None
    dominant: LatticeVector | None = None
    word: tuple[int, ...] = ()

    @property
    def is_quasi_constant(self) -> bool:
        return self.verdict == QUASI_CONSTANT

    def reconstruct(self, d: RootDatum) -> LatticeVector:
        """``sum coefficient * eta(vertex)`` over the nontrivial factors."""
        side = self.dominant.side if self.dominant is not None else CHARACTER
        x = [Fraction(0)] * d.rank
        for k in self.kinds:
            if k.kind != TRIVIAL:
                x[k.vertex - 1] = k.coefficient
        return d.from_fw(x, side)


def _galois(g):
    return g if g is not None else GaloisAction.trivial()


@lru_cache(maxsize=256)
def k_simple_pieces(d: RootDatum, galois: GaloisAction) -> tuple[tuple[int, ...], ...]:
    """Factors grouped into Galois orbits (the k-simple pieces)."""
    parent = list(range(len(d.factors)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in galois.generators:
        for f, fac in enumerate(d.factors):
            img = d.factor_of(g[fac.offset] + 1)
            parent[find(f)] = find(img)
    groups: dict[int, list[int]] = {}
    for f in range(len(d.factors)):
        groups.setdefault(find(f), []).append(f)
    return tuple(tuple(v) for v in sorted(groups.values()))


@lru_cache(maxsize=256)
def _vertex_flags(d: RootDatum) -> tuple[tuple[bool, bool], ...]:
    """(cospecial, special) per 0-based simple root."""
    flags = [None] * d.rank
    for f in range(len(d.factors)):
        vd = vertex_data(d, f)
        for lab in vd.labels:
            flags[lab - 1] = (lab in vd.cospecial, lab in vd.special)
    return tuple(flags)


def _shape(x: Sequence, d: RootDatum, galois: GaloisAction) -> tuple[FactorKind, ...] | None:
    """Kinds of a dominant vector in fundamental coordinates, or None when it
    is not of quasi-constant shape."""
    flags = _vertex_flags(d)
    per_factor: dict[int, tuple[int, Fraction] | None] = {}
    for f, fac in enumerate(d.factors):
        nz = [i for i in fac.indices if x[i]]
        if not nz:
            per_factor[f] = None
        elif len(nz) == 1:
            per_factor[f] = (nz[0], x[nz[0]])
        else:
            return None
    kinds = [None] * len(d.factors)
    for piece in k_simple_pieces(d, galois):
        active = [(f, per_factor[f]) for f in piece if per_factor[f] is not None]
        for f in piece:
            if per_factor[f] is None:
                kinds[f] = FactorKind(f, TRIVIAL, None, Fraction(0))
        if not active:
            continue
        if len({c for _, (_, c) in active}) != 1:
            return None
        if all(flags[i][0] for _, (i, _) in active):
            kind = MINUSCULE
        elif all(flags[i][1] for _, (i, _) in active):
            kind = COMINUSCULE
        else:
            return None
        for f, (i, c) in active:
            kinds[f] = FactorKind(f, kind, i + 1, Fraction(c))
    return tuple(kinds)


def _classify(chi: LatticeVector, d: RootDatum, galois: GaloisAction, witness: bool) -> ClassificationResult:
    dd = d.for_side(chi.side)
    x, word = dominant_fw(d.fw_coords(chi), dd.cartan)
    dominant = d.from_fw(x, chi.side)
    kinds = _shape(x, dd, galois)
    if kinds is None:
        w = is_quasi_constant(chi, d, galois)[1] if witness else None
        return ClassificationResult(NOT, witness=w, dominant=dominant, word=tuple(word))
    coeffs = {k.coefficient for k in kinds if k.kind != TRIVIAL}
    if not coeffs:
        m = Fraction(1)
    elif len(coeffs) == 1:
        m = coeffs.pop()
    else:
        m = None  # independent k-simple pieces carry their own multipliers
    return ClassificationResult(QUASI_CONSTANT, kinds, m, None, dominant, tuple(word))


def classify_simple(chi: LatticeVector, d: RootDatum, witness: bool = True) -> ClassificationResult:
    """Classify on an absolutely simple datum (no Galois action)."""
    if not d.is_irreducible:
        raise ValueError("classify_simple needs an irreducible root datum")
    return _classify(chi, d, GaloisAction.trivial(), witness)


def classify_general(chi: LatticeVector, d: RootDatum, galois: GaloisAction | None = None,
                     witness: bool = True) -> ClassificationResult:
    """Classify on a product datum with a Galois action permuting factors.

    With ``witness=False`` a negative verdict carries no witness (faster).
    """
    return _classify(chi, d, _galois(galois), witness)


# -- definitional oracle -------------------------------------------------------

@lru_cache(maxsize=256)
def _oracle_orbits(d: RootDatum, galois: GaloisAction) -> tuple[tuple[int, ...], ...]:
    """For every coroot, the positions of its W x Galois orbit.  Closure is
    taken under reflections in *all* roots acting on ambient coordinates
    (scaled to integers)."""
    den = 1
    for v in d.roots + d.coroots:
        for x in v:
            den = int(np.lcm(den, x.denominator))
    roots = [tuple(int(x * den) for x in v) for v in d.roots]
    coroots = [tuple(int(x * den) for x in v) for v in d.coroots]
    index = {c: k for k, c in enumerate(coroots)}
    coeff_index = {b: k for k, b in enumerate(d.coroot_coeffs)}
    refl = list(zip(roots, coroots))
    d2 = den * den
    orbit_of: list[tuple[int, ...] | None] = [None] * len(coroots)
    for start in range(len(coroots)):
        if orbit_of[start] is not None:
            continue
        seen = {start}
        queue = [start]
        k = 0
        while k < len(queue):
            cur = queue[k]
            c = coroots[cur]
            k += 1
            nxt = []
            for a, av in refl:
                p = sum(x * y for x, y in zip(a, c))
                if p:
                    p //= d2  # <a, c> is an integer
                    nxt.append(index[tuple(ci - p * ai for ci, ai in zip(c, av))])
            for g in galois.generators:
                nxt.append(coeff_index[permute(d.coroot_coeffs[cur], g)])
            for j in nxt:
                if j not in seen:
                    seen.add(j)
                    queue.append(j)
        members = tuple(queue)
        for j in members:
            orbit_of[j] = members
    return tuple(orbit_of)


def _oracle_row(p: Sequence, orbits) -> bool:
    for a, va in enumerate(p):
        if not va:
            continue
        for b in orbits[a]:
            vb = p[b]
            # <chi, s a^vee> / <chi, a^vee> in {-1, 0, 1}
            if vb and vb != va and vb != -va:
                return False
    return True


def oracle_is_quasi_constant(chi: LatticeVector, d: RootDatum, galois: GaloisAction | None = None) -> bool:
    """Definition checked literally: for each root with nonzero pairing and
    each element of the orbit of its coroot, the ratio lies in {-1, 0, 1}."""
    dd = d.for_side(chi.side)
    p = [la.dot(chi.coords, c) for c in dd.coroots]
    return _oracle_row(p, _oracle_orbits(dd, _galois(galois)))


def _scaled_int_matrix(rows) -> tuple[np.ndarray, int]:
    den = 1
    for row in rows:
        for x in row:
            den = np.lcm(den, x.denominator)
    den = int(den)
    return np.array([[int(x * den) for x in row] for row in rows], dtype=np.int64), den


@dataclass
class BoxSearchReport:
    lattice: str
    side: str
    coeff_bound: int
    scanned: int = 0
    quasi_constant: int = 0
    mismatches: list[tuple[int, ...]] = field(default_factory=list)
    dominant_rays: set[tuple[int, ...]] = field(default_factory=set)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_classification(d: RootDatum, galois: GaloisAction | None = None, coeff_bound: int = 2,
                          side: str = CHARACTER, chunk: int = 20000) -> BoxSearchReport:
    """Compare :func:`classify_general` with the oracle on every vector whose
    coordinates in the chosen lattice basis lie in ``[-B, B]``.

    ``dominant_rays`` collects the primitive fundamental coordinates of the
    dominant representatives of the nonzero vectors classified
    quasi-constant.
    """
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be at least 1")
    g = _galois(galois).validate(d)
    t0 = time.perf_counter()
    dd = d.for_side(side)
    basis_fw = [list(row) for row in d.lattice_fw(side)]
    if not all(la.is_integral(row) for row in basis_fw):
        raise ValueError("lattice basis must be integral in fundamental coordinates")
    fw_mat = np.array([[int(x) for x in row] for row in basis_fw], dtype=np.int64)
    basis_amb = [d.from_fw(row, side).coords for row in basis_fw]
    bmat, bden = _scaled_int_matrix(basis_amb)
    cmat, cden = _scaled_int_matrix(dd.coroots)
    pair_mat = bmat @ cmat.T
    orbits = _oracle_orbits(dd, g)
    rng = range(-coeff_bound, coeff_bound + 1)
    report = BoxSearchReport(d.lattice_kind, side, coeff_bound)
    it = itertools.product(rng, repeat=d.rank)
    while True:
        block = list(itertools.islice(it, chunk))
        if not block:
            break
        coeffs = np.array(block, dtype=np.int64)
        scaled = coeffs @ pair_mat
        if np.any(scaled % (bden * cden)):
            raise ValueError("lattice vectors do not pair integrally with coroots")
        pairings = (scaled // (bden * cden)).tolist()
        xs = (coeffs @ fw_mat).tolist()
        for c, p, x in zip(block, pairings, xs):
            res = _fast_verdict(x, dd, g)
            ok = _oracle_row(p, orbits)
            report.scanned += 1
            if res is not None:
                report.quasi_constant += 1
                if any(res):
                    report.dominant_rays.add(la.primitive(res))
            if (res is not None) != ok:
                report.mismatches.append(tuple(c))
                log.warning("mismatch at %s (classifier %s, oracle %s)", c, res is not None, ok)
    report.elapsed = time.perf_counter() - t0
    return report


def _fast_verdict(x, dd: RootDatum, g: GaloisAction):
    """Dominant coordinates if quasi-constant by the classification, else None."""
    xd, _ = dominant_fw(x, dd.cartan)
    return xd if _shape(xd, dd, g) is not None else None
