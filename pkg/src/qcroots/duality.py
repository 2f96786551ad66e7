"""Rays, Levi centralisers and the duality between dominant quasi-constant
cocharacter rays and character rays.

A dominant quasi-constant cocharacter ray is, on every simple factor, either
zero or spanned by a fundamental coweight.  Its dual ray is spanned by the
sum of the matching fundamental weights over the factors where it is nonzero.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from qcroots import _linalg as la
from qcroots.classify import COMINUSCULE, MINUSCULE, k_simple_pieces
from qcroots.predicates import LeviType, is_quasi_constant
from qcroots.rootdata import (
    CHARACTER,
    COCHARACTER,
    LatticeVector,
    RootDatum,
    other_side,
    vertex_data,
)
from qcroots.weyl import GaloisAction


@dataclass(frozen=True)
class Ray:
    """Half-line spanned by a primitive vector of the (co)character lattice."""

    direction: LatticeVector

    @property
    def side(self) -> str:
        return self.direction.side

    @classmethod
    def through(cls, v: LatticeVector, d: RootDatum) -> "Ray":
        """The ray through a nonzero vector of the root span."""
        c = d.lattice_coords(v)
        if all(x == 0 for x in c):
            raise ValueError("the zero vector spans no ray")
        return cls(d.from_lattice_coords(la.primitive(c), v.side))

    def fw_coords(self, d: RootDatum) -> tuple[Fraction, ...]:
        return d.fw_coords(self.direction)

    def lattice_coords(self, d: RootDatum) -> tuple[int, ...]:
        return tuple(int(x) for x in d.lattice_coords(self.direction))

    def contains(self, v: LatticeVector, d: RootDatum) -> bool:
        """True when ``v`` is a positive multiple of the direction."""
        if v.side != self.side or v.is_zero():
            return False
        try:
            return Ray.through(v, d) == self
        except ValueError:
            return False

    def __str__(self):
        return f"ray{self.direction}"


def _as_vector(r) -> LatticeVector:
    return r.direction if isinstance(r, Ray) else r


def centralizer_levi(r: Ray | LatticeVector, d: RootDatum) -> LeviType:
    """Simple roots orthogonal to the cocharacter ray: the Levi Cent(r)."""
    v = _as_vector(r)
    if v.side != COCHARACTER:
        raise ValueError("centralizer_levi expects a cocharacter")
    y = d.fw_coords(v)
    return LeviType(frozenset(i + 1 for i, c in enumerate(y) if c == 0))


def _galois(g):
    return g if g is not None else GaloisAction.trivial()


def _dualize(r: Ray, d: RootDatum, galois: GaloisAction | None, source: str) -> Ray:
    if r.side != source:
        raise ValueError(f"expected a {source} ray")
    y = r.fw_coords(d)
    if any(c < 0 for c in y):
        raise ValueError("ray is not dominant; take the dominant representative first")
    ok, w = is_quasi_constant(r.direction, d, galois)
    if not ok:
        raise ValueError(f"ray is not quasi-constant (witness values {w.values})")
    x = [0] * d.rank
    for fac in d.factors:
        nz = [i for i in fac.indices if y[i] != 0]
        if len(nz) > 1:
            raise ValueError(f"projection to {fac.name} is not proportional to a fundamental (co)weight")
        for i in nz:
            x[i] = 1
    target = other_side(source)
    return Ray.through(d.from_fw(x, target), d)


def dualize_ray(r: Ray, d: RootDatum, galois: GaloisAction | None = None) -> Ray:
    """Dual character ray of a dominant quasi-constant cocharacter ray."""
    return _dualize(r, d, galois, COCHARACTER)


def dualize_ray_inverse(r: Ray, d: RootDatum, galois: GaloisAction | None = None) -> Ray:
    """Dual cocharacter ray of a dominant quasi-constant character ray."""
    return _dualize(r, d, galois, CHARACTER)


def quasi_constant_rays(d: RootDatum, galois: GaloisAction | None = None,
                        side: str = COCHARACTER) -> list[Ray]:
    """Dominant quasi-constant rays whose nonzero factor blocks are
    fundamental (co)weights, enumerated from vertex selections.

    On each Galois orbit of factors the selected vertices are all minuscule
    or all cominuscule; unselected factors are zero.
    """
    g = _galois(galois)
    dd = d.for_side(side)
    vds = [vertex_data(dd, f) for f in range(len(d.factors))]
    allowed = {
        MINUSCULE: [sorted(v.cospecial) for v in vds],
        COMINUSCULE: [sorted(v.special) for v in vds],
    }
    per_piece = []
    for piece in k_simple_pieces(d, g):
        options = {()}
        for kind in (MINUSCULE, COMINUSCULE):
            choices = [[None] + allowed[kind][f] for f in piece]
            for combo in itertools.product(*choices):
                options.add(tuple(v for v in combo if v is not None))
        per_piece.append(sorted(options))
    rays = []
    seen = set()
    for combo in itertools.product(*per_piece):
        labels = [v for part in combo for v in part]
        if not labels:
            continue
        x = [int(i + 1 in labels) for i in range(d.rank)]
        ray = Ray.through(d.from_fw(x, side), d)
        if ray not in seen:
            seen.add(ray)
            rays.append(ray)
    return rays


@dataclass
class DualityRecord:
    ray: Ray
    dual: Ray | None
    levi: LeviType
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


@dataclass
class DualityReport:
    datum: str
    records: list[DualityRecord] = field(default_factory=list)

    @property
    def failures(self) -> list[tuple[Ray, str]]:
        return [(rec.ray, name) for rec in self.records for name, v in rec.checks.items() if not v]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_duality(d: RootDatum, galois: GaloisAction | None = None) -> DualityReport:
    """Check the duality on every enumerated dominant quasi-constant ray:
    the input is quasi-constant, the dual ray is quasi-constant and dominant,
    it pairs to zero exactly with the simple coroots of Cent(r), no larger
    Levi has that property, and the two constructions are mutually inverse."""
    g = _galois(galois)
    report = DualityReport(repr(d))
    for r in quasi_constant_rays(d, g, COCHARACTER):
        checks = {"input_quasi_constant": is_quasi_constant(r.direction, d, g)[0]}
        levi = centralizer_levi(r, d)
        try:
            rv = dualize_ray(r, d, g)
        except ValueError:
            checks["dualizable"] = False
            report.records.append(DualityRecord(r, None, levi, checks))
            continue
        x = rv.fw_coords(d)
        support = frozenset(i + 1 for i, c in enumerate(x) if c != 0)
        checks["dual_quasi_constant"] = is_quasi_constant(rv.direction, d, g)[0]
        checks["dual_dominant"] = all(c >= 0 for c in x)
        checks["levi_restriction"] = support == levi.complement(d)
        # every strictly larger Levi contains a simple root pairing nonzero
        checks["levi_maximal"] = all(x[i - 1] != 0 for i in levi.complement(d))
        checks["involution"] = dualize_ray_inverse(rv, d, g) == r
        report.records.append(DualityRecord(r, rv, levi, checks))
    for rv in quasi_constant_rays(d, g, CHARACTER):
        back = dualize_ray_inverse(rv, d, g)
        checks = {"involution_character_side": dualize_ray(back, d, g) == rv}
        report.records.append(DualityRecord(back, rv, centralizer_levi(back, d), checks))
    return report
