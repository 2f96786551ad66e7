"""Minuscule, cominuscule, quasi-constant, orbitally p-close, L-ample and
(p, L)-admissible.

Every predicate accepts character or cocharacter vectors; a cocharacter is
treated as a character of the dual datum (roots and coroots exchanged).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from qcroots.rootdata import LatticeVector, RootDatum, other_side, vertex_data
from qcroots.weyl import GaloisAction, dominant_fw, partition_indices

COROOT_PAIR = "coroot-pair"
AMPLE_VIOLATION = "ample-violation"


@dataclass(frozen=True)
class LeviType:
    """Simple roots (1-based labels) of a standard Levi subgroup."""

    labels: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "labels", frozenset(int(i) for i in self.labels))

    @classmethod
    def of(cls, labels: Iterable[int]) -> "LeviType":
        return cls(frozenset(labels))

    @classmethod
    def complement_of(cls, d: RootDatum, labels: Iterable[int]) -> "LeviType":
        """Levi whose simple roots are all those *not* in ``labels``."""
        drop = set(labels)
        for i in drop:
            d._check_label(i)
        return cls(frozenset(range(1, d.rank + 1)) - drop)

    def complement(self, d: RootDatum) -> frozenset[int]:
        return frozenset(range(1, d.rank + 1)) - self.labels

    def validate(self, d: RootDatum) -> "LeviType":
        for i in self.labels:
            d._check_label(i)
        return self

    def __str__(self):
        return "{" + ", ".join(f"a{i}" for i in sorted(self.labels)) + "}"


@dataclass(frozen=True)
class PredicateWitness:
    """Certificate that a predicate fails.

    ``coroot-pair``: two members of one orbit whose pairings with the vector
    have distinct nonzero absolute values.  ``ample-violation``: a simple root
    outside the Levi with nonnegative pairing.
    """

    kind: str
    vectors: tuple[LatticeVector, ...] = ()
    values: tuple[Fraction, ...] = ()
    orbit: int | None = None
    simple_root: int | None = None

    def check(self, chi: LatticeVector, d: RootDatum) -> bool:
        """Recompute the recorded pairings from the recorded (co)roots."""
        from qcroots import _linalg as la

        if self.kind == COROOT_PAIR:
            vals = tuple(la.dot(chi.coords, v.coords) for v in self.vectors)
            return (vals == self.values and len(vals) == 2
                    and 0 != abs(vals[0]) != abs(vals[1]) != 0)
        if self.kind == AMPLE_VIOLATION:
            return d.fw_coords(chi)[self.simple_root - 1] == self.values[0] >= 0
        return False


def _pairings(chi: LatticeVector, d: RootDatum):
    """Datum in which ``chi`` is a character, its fundamental coordinates and
    its pairings with all coroots of that datum."""
    dd = d.for_side(chi.side)
    x = d.fw_coords(chi)
    return dd, x, dd.coroot_pairings(x)


def _galois(g):
    return g if g is not None else GaloisAction.trivial()


def is_minuscule(chi: LatticeVector, d: RootDatum) -> bool:
    """All pairings with coroots (roots, for cocharacters) lie in {-1, 0, 1}."""
    _, _, p = _pairings(chi, d)
    return all(v in (-1, 0, 1) for v in p)


def is_cominuscule(chi: LatticeVector, d: RootDatum) -> bool:
    """The projection of ``chi`` to the root span is W-conjugate to the
    fundamental (co)weight of a special (cospecial) vertex.  Proper multiples
    are not cominuscule."""
    dd = d.for_side(chi.side)
    x, _ = dominant_fw(d.fw_coords(chi), dd.cartan)
    nz = [i for i, c in enumerate(x) if c != 0]
    if len(nz) != 1 or x[nz[0]] != 1:
        return False
    label = nz[0] + 1
    return label in vertex_data(dd, dd.factor_of(label)).special


def orbit_value_sets(chi: LatticeVector, d: RootDatum, galois: GaloisAction | None = None) -> list[set[Fraction]]:
    """Nonzero absolute pairings of ``chi`` on each coroot orbit."""
    dd, _, p = _pairings(chi, d)
    return [{abs(p[k]) for k in o if p[k]} for o in partition_indices(dd, _galois(galois))]


def is_quasi_constant(chi: LatticeVector, d: RootDatum, galois: GaloisAction | None = None
                      ) -> tuple[bool, PredicateWitness | None]:
    """On every W x Galois orbit of coroots the nonzero values of
    ``|<chi, c>|`` coincide.  On failure returns the first violating pair in
    orbit discovery order."""
    dd, _, p = _pairings(chi, d)
    for n, o in enumerate(partition_indices(dd, _galois(galois))):
        first = None
        for k in o:
            v = p[k]
            if not v:
                continue
            if first is None:
                first = k
            elif abs(v) != abs(p[first]):
                side = other_side(chi.side)
                return False, PredicateWitness(
                    COROOT_PAIR,
                    (LatticeVector(dd.coroots[first], side), LatticeVector(dd.coroots[k], side)),
                    (p[first], v),
                    orbit=n,
                )
    return True, None


def orbital_ratio_of(chi: LatticeVector, d: RootDatum, galois: GaloisAction | None = None) -> Fraction:
    """Largest per-orbit ratio of the extreme nonzero ``|<chi, c>|``; 1 if
    nothing pairs nonzero."""
    best = Fraction(1)
    for vals in orbit_value_sets(chi, d, galois):
        if vals:
            best = max(best, Fraction(max(vals)) / min(vals))
    return best


def is_orbitally_p_close(chi: LatticeVector, p: int, d: RootDatum, galois: GaloisAction | None = None) -> bool:
    if p < 2:
        raise ValueError(f"p must be at least 2, got {p}")
    return orbital_ratio_of(chi, d, galois) <= p - 1


def is_L_ample(chi: LatticeVector, levi: LeviType, d: RootDatum) -> tuple[bool, PredicateWitness | None]:
    """``<chi, a^vee> < 0`` for every simple root outside the Levi."""
    levi.validate(d)
    x = d.fw_coords(chi)
    for i in sorted(levi.complement(d)):
        if x[i - 1] >= 0:
            return False, PredicateWitness(AMPLE_VIOLATION, values=(x[i - 1],), simple_root=i)
    return True, None


def is_p_L_admissible(chi: LatticeVector, p: int, levi: LeviType, d: RootDatum,
                      galois: GaloisAction | None = None) -> bool:
    return is_orbitally_p_close(chi, p, d, galois) and is_L_ample(chi, levi, d)[0]
