"""Reflections, Weyl(-Galois) orbits and dominant representatives.

The Galois group is modelled by a finite group of permutations of the simple
roots preserving the Cartan matrix (diagram automorphisms, including swaps of
isomorphic factors).  Orbits are built by breadth-first closure under the
simple reflections and the Galois generators; the Weyl group itself is never
enumerated.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from qcroots import _linalg as la
from qcroots.rootdata import (
    CHARACTER,
    COCHARACTER,
    LatticeVector,
    RootDatum,
)


@dataclass(frozen=True)
class GaloisAction:
    """Generators of a group of diagram automorphisms.

    Each generator is a 0-based permutation ``p`` of the simple roots:
    ``a_i -> a_{p[i]}``.
    """

    generators: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(tuple(int(x) for x in g) for g in self.generators))
        for g in self.generators:
            if sorted(g) != list(range(len(g))):
                raise ValueError(f"not a permutation: {g}")

    @classmethod
    def trivial(cls) -> "GaloisAction":
        return cls(())

    @classmethod
    def from_labels(cls, perms: Iterable[Sequence[int]]) -> "GaloisAction":
        """From 1-based image lists: ``perm[i-1]`` is the label of the image of
        simple root ``i``."""
        return cls(tuple(tuple(x - 1 for x in p) for p in perms))

    @classmethod
    def swap(cls, d: RootDatum, *pairs: tuple[int, int]) -> "GaloisAction":
        """Exchange pairs of isomorphic factors (0-based factor indices)."""
        gens = []
        for f, g in pairs:
            a, b = d.factors[f], d.factors[g]
            if (a.letter, a.rank) != (b.letter, b.rank):
                raise ValueError("can only swap isomorphic factors")
            p = list(range(d.rank))
            for k in range(a.rank):
                p[a.offset + k] = b.offset + k
                p[b.offset + k] = a.offset + k
            gens.append(tuple(p))
        return cls(tuple(gens))

    @property
    def is_trivial(self) -> bool:
        return all(g == tuple(range(len(g))) for g in self.generators)

    def validate(self, d: RootDatum) -> "GaloisAction":
        """Check every generator preserves the Cartan matrix and permutes the
        roots and coroots; returns ``self``."""
        a = d.cartan
        roots = set(d.root_coeffs)
        coroots = set(d.coroot_coeffs)
        for g in self.generators:
            if len(g) != d.rank:
                raise ValueError(f"permutation {g} has wrong length for rank {d.rank}")
            for i in range(d.rank):
                for j in range(d.rank):
                    if a[g[i]][g[j]] != a[i][j]:
                        raise ValueError(f"permutation {g} does not preserve the Cartan matrix")
            for b in d.root_coeffs:
                if permute(b, g) not in roots:
                    raise ValueError(f"permutation {g} does not permute the roots")
            for b in d.coroot_coeffs:
                if permute(b, g) not in coroots:
                    raise ValueError(f"permutation {g} does not permute the coroots")
        return self


def permute(coords: Sequence, perm: Sequence[int]) -> tuple:
    """Image of a vector of simple-basis or fundamental coordinates under the
    diagram automorphism ``a_i -> a_{perm[i]}``."""
    out = [None] * len(coords)
    for i, c in enumerate(coords):
        out[perm[i]] = c
    return tuple(out)


def _galois(g: GaloisAction | None) -> GaloisAction:
    return g if g is not None else GaloisAction.trivial()


def _pairing(v: LatticeVector, w: Sequence[Fraction]) -> Fraction:
    return la.dot(v.coords, w)


def reflect(v: LatticeVector, alpha: LatticeVector | Sequence, d: RootDatum) -> LatticeVector:
    """Reflection in the root ``alpha`` (given as a character-side vector).

    Characters: ``v - <v, a^vee> a``; cocharacters: ``v - <a, v> a^vee``.
    """
    coords = tuple(la.to_fraction(x) for x in (alpha.coords if isinstance(alpha, LatticeVector) else alpha))
    k = d.root_index.get(coords)
    if k is None:
        raise ValueError("reflection vector is not a root")
    root, coroot = d.roots[k], d.coroots[k]
    if v.side == CHARACTER:
        p = _pairing(v, coroot)
        return LatticeVector(tuple(x - p * a for x, a in zip(v.coords, root)), CHARACTER)
    p = _pairing(v, root)
    return LatticeVector(tuple(x - p * a for x, a in zip(v.coords, coroot)), COCHARACTER)


def _reflect_fw(x: list, j: int, cartan) -> None:
    """In-place simple reflection ``s_j`` on fundamental coordinates."""
    c = x[j]
    if c:
        for i in range(len(x)):
            a = cartan[i][j]
            if a:
                x[i] -= c * a


@lru_cache(maxsize=512)
def _sparse_columns(cartan) -> tuple[tuple[tuple[int, int], ...], ...]:
    r = len(cartan)
    return tuple(tuple((i, cartan[i][j]) for i in range(r) if cartan[i][j]) for j in range(r))


def dominant_fw(x: Sequence, cartan) -> tuple[tuple, list[int]]:
    """Dominant representative of fundamental coordinates ``x`` and the
    1-based word of simple reflections applied (lowest violated index first)."""
    x = list(x)
    cols = _sparse_columns(cartan)
    word: list[int] = []
    r = range(len(x))
    while True:
        for j in r:
            if x[j] < 0:
                break
        else:
            return tuple(x), word
        c = x[j]
        for i, a in cols[j]:
            x[i] -= c * a
        word.append(j + 1)


def dominant_representative(v: LatticeVector, d: RootDatum) -> tuple[LatticeVector, list[int]]:
    """The unique dominant element of the W-orbit of ``v`` and a word
    ``[i1, i2, ...]`` with ``s_{ik} ... s_{i1} v`` dominant."""
    dd = d.for_side(v.side)
    x = d.fw_coords(v)
    perp = [a - b for a, b in zip(v.coords, d.from_fw(x, v.side).coords)]
    xd, word = dominant_fw(x, dd.cartan)
    base = d.from_fw(xd, v.side)
    return LatticeVector(tuple(a + b for a, b in zip(base.coords, perp)), v.side), word


def is_dominant(v: LatticeVector, d: RootDatum) -> bool:
    return all(c >= 0 for c in d.fw_coords(v))


def apply_word(v: LatticeVector, word: Sequence[int], d: RootDatum) -> LatticeVector:
    """Apply simple reflections ``s_{word[0]}`` first, then ``s_{word[1]}``..."""
    for j in word:
        v = reflect(v, d.simple_roots[j - 1], d)
    return v


def apply_galois(v: LatticeVector, perm: Sequence[int], d: RootDatum) -> LatticeVector:
    """Linear action of a diagram automorphism; fixes the orthogonal
    complement of the root span."""
    x = d.fw_coords(v)
    perp = [a - b for a, b in zip(v.coords, d.from_fw(x, v.side).coords)]
    img = d.from_fw(permute(x, perm), v.side)
    return LatticeVector(tuple(a + b for a, b in zip(img.coords, perp)), v.side)


def orbit(v: LatticeVector, d: RootDatum, galois: GaloisAction | None = None,
          use_galois: bool = True) -> frozenset[LatticeVector]:
    """Orbit of ``v`` under W (and the Galois generators when ``use_galois``)."""
    g = _galois(galois) if use_galois else GaloisAction.trivial()
    dd = d.for_side(v.side)
    x0 = d.fw_coords(v)
    perp = [a - b for a, b in zip(v.coords, d.from_fw(x0, v.side).coords)]
    seen = {tuple(x0)}
    queue = [tuple(x0)]
    k = 0
    while k < len(queue):
        x = queue[k]
        k += 1
        images = []
        for j in range(d.rank):
            if x[j]:
                y = list(x)
                _reflect_fw(y, j, dd.cartan)
                images.append(tuple(y))
        for p in g.generators:
            images.append(permute(x, p))
        for y in images:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    out = set()
    for x in queue:
        base = d.from_fw(x, v.side).coords
        out.add(LatticeVector(tuple(a + b for a, b in zip(base, perp)), v.side))
    return frozenset(out)


@dataclass(frozen=True)
class OrbitPartition:
    """Partition of the coroots (or roots) into W x Galois orbits.

    ``indices[k]`` lists positions into ``RootDatum.coroots`` (resp. ``roots``)
    in breadth-first discovery order; ``members[k]`` are the vectors.
    """

    indices: tuple[tuple[int, ...], ...]
    members: tuple[tuple[LatticeVector, ...], ...]

    @property
    def orbits(self) -> tuple[frozenset[LatticeVector], ...]:
        return tuple(frozenset(m) for m in self.members)

    @property
    def representatives(self) -> tuple[LatticeVector, ...]:
        return tuple(m[0] for m in self.members)

    def __len__(self):
        return len(self.indices)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(o) for o in self.indices)


@lru_cache(maxsize=256)
def _partition_indices(d: RootDatum, galois: GaloisAction) -> tuple[tuple[int, ...], ...]:
    coeffs = d.coroot_coeffs
    index = {b: k for k, b in enumerate(coeffs)}
    cartan = d.cartan
    r = d.rank
    assigned = [False] * len(coeffs)
    orbits = []
    for start in range(len(coeffs)):
        if assigned[start]:
            continue
        assigned[start] = True
        queue = [start]
        k = 0
        while k < len(queue):
            b = coeffs[queue[k]]
            k += 1
            images = []
            for i in range(r):
                # <a_i, b^vee> = sum_k b_k <a_i, a_k^vee> = sum_k b_k cartan[k][i]
                p = sum(b[t] * cartan[t][i] for t in range(r) if b[t])
                if p:
                    images.append(tuple(b[t] - p * (t == i) for t in range(r)))
            for gen in galois.generators:
                images.append(permute(b, gen))
            for img in images:
                j = index[img]
                if not assigned[j]:
                    assigned[j] = True
                    queue.append(j)
        orbits.append(tuple(queue))
    return tuple(orbits)


def coroot_orbit_partition(d: RootDatum, galois: GaloisAction | None = None) -> OrbitPartition:
    """Orbits of W x Galois on the coroots of ``d``."""
    g = _galois(galois)
    idx = _partition_indices(d, g)
    return OrbitPartition(
        idx, tuple(tuple(LatticeVector(d.coroots[k], COCHARACTER) for k in o) for o in idx)
    )


def root_orbit_partition(d: RootDatum, galois: GaloisAction | None = None) -> OrbitPartition:
    """Orbits of W x Galois on the roots (the coroot orbits of the dual)."""
    g = _galois(galois)
    dual = d.dual()
    idx = tuple(
        tuple(d.root_index[dual.coroots[k]] for k in o) for o in _partition_indices(dual, g)
    )
    return OrbitPartition(
        idx, tuple(tuple(LatticeVector(d.roots[k], CHARACTER) for k in o) for o in idx)
    )


def partition_indices(d: RootDatum, galois: GaloisAction | None = None) -> tuple[tuple[int, ...], ...]:
    """Coroot orbits as index tuples (cached)."""
    return _partition_indices(d, _galois(galois))


def pairing_value_set(chi: LatticeVector, orbit_vectors: Iterable[LatticeVector | Sequence]) -> frozenset[Fraction]:
    """``{|<chi, c>| : c in orbit}``."""
    out = set()
    for c in orbit_vectors:
        coords = c.coords if isinstance(c, LatticeVector) else tuple(la.to_fraction(x) for x in c)
        out.add(abs(la.dot(chi.coords, coords)))
    return frozenset(out)
