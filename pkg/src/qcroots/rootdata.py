"""Root data of semisimple groups in exact Bourbaki coordinates.

A :class:`RootDatum` is built from a :class:`RootSystemSpec` (a list of
irreducible factors plus a choice of character lattice).  Roots are obtained by
reflection closure of the simple roots; coroots are ``2a/(a, a)`` for the
standard inner product of the Bourbaki realisation, so character and
cocharacter spaces share one ambient ``Q^n``.

Public indices of simple roots are 1-based and global across factors (the
Bourbaki labels of the first factor, then the second factor, ...).  Factor
indices are 0-based positions in ``RootDatum.factors``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence, Union

from qcroots import _linalg as la

CHARACTER = "character"
COCHARACTER = "cocharacter"
SIDES = (CHARACTER, COCHARACTER)

SIMPLY_CONNECTED = "simply_connected"
ADJOINT = "adjoint"
_LATTICE_ALIASES = {
    "sc": SIMPLY_CONNECTED,
    "simply_connected": SIMPLY_CONNECTED,
    "simply-connected": SIMPLY_CONNECTED,
    "ad": ADJOINT,
    "adjoint": ADJOINT,
}

Vec = tuple[Fraction, ...]


class InvariantViolation(RuntimeError):
    """An internal mathematical invariant failed; indicates a bug."""


def other_side(side: str) -> str:
    return COCHARACTER if side == CHARACTER else CHARACTER


@dataclass(frozen=True)
class LatticeVector:
    """An exact rational vector of the ambient space, tagged with its side."""

    coords: Vec
    side: str = CHARACTER

    def __post_init__(self):
        if self.side not in SIDES:
            raise ValueError(f"side must be one of {SIDES}, got {self.side!r}")
        object.__setattr__(self, "coords", tuple(la.to_fraction(x) for x in self.coords))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def _check(self, other: "LatticeVector"):
        if not isinstance(other, LatticeVector) or other.side != self.side:
            raise TypeError("can only combine vectors on the same side")
        if len(other) != len(self):
            raise ValueError("dimension mismatch")

    def __add__(self, other):
        self._check(other)
        return LatticeVector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.side)

    def __sub__(self, other):
        self._check(other)
        return LatticeVector(tuple(a - b for a, b in zip(self.coords, other.coords)), self.side)

    def __neg__(self):
        return LatticeVector(tuple(-a for a in self.coords), self.side)

    def __mul__(self, c):
        c = la.to_fraction(c)
        return LatticeVector(tuple(c * a for a in self.coords), self.side)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def __str__(self):
        return "(" + ", ".join(str(a) for a in self.coords) + ")"


_RANK_RULES = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


def _e(dim: int, *entries: tuple[int, Fraction | int]) -> list[Fraction]:
    v = [Fraction(0)] * dim
    for i, c in entries:
        v[i] += Fraction(c)
    return v


def bourbaki_simple_roots(letter: str, n: int) -> tuple[int, list[list[Fraction]]]:
    """Ambient dimension and simple roots of an irreducible type, numbered as in
    Bourbaki's planches."""
    h = Fraction(1, 2)
    if letter == "A":
        dim = n + 1
        return dim, [_e(dim, (i, 1), (i + 1, -1)) for i in range(n)]
    if letter in "BCD":
        dim = n
        simple = [_e(dim, (i, 1), (i + 1, -1)) for i in range(n - 1)]
        if letter == "B":
            simple.append(_e(dim, (n - 1, 1)))
        elif letter == "C":
            simple.append(_e(dim, (n - 1, 2)))
        else:
            simple.append(_e(dim, (n - 2, 1), (n - 1, 1)))
        return dim, simple
    if letter == "E":
        dim = 8
        a1 = [h] + [-h] * 6 + [h]
        simple = [a1, _e(dim, (0, 1), (1, 1)), _e(dim, (1, 1), (0, -1))]
        simple += [_e(dim, (k, 1), (k - 1, -1)) for k in range(2, 7)]
        return dim, simple[:n]
    if letter == "F":
        return 4, [
            _e(4, (1, 1), (2, -1)),
            _e(4, (2, 1), (3, -1)),
            _e(4, (3, 1)),
            [h, -h, -h, -h],
        ]
    if letter == "G":
        return 3, [_e(3, (0, 1), (1, -1)), _e(3, (0, -2), (1, 1), (2, 1))]
    raise ValueError(f"unknown type letter {letter!r}")


LatticeChoice = Union[str, tuple[tuple[Fraction, ...], ...]]


def _normalize_lattice(choice) -> LatticeChoice | None:
    if choice is None:
        return None
    if isinstance(choice, str):
        try:
            return _LATTICE_ALIASES[choice.strip().lower()]
        except KeyError:
            raise ValueError(f"unknown lattice kind {choice!r}") from None
    return tuple(tuple(la.to_fraction(x) for x in row) for row in choice)


@dataclass(frozen=True)
class RootSystemSpec:
    """Irreducible factors ``[(letter, rank), ...]`` and a lattice choice.

    ``char_lattice`` / ``cochar_lattice`` are ``"simply_connected"``,
    ``"adjoint"`` or an explicit basis.  Explicit character bases are given in
    fundamental-weight coordinates, explicit cocharacter bases in
    fundamental-coweight coordinates.  A missing side is the dual of the other;
    both missing means simply connected.
    """

    factors: tuple[tuple[str, int], ...]
    char_lattice: LatticeChoice | None = SIMPLY_CONNECTED
    cochar_lattice: LatticeChoice | None = None

    def __post_init__(self):
        facs = tuple((str(t).upper(), int(r)) for t, r in self.factors)
        object.__setattr__(self, "factors", facs)
        object.__setattr__(self, "char_lattice", _normalize_lattice(self.char_lattice))
        object.__setattr__(self, "cochar_lattice", _normalize_lattice(self.cochar_lattice))
        if not facs:
            raise ValueError("at least one factor is required")
        for letter, rank in facs:
            rule = _RANK_RULES.get(letter)
            if rule is None:
                raise ValueError(f"unknown type letter {letter!r}")
            if not rule(rank):
                raise ValueError(f"invalid rank {rank} for type {letter}")

    @classmethod
    def parse(cls, text: str, lattice: LatticeChoice | None = SIMPLY_CONNECTED) -> "RootSystemSpec":
        """Parse shorthand such as ``"C3"`` or ``"B2xB2"``."""
        factors = []
        for part in text.replace("*", "x").replace("×", "x").split("x"):
            part = part.strip()
            if len(part) < 2 or not part[1:].isdigit():
                raise ValueError(f"cannot parse factor {part!r}")
            factors.append((part[0].upper(), int(part[1:])))
        return cls(tuple(factors), lattice)


@dataclass(frozen=True)
class Factor:
    letter: str
    rank: int
    offset: int  # 0-based position of the first simple root
    ambient_offset: int
    dim: int
    dual: bool = False  # realised as the dual of the named type (F4/G2 numbering reversed)

    @property
    def name(self) -> str:
        return f"{self.letter}{self.rank}" + ("^vee" if self.dual and self.letter in "FG" else "")

    @property
    def indices(self) -> range:
        """0-based simple-root positions."""
        return range(self.offset, self.offset + self.rank)

    @property
    def labels(self) -> tuple[int, ...]:
        """1-based global simple-root labels."""
        return tuple(i + 1 for i in self.indices)


@dataclass(frozen=True)
class VertexData:
    """Root and coroot multiplicities of the simple roots of one factor."""

    factor: int
    labels: tuple[int, ...]
    m: tuple[int, ...]
    m_vee: tuple[int, ...]

    @property
    def special(self) -> frozenset[int]:
        return frozenset(a for a, k in zip(self.labels, self.m) if k == 1)

    @property
    def cospecial(self) -> frozenset[int]:
        return frozenset(a for a, k in zip(self.labels, self.m_vee) if k == 1)

    def multiplicity(self, label: int) -> int:
        return self.m[self.labels.index(label)]

    def comultiplicity(self, label: int) -> int:
        return self.m_vee[self.labels.index(label)]


def _reflection_closure(cartan: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """All roots, in simple-root coordinates, as the closure of the simple roots
    under simple reflections.  ``cartan[i][j] = <a_j, a_i^vee>``."""
    r = len(cartan)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    seen = set(simple)
    queue = list(simple)
    k = 0
    while k < len(queue):
        b = queue[k]
        k += 1
        for i in range(r):
            p = sum(b[j] * cartan[i][j] for j in range(r))
            if p == 0:
                continue
            img = tuple(b[j] - p * (j == i) for j in range(r))
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return queue


def _root_order(coeffs: tuple[int, ...]):
    h = sum(coeffs)
    if h > 0:
        return (0, h, tuple(-c for c in coeffs))
    return (1, -h, tuple(c for c in coeffs))


class RootDatum:
    """Roots, coroots and lattices of a semisimple group.

    Instances are immutable by convention; derived data is cached.
    """

    def __init__(self, *, factors, ambient_dim, simple_roots, simple_coroots,
                 char_fw, cochar_fw, lattice_kind, _dual_of=None):
        self.factors: tuple[Factor, ...] = tuple(factors)
        self.ambient_dim: int = ambient_dim
        self.simple_roots: tuple[Vec, ...] = tuple(tuple(v) for v in simple_roots)
        self.simple_coroots: tuple[Vec, ...] = tuple(tuple(v) for v in simple_coroots)
        self.rank = len(self.simple_roots)
        # lattice bases: rows in fundamental-weight / fundamental-coweight coordinates
        self.char_fw: tuple[tuple[Fraction, ...], ...] = tuple(tuple(r) for r in char_fw)
        self.cochar_fw: tuple[tuple[Fraction, ...], ...] = tuple(tuple(r) for r in cochar_fw)
        self.lattice_kind = lattice_kind
        self._dual_of = _dual_of
        self._check_invariants()

    # -- basic structure -------------------------------------------------
    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        """``cartan[i][j] = <a_j, a_i^vee>`` (0-based)."""
        out = []
        for cv in self.simple_coroots:
            row = []
            for a in self.simple_roots:
                p = la.dot(a, cv)
                if p.denominator != 1:
                    raise InvariantViolation("non-integral Cartan entry")
                row.append(int(p))
            out.append(tuple(row))
        return tuple(out)

    @cached_property
    def root_coeffs(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(_reflection_closure(self.cartan), key=_root_order))

    @cached_property
    def roots(self) -> tuple[Vec, ...]:
        return tuple(self._combine(b, self.simple_roots) for b in self.root_coeffs)

    @cached_property
    def coroots(self) -> tuple[Vec, ...]:
        """``coroots[k]`` is the coroot of ``roots[k]``."""
        out = []
        for a in self.roots:
            n = la.dot(a, a)
            out.append(tuple(2 * x / n for x in a))
        return tuple(out)

    @cached_property
    def coroot_coeffs(self) -> tuple[tuple[int, ...], ...]:
        """Coroots in simple-coroot coordinates, aligned with ``roots``."""
        norms = [la.dot(a, a) for a in self.simple_roots]
        out = []
        for b, a in zip(self.root_coeffs, self.roots):
            n = la.dot(a, a)
            c = [b[k] * norms[k] / n for k in range(self.rank)]
            if not la.is_integral(c):
                raise InvariantViolation("coroot not integral in simple coroots")
            out.append(tuple(int(x) for x in c))
        return tuple(out)

    @cached_property
    def root_index(self) -> dict[Vec, int]:
        return {a: k for k, a in enumerate(self.roots)}

    @cached_property
    def coroot_index(self) -> dict[Vec, int]:
        return {a: k for k, a in enumerate(self.coroots)}

    @cached_property
    def root_factor(self) -> tuple[int, ...]:
        """Factor index of every root."""
        out = []
        for b in self.root_coeffs:
            i = next(k for k, c in enumerate(b) if c != 0)
            out.append(self.factor_of(i + 1))
        return tuple(out)

    def factor_of(self, label: int) -> int:
        """Factor index containing the 1-based simple-root label."""
        self._check_label(label)
        for f, fac in enumerate(self.factors):
            if fac.offset < label <= fac.offset + fac.rank:
                return f
        raise InvariantViolation("label not covered by factors")

    def _check_label(self, label: int):
        if not isinstance(label, int) or not 1 <= label <= self.rank:
            raise ValueError(f"simple root label must be in 1..{self.rank}, got {label!r}")

    def _check_factor(self, factor: int):
        if not isinstance(factor, int) or not 0 <= factor < len(self.factors):
            raise ValueError(f"factor index must be in 0..{len(self.factors) - 1}, got {factor!r}")

    def _combine(self, coeffs, basis) -> Vec:
        out = [Fraction(0)] * self.ambient_dim
        for c, v in zip(coeffs, basis):
            if c:
                for t in range(self.ambient_dim):
                    if v[t]:
                        out[t] += c * v[t]
        return tuple(out)

    @property
    def is_irreducible(self) -> bool:
        return len(self.factors) == 1

    def positive_root_count(self) -> int:
        return len(self.roots) // 2

    def root_length2(self, label: int) -> Fraction:
        a = self.simple_roots[label - 1]
        return la.dot(a, a)

    def is_short(self, label: int) -> bool:
        """True when the simple root is strictly shorter than the longest root
        of its factor."""
        fac = self.factors[self.factor_of(label)]
        longest = max(self.root_length2(i) for i in fac.labels)
        return self.root_length2(label) < longest

    def is_simply_laced(self, factor: int) -> bool:
        fac = self.factors[factor]
        return len({self.root_length2(i) for i in fac.labels}) == 1

    # -- fundamental (co)weights and coordinates ---------------------------
    @cached_property
    def fundamental_weights(self) -> tuple[Vec, ...]:
        x = la.inverse(la.transpose(self.cartan))
        return tuple(self._combine(row, self.simple_roots) for row in x)

    @cached_property
    def fundamental_coweights(self) -> tuple[Vec, ...]:
        x = la.inverse(self.cartan)
        return tuple(self._combine(row, self.simple_coroots) for row in x)

    def fundamentals(self, side: str) -> tuple[Vec, ...]:
        return self.fundamental_weights if side == CHARACTER else self.fundamental_coweights

    def fw_coords(self, v: LatticeVector) -> tuple[Fraction, ...]:
        """Pairings with the simple coroots (character side) or simple roots
        (cocharacter side): coordinates in the fundamental (co)weight basis of
        the projection to the root span."""
        duals = self.simple_coroots if v.side == CHARACTER else self.simple_roots
        return tuple(la.dot(v.coords, d) for d in duals)

    def from_fw(self, x: Sequence, side: str = CHARACTER) -> LatticeVector:
        return LatticeVector(self._combine([la.to_fraction(c) for c in x], self.fundamentals(side)), side)

    def project(self, v: LatticeVector) -> LatticeVector:
        """Orthogonal projection onto the span of the roots."""
        return self.from_fw(self.fw_coords(v), v.side)

    def in_root_span(self, v: LatticeVector) -> bool:
        return self.project(v) == v

    def coroot_pairings(self, x: Sequence) -> tuple:
        """``<chi, c>`` for every coroot ``c`` given fundamental-weight
        coordinates ``x`` of ``chi``."""
        r = range(self.rank)
        return tuple(sum(b[k] * x[k] for k in r if b[k]) for b in self.coroot_coeffs)

    def root_pairings(self, y: Sequence) -> tuple:
        """``<a, mu>`` for every root ``a`` given fundamental-coweight
        coordinates ``y`` of ``mu``."""
        r = range(self.rank)
        return tuple(sum(b[k] * y[k] for k in r if b[k]) for b in self.root_coeffs)

    # -- lattices ----------------------------------------------------------
    def lattice_fw(self, side: str):
        return self.char_fw if side == CHARACTER else self.cochar_fw

    @cached_property
    def _lattice_inv(self):
        return {CHARACTER: la.inverse(self.char_fw), COCHARACTER: la.inverse(self.cochar_fw)}

    def lattice_basis(self, side: str) -> tuple[LatticeVector, ...]:
        return tuple(self.from_fw(row, side) for row in self.lattice_fw(side))

    def lattice_coords(self, v: LatticeVector) -> tuple[Fraction, ...]:
        """Coordinates in the chosen (co)character lattice basis.  Raises if
        ``v`` has a component orthogonal to the root span."""
        if not self.in_root_span(v):
            raise ValueError("vector is not in the span of the roots")
        return tuple(la.vecmat(self.fw_coords(v), self._lattice_inv[v.side]))

    def in_lattice(self, v: LatticeVector) -> bool:
        try:
            return la.is_integral(self.lattice_coords(v))
        except ValueError:
            return False

    def from_lattice_coords(self, c: Sequence, side: str = CHARACTER) -> LatticeVector:
        return self.from_fw(la.vecmat(c, self.lattice_fw(side)), side)

    # -- highest roots and multiplicities ------------------------------------
    def _highest(self, coeffs, factor: int) -> tuple[int, ...]:
        self._check_factor(factor)
        fac = self.factors[factor]
        cands = [b for b in coeffs if any(b[i] for i in fac.indices)]
        return max(cands, key=sum)

    def highest_root(self, factor: int = 0) -> tuple[int, ...]:
        """Highest root of a factor in simple-root coordinates."""
        return self._highest(self.root_coeffs, factor)

    def highest_coroot(self, factor: int = 0) -> tuple[int, ...]:
        """Highest coroot of a factor in simple-coroot coordinates."""
        return self._highest(self.coroot_coeffs, factor)

    def coroot_of_highest_root(self, factor: int = 0) -> tuple[int, ...]:
        k = self.root_coeffs.index(self.highest_root(factor))
        return self.coroot_coeffs[k]

    # -- duality -------------------------------------------------------------
    @cached_property
    def _dual(self) -> "RootDatum":
        if self._dual_of is not None:
            return self._dual_of
        swap = {"B": "C", "C": "B"}
        factors = [
            Factor(swap.get(f.letter, f.letter), f.rank, f.offset, f.ambient_offset, f.dim,
                   dual=not f.dual if f.letter in "FG" else f.dual)
            for f in self.factors
        ]
        return RootDatum(
            factors=factors, ambient_dim=self.ambient_dim,
            simple_roots=self.simple_coroots, simple_coroots=self.simple_roots,
            char_fw=self.cochar_fw, cochar_fw=self.char_fw,
            lattice_kind=self.lattice_kind, _dual_of=self,
        )

    def dual(self) -> "RootDatum":
        """The dual root datum: roots and coroots (and lattices) exchanged."""
        return self._dual

    def for_side(self, side: str) -> "RootDatum":
        """The datum in which vectors of ``side`` play the role of characters."""
        return self if side == CHARACTER else self._dual

    # -- invariants ------------------------------------------------------------
    def _check_invariants(self):
        a = self.cartan
        for i in range(self.rank):
            if a[i][i] != 2:
                raise InvariantViolation("Cartan diagonal must be 2")
            for j in range(self.rank):
                if i != j and a[i][j] > 0:
                    raise InvariantViolation("positive off-diagonal Cartan entry")
        for rows in (self.char_fw, self.cochar_fw):
            if len(rows) != self.rank or any(len(r) != self.rank for r in rows):
                raise ValueError("lattice basis must be square of size rank")
            if la.rank(rows) != self.rank:
                raise ValueError("lattice basis is not of full rank")

    def __repr__(self):
        names = "x".join(f.name for f in self.factors)
        return f"RootDatum({names}, {self.lattice_kind})"


def _lattice_rows(choice: LatticeChoice, side: str, cartan) -> tuple[list[list[Fraction]], str]:
    """Basis rows in fundamental (co)weight coordinates for a lattice choice."""
    r = len(cartan)
    if choice == SIMPLY_CONNECTED:
        if side == CHARACTER:
            return [[Fraction(int(i == j)) for j in range(r)] for i in range(r)], SIMPLY_CONNECTED
        return la.as_matrix(cartan), SIMPLY_CONNECTED  # coroot lattice
    if choice == ADJOINT:
        if side == CHARACTER:
            return la.transpose(la.as_matrix(cartan)), ADJOINT  # root lattice
        return [[Fraction(int(i == j)) for j in range(r)] for i in range(r)], ADJOINT
    rows = la.as_matrix(choice)
    return rows, "explicit"


def _dual_rows(rows, side: str, cartan) -> list[list[Fraction]]:
    """Basis of the dual lattice, in the other side's fundamental coordinates."""
    d = la.transpose(la.inverse(rows))
    if side == CHARACTER:
        # dual in simple-coroot coordinates -> fundamental-coweight coordinates
        return la.matmul(d, la.as_matrix(cartan))
    return la.matmul(d, la.transpose(la.as_matrix(cartan)))


def _validate_lattice(rows, side: str, cartan):
    r = len(cartan)
    if len(rows) != r or any(len(row) != r for row in rows):
        raise ValueError(f"{side} lattice basis must be a {r}x{r} matrix")
    if la.rank(rows) != r:
        raise ValueError(f"{side} lattice basis is not of full rank")
    if not all(la.is_integral(row) for row in rows):
        raise ValueError(f"{side} lattice is not contained in the (co)weight lattice")
    # must contain every simple (co)root
    a = la.as_matrix(cartan)
    simple = la.transpose(a) if side == CHARACTER else a
    inv = la.inverse(rows)
    for s in simple:
        if not la.is_integral(la.vecmat(s, inv)):
            raise ValueError(f"{side} lattice does not contain the (co)root lattice")


def build(spec: RootSystemSpec) -> RootDatum:
    """Construct the root datum described by ``spec``."""
    factors = []
    simple_roots: list[list[Fraction]] = []
    ambient_dim = sum(bourbaki_simple_roots(t, n)[0] for t, n in spec.factors)
    offset = amb = 0
    for letter, n in spec.factors:
        dim, simple = bourbaki_simple_roots(letter, n)
        for v in simple:
            simple_roots.append([Fraction(0)] * amb + v + [Fraction(0)] * (ambient_dim - amb - dim))
        factors.append(Factor(letter, n, offset, amb, dim))
        offset += n
        amb += dim
    simple_coroots = [[2 * x / la.dot(a, a) for x in a] for a in simple_roots]
    cartan = [[int(la.dot(a, cv)) for a in simple_roots] for cv in simple_coroots]

    char, cochar = spec.char_lattice, spec.cochar_lattice
    if char is None and cochar is None:
        char = SIMPLY_CONNECTED
    if char is not None:
        char_rows, kind = _lattice_rows(char, CHARACTER, cartan)
        _validate_lattice(char_rows, CHARACTER, cartan)
        cochar_rows = _dual_rows(char_rows, CHARACTER, cartan)
        if cochar is not None:
            given, gkind = _lattice_rows(cochar, COCHARACTER, cartan)
            _validate_lattice(given, COCHARACTER, cartan)
            if gkind != "explicit" and kind != "explicit" and gkind != kind:
                raise ValueError("character and cocharacter lattice choices are not dual")
            if la.rank(given + cochar_rows) != len(cartan) or not _same_lattice(given, cochar_rows):
                raise ValueError("cocharacter lattice is not dual to the character lattice")
    else:
        cochar_rows, kind = _lattice_rows(cochar, COCHARACTER, cartan)
        _validate_lattice(cochar_rows, COCHARACTER, cartan)
        char_rows = _dual_rows(cochar_rows, COCHARACTER, cartan)
    return RootDatum(
        factors=factors, ambient_dim=ambient_dim,
        simple_roots=simple_roots, simple_coroots=simple_coroots,
        char_fw=char_rows, cochar_fw=cochar_rows, lattice_kind=kind,
    )


def _same_lattice(b1, b2) -> bool:
    inv = la.inverse(b2)
    t = la.matmul(b1, inv)
    if not all(la.is_integral(row) for row in t):
        return False
    inv1 = la.inverse(b1)
    return all(la.is_integral(row) for row in la.matmul(b2, inv1))


def datum(text: str, lattice: LatticeChoice | None = SIMPLY_CONNECTED) -> RootDatum:
    """Shorthand: ``datum("C3")``, ``datum("B2xB2", "adjoint")``."""
    return build(RootSystemSpec.parse(text, lattice))


def vertex_data(d: RootDatum, factor: int = 0) -> VertexData:
    """Multiplicities of the simple roots in the highest root and coroot."""
    d._check_factor(factor)
    fac = d.factors[factor]
    hr = d.highest_root(factor)
    hc = d.highest_coroot(factor)
    return VertexData(
        factor=factor,
        labels=fac.labels,
        m=tuple(hr[i] for i in fac.indices),
        m_vee=tuple(hc[i] for i in fac.indices),
    )


def fundamental_weight(d: RootDatum, label: int) -> LatticeVector:
    d._check_label(label)
    return LatticeVector(d.fundamental_weights[label - 1], CHARACTER)


def fundamental_coweight(d: RootDatum, label: int) -> LatticeVector:
    d._check_label(label)
    return LatticeVector(d.fundamental_coweights[label - 1], COCHARACTER)


def simple_root(d: RootDatum, label: int) -> LatticeVector:
    d._check_label(label)
    return LatticeVector(d.simple_roots[label - 1], CHARACTER)


def simple_coroot(d: RootDatum, label: int) -> LatticeVector:
    d._check_label(label)
    return LatticeVector(d.simple_coroots[label - 1], COCHARACTER)


def coroot_chain(d: RootDatum, factor: int = 0) -> tuple[int, ...]:
    """Simple-coroot labels whose successive partial sums are all coroots and
    whose total is the highest coroot of ``factor``.

    Depth-first search over one-step extensions, lowest label first.
    """
    d._check_factor(factor)
    fac = d.factors[factor]
    target = d.highest_coroot(factor)
    coroots = set(d.coroot_coeffs)
    height = sum(target)
    memo_dead: set[tuple[int, ...]] = set()

    def extend(cur: tuple[int, ...], path: list[int]) -> list[int] | None:
        if cur == target:
            return path
        if len(path) >= height or cur in memo_dead:
            return None
        for i in fac.indices:
            if cur[i] >= target[i]:
                continue
            nxt = tuple(c + (k == i) for k, c in enumerate(cur))
            if nxt in coroots:
                path.append(i + 1)
                found = extend(nxt, path)
                if found is not None:
                    return found
                path.pop()
        memo_dead.add(cur)
        return None

    zero = tuple(0 for _ in range(d.rank))
    chain = extend(zero, [])
    if chain is None:
        raise InvariantViolation(f"no coroot chain found for factor {fac.name}")
    return tuple(chain)


def coroot_sum(d: RootDatum, labels: Iterable[int]) -> LatticeVector:
    """Sum of the simple coroots with the given labels."""
    v = [Fraction(0)] * d.ambient_dim
    for i in labels:
        d._check_label(i)
        for t, x in enumerate(d.simple_coroots[i - 1]):
            v[t] += x
    return LatticeVector(tuple(v), COCHARACTER)
