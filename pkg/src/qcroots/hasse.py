"""Orbital ratios, prime bounds for maximal and non-maximal Levi types, and
Hasse-generator certificates for quasi-constant cocharacters."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from qcroots.duality import Ray, centralizer_levi, dualize_ray
from qcroots.predicates import (
    LeviType,
    is_L_ample,
    is_p_L_admissible,
    is_quasi_constant,
    orbital_ratio_of,
)
from qcroots.rootdata import CHARACTER, InvariantViolation, LatticeVector, RootDatum, datum
from qcroots.weyl import GaloisAction

# Bourbaki families in table order, with the smallest rank each is listed at.
TABLE_FAMILIES = (("A", 1), ("B", 2), ("C", 2), ("D", 3))
TABLE_EXCEPTIONAL = (("G", 2), ("F", 4), ("E", 6), ("E", 7), ("E", 8))


def orbital_ratio(chi: LatticeVector, d: RootDatum, galois: GaloisAction | None = None) -> Fraction:
    """Largest ratio max/min of the nonzero ``|<chi, c>|`` over a coroot orbit."""
    return orbital_ratio_of(chi, d, galois)


def largest_prime_at_most(n: int) -> int | None:
    for k in range(n, 1, -1):
        if all(k % q for q in range(2, math.isqrt(k) + 1)):
            return k
    return None


def prime_bound(ratio: Fraction) -> int:
    """Largest prime p with ``ratio > p - 1``, or 1 when there is none.

    For an integral ratio this is the largest prime not exceeding it.  Every
    prime strictly above the result satisfies ``ratio <= p - 1``."""
    if ratio <= 1:
        return 1
    return largest_prime_at_most(math.ceil(ratio))


def min_p_condition(ratio: Fraction) -> int:
    """Smallest integer p >= 2 with ratio <= p - 1."""
    return max(2, math.ceil(ratio) + 1)


@dataclass(frozen=True)
class BoundReport:
    type_name: str
    levi: LeviType
    removed: tuple[int, ...]
    eta: LatticeVector
    ratio: Fraction
    min_p_condition: int
    C: int
    shortcut_value: int
    shortcut_case: str
    sufficiency_only: bool = True

    @property
    def shortcut_agrees(self) -> bool:
        return self.shortcut_value == self.ratio


def _eta(d: RootDatum, labels) -> LatticeVector:
    x = [int(i + 1 in labels) for i in range(d.rank)]
    return d.from_fw(x, CHARACTER)


def shortcut(d: RootDatum, removed) -> tuple[int, str]:
    """Pairing of eta(removed) with the highest coroot when the diagram is
    simply laced or a removed root is short, otherwise with the coroot of the
    highest root."""
    if d.is_simply_laced(0) or any(d.is_short(i) for i in removed):
        coeffs, case = d.highest_coroot(0), "highest-coroot"
    else:
        coeffs, case = d.coroot_of_highest_root(0), "coroot-of-highest-root"
    return sum(coeffs[i - 1] for i in removed), case


def bound_for_levi(d: RootDatum, levi: LeviType | frozenset | set, galois: GaloisAction | None = None,
                   check_shortcut: bool = True) -> BoundReport:
    """Bound data for the Levi type ``levi`` of an irreducible datum.

    With ``check_shortcut`` a disagreement between the dominant-coroot
    shortcut and the orbit computation raises ``InvariantViolation``."""
    if not d.is_irreducible:
        raise ValueError("bounds are defined for irreducible root systems")
    if not isinstance(levi, LeviType):
        levi = LeviType.of(levi)
    levi.validate(d)
    removed = sorted(levi.complement(d))
    if not removed:
        raise ValueError("the Levi is the whole group; there is no bound to compute")
    eta = _eta(d, removed)
    ratio = orbital_ratio(eta, d, galois)
    value, case = shortcut(d, removed)
    if check_shortcut and value != ratio:
        raise InvariantViolation(f"{d.factors[0].name} {removed}: shortcut {value} != orbital ratio {ratio}")
    return BoundReport(
        type_name=d.factors[0].name,
        levi=levi,
        removed=tuple(removed),
        eta=eta,
        ratio=ratio,
        min_p_condition=min_p_condition(ratio),
        C=prime_bound(ratio),
        shortcut_value=value,
        shortcut_case=case,
    )


def table_types(max_rank: int) -> list[str]:
    """Irreducible types of rank at most ``max_rank`` in table order."""
    if max_rank < 2:
        raise ValueError("max_rank must be at least 2")
    out = []
    for letter, lo in TABLE_FAMILIES:
        out += [f"{letter}{n}" for n in range(lo, max_rank + 1)]
    out += [f"{letter}{n}" for letter, n in TABLE_EXCEPTIONAL if n <= max_rank]
    return out


def full_table(max_rank: int = 8) -> list[BoundReport]:
    """One report per irreducible type of rank at most ``max_rank`` and per
    maximal Levi."""
    reports = []
    for name in table_types(max_rank):
        d = datum(name)
        for a in range(1, d.rank + 1):
            reports.append(bound_for_levi(d, LeviType.complement_of(d, [a])))
    return reports


@dataclass(frozen=True)
class HasseCertificate:
    mu: Ray
    mu_star: LatticeVector
    lam: LatticeVector
    levi: LeviType
    checks: dict

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def hasse_generator(d: RootDatum, mu: Ray, galois: GaloisAction | None = None) -> HasseCertificate:
    """Certificate that ``-mu*`` is quasi-constant, ample for Cent(mu) and
    (2, Cent(mu))-admissible, where ``mu*`` spans the dual ray of ``mu``."""
    levi = centralizer_levi(mu, d)
    if not levi.complement(d):
        raise ValueError("mu is central; its dual ray is zero")
    mu_star = dualize_ray(mu, d, galois).direction
    lam = -mu_star
    checks = {
        "L_ample": is_L_ample(lam, levi, d)[0],
        "quasi_constant": is_quasi_constant(mu_star, d, galois)[0],
        "p_L_admissible_at_2": is_p_L_admissible(lam, 2, levi, d, galois),
    }
    return HasseCertificate(mu, mu_star, lam, levi, checks)
