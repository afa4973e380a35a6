"""Normal form and closed-form invariants of orientable Seifert fibered
spaces over orientable base orbifolds.

A fibration is described by the tuple (g, b; (a_1,b_1), ..., (a_n,b_n)):
base surface of genus g, integer section obstruction b, and one
multiplicity/twist pair per marked fiber.  The normal form has every
a_i > b_i > 0 and the fiber pairs sorted, which makes the tuple a canonical
key for the homeomorphism type (up to orientation).

All arithmetic is exact: twists and obstructions are integers, derived
invariants are ``fractions.Fraction``.  No floating point anywhere, since
downstream filters hinge on exact zero tests and divisibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm

from .errors import DomainError


class Geometry(Enum):
    """Model geometry of the total space, read off the signs of (e, chi).

    e != 0, chi < 0  -> TILDE_PSL2R
    e != 0, chi = 0  -> NIL
    e  = 0, chi < 0  -> H2XE1
    anything else (spherical or flat sign patterns) -> OUT_OF_SCOPE
    """

    TILDE_PSL2R = "TildePSL2R"
    NIL = "Nil"
    H2XE1 = "H2xE1"
    OUT_OF_SCOPE = "OutOfScope"


@dataclass(frozen=True, order=True)
class SeifertData:
    """Seifert invariant tuple.  Raw data allows arbitrary integer twists;
    see :func:`normalize` for the canonical form."""

    genus: int
    b: int
    fibers: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "fibers", tuple((int(a), int(t)) for a, t in self.fibers)
        )
        if self.genus < 0:
            raise DomainError(f"genus must be non-negative, got {self.genus}")
        for a, _ in self.fibers:
            if a <= 0:
                raise DomainError(f"fiber multiplicity must be positive, got {a}")

    @property
    def n(self) -> int:
        """Number of marked fibers."""
        return len(self.fibers)


@dataclass(frozen=True)
class InvariantSummary:
    """Closed-form invariants of one fibration.  ``sv`` is present exactly
    for TILDE_PSL2R geometry, ``torsion_order`` exactly when e != 0 (the
    closed form is inapplicable at e = 0)."""

    e: Fraction
    chi: Fraction
    sv: Fraction | None
    torsion_order: int | None
    geometry: Geometry


@dataclass(frozen=True)
class HorizontalSurface:
    """Minimal horizontal surface data: ``d`` is the geometric intersection
    number with a regular fiber, ``chi_minus`` its surface complexity
    d * |chi| (always a non-negative integer when d = lcm of multiplicities)."""

    d: int
    chi_minus: int


def normalize(data: SeifertData) -> SeifertData:
    """Canonical form: every twist reduced into (0, a_i) with the quotient
    absorbed into b, trivial fibers (a_i = 1 or reduced twist 0) deleted,
    fibers sorted.  The Euler number is preserved exactly."""
    b = data.b
    fibers = []
    for a, twist in data.fibers:
        q, r = divmod(twist, a)
        b += q
        if r != 0:
            fibers.append((a, r))
    return SeifertData(data.genus, b, tuple(sorted(fibers)))


def is_normalized(data: SeifertData) -> bool:
    return all(a > t > 0 for a, t in data.fibers) and data.fibers == tuple(
        sorted(data.fibers)
    )


def euler_number(data: SeifertData) -> Fraction:
    """e = -b - sum(b_i / a_i), the obstruction to a section."""
    return -Fraction(data.b) - sum(
        (Fraction(t, a) for a, t in data.fibers), Fraction(0)
    )


def orbifold_euler(data: SeifertData) -> Fraction:
    """chi = 2 - 2g - sum(1 - 1/a_i), the base orbifold Euler characteristic."""
    return Fraction(2 - 2 * data.genus) - sum(
        (1 - Fraction(1, a) for a, _ in data.fibers), Fraction(0)
    )


def classify_geometry(data: SeifertData) -> Geometry:
    e = euler_number(data)
    chi = orbifold_euler(data)
    if e != 0 and chi < 0:
        return Geometry.TILDE_PSL2R
    if e != 0 and chi == 0:
        return Geometry.NIL
    if e == 0 and chi < 0:
        return Geometry.H2XE1
    return Geometry.OUT_OF_SCOPE


def torsion_order(data: SeifertData) -> int:
    """|Tor H_1| by the closed form |e * prod(a_i)|, valid only for e != 0.

    The product clears every denominator of e, so the value is a positive
    integer; it agrees with the Smith-normal-form computation on the
    abelianized presentation (see the homology module).
    """
    e = euler_number(data)
    if e == 0:
        raise DomainError("torsion closed form needs e != 0; use the homology oracle")
    prod = 1
    for a, _ in data.fibers:
        prod *= a
    value = abs(e) * prod
    assert value.denominator == 1
    return int(value)


def seifert_volume(data: SeifertData) -> Fraction:
    """Representation volume |chi^2 / e|, defined for TILDE_PSL2R geometry."""
    if classify_geometry(data) is not Geometry.TILDE_PSL2R:
        raise DomainError("volume defined only for TildePSL2R geometry (e != 0, chi < 0)")
    chi = orbifold_euler(data)
    return abs(chi * chi / euler_number(data))


def enumerate_flat_bases() -> list[tuple[int, tuple[int, ...]]]:
    """All (genus, cone orders) solving chi = 2 - 2g - sum(1 - 1/a_i) = 0.

    Each cone of order a >= 2 contributes a term in [1/2, 1), so g <= 1,
    at most four cones can occur, and with k cones left to place and
    target t remaining, the next (smallest) order satisfies a <= k/(k-t).
    The search below is exhaustive under those cutoffs; the answer is the
    fixed five-element list of flat 2-orbifolds.
    """
    solutions: list[tuple[int, tuple[int, ...]]] = []
    for g in (0, 1):
        target = Fraction(2 - 2 * g)
        for cones in range(5):
            _flat_search(g, cones, 2, target, (), solutions)
    return sorted(solutions)


def _flat_search(g, slots, lo, target, acc, out):
    if slots == 0:
        if target == 0:
            out.append((g, acc))
        return
    # k terms, each in (0, 1) and >= 1 - 1/a for the next order a
    if not 0 < target < slots:
        return
    a = lo
    while a * (slots - target) <= slots:
        _flat_search(g, slots - 1, a, target - 1 + Fraction(1, a), acc + (a,), out)
        a += 1


def minimal_horizontal(data: SeifertData) -> HorizontalSurface:
    """Minimal horizontal surface of a fibration with e = 0 and chi < 0.

    A horizontal surface branched-covers the base orbifold with branching
    index a_i over the i-th cone point, so its fiber intersection number is
    a common multiple of the a_i; the minimal one is d = lcm(a_i).  Its
    complexity is d * |chi|, an integer because each a_i divides d.
    """
    e = euler_number(data)
    chi = orbifold_euler(data)
    if e != 0:
        raise DomainError("horizontal surfaces exist only when e = 0")
    if chi >= 0:
        raise DomainError("minimal horizontal surface needs chi < 0")
    d = lcm(*(a for a, _ in data.fibers)) if data.fibers else 1
    chi_minus = d * abs(chi)
    assert chi_minus.denominator == 1
    return HorizontalSurface(d, int(chi_minus))


def rank_lower_bound(data: SeifertData) -> int:
    """Lower bound 2g + n - 2 for the rank of the fundamental group
    (vacuous when <= 0)."""
    return 2 * data.genus + data.n - 2


def reverse_orientation(data: SeifertData) -> SeifertData:
    """Mirror fibration: (g, -b-n; (a_i, a_i - b_i)), renormalized.
    Negates e and fixes chi; an involution on normal forms."""
    flipped = tuple((a, a - t) for a, t in data.fibers)
    return normalize(SeifertData(data.genus, -data.b - data.n, flipped))


def orientation_canonical(data: SeifertData) -> SeifertData:
    """Canonical representative of {N, mirror(N)}: the lexicographically
    smaller normal form.  Census identity for homeomorphism types."""
    n = normalize(data)
    return min(n, reverse_orientation(n))


def invariant_summary(data: SeifertData) -> InvariantSummary:
    e = euler_number(data)
    chi = orbifold_euler(data)
    geometry = classify_geometry(data)
    sv = seifert_volume(data) if geometry is Geometry.TILDE_PSL2R else None
    torsion = torsion_order(data) if e != 0 else None
    return InvariantSummary(e=e, chi=chi, sv=sv, torsion_order=torsion, geometry=geometry)
