"""Infinite periodic tower patterns whose broadcast outlines tile the plane.

A DiamondLattice places towers at ``anchor + a*u + b*w`` for all integer
(a, b), with basis vectors

    u = (t-1, t-1)            w = (shear, shear - 2(t-1))

The basis determinant is -2(t-1)^2 for every shear, so each pattern has one
tower per 2(t-1)^2 cells. ``shear = t-1`` gives the rectilinear pattern whose
diamond outlines align into a diagonal lattice; other shears produce offset
tilings and must pass validate_pattern before the construction module will
accept them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .grid import Coord, TowerSet, manhattan_dist

__all__ = [
    "DiamondLattice",
    "PatternVerdict",
    "rectilinear_lattice",
    "lattice_contains",
    "towers_in_window",
    "count_in_window",
    "window_density",
    "validate_pattern",
]


@dataclass(frozen=True)
class DiamondLattice:
    """Periodic tower pattern of strength-t towers.

    ``scale`` multiplies both basis vectors and defaults to 1; a scale above 1
    deliberately spreads the towers too thin and exists so that degenerate
    patterns can be built and rejected by validate_pattern.
    """

    t: int
    anchor: Coord
    shear: int
    scale: int = 1

    def __post_init__(self) -> None:
        if self.t < 3:
            raise ValueError(f"lattice strength t must be >= 3, got {self.t}")
        if self.scale < 1:
            raise ValueError(f"scale must be >= 1, got {self.scale}")

    @property
    def basis_u(self) -> Coord:
        s = (self.t - 1) * self.scale
        return Coord(s, s)

    @property
    def basis_w(self) -> Coord:
        return Coord(self.shear * self.scale, (self.shear - 2 * (self.t - 1)) * self.scale)


@dataclass(frozen=True)
class PatternVerdict:
    """validate_pattern outcome; ``counterexample`` is the first under-supplied vertex."""

    valid: bool
    counterexample: Coord | None = None


def rectilinear_lattice(t: int, anchor: Coord = Coord(0, 0)) -> DiamondLattice:
    """The aligned diagonal pattern: basis ((t-1, t-1), (t-1, -(t-1)))."""
    if t < 3:
        raise ValueError(f"rectilinear pattern requires t >= 3, got {t}")
    return DiamondLattice(t=t, anchor=anchor, shear=t - 1)


def _ceil_div(p: int, q: int) -> int:
    # q > 0 assumed
    return -((-p) // q)


def _coefficients(lattice: DiamondLattice, v: Coord) -> tuple[int, int] | None:
    """Solve v = anchor + a*u + b*w over the integers; None if no solution.

    Subtracting the two coordinate equations isolates b (the basis vectors
    differ only in y, by 2(t-1)*scale), after which a follows by division.
    """
    dx = v.x - lattice.anchor.x
    dy = v.y - lattice.anchor.y
    period = 2 * (lattice.t - 1) * lattice.scale
    if (dx - dy) % period:
        return None
    b = (dx - dy) // period
    step = (lattice.t - 1) * lattice.scale
    rem = dx - b * lattice.shear * lattice.scale
    if rem % step:
        return None
    return rem // step, b


def lattice_contains(lattice: DiamondLattice, v: Coord) -> bool:
    """True iff v is a tower of the pattern."""
    return _coefficients(lattice, v) is not None


def _window_coefficient_rows(
    lattice: DiamondLattice, x0: int, x1: int, y0: int, y1: int
):
    """Yield (b, a_lo, a_hi) for all towers in [x0,x1] x [y0,y1].

    Ranges over lattice coefficients rather than scanning cells: b is pinned
    by x - y modulo the basis, and for each b the feasible a values form an
    interval (intersection of the x-window and y-window constraints).
    """
    step = (lattice.t - 1) * lattice.scale
    period = 2 * step
    wx = lattice.shear * lattice.scale
    wy = wx - period
    rx0, rx1 = x0 - lattice.anchor.x, x1 - lattice.anchor.x
    ry0, ry1 = y0 - lattice.anchor.y, y1 - lattice.anchor.y
    b_lo = _ceil_div(rx0 - ry1, period)
    b_hi = (rx1 - ry0) // period
    for b in range(b_lo, b_hi + 1):
        a_lo = max(_ceil_div(rx0 - b * wx, step), _ceil_div(ry0 - b * wy, step))
        a_hi = min((rx1 - b * wx) // step, (ry1 - b * wy) // step)
        if a_lo <= a_hi:
            yield b, a_lo, a_hi


def towers_in_window(lattice: DiamondLattice, lo: Coord, hi: Coord) -> TowerSet:
    """All towers with lo <= (x, y) <= hi componentwise, canonically ordered."""
    if lo.x > hi.x or lo.y > hi.y:
        raise ValueError(f"inverted window: {lo} .. {hi}")
    step = (lattice.t - 1) * lattice.scale
    wx = lattice.shear * lattice.scale
    wy = wx - 2 * step
    ax, ay = lattice.anchor.x, lattice.anchor.y
    points = []
    for b, a_lo, a_hi in _window_coefficient_rows(lattice, lo.x, hi.x, lo.y, hi.y):
        for a in range(a_lo, a_hi + 1):
            points.append(Coord(ax + a * step + b * wx, ay + a * step + b * wy))
    return TowerSet(points)


def count_in_window(lattice: DiamondLattice, lo: Coord, hi: Coord) -> int:
    """Number of towers in the window, without materializing them."""
    if lo.x > hi.x or lo.y > hi.y:
        raise ValueError(f"inverted window: {lo} .. {hi}")
    return sum(
        a_hi - a_lo + 1
        for _, a_lo, a_hi in _window_coefficient_rows(lattice, lo.x, hi.x, lo.y, hi.y)
    )


def window_density(lattice: DiamondLattice, side: int) -> Fraction:
    """Tower fraction of the side x side window anchored at the origin, exact."""
    if side < 1:
        raise ValueError(f"window side must be >= 1, got {side}")
    count = count_in_window(lattice, Coord(0, 0), Coord(side - 1, side - 1))
    return Fraction(count, side * side)


def fundamental_domain_vertices(lattice: DiamondLattice) -> tuple[Coord, ...]:
    """One vertex per residue class of the pattern, in lexicographic order.

    These are the integer points of the half-open parallelogram spanned by the
    basis at the anchor; there are exactly 2(t-1)^2 * scale^2 of them, and
    every plane vertex is a lattice translate of exactly one.
    """
    u, w = lattice.basis_u, lattice.basis_w
    ax, ay = lattice.anchor.x, lattice.anchor.y
    xs = (ax, ax + u.x, ax + w.x, ax + u.x + w.x)
    ys = (ay, ay + u.y, ay + w.y, ay + u.y + w.y)
    step = (lattice.t - 1) * lattice.scale
    period = 2 * step
    wx = lattice.shear * lattice.scale
    out = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            beta = Fraction(x - ax - (y - ay), period)
            if not 0 <= beta < 1:
                continue
            alpha = Fraction(x - ax - beta * wx, step)
            if 0 <= alpha < 1:
                out.append(Coord(x, y))
    out.sort()
    return tuple(out)


def _pattern_signal_at(lattice: DiamondLattice, v: Coord) -> int:
    """Total signal v receives from the infinite pattern.

    Only towers within distance t-1 contribute, so a (2t-1)-square window
    around v captures everything.
    """
    radius = lattice.t - 1
    nearby = towers_in_window(
        lattice, Coord(v.x - radius, v.y - radius), Coord(v.x + radius, v.y + radius)
    )
    return sum(max(lattice.t - manhattan_dist(tw, v), 0) for tw in nearby)


def validate_pattern(lattice: DiamondLattice) -> PatternVerdict:
    """Check that the pattern supplies total signal >= 2 to every plane vertex.

    Periodicity reduces the check to one representative per residue class (the
    fundamental parallelogram); the first failing vertex, in lexicographic
    order, is returned as a counterexample.
    """
    for v in fundamental_domain_vertices(lattice):
        if _pattern_signal_at(lattice, v) < 2:
            return PatternVerdict(False, v)
    return PatternVerdict(True, None)


@lru_cache(maxsize=None)
def _pattern_shape_is_valid(t: int, shear: int, scale: int) -> bool:
    # Validity is anchor-invariant (the pattern just translates), so the
    # construction gate caches it per (t, shear, scale).
    return validate_pattern(DiamondLattice(t, Coord(0, 0), shear, scale)).valid


def pattern_is_valid(lattice: DiamondLattice) -> bool:
    """Anchor-independent validity, cached for repeated construction calls."""
    return _pattern_shape_is_valid(lattice.t, lattice.shear, lattice.scale)
