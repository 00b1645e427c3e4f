"""Exact piecewise-linear functions, their integrals, and the toric functionals.

Integration is purely combinatorial: over an n-simplex the integral of an
affine function is its vertex average times the Euclidean volume, so

    integral_q(g)        = sum over cells of vol(s)/(n+1)! * sum of vertex values
    integral_boundary(g) = sum over massive walls of vol(w)/n! * sum of vertex values

with normalized volumes vol.  The Aubin functional is the plain integral over
the polytope; the Donaldson functional is

    donaldson_f(g) = integral_boundary(g) - n * (bvol/vol) * integral_q(g)

with vol, bvol the normalized volumes of the polytope and its boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Mapping, Sequence

from .exact import affine_combination, solve_linear
from .polytope import LatticePolytope, PointConfiguration, in_convex_hull
from .triangulation import Lifting, Triangulation, lower_hull_subdivision


@dataclass(frozen=True)
class PLFunction:
    """Function that is affine on each cell of a subdivision, determined by
    rational values at the cell vertices."""

    config: PointConfiguration
    cells: tuple[tuple[int, ...], ...]
    values: Mapping[int, Fraction]
    simplicial: bool

    @classmethod
    def on_triangulation(cls, tri: Triangulation, values: Mapping[int, Fraction]) -> "PLFunction":
        vals = {int(k): Fraction(v) for k, v in values.items()}
        missing = [i for i in tri.used_points if i not in vals]
        if missing:
            raise ValueError(f"missing values at used points {missing}")
        return cls(tri.config, tri.simplices, vals, True)

    @property
    def triangulation(self) -> Triangulation:
        if not self.simplicial:
            raise ValueError("function is carried on a non-simplicial subdivision")
        return Triangulation(self.config, self.cells, validate=False)

    def evaluate(self, point: Sequence) -> Fraction:
        """Value at any point of the polytope; exact, well-defined on shared
        faces because adjacent affine pieces agree there."""
        pt = tuple(Fraction(x) for x in point)
        for cell in self.cells:
            pts = [self.config.points[i] for i in cell]
            if self.simplicial:
                coeffs = affine_combination(pts, pt)
                if coeffs is not None and all(c >= 0 for c in coeffs):
                    return sum(c * self.values[i] for c, i in zip(coeffs, cell))
            elif in_convex_hull(pt, pts):
                return _cell_affine_value(self.config, cell, self.values, pt)
        raise ValueError(f"point {point} lies outside the carrier")

    def to_json(self) -> dict:
        """Serialize as {triangulation, values}: cells as sorted index arrays,
        values as "p/q" strings over the whole configuration (interpolated at
        points the carrier does not use)."""
        vals = []
        for i, p in enumerate(self.config.points):
            v = self.values.get(i)
            if v is None:
                v = self.evaluate(p)
            vals.append(f"{v.numerator}/{v.denominator}")
        return {"triangulation": [list(c) for c in self.cells], "values": vals}

    @classmethod
    def from_json(cls, config: PointConfiguration, doc: dict) -> "PLFunction":
        tri = Triangulation(config, doc["triangulation"])
        values = {}
        for i in tri.used_points:
            num, den = doc["values"][i].split("/")
            values[i] = Fraction(int(num), int(den))
        return cls.on_triangulation(tri, values)


def _cell_affine_value(config, cell, values, pt) -> Fraction:
    # Affine function pinned by the cell's vertex values; any affinely spanning
    # subset determines it.
    matrix = [list(config.points[i]) + [1] for i in cell]
    rhs = [values[i] for i in cell]
    sol = solve_linear(matrix, rhs)
    assert sol is not None, "cell values are not affine on the cell"
    return sum(c * x for c, x in zip(sol, pt)) + sol[-1]


def pl_from_lifting(config: PointConfiguration, lifting: Lifting | Sequence[int]) -> PLFunction:
    """Lower envelope of the lifted heights as a piecewise-linear function.

    Carried on the lower-hull subdivision; ``simplicial`` is False when some
    lower facet is not a simplex, and callers needing a triangulation must
    check it.  At a point whose lift is a lower-hull vertex the value is the
    height; elsewhere it is >= the height.
    """
    if not isinstance(lifting, Lifting):
        lifting = Lifting.normalized(lifting)
    sub = lower_hull_subdivision(config, lifting)
    used = sorted({i for cell in sub.cells for i in cell})
    values = {i: Fraction(lifting.heights[i]) for i in used}
    return PLFunction(config, sub.cells, values, sub.is_triangulation)


def integral_q(g: PLFunction) -> Fraction:
    """Exact integral of g over the polytope (Lebesgue measure)."""
    if not g.simplicial:
        raise ValueError("integral requires a simplicial carrier")
    n = g.config.dim
    fact = factorial(n + 1)
    total = Fraction(0)
    for cell in g.cells:
        vol = g.config.normalized_volume(cell)
        total += Fraction(vol, fact) * sum(g.values[i] for i in cell)
    return total


def integral_boundary(g: PLFunction) -> Fraction:
    """Exact integral of g over the boundary, against the lattice measure of
    each facet."""
    tri = g.triangulation
    n = g.config.dim
    fact = factorial(n)
    total = Fraction(0)
    for wall in tri.massive_walls:
        vol = g.config.normalized_volume(wall)
        total += Fraction(vol, fact) * sum(g.values[i] for i in wall)
    return total


def aubin_l(g: PLFunction) -> Fraction:
    """The Aubin-type functional: the plain integral over the polytope."""
    return integral_q(g)


def donaldson_f(g: PLFunction) -> Fraction:
    q = g.config.polytope
    n = q.dim
    return integral_boundary(g) - n * Fraction(q.boundary_volume, q.volume) * integral_q(g)


def pairing(x: Sequence, g: Sequence) -> Fraction:
    """Dot product of a characteristic (or any) vector with values on the
    configuration."""
    xs = getattr(x, "entries", x)
    if len(xs) != len(g):
        raise ValueError(f"length mismatch: {len(xs)} vs {len(g)}")
    return sum((Fraction(a) * Fraction(b) for a, b in zip(xs, g)), Fraction(0))


def char_pairing(vec, g: PLFunction) -> Fraction:
    """Pairing of a characteristic vector with a PL function's vertex values;
    characteristic vectors vanish at unused points, so only carried values
    enter."""
    entries = getattr(vec, "entries", vec)
    return sum((entries[i] * v for i, v in g.values.items()), Fraction(0))


@dataclass(frozen=True)
class Degrees:
    chow: int
    hurwitz: int


def degrees(polytope: LatticePolytope) -> Degrees:
    """deg of the Chow form is the normalized volume; deg of the Hurwitz form
    is (n+1) * volume - boundary volume."""
    n = polytope.dim
    vol = polytope.volume
    return Degrees(vol, (n + 1) * vol - polytope.boundary_volume)
