"""Lattice polytopes: facets, lattice points, smoothness, normalized volumes.

Conventions.  A facet is stored as a primitive inward normal u and an integer
offset c, the facet lying on <x,u> + c == 0 and the polytope in
<x,u> + c >= 0.  Volumes are lattice-normalized: the standard simplex of the
affine lattice spanned by a simplex has volume 1, so an n-dimensional volume
is n! times the Euclidean one.  A single point has volume 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from typing import Optional, Sequence

from .exact import (
    affine_combination,
    det,
    lattice_index,
    primitive,
    rank,
    solve_linear,
)
from .lp import nonnegative_feasible

Point = tuple[int, ...]


@dataclass(frozen=True)
class Facet:
    normal: tuple[int, ...]
    offset: int

    def value(self, point: Sequence[int]) -> int:
        return sum(u * int(x) for u, x in zip(self.normal, point)) + self.offset


def _hyperplane_normal(points: Sequence[Point]) -> Optional[tuple[int, ...]]:
    """Integer normal of the hyperplane through d points in Z^d (generalized
    cross product of the edge vectors), or None when they do not span one."""
    d = len(points[0])
    edges = [[p[j] - points[0][j] for j in range(d)] for p in points[1:]]
    normal = []
    for j in range(d):
        minor = [[e[c] for c in range(d) if c != j] for e in edges]
        normal.append((-1) ** j * det(minor))
    if all(x == 0 for x in normal):
        return None
    return tuple(normal)


def hull_facets(points: Sequence[Point]) -> list[tuple[tuple[int, ...], int, tuple[int, ...]]]:
    """Facets of conv(points) for a full-dimensional configuration.

    Exhaustive search over d-subsets spanning a hyperplane, keeping those with
    every point on one side.  Returns (inward primitive normal, offset,
    indices of points on the facet), sorted.
    """
    pts = [tuple(int(x) for x in p) for p in points]
    d = len(pts[0])
    if rank([[p[j] - pts[0][j] for j in range(d)] for p in pts[1:]]) < d:
        raise ValueError("point set is not full-dimensional")
    seen: dict[tuple[tuple[int, ...], int], tuple[int, ...]] = {}
    for subset in combinations(range(len(pts)), d):
        normal = _hyperplane_normal([pts[i] for i in subset])
        if normal is None:
            continue
        base = sum(u * x for u, x in zip(normal, pts[subset[0]]))
        values = [sum(u * x for u, x in zip(normal, p)) - base for p in pts]
        if all(v >= 0 for v in values):
            pass
        elif all(v <= 0 for v in values):
            normal = tuple(-u for u in normal)
            values = [-v for v in values]
        else:
            continue
        normal = primitive(normal)
        offset = -sum(u * x for u, x in zip(normal, pts[subset[0]]))
        key = (normal, offset)
        if key not in seen:
            seen[key] = tuple(i for i, v in enumerate(values) if v == 0)
    return sorted((n, c, on) for (n, c), on in seen.items())


def in_convex_hull(point: Sequence, points: Sequence[Sequence]) -> bool:
    """Exact test whether ``point`` is a convex combination of ``points``."""
    rows = [[q[j] for q in points] for j in range(len(point))]
    rows.append([1] * len(points))
    rhs = list(point) + [1]
    return nonnegative_feasible(rows, rhs) is not None


def extreme_point_indices(points: Sequence[Sequence[int]]) -> list[int]:
    """Indices of the points that are vertices of the convex hull.

    Per-point exact LP: a point is extreme iff it is not a convex combination
    of the others.
    """
    pts = [tuple(p) for p in points]
    out = []
    for i, p in enumerate(pts):
        others = [q for j, q in enumerate(pts) if j != i]
        if not others:
            out.append(i)
            continue
        if not in_convex_hull(p, others):
            out.append(i)
    return out


def placing_cells(points: Sequence[Point], order: Sequence[int]) -> list[tuple[int, ...]]:
    """Cells (index tuples) of the placing triangulation of ``points`` built
    by inserting the points in ``order``.

    A point inside the current hull is skipped; a point outside it is coned
    over the boundary faces it strictly sees; a point outside the current
    affine hull is coned over every cell.
    """
    pts = [tuple(p) for p in points]
    simplices: list[tuple[int, ...]] = []
    basis: list[int] = []  # affine basis of the inserted points
    for idx in order:
        p = pts[idx]
        if not simplices:
            simplices = [(idx,)]
            basis = [idx]
            continue
        in_hull = affine_combination([pts[i] for i in basis], p) is not None
        if not in_hull:
            simplices = [tuple(sorted(s + (idx,))) for s in simplices]
            basis.append(idx)
            continue
        inside = False
        for s in simplices:
            coeffs = affine_combination([pts[i] for i in s], p)
            if coeffs is not None and all(c >= 0 for c in coeffs):
                inside = True
                break
        if inside:
            continue
        # Lateral extension: cone over boundary faces visible from p.
        counts: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
        for s in simplices:
            for f in combinations(s, len(s) - 1):
                counts.setdefault(f, []).append(s)
        new = []
        for face, owners in counts.items():
            if len(owners) != 1:
                continue
            opposite = next(i for i in owners[0] if i not in face)
            phi = _face_functional([pts[i] for i in face], pts[opposite])
            if _evaluate_affine(phi, p) < 0:
                new.append(tuple(sorted(face + (idx,))))
        simplices.extend(new)
    return sorted(simplices)


def _face_functional(face_points, opposite_point):
    """Affine functional vanishing on the face and equal to 1 at the opposite
    vertex (well-defined on the current affine hull)."""
    d = len(opposite_point)
    matrix = [list(q) + [1] for q in face_points]
    matrix.append(list(opposite_point) + [1])
    rhs = [0] * len(face_points) + [1]
    sol = solve_linear(matrix, rhs)
    assert sol is not None
    return sol


def _evaluate_affine(phi, point) -> Fraction:
    return sum(c * x for c, x in zip(phi, point)) + phi[-1]


@dataclass(frozen=True)
class DelzantVertexReport:
    vertex: Point
    edge_directions: tuple[tuple[int, ...], ...]
    determinant: Optional[int]
    ok: bool


@dataclass(frozen=True)
class DelzantReport:
    ok: bool
    vertices: tuple[DelzantVertexReport, ...]


class LatticePolytope:
    """Full-dimensional lattice polytope with exact V- and H-representations."""

    def __init__(self, vertices: Sequence[Sequence[int]], facets: Sequence[Facet]):
        self.vertices: tuple[Point, ...] = tuple(sorted(tuple(int(x) for x in v) for v in vertices))
        self.facets: tuple[Facet, ...] = tuple(facets)
        self.dim: int = len(self.vertices[0])

    @classmethod
    def from_vertices(cls, vertices: Sequence[Sequence[int]]) -> "LatticePolytope":
        pts = [tuple(int(x) for x in v) for v in vertices]
        if not pts:
            raise ValueError("no vertices given")
        d = len(pts[0])
        if any(len(p) != d for p in pts):
            raise ValueError("vertices must share one dimension")
        if len(set(pts)) <= d or rank([[p[j] - pts[0][j] for j in range(d)] for p in pts[1:]]) < d:
            raise ValueError(
                f"polytope is not full-dimensional in Z^{d}; give >= {d + 1} affinely spanning vertices"
            )
        pts = sorted(set(pts))
        facets = [Facet(n, c) for n, c, _ in hull_facets(pts)]
        extreme = extreme_point_indices(pts)
        return cls([pts[i] for i in extreme], facets)

    def __repr__(self):
        return f"LatticePolytope(dim={self.dim}, vertices={len(self.vertices)}, facets={len(self.facets)})"

    def __eq__(self, other):
        return isinstance(other, LatticePolytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def contains(self, point: Sequence[int]) -> bool:
        return all(f.value(point) >= 0 for f in self.facets)

    def facet_vertices(self, facet: Facet) -> tuple[Point, ...]:
        return tuple(v for v in self.vertices if facet.value(v) == 0)

    @cached_property
    def volume(self) -> int:
        """Lattice-normalized volume: sum over a placing triangulation of the
        vertex set."""
        return _volume_of_cells(self.vertices, placing_cells(self.vertices, range(len(self.vertices))))

    @cached_property
    def boundary_volume(self) -> int:
        """Sum of the lattice-normalized volumes of the facets."""
        total = 0
        for f in self.facets:
            pts = self.facet_vertices(f)
            total += _volume_of_cells(pts, placing_cells(pts, range(len(pts))))
        return total

    @cached_property
    def delzant(self) -> DelzantReport:
        """Smoothness check: at every vertex exactly n edges meet and their
        primitive directions have determinant +-1."""
        reports = []
        ok = True
        for v in self.vertices:
            dirs = []
            for w in self.vertices:
                if w != v and self._is_edge(v, w):
                    dirs.append(primitive(tuple(b - a for a, b in zip(v, w))))
            d: Optional[int] = None
            good = len(dirs) == self.dim
            if good:
                d = det(dirs)
                good = d in (1, -1)
            ok = ok and good
            reports.append(DelzantVertexReport(v, tuple(sorted(dirs)), d, good))
        return DelzantReport(ok, tuple(reports))

    def _is_edge(self, v: Point, w: Point) -> bool:
        common = [f for f in self.facets if f.value(v) == 0 and f.value(w) == 0]
        on_all = [u for u in self.vertices if all(f.value(u) == 0 for f in common)]
        return set(on_all) == {v, w}


def _volume_of_cells(points: Sequence[Point], cells: Sequence[tuple[int, ...]]) -> int:
    total = 0
    for cell in cells:
        base = points[cell[0]]
        edges = [[points[i][j] - base[j] for j in range(len(base))] for i in cell[1:]]
        total += lattice_index(edges)
    return total


def facets_from_vertices(vertices: Sequence[Sequence[int]]) -> LatticePolytope:
    """H-representation with primitive inward normals; the vertex list is
    reduced to the extreme points."""
    return LatticePolytope.from_vertices(vertices)


class PointConfiguration:
    """The lattice points of a polytope, in lexicographic order.

    All index-based operations elsewhere in the package refer to this order.
    """

    def __init__(self, polytope: LatticePolytope, points: Sequence[Point]):
        self.polytope = polytope
        self.points: tuple[Point, ...] = tuple(tuple(p) for p in points)
        self.index: dict[Point, int] = {p: i for i, p in enumerate(self.points)}
        self._volumes: dict[tuple[int, ...], int] = {}

    @property
    def dim(self) -> int:
        return self.polytope.dim

    def __len__(self) -> int:
        return len(self.points)

    def __eq__(self, other):
        return isinstance(other, PointConfiguration) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return f"PointConfiguration({len(self.points)} points, dim {self.dim})"

    def normalized_volume(self, indices: Sequence[int]) -> int:
        """Lattice-normalized volume of the simplex on the given points, taken
        in the affine lattice of its span; 1 for a single point.  Raises on
        affinely dependent vertices."""
        key = tuple(sorted(indices))
        if len(set(key)) != len(key):
            raise ValueError("repeated vertex in simplex")
        vol = self._volumes.get(key)
        if vol is None:
            base = self.points[key[0]]
            edges = [[self.points[i][j] - base[j] for j in range(self.dim)] for i in key[1:]]
            try:
                vol = lattice_index(edges)
            except ValueError:
                raise ValueError(f"simplex {key} has affinely dependent vertices") from None
            self._volumes[key] = vol
        return vol

    def affinely_independent(self, indices: Sequence[int]) -> bool:
        ids = list(indices)
        base = self.points[ids[0]]
        edges = [[self.points[i][j] - base[j] for j in range(self.dim)] for i in ids[1:]]
        return rank(edges) == len(edges)

    def is_massive(self, indices: Sequence[int]) -> bool:
        """Whether an (n-1)-simplex lies in some facet of the polytope."""
        ids = tuple(sorted(indices))
        if len(ids) != self.dim or not self.affinely_independent(ids):
            raise ValueError(f"is_massive expects an {self.dim - 1}-simplex ({self.dim} independent vertices)")
        pts = [self.points[i] for i in ids]
        return any(all(f.value(p) == 0 for p in pts) for f in self.polytope.facets)

    def vertex_indices(self) -> tuple[int, ...]:
        return tuple(self.index[v] for v in self.polytope.vertices)


def lattice_points(polytope: LatticePolytope) -> PointConfiguration:
    """All lattice points of the polytope (boundary included), lexicographic."""
    los = [min(v[j] for v in polytope.vertices) for j in range(polytope.dim)]
    his = [max(v[j] for v in polytope.vertices) for j in range(polytope.dim)]
    pts = [
        p
        for p in product(*(range(lo, hi + 1) for lo, hi in zip(los, his)))
        if polytope.contains(p)
    ]
    return PointConfiguration(polytope, sorted(pts))


def normalized_volume(config: PointConfiguration, indices: Sequence[int]) -> int:
    return config.normalized_volume(indices)


def is_massive(config: PointConfiguration, indices: Sequence[int]) -> bool:
    return config.is_massive(indices)


def volume(polytope: LatticePolytope) -> int:
    return polytope.volume


def boundary_volume(polytope: LatticePolytope) -> int:
    return polytope.boundary_volume


def is_delzant(polytope: LatticePolytope) -> DelzantReport:
    return polytope.delzant
