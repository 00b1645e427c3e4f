"""Triangulations of a lattice point configuration.

Covers the placing construction, lower hulls of liftings, regularity
certificates by exact LP, bistellar flips across circuits, and breadth-first
enumeration of all regular triangulations through the flip graph.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import lcm
from typing import Iterable, Optional, Sequence

from .exact import affine_combination, affine_dependence
from .lp import LT, LinearSystem, constraint, feasible_strict
from .polytope import PointConfiguration, extreme_point_indices, hull_facets, placing_cells

Simplices = tuple[tuple[int, ...], ...]


def canonical_simplices(simplices: Iterable[Sequence[int]]) -> Simplices:
    """Deduplication key: lexicographically sorted tuple of sorted index tuples."""
    return tuple(sorted(tuple(sorted(s)) for s in simplices))


class Triangulation:
    """A set of n-simplices (index tuples into the configuration) covering the
    polytope.

    Construction validates the volume partition and that every wall ((n-1)-face)
    is shared by exactly two simplices or lies in a facet of the polytope.
    """

    def __init__(self, config: PointConfiguration, simplices: Iterable[Sequence[int]], validate: bool = True):
        self.config = config
        self.simplices: Simplices = canonical_simplices(simplices)
        if validate:
            self._validate()

    def _validate(self):
        n = self.config.dim
        npts = len(self.config)
        total = 0
        for s in self.simplices:
            if len(s) != n + 1:
                raise ValueError(f"cell {s} is not an {n}-simplex")
            if any(i < 0 or i >= npts for i in s):
                raise ValueError(f"cell {s} has out-of-range vertex indices")
            total += self.config.normalized_volume(s)
        if total != self.config.polytope.volume:
            raise ValueError(
                f"simplices have total volume {total}, polytope has {self.config.polytope.volume}"
            )
        for wall, owners in self.walls.items():
            if len(owners) > 2:
                raise ValueError(f"wall {wall} shared by {len(owners)} simplices")
            if len(owners) == 1 and not self.config.is_massive(wall):
                raise ValueError(f"wall {wall} is unmatched and not on the boundary")

    @cached_property
    def walls(self) -> dict[tuple[int, ...], tuple[tuple[int, ...], ...]]:
        """(n-1)-faces mapped to the simplices containing them."""
        out: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
        for s in self.simplices:
            for f in combinations(s, len(s) - 1):
                out.setdefault(f, []).append(s)
        return {w: tuple(owners) for w, owners in sorted(out.items())}

    @cached_property
    def interior_walls(self) -> dict[tuple[int, ...], tuple[tuple[int, ...], tuple[int, ...]]]:
        return {w: o for w, o in self.walls.items() if len(o) == 2}

    @cached_property
    def massive_walls(self) -> tuple[tuple[int, ...], ...]:
        return tuple(w for w, o in self.walls.items() if len(o) == 1)

    @cached_property
    def used_points(self) -> tuple[int, ...]:
        return tuple(sorted({i for s in self.simplices for i in s}))

    def skeleton(self, k: int) -> tuple[tuple[int, ...], ...]:
        """All k-dimensional faces of the simplices."""
        faces = {f for s in self.simplices for f in combinations(s, k + 1)}
        return tuple(sorted(faces))

    def volume(self, simplex: Sequence[int]) -> int:
        return self.config.normalized_volume(simplex)

    def __eq__(self, other):
        return (
            isinstance(other, Triangulation)
            and self.simplices == other.simplices
            and self.config.points == other.config.points
        )

    def __hash__(self):
        return hash(self.simplices)

    def __repr__(self):
        return f"Triangulation({list(map(list, self.simplices))})"


@dataclass(frozen=True)
class Lifting:
    """Integer heights on the configuration, normalized so max(heights) == 0."""

    heights: tuple[int, ...]

    def __post_init__(self):
        if not self.heights:
            raise ValueError("empty lifting")
        if any(not isinstance(h, int) for h in self.heights):
            raise ValueError("lifting heights must be integers")
        if max(self.heights) != 0:
            raise ValueError("lifting must be normalized to max height 0")

    @classmethod
    def normalized(cls, heights: Sequence[int]) -> "Lifting":
        hs = [int(h) for h in heights]
        top = max(hs)
        return cls(tuple(h - top for h in hs))

    @classmethod
    def from_rationals(cls, values: Sequence) -> "Lifting":
        """Clear denominators and renormalize; cones of liftings are invariant
        under positive scaling and adding constants."""
        fracs = [Fraction(v) for v in values]
        scale = lcm(*(f.denominator for f in fracs))
        return cls.normalized([int(f * scale) for f in fracs])


@dataclass(frozen=True)
class Subdivision:
    """Projection of the lower facets of a lifted configuration.

    Cells are the index sets of the facet vertices; ``is_triangulation`` says
    whether every cell is a simplex.
    """

    cells: Simplices
    is_triangulation: bool

    def triangulation(self, config: PointConfiguration) -> Triangulation:
        if not self.is_triangulation:
            raise ValueError("subdivision has non-simplex cells")
        return Triangulation(config, self.cells)


def lower_hull_subdivision(config: PointConfiguration, lifting: Lifting | Sequence[int]) -> Subdivision:
    """Subdivision induced by the lower hull of the lifted points (omega_k, h_k).

    Lower facets are those whose inward normal has positive last coordinate
    (equivalently, outward normal pointing down).  Cell vertex sets are the
    extreme points of each facet; points lying on a facet without being
    vertices of it are not part of the cell.
    """
    if not isinstance(lifting, Lifting):
        lifting = Lifting.normalized(lifting)
    if len(lifting.heights) != len(config):
        raise ValueError("lifting length must match the configuration")
    lifted = [p + (h,) for p, h in zip(config.points, lifting.heights)]
    n = config.dim
    try:
        facets = hull_facets(lifted)
    except ValueError:
        # Heights affine on the configuration: single trivial cell.
        cell = config.vertex_indices()
        return Subdivision((tuple(sorted(cell)),), len(cell) == n + 1)
    cells = []
    for normal, _offset, on in facets:
        if normal[-1] <= 0:
            continue
        if len(on) == n + 1:
            cells.append(tuple(sorted(on)))
        else:
            extreme = extreme_point_indices([lifted[i] for i in on])
            cells.append(tuple(sorted(on[i] for i in extreme)))
    cells.sort()
    simplicial = all(len(c) == n + 1 for c in cells)
    return Subdivision(tuple(cells), simplicial)


@dataclass(frozen=True)
class RegularityCertificate:
    """Witness lifting strictly inside the cone of liftings inducing T, or the
    irreducible infeasible subsystem when no such lifting exists."""

    witness: Optional[Lifting]
    infeasible_subsystem: Optional[LinearSystem] = None

    @property
    def regular(self) -> bool:
        return self.witness is not None


def cone_system(tri: Triangulation) -> LinearSystem:
    """Strict inequalities on liftings cutting out the open cone of liftings
    whose lower hull induces exactly this triangulation.

    One fold inequality per interior wall (strict convexity of the induced
    piecewise-linear function across the wall), and one inequality per unused
    point (it must be lifted strictly above the hull).
    """
    config = tri.config
    npts = len(config)
    cons = []
    for wall, (s1, s2) in sorted(tri.interior_walls.items()):
        opposite = next(i for i in s2 if i not in wall)
        coeffs = affine_combination([config.points[i] for i in s1], config.points[opposite])
        assert coeffs is not None
        row = [Fraction(0)] * npts
        for i, c in zip(s1, coeffs):
            row[i] += c
        row[opposite] -= 1
        cons.append(constraint(row, LT, 0))
    used = set(tri.used_points)
    for k in range(npts):
        if k in used:
            continue
        home = next(
            s
            for s in tri.simplices
            if all(
                c >= 0
                for c in affine_combination([config.points[i] for i in s], config.points[k])
            )
        )
        coeffs = affine_combination([config.points[i] for i in home], config.points[k])
        row = [Fraction(0)] * npts
        for i, c in zip(home, coeffs):
            row[i] += c
        row[k] -= 1
        cons.append(constraint(row, LT, 0))
    return LinearSystem(tuple(cons))


def is_regular(tri: Triangulation) -> RegularityCertificate:
    """Decide regularity by exact LP on the cone system.

    Irregularity is a value, not an error: the certificate then carries an
    irreducible infeasible subsystem found by a deletion filter.
    """
    system = cone_system(tri)
    if not system.constraints:
        return RegularityCertificate(Lifting((0,) * len(tri.config)))
    witness = feasible_strict(system)
    if witness is None:
        return RegularityCertificate(None, _irreducible_infeasible(system))
    return RegularityCertificate(Lifting.from_rationals(witness))


def _irreducible_infeasible(system: LinearSystem) -> LinearSystem:
    cons = list(system.constraints)
    i = 0
    while i < len(cons):
        trial = cons[:i] + cons[i + 1 :]
        if trial and feasible_strict(LinearSystem(tuple(trial))) is None:
            cons = trial
        else:
            i += 1
    return LinearSystem(tuple(cons))


def placing_triangulation(config: PointConfiguration, order: Optional[Sequence[int]] = None) -> Triangulation:
    """Placing triangulation for the given insertion order (default: the
    configuration's lexicographic order).  Regular by construction."""
    if order is None:
        order = range(len(config))
    order = list(order)
    if sorted(order) != list(range(len(config))):
        raise ValueError("order must be a permutation of all point indices")
    return Triangulation(config, placing_cells(config.points, order))


@dataclass(frozen=True)
class Flip:
    """A bistellar flip across a circuit.

    ``removed`` and ``inserted`` are the two parts of the circuit: the
    triangulation contains the pattern of cofaces Z minus {j} for j in
    ``removed``, joined with a common link; the flip installs the opposite
    pattern.  Applying the resulting flip at the same circuit returns the
    original triangulation.
    """

    removed: tuple[int, ...]
    inserted: tuple[int, ...]
    result: Triangulation

    @property
    def circuit(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.removed, self.inserted)


def flips(tri: Triangulation) -> list[Flip]:
    """All supported bistellar flips of the triangulation.

    Candidate circuits come from pairs of adjacent simplices (wall circuits)
    and from (simplex, outside point) pairs, which also yields the flips that
    insert an unused point.
    """
    config = tri.config
    candidates: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()

    def circuit_of(indices: Sequence[int]) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
        ids = tuple(sorted(indices))
        dep = affine_dependence([config.points[i] for i in ids])
        if dep is None:
            return None
        plus = tuple(i for i, c in zip(ids, dep) if c > 0)
        minus = tuple(i for i, c in zip(ids, dep) if c < 0)
        return (plus, minus)

    for wall, (s1, s2) in tri.interior_walls.items():
        z = circuit_of(set(s1) | set(s2))
        if z is not None:
            candidates.add(z)
    npts = len(config)
    for s in tri.simplices:
        inside = set(s)
        for p in range(npts):
            if p in inside:
                continue
            z = circuit_of(s + (p,))
            if z is not None:
                candidates.add(z)

    out = []
    for plus, minus in sorted(candidates):
        for removed, inserted in ((plus, minus), (minus, plus)):
            result = _try_flip(tri, removed, inserted)
            if result is not None:
                out.append(Flip(removed, inserted, result))
    return out


def _try_flip(tri: Triangulation, removed: tuple[int, ...], inserted: tuple[int, ...]) -> Optional[Triangulation]:
    """Apply the flip at the circuit (removed | inserted) if the triangulation
    supports it: all cofaces on the removed side must appear with one common
    link."""
    circuit = set(removed) | set(inserted)
    link: Optional[frozenset[frozenset[int]]] = None
    to_remove: set[tuple[int, ...]] = set()
    for j in removed:
        coface = circuit - {j}
        owners = [s for s in tri.simplices if coface <= set(s)]
        if not owners:
            return None
        this_link = frozenset(frozenset(set(s) - coface) for s in owners)
        if link is None:
            link = this_link
        elif link != this_link:
            return None
        to_remove.update(owners)
    assert link is not None
    new_cells = [s for s in tri.simplices if s not in to_remove]
    for k in inserted:
        coface = circuit - {k}
        for l in link:
            new_cells.append(tuple(sorted(coface | l)))
    return Triangulation(tri.config, new_cells)


@dataclass
class EnumerationCaps:
    max_triangulations: int = 1_000_000
    time_budget: Optional[float] = None


class EnumerationCapExceeded(RuntimeError):
    """Raised when enumeration would be incomplete; never a silent truncation."""

    def __init__(self, reason: str, found: int):
        super().__init__(f"incomplete enumeration ({reason}) after {found} triangulations")
        self.reason = reason
        self.found = found


@dataclass(frozen=True)
class EnumeratedTriangulation:
    id: int
    triangulation: Triangulation
    certificate: RegularityCertificate


@dataclass
class Enumeration:
    config: PointConfiguration
    entries: tuple[EnumeratedTriangulation, ...]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def canonical_forms(self) -> set[Simplices]:
        return {e.triangulation.simplices for e in self.entries}


def enumerate_regular(
    config: PointConfiguration,
    caps: Optional[EnumerationCaps] = None,
    order: Optional[Sequence[int]] = None,
) -> Enumeration:
    """Breadth-first search over the flip graph restricted to regular
    triangulations, seeded by a placing triangulation.

    Complete because regular triangulations are connected by flips (they are
    the vertices of the secondary polytope, flips its edges).  Entries are
    sorted by canonical form, so ids do not depend on the seed order.
    """
    caps = caps or EnumerationCaps()
    start = time.monotonic()
    seed = placing_triangulation(config, order)
    cert = is_regular(seed)
    if not cert.regular:
        raise RuntimeError("placing triangulation tested irregular; this is a bug")
    found: dict[Simplices, tuple[Triangulation, RegularityCertificate]] = {
        seed.simplices: (seed, cert)
    }
    rejected: set[Simplices] = set()
    queue = deque([seed])
    while queue:
        if len(found) > caps.max_triangulations:
            raise EnumerationCapExceeded("max triangulation cap", len(found))
        if caps.time_budget is not None and time.monotonic() - start > caps.time_budget:
            raise EnumerationCapExceeded("time budget", len(found))
        tri = queue.popleft()
        for flip in flips(tri):
            nb = flip.result
            key = nb.simplices
            if key in found or key in rejected:
                continue
            cert = is_regular(nb)
            if cert.regular:
                found[key] = (nb, cert)
                queue.append(nb)
            else:
                rejected.add(key)
    if len(found) > caps.max_triangulations:
        raise EnumerationCapExceeded("max triangulation cap", len(found))
    entries = tuple(
        EnumeratedTriangulation(i, tri, cert)
        for i, (key, (tri, cert)) in enumerate(sorted(found.items()))
    )
    return Enumeration(config, entries)
