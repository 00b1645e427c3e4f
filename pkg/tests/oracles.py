"""Independent brute-force triangulation oracle for tiny configurations.

Enumerates ALL triangulations (regular or not) by recursive wall filling:
candidate simplices are every affinely independent (n+1)-subset of the
configuration; a partial complex is grown across its lexicographically
smallest open wall, keeping only candidates that intersect every chosen
simplex properly.  Properness of a pair of simplices is decided exactly by
strict LPs on barycentric coordinates, so this shares no machinery with the
flip search it is used to cross-check.
"""

from __future__ import annotations

import time
from itertools import combinations

from toricweights.lp import nonnegative_feasible
from toricweights.polytope import PointConfiguration
from toricweights.triangulation import canonical_simplices


class OracleTimeout(Exception):
    pass


def proper_pair(config: PointConfiguration, s: tuple[int, ...], t: tuple[int, ...]) -> bool:
    """Exact test that conv(s) and conv(t) intersect in a common face.

    For simplices every vertex subset is a face, so the pair is proper iff no
    common point has a barycentric coordinate supported outside the shared
    vertices.  One strict LP per non-shared vertex.
    """
    if s == t:
        return True
    common = set(s) & set(t)
    ps = [config.points[i] for i in s]
    pt = [config.points[i] for i in t]
    n = config.dim
    # Disjoint bounding boxes: hulls cannot meet.
    for j in range(n):
        if max(p[j] for p in ps) < min(p[j] for p in pt):
            return True
        if max(p[j] for p in pt) < min(p[j] for p in ps):
            return True
    if len(common) == n:
        # Shared wall: proper iff the opposite vertices lie strictly on
        # opposite sides of the wall's hyperplane.
        wall = tuple(sorted(common))
        a = next(i for i in s if i not in common)
        b = next(i for i in t if i not in common)
        from toricweights.exact import affine_combination

        coeffs = affine_combination([config.points[i] for i in s], config.points[b])
        # b = sum c_i * v_i over s; b beyond the wall iff the coefficient of a
        # is negative.
        c_a = next(c for i, c in zip(s, coeffs) if i == a)
        return c_a < 0
    # General case: a common point with positive weight on a non-shared vertex
    # witnesses improper intersection.
    rows = [[p[j] for p in ps] + [-q[j] for q in pt] for j in range(n)]
    rows.append([1] * len(ps) + [0] * len(pt))
    rows.append([0] * len(ps) + [1] * len(pt))
    rhs = [0] * n + [1, 1]
    for k, i in enumerate(s):
        if i not in common:
            if nonnegative_feasible(rows, rhs, strict_cols=(k,)) is not None:
                return False
    for k, i in enumerate(t):
        if i not in common:
            if nonnegative_feasible(rows, rhs, strict_cols=(len(ps) + k,)) is not None:
                return False
    return True


def all_triangulations(config: PointConfiguration, time_budget: float | None = None) -> set:
    """Canonical forms of every triangulation of the configuration."""
    start = time.monotonic()
    n = config.dim
    npts = len(config)
    target = config.polytope.volume

    candidates = []
    for subset in combinations(range(npts), n + 1):
        try:
            config.normalized_volume(subset)
        except ValueError:
            continue
        candidates.append(subset)
    by_wall: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for cand in candidates:
        for wall in combinations(cand, n):
            by_wall.setdefault(wall, []).append(cand)
    massive_cache: dict[tuple[int, ...], bool] = {}

    def massive(wall):
        if wall not in massive_cache:
            massive_cache[wall] = config.is_massive(wall)
        return massive_cache[wall]

    proper_cache: dict[tuple, bool] = {}

    def proper(a, b):
        key = (a, b) if a < b else (b, a)
        if key not in proper_cache:
            proper_cache[key] = proper_pair(config, a, b)
        return proper_cache[key]

    results: set = set()
    seen_states: set[frozenset] = set()

    def open_walls(chosen):
        counts: dict[tuple[int, ...], int] = {}
        for s in chosen:
            for w in combinations(s, n):
                counts[w] = counts.get(w, 0) + 1
        return {w for w, c in counts.items() if c == 1 and not massive(w)}

    def extend(chosen: frozenset, volume: int):
        if time_budget is not None and time.monotonic() - start > time_budget:
            raise OracleTimeout
        if chosen in seen_states:
            return
        seen_states.add(chosen)
        opens = open_walls(chosen)
        if not opens:
            if volume == target:
                results.add(canonical_simplices(chosen))
            return
        wall = min(opens)
        for cand in by_wall[wall]:
            if cand in chosen:
                continue
            if all(proper(cand, c) for c in chosen):
                extend(chosen | {cand}, volume + config.normalized_volume(cand))

    # Index 0 (the lexicographically smallest point) is a vertex of the
    # polytope, so every triangulation uses it.
    for seed in candidates:
        if 0 in seed:
            extend(frozenset([seed]), config.normalized_volume(seed))
    return results
