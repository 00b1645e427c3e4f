"""Chow and Hurwitz weight polytopes and the identity/support cross-checks.

The Chow polytope is the convex hull of the GKZ vectors of all regular
triangulations (the secondary polytope); the Hurwitz polytope is the convex
hull of the Hurwitz vectors.  Vertices are extracted from the generators by
exact LP separation.  The verification suite asserts, with exact arithmetic:

  * (gkz, g)      == (n+1)! * integral_q(g)
  * (boundary, g) == n!     * integral_boundary(g)
  * (n+1)! * vol * donaldson_f(g) == (n*degHu*gkz - (n+1)*degCh*hurwitz, g)

for every enumerated triangulation and seeded random rational g, plus the
support identities min <x,lam> over the polytopes against the lower-hull
triangulation of lam.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Optional, Sequence

from .exact import rank
from .functionals import (
    PLFunction,
    aubin_l,
    char_pairing,
    donaldson_f,
    integral_boundary,
    integral_q,
    pairing,
    pl_from_lifting,
)
from .polytope import extreme_point_indices
from .triangulation import Enumeration, Lifting, lower_hull_subdivision
from .vectors import boundary_vector, gkz_vector, hurwitz_vector

CHOW = "chow"
HURWITZ = "hurwitz"


@dataclass(frozen=True)
class Generator:
    vector: tuple[int, ...]
    triangulation_ids: tuple[int, ...]


@dataclass(frozen=True)
class WeightPolytope:
    kind: str
    ambient_dim: int
    generators: tuple[Generator, ...]
    vertices: tuple[tuple[int, ...], ...]
    affine_dim: int


def build(kind: str, enumeration: Enumeration) -> WeightPolytope:
    """Assemble the weight polytope from an enumeration of all regular
    triangulations.  Distinct triangulations with the same vector are merged
    into one generator carrying all source ids."""
    if kind not in (CHOW, HURWITZ):
        raise ValueError(f"unknown weight polytope kind {kind!r}")
    fn = gkz_vector if kind == CHOW else hurwitz_vector
    grouped: dict[tuple[int, ...], list[int]] = {}
    for entry in enumeration:
        vec = fn(entry.triangulation).entries
        grouped.setdefault(vec, []).append(entry.id)
    generators = tuple(
        Generator(vec, tuple(sorted(ids))) for vec, ids in sorted(grouped.items())
    )
    vectors = [g.vector for g in generators]
    extreme = extreme_point_indices(vectors)
    vertices = tuple(vectors[i] for i in extreme)
    base = vectors[0]
    adim = rank([[x - b for x, b in zip(v, base)] for v in vectors[1:]]) if len(vectors) > 1 else 0
    return WeightPolytope(kind, len(base), generators, vertices, adim)


def support_min(poly: WeightPolytope, lam: Sequence[int]) -> tuple[Fraction, tuple[tuple[int, ...], ...]]:
    """Exact minimum of <x, lam> over the polytope and the argmin vertex set."""
    values = [(pairing(v, lam), v) for v in poly.vertices]
    best = min(val for val, _ in values)
    return best, tuple(v for val, v in values if val == best)


@dataclass(frozen=True)
class SupportCheck:
    kind: str
    status: str  # "pass" | "fail" | "inapplicable"
    lifting: Optional[Lifting] = None
    minimum: Optional[Fraction] = None
    pairing_value: Optional[Fraction] = None
    argmin: tuple[tuple[int, ...], ...] = ()

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def _support_check(analysis, lam, kind: str) -> SupportCheck:
    lifting = lam if isinstance(lam, Lifting) else Lifting.normalized(lam)
    sub = lower_hull_subdivision(analysis.config, lifting)
    if not sub.is_triangulation:
        return SupportCheck(kind, "inapplicable", lifting)
    tri = sub.triangulation(analysis.config)
    vec = gkz_vector(tri) if kind == CHOW else hurwitz_vector(tri)
    poly = analysis.chow if kind == CHOW else analysis.hurwitz
    minimum, argmin = support_min(poly, lifting.heights)
    paired = pairing(vec, lifting.heights)
    status = "pass" if minimum == paired else "fail"
    return SupportCheck(kind, status, lifting, minimum, paired, argmin)


def verify_chow_support(analysis, lam) -> SupportCheck:
    """min <x,lam> over the Chow polytope must equal <gkz(T_lam), lam> whenever
    the lower hull of lam is simplicial; 'inapplicable' otherwise."""
    return _support_check(analysis, lam, CHOW)


def verify_hurwitz_support(analysis, lam) -> SupportCheck:
    """Same as the Chow check with the Hurwitz vector and polytope."""
    return _support_check(analysis, lam, HURWITZ)


@dataclass
class IdentityFailure:
    triangulation_id: int
    trial: Optional[int]
    name: str
    lhs: object
    rhs: object


@dataclass
class IdentityReport:
    seed: int
    trials: int
    triangulations: int
    checks: int = 0
    failures: list[IdentityFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_identities(analysis, trials: int = 20, seed: int = 0) -> IdentityReport:
    """Exact identity suite over every enumerated triangulation with seeded
    random rational functions; also asserts the constant-sum invariants and
    the T-independence of affine pairings."""
    config = analysis.config
    q = config.polytope
    n = q.dim
    deg = analysis.degrees
    rng = random.Random(seed)
    report = IdentityReport(seed, trials, len(analysis.enumeration))

    def check(tid, trial, name, lhs, rhs):
        report.checks += 1
        if lhs != rhs:
            report.failures.append(IdentityFailure(tid, trial, name, lhs, rhs))

    affine_reference: Optional[list[tuple[Fraction, Fraction]]] = None
    affine_fns = [[Fraction(1)] * len(config)] + [
        [Fraction(p[j]) for p in config.points] for j in range(n)
    ]
    for entry in analysis.enumeration:
        tri = entry.triangulation
        gkz = gkz_vector(tri)
        bd = boundary_vector(tri)
        hur = hurwitz_vector(tri)
        tid = entry.id
        check(tid, None, "gkz sum", gkz.total(), (n + 1) * q.volume)
        check(tid, None, "boundary sum", bd.total(), n * q.boundary_volume)
        check(tid, None, "hurwitz sum", hur.total(), n * deg.hurwitz)
        affine_values = [
            (pairing(gkz, a), pairing(hur, a)) for a in affine_fns
        ]
        if affine_reference is None:
            affine_reference = affine_values
        else:
            check(tid, None, "affine pairing T-independence", affine_values, affine_reference)
        mixed = tuple(
            n * deg.hurwitz * e - (n + 1) * deg.chow * x
            for e, x in zip(gkz.entries, hur.entries)
        )
        for trial in range(trials):
            values = {
                i: Fraction(rng.randrange(-60, 61), rng.randrange(1, 7))
                for i in tri.used_points
            }
            g = PLFunction.on_triangulation(tri, values)
            check(tid, trial, "volume pairing", char_pairing(gkz, g), factorial(n + 1) * integral_q(g))
            check(tid, trial, "boundary pairing", char_pairing(bd, g), factorial(n) * integral_boundary(g))
            check(
                tid,
                trial,
                "donaldson pairing",
                factorial(n + 1) * q.volume * donaldson_f(g),
                char_pairing(mixed, g),
            )
    return report


@dataclass
class SupportTrialReport:
    seed: int
    requested: int
    applicable: int = 0
    attempts: int = 0
    failures: list[SupportCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def run_support_trials(analysis, count: int = 20, seed: int = 0, max_attempts: Optional[int] = None) -> SupportTrialReport:
    """Seeded random integral liftings with simplicial lower hull, each checked
    against both support identities (plus the Aubin identity for the Chow
    side: min <x,lam> == (n+1)! * integral of the lower envelope)."""
    rng = random.Random(seed)
    n1 = len(analysis.config)
    fact = factorial(analysis.config.dim + 1)
    report = SupportTrialReport(seed, count)
    limit = max_attempts if max_attempts is not None else 200 * count
    while report.applicable < count and report.attempts < limit:
        report.attempts += 1
        lam = Lifting.normalized([rng.randrange(-30, 1) for _ in range(n1)])
        sub = lower_hull_subdivision(analysis.config, lam)
        if not sub.is_triangulation:
            continue
        report.applicable += 1
        for chk in (verify_chow_support(analysis, lam), verify_hurwitz_support(analysis, lam)):
            if chk.status != "pass":
                report.failures.append(chk)
        envelope = pl_from_lifting(analysis.config, lam)
        minimum, _ = support_min(analysis.chow, lam.heights)
        if minimum != fact * aubin_l(envelope):
            report.failures.append(SupportCheck(CHOW, "fail", lam, minimum, fact * aubin_l(envelope)))
    if report.applicable < count:
        raise RuntimeError(
            f"only {report.applicable} of {count} liftings had simplicial lower hulls "
            f"after {report.attempts} attempts"
        )
    return report
