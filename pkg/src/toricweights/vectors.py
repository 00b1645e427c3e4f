"""Characteristic vectors of a triangulation.

The GKZ vector sums, per point, the normalized volumes of the incident
n-simplices.  The boundary vector does the same over the massive
(n-1)-simplices (those lying in a facet of the polytope).  The Hurwitz vector
is n * gkz - boundary, entrywise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .triangulation import Triangulation

GKZ = "gkz"
BOUNDARY = "boundary"
HURWITZ = "hurwitz"


@dataclass(frozen=True)
class CharVector:
    kind: str
    entries: tuple[int, ...]

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def total(self) -> int:
        return sum(self.entries)


def gkz_vector(tri: Triangulation) -> CharVector:
    entries = [0] * len(tri.config)
    for s in tri.simplices:
        vol = tri.volume(s)
        for i in s:
            entries[i] += vol
    return CharVector(GKZ, tuple(entries))


def boundary_vector(tri: Triangulation) -> CharVector:
    entries = [0] * len(tri.config)
    for wall in tri.massive_walls:
        vol = tri.config.normalized_volume(wall)
        for i in wall:
            entries[i] += vol
    return CharVector(BOUNDARY, tuple(entries))


def hurwitz_vector(tri: Triangulation) -> CharVector:
    n = tri.config.dim
    gkz = gkz_vector(tri)
    bd = boundary_vector(tri)
    return CharVector(HURWITZ, tuple(n * g - b for g, b in zip(gkz.entries, bd.entries)))
