import pytest

from toricweights.triangulation import Lifting, lower_hull_subdivision
from toricweights.vectors import gkz_vector
from toricweights.weights import (
    build,
    run_support_trials,
    support_min,
    verify_chow_support,
    verify_hurwitz_support,
    verify_identities,
)


def test_build_chow_segment(segment):
    assert set(segment.chow.vertices) == {(1, 2, 1), (2, 0, 2)}


def test_build_hurwitz_segment(segment):
    assert set(segment.hurwitz.vertices) == {(0, 2, 0), (1, 0, 1)}


def test_build_hurwitz_square(square):
    assert set(square.hurwitz.vertices) == {(2, 0, 0, 2), (0, 2, 2, 0)}


def test_build_rejects_unknown_kind(segment):
    with pytest.raises(ValueError):
        build("gkz", segment.enumeration)


def test_generators_satisfy_sum_constraints(double_simplex):
    n = double_simplex.polytope.dim
    deg = double_simplex.degrees
    for g in double_simplex.chow.generators:
        assert sum(g.vector) == (n + 1) * deg.chow
    for g in double_simplex.hurwitz.generators:
        assert sum(g.vector) == n * deg.hurwitz


def test_generators_satisfy_moment_constraints(double_simplex):
    # <generator, coordinate j of the points> is triangulation-independent.
    cfg = double_simplex.config
    for poly in (double_simplex.chow, double_simplex.hurwitz):
        for j in range(cfg.dim):
            coords = [p[j] for p in cfg.points]
            values = {sum(v * c for v, c in zip(g.vector, coords)) for g in poly.generators}
            assert len(values) == 1


def test_affine_dim_bound(segment, square, double_simplex):
    for analysis in (segment, square, double_simplex):
        n1 = len(analysis.config)
        n = analysis.config.dim
        assert analysis.chow.affine_dim <= n1 - 1 - n
        assert analysis.hurwitz.affine_dim <= n1 - 1 - n


def test_support_min_examples(segment):
    value, argmin = support_min(segment.hurwitz, (0, -1, 0))
    assert value == -2 and argmin == ((0, 2, 0),)
    value, argmin = support_min(segment.chow, (0, 0, 0))
    assert value == 0 and set(argmin) == set(segment.chow.vertices)
    value, argmin = support_min(segment.chow, (0, -1, 0))
    assert value == -2 and argmin == ((1, 2, 1),)


def test_support_min_equals_min_over_generators(double_simplex):
    lam = tuple(range(len(double_simplex.config)))
    lam = tuple(-x for x in lam)
    for poly in (double_simplex.chow, double_simplex.hurwitz):
        value, _ = support_min(poly, lam)
        gen_min = min(sum(v * l for v, l in zip(g.vector, lam)) for g in poly.generators)
        assert value == gen_min


def test_verify_chow_support_segment(segment):
    chk = verify_chow_support(segment, (0, -1, 0))
    assert chk.status == "pass"
    assert chk.minimum == chk.pairing_value == -2


def test_verify_hurwitz_support_segment(segment):
    chk = verify_hurwitz_support(segment, (0, -1, 0))
    assert chk.status == "pass"
    assert chk.minimum == -2


def test_verify_support_square_diagonal_lifting(square):
    chk = verify_hurwitz_support(square, (-1, 0, 0, -1))
    assert chk.status == "pass"
    assert chk.argmin == ((2, 0, 0, 2),)


def test_verify_support_inapplicable_for_flat_lifting(square):
    chk = verify_chow_support(square, (0, 0, 0, 0))
    assert chk.status == "inapplicable"


def test_verify_support_on_cone_boundary(segment):
    # An affine lifting lies on the boundary of every cone but still induces
    # the coarse (simplicial) subdivision of the segment, so the support
    # identity applies and the argmin is the whole polytope.
    chk = verify_chow_support(segment, (0, -1, -2))
    assert chk.status == "pass"
    assert chk.minimum == -4
    assert set(chk.argmin) == {(1, 2, 1), (2, 0, 2)}


def test_witness_cones_give_vertex_argmins(square, double_simplex):
    # For the Chow polytope the witness of T pins eta_T as unique argmin; for
    # the Hurwitz polytope every vertex is pinned by at least one source
    # triangulation's witness.
    for analysis in (square, double_simplex):
        by_id = {}
        for entry in analysis.enumeration:
            lam = entry.certificate.witness.heights
            eta = gkz_vector(entry.triangulation).entries
            value, argmin = support_min(analysis.chow, lam)
            assert argmin == (eta,)
            assert value == sum(e * l for e, l in zip(eta, lam))
            by_id[entry.id] = entry
        for vertex in analysis.hurwitz.vertices:
            gen = next(g for g in analysis.hurwitz.generators if g.vector == vertex)
            pinned = False
            for tid in gen.triangulation_ids:
                lam = by_id[tid].certificate.witness.heights
                value, argmin = support_min(analysis.hurwitz, lam)
                if argmin == (vertex,):
                    pinned = True
                    break
            assert pinned, f"no witness pins Hurwitz vertex {vertex}"


def test_every_chow_vertex_comes_from_a_triangulation(double_simplex):
    etas = {gkz_vector(e.triangulation).entries for e in double_simplex.enumeration}
    assert set(double_simplex.chow.vertices) <= etas


def test_verify_identities_passes(segment, square, double_simplex):
    for analysis in (segment, square, double_simplex):
        rep = verify_identities(analysis, trials=10, seed=3)
        assert rep.passed, rep.failures[:3]
        assert rep.checks > 0


def test_support_trials_pass(segment, square):
    for analysis in (segment, square):
        rep = run_support_trials(analysis, count=25, seed=1)
        assert rep.passed, rep.failures[:3]
        assert rep.applicable == 25


def test_lower_hull_triangulations_are_regular_members(double_simplex):
    # T_lam for an integral lifting with simplicial hull must appear among the
    # enumerated regular triangulations.
    forms = double_simplex.enumeration.canonical_forms()
    lam = Lifting.normalized([-3, -1, -4, -1, -5, -9])
    sub = lower_hull_subdivision(double_simplex.config, lam)
    if sub.is_triangulation:
        assert sub.cells in forms


def test_degenerate_unit_simplex_weights():
    # P^2 with the smallest polarization: a single triangulation, Hurwitz
    # degree 0, Hurwitz polytope one point at the origin.
    from toricweights.pipeline import analyze

    a = analyze([[0, 0], [1, 0], [0, 1]])
    assert len(a.enumeration) == 1
    assert a.enumeration.entries[0].certificate.witness.heights == (0, 0, 0)
    assert (a.degrees.chow, a.degrees.hurwitz) == (1, 0)
    assert a.chow.vertices == ((1, 1, 1),)
    assert a.hurwitz.vertices == ((0, 0, 0),)
    assert any("degree" in w for w in a.warnings)


def test_blowup_of_projective_plane():
    # conv{(0,0),(2,0),(1,1),(0,1)}: smooth, volume 3, boundary volume 5.  Its
    # variety has nonvanishing Futaki character: F(x_1) = 1/9 by direct
    # integration (4 - (10/3)*(7/6)), the same on every triangulation.
    from fractions import Fraction

    from toricweights.functionals import PLFunction, donaldson_f
    from toricweights.pipeline import analyze

    a = analyze([[0, 0], [2, 0], [1, 1], [0, 1]])
    assert a.polytope.delzant.ok
    assert a.polytope.volume == 3 and a.polytope.boundary_volume == 5
    assert (a.degrees.chow, a.degrees.hurwitz) == (3, 4)
    values = set()
    for entry in a.enumeration:
        tri = entry.triangulation
        g = PLFunction.on_triangulation(
            tri, {i: Fraction(a.config.points[i][0]) for i in tri.used_points}
        )
        values.add(donaldson_f(g))
    assert values == {Fraction(1, 9)}
    rep = verify_identities(a, trials=10, seed=2)
    assert rep.passed, rep.failures[:3]
