from fractions import Fraction

import pytest

from newtonsing.errors import NoCompactFace, NotIsolated, NotRationalHomologySphere
from newtonsing.invariants import (
    SingularityModel,
    geometric_genus,
    poincare_via_sequence,
    spectrum_leq0,
    sw_invariant,
)
from newtonsing.newton import Support, brieskorn


def test_error_paths():
    with pytest.raises(NotIsolated):
        SingularityModel(Support([(2, 0, 0)])).pg()
    with pytest.raises(NoCompactFace):
        SingularityModel(Support([(2, 0, 0), (0, 1, 1)])).pg()  # A_1
    with pytest.raises(NotRationalHomologySphere):
        SingularityModel(brieskorn(3, 3, 3)).pg()


def test_one_shot_wrappers():
    s = brieskorn(2, 3, 7)
    assert geometric_genus(s).value == 1
    assert spectrum_leq0(s) == {Fraction(-1, 42): 1}
    assert sw_invariant(s).value == 1
    series = poincare_via_sequence(s, 1)
    assert series.coefficient(0) == 1


def test_sw_result_relation(corpus):
    for m in corpus:
        res = m.sw()
        assert res.value == m.pg().value
        assert res.sw_canonical == res.value + Fraction(res.zk_sq + res.vertex_count, 8)


def test_poincare_constant_coefficient(corpus):
    for m in corpus:
        assert m.poincare_via_sequence(1).coefficient(0) == 1


def test_spectrum_range(corpus):
    for m in corpus:
        for e, mult in m.spectrum().items():
            assert -1 < e <= 0 and mult > 0


def test_axis_distance_isolatedness_regression():
    # singular along the z-axis (no monomial within distance one of it);
    # the support criterion must reject it
    from newtonsing.newton import is_isolated

    assert not is_isolated(Support([(0, 6, 4), (0, 7, 0), (4, 6, 6), (9, 0, 0)]))
    # f = x^2 + y^3 + xyz is likewise singular along the z-axis
    assert not is_isolated(Support([(2, 0, 0), (0, 3, 0), (1, 1, 1)]))


def test_non_convenient_pipeline():
    # z^2 + x^3 + x y^5 and z^2 + x^3 + x y^3: no y-axis monomial
    from newtonsing.newton import is_convenient, saito_spectrum

    for pts, expected_pg in [
        ([(0, 0, 2), (3, 0, 0), (1, 5, 0)], 1),
        ([(0, 0, 2), (3, 0, 0), (1, 3, 0)], 0),
    ]:
        m = SingularityModel(Support(pts))
        assert not is_convenient(m.support)
        assert m.pg().value == expected_pg == m.pg_lattice_count()
        assert m.spectrum() == m.saito_spectrum()
        # the convenient completion is equisingular: same Saito multiset
        assert saito_spectrum(m.polyhedron) == saito_spectrum(m.convenient_polyhedron)
        assert m.poincare_via_sequence(2) == m.poincare_newton(2)
