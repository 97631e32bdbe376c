import itertools
from fractions import Fraction as F

import pytest

from sperndeg.complex import build_triangulation
from sperndeg.cover import crosspolytope, find_generic_point, is_alternating, make_polytope, standard_simplex
from sperndeg.errors import (
    BoundaryComplementaryEdge,
    ComplementaryEdgePresent,
    InvalidLabelling,
    NotACS,
    NotCentrallySymmetric,
    NotANL,
    NotAntipodalLabelling,
    PebbleSetUnavailable,
)
from sperndeg.fixtures import PENTAGON, PENTAGON_POINTS, load_fixture
from sperndeg.generator import cone_ball, enumerate_anl_sequences, enumerate_labellings, symmetric_disk
from sperndeg.labelling import Labelling, SignedLabelling
from sperndeg.theorems import (
    check_antipodal_cycle_parity,
    check_cover_bound,
    check_fully_coloured,
    check_ky_fan,
    check_mod2,
    check_polytopal,
    check_tucker,
    count_cov_patterned,
)

TRIANGLE = standard_simplex(2)


def _fixture(name):
    doc = load_fixture(name)
    return doc, doc.triangulation(), doc.labelling()


def test_count_cov_patterned():
    T = build_triangulation(2, [(0, 0), (1, 0), (0, 1)], [(0, 1, 2)])
    assert count_cov_patterned(T, Labelling(3, (1, 2, 3)), TRIANGLE, (F(1, 5), F(1, 7)))[0] == 1
    P = make_polytope(PENTAGON)
    count, wit = count_cov_patterned(T, Labelling(5, (1, 4, 5)), P, PENTAGON_POINTS["p2"], check_boundary=False)
    assert count == 1 and wit == [(0, 1, 2)]


def test_cover_bound_on_fixture():
    doc, T, lab = _fixture("nonagon_degree3")
    v = check_cover_bound(T, lab, TRIANGLE, (F(1, 5), F(1, 7)))
    assert v.holds and v.bound == 3 and len(v.witnesses) == 3
    assert v.details["signed_preimages"] == 3


def test_constant_labelling_is_vacuous():
    doc, T, _ = _fixture("triangle_7")
    v = check_fully_coloured(T, Labelling(3, (2,) * 7))
    assert v.bound == 0 and v.holds and v.witnesses == ()


def test_fully_coloured_witnesses_are_genuine():
    doc, T, lab = _fixture("nonagon_degree3")
    v = check_fully_coloured(T, lab)
    assert (v.degree, v.bound, len(v.witnesses)) == (3, 3, 3)
    assert all(s in T.simplices and len({lab[x] for x in s}) == 3 for s in v.witnesses)
    with pytest.raises(InvalidLabelling):
        check_fully_coloured(T, Labelling(4, lab.labels))


def test_cover_bound_and_fully_coloured_agree_on_triangle():
    doc, T, _ = _fixture("triangle_7")
    y = find_generic_point(TRIANGLE)
    for lab in itertools.islice(enumerate_labellings(T, 3, "free"), 0, 2187, 7):
        a = check_cover_bound(T, lab, TRIANGLE, y)
        b = check_fully_coloured(T, lab)
        assert set(a.witnesses) == set(b.witnesses)
        assert a.holds and b.holds


def test_polytopal_fixture_and_partition():
    doc, T, lab = _fixture("octagon_two_holes")
    v = check_polytopal(T, lab, doc.polytope_obj())
    assert (v.degree, v.bound, len(v.witnesses)) == (4, 8, 8)
    assert v.details["blocks_disjoint"] and v.details["blocks_meet_degree"]
    assert v.details["per_pebble"] == [4, 4]


def test_polytopal_with_three_labels_reduces():
    doc, T, lab = _fixture("nonagon_degree3")
    v = check_polytopal(T, lab, TRIANGLE)
    w = check_fully_coloured(T, lab)
    assert v.bound == w.bound and v.witnesses == w.witnesses


def test_polytopal_needs_pebbles_in_three_dimensions():
    T = cone_ball(3)
    P = standard_simplex(3)
    lab = Labelling(4, (2, 3, 4, 1, 1, 1, 1))
    with pytest.raises(PebbleSetUnavailable):
        check_polytopal(T, lab, P)
    v = check_polytopal(T, lab, P, pebbles=[find_generic_point(P)])
    assert v.holds and v.bound == 1


def test_tucker_fixtures():
    _, T, sl = _fixture("symmetric_square_degree1")
    v = check_tucker(T, sl)
    assert (v.degree, len(v.witnesses)) == (1, 1)
    _, T, sl = _fixture("symmetric_disk_degree3")
    v = check_tucker(T, sl)
    assert (v.degree, v.bound, len(v.witnesses)) == (3, 3, 3)
    assert v.details["piece_degrees"] == [1, 1, 1]
    assert all(sl[a] == -sl[b] for a, b in v.witnesses)


def test_tucker_hypotheses():
    _, T, sl = _fixture("boundary_complementary")
    with pytest.raises(BoundaryComplementaryEdge):
        check_tucker(T, sl)
    T = symmetric_disk(2)
    with pytest.raises(NotAntipodalLabelling):
        check_tucker(T, SignedLabelling(2, (1, 2, 1, -2, 1)))
    with pytest.raises(InvalidLabelling):
        check_tucker(T, SignedLabelling(3, (1, 2, -1, -2, 1)))


def test_tucker_three_dimensional():
    _, T, sl = _fixture("cone_ball_3d")
    v = check_tucker(T, sl)
    assert v.degree == 1 and v.witnesses == ((3, 6),)


def test_ky_fan_fixture():
    _, T, sl = _fixture("ky_fan_hexagon")
    v = check_ky_fan(T, sl)
    assert v.holds and v.degree == 1
    assert all(is_alternating([sl[x] for x in s]) for s in v.witnesses)


def test_ky_fan_hypotheses():
    _, T, sl = _fixture("symmetric_disk_degree3")
    with pytest.raises(ComplementaryEdgePresent):
        check_ky_fan(T, sl)
    _, T, sl = _fixture("ky_fan_hexagon")
    with pytest.raises(NotCentrallySymmetric):
        check_ky_fan(T, sl, make_polytope([(2, 0), (1, 1), (-1, 1), (-2, 0), (-1, -2), (1, -1)]))
    with pytest.raises(NotACS):
        check_ky_fan(cone_ball(3), SignedLabelling(3, (1, 2, 3, -1, -2, -3, 1)))


def test_ky_fan_three_labels_in_three_dimensions_forces_complementary_edge():
    # alternating 3-simplices need four magnitudes, so with labels +-1..+-3 an
    # antipodal boundary must create a complementary edge somewhere
    T = cone_ball(3)
    for centre in (1, 2, 3, -1, -2, -3):
        with pytest.raises(ComplementaryEdgePresent):
            check_ky_fan(T, SignedLabelling(3, (1, 2, 3, -1, -2, -3, centre)), crosspolytope(3))


def test_mod2_on_mobius_band():
    doc, T, lab = _fixture("mobius_band")
    P = doc.polytope_obj()
    v = check_mod2(T, lab, P, find_generic_point(P))
    assert v.degree == 1 and v.bound == 1 and v.holds
    assert all(len({lab[x] for x in s}) == 3 for s in v.witnesses)


def test_mod2_matches_cover_bound_on_oriented_input():
    doc, T, lab = _fixture("nonagon_degree3")
    y = find_generic_point(TRIANGLE)
    a = check_mod2(T, lab, TRIANGLE, y)
    b = check_cover_bound(T, lab, TRIANGLE, y)
    assert a.degree == b.degree % 2 and a.witnesses == b.witnesses


def test_mod2_vacuous():
    _, T, _ = _fixture("triangle_7")
    v = check_mod2(T, Labelling(3, (1, 1, 1, 1, 1, 1, 2)), TRIANGLE, find_generic_point(TRIANGLE))
    assert v.bound == 0 and v.holds


def test_antipodal_cycle_parity():
    v = check_antipodal_cycle_parity((1, 2, -1, -2), 2)
    assert v.degree == 1 and v.details["piece_degrees"] == [1]
    with pytest.raises(NotANL):
        check_antipodal_cycle_parity((1, 2, 1, -2), 2)
    with pytest.raises(NotANL):
        check_antipodal_cycle_parity((1, -1), 1)
    for seq in enumerate_anl_sequences(4, 3):
        v = check_antipodal_cycle_parity(seq, 3)
        assert v.degree % 2 == 1
        assert v.details["pieces"] % 2 == 1


def test_verdict_to_dict_is_json_ready():
    import json

    doc, T, lab = _fixture("octagon_two_holes")
    d = check_polytopal(T, lab, doc.polytope_obj()).to_dict()
    text = json.dumps(d)
    assert '"holds": true' in text and d["witness_count"] == 8
