import pytest

from sperndeg.errors import InvalidLabelling
from sperndeg.fixtures import load_fixture
from sperndeg.labelling import (
    Labelling,
    SignedLabelling,
    complementary_edges,
    cycle_sequences,
    cyclic_to_signed,
    is_antipodal_on_boundary,
    is_neighboring,
    is_nl_on_boundary,
    signed_to_cyclic,
    to_cyclic,
    to_signed,
)


def test_label_ranges():
    with pytest.raises(InvalidLabelling):
        Labelling(3, (1, 4))
    with pytest.raises(InvalidLabelling):
        SignedLabelling(2, (1, 0))
    with pytest.raises(InvalidLabelling):
        SignedLabelling(2, (3,))


def test_check_total():
    T = load_fixture("triangle_7").triangulation()
    with pytest.raises(InvalidLabelling):
        Labelling(3, (1, 2, 3)).check_total(T)


@pytest.mark.parametrize("seq,n,expected", [
    ((1, 2, 3), 3, True),
    ((1, 1, 2, 2), 3, True),
    ((1, 3), 4, False),
    ((1, 4), 4, True),
    ((1, 2, 1, 2), 2, True),
    ((5,), 9, True),
])
def test_is_neighboring(backend, seq, n, expected):
    assert is_neighboring(seq, n) is expected


def test_signed_cyclic_conversion_roundtrip():
    n = 3
    for x in (1, 2, 3, -1, -2, -3):
        assert cyclic_to_signed(signed_to_cyclic(x, n), n) == x
    assert [signed_to_cyclic(x, 3) for x in (1, 2, 3, -1, -2, -3)] == [1, 2, 3, 4, 5, 6]
    sl = SignedLabelling(2, (1, -2, 2))
    assert to_signed(to_cyclic(sl)) == sl
    with pytest.raises(InvalidLabelling):
        to_signed(Labelling(3, (1,)))


def test_boundary_predicates():
    doc = load_fixture("symmetric_disk_degree3")
    T, sl = doc.triangulation(), doc.labelling()
    assert is_antipodal_on_boundary(T, sl)
    assert is_nl_on_boundary(T, to_cyclic(sl))
    assert cycle_sequences(T, sl)[0][:4] in {(1, 2, -1, -2), (2, -1, -2, 1), (-1, -2, 1, 2), (-2, 1, 2, -1)}
    bad = SignedLabelling(2, (1,) * 13)
    assert not is_antipodal_on_boundary(T, bad)


def test_complementary_edges_split(backend):
    doc = load_fixture("boundary_complementary")
    edges = complementary_edges(doc.triangulation(), doc.labelling())
    assert edges.boundary == ((0, 1), (2, 3))
    assert edges.internal == ()
    doc = load_fixture("symmetric_disk_degree3")
    edges = complementary_edges(doc.triangulation(), doc.labelling())
    assert edges.boundary == ()
    assert edges.internal == ((2, 12), (6, 12), (10, 12))
