import pytest

from sperndeg.document import serialize
from sperndeg.fixtures import build, fixture_text, load_fixture, names, write_all


@pytest.mark.parametrize("name", names())
def test_builders_match_bundled_files(name):
    assert serialize(build(name)) == fixture_text(name)


@pytest.mark.parametrize("name", names())
def test_fixtures_are_valid_instances(name):
    doc = load_fixture(name)
    T = doc.triangulation()
    doc.labelling().check_total(T)


def test_write_all(tmp_path):
    paths = write_all(tmp_path)
    assert len(paths) == len(names())
    for p in paths:
        assert p.read_text(encoding="utf-8") == fixture_text(p.stem)
