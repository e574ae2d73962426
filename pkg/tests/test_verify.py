import pytest

from slicereg.verify import SUITES, run_suite


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes(name):
    res = run_suite(name)
    bad = [p.to_json() for p in res.properties if not p.ok]
    assert res.ok, bad


def test_suites_are_deterministic():
    a = run_suite("kernel").to_json()
    b = run_suite("kernel").to_json()
    assert a == b


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")
