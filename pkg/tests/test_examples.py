import pytest

from isojac.examples import EXAMPLES, PUBLISHED_PAIRS, published_pair, reproduce_all
from isojac.igusa import geometrically_isomorphic


@pytest.mark.parametrize("fn", EXAMPLES, ids=lambda f: f.__name__)
def test_example_reproduces(fn):
    res = fn()
    failed = [c.to_json() for c in res.checks if not c.ok]
    assert not failed, failed
    assert res.to_json()["ok"]


@pytest.mark.parametrize("label", sorted(PUBLISHED_PAIRS))
def test_published_pairs_are_distinct(label):
    c1, c2, _ = published_pair(label)
    assert not geometrically_isomorphic(c1, c2)


def test_example_8_4_matches_triple_minus10():
    from fractions import Fraction as F

    from isojac.families import gensimple_pair

    pair = gensimple_pair(F(-10), F(-1), F(-2))
    c1, c2, _ = published_pair("8.4")
    assert geometrically_isomorphic(pair.dual.dual, c1)
    assert geometrically_isomorphic(pair.dual_prime.dual, c2)


def test_reproduce_all_labels():
    labels = [r.label for r in reproduce_all()]
    assert labels[:6] == ["8.1", "8.2", "8.3", "8.4", "8.5", "8.6"]
