import pytest
from hypothesis import given
from hypothesis import strategies as st

from spanforge.trust import TrustError, TrustPath, compose_paths, trust_value


@pytest.mark.parametrize(
    "rtv, tv, expected",
    [([4, 4, 4], 3, 3.0), ([2], 4, 2.0), ([3, 2], 4, 4 * (3 / 4) * (2 / 4)), ([], 2.5, 2.5)],
)
def test_examples(rtv, tv, expected):
    assert trust_value(TrustPath(rtv, tv)) == expected


def test_hand_value():
    assert trust_value(TrustPath([3, 2], 4)) == 1.5


@pytest.mark.parametrize("rtv, tv, where", [([4, 5], 1, "index 1"), ([-0.1], 1, "index 0"), ([1], 4.5, "target")])
def test_range_rejected(rtv, tv, where):
    with pytest.raises(TrustError, match=where):
        TrustPath(rtv, tv)


def test_compose_examples():
    assert trust_value(compose_paths([], TrustPath([2], 4))) == 2.0
    assert trust_value(compose_paths([4], TrustPath([4], 4))) == 4.0
    composed = compose_paths([3], TrustPath([2], 4))
    assert composed == TrustPath([3, 2], 4)
    assert trust_value(composed) == 1.5
    with pytest.raises(TrustError):
        compose_paths([9], TrustPath([2], 4))


values = st.floats(0, 4)
paths = st.builds(TrustPath, st.lists(values, max_size=8), values)


@given(paths)
def test_attenuation(p):
    assert trust_value(p) <= p.target_value


@given(st.lists(values, min_size=1, max_size=8), values, st.data())
def test_zero_absorbs_and_order_free(rtv, tv, data):
    perm = data.draw(st.permutations(rtv))
    assert trust_value(TrustPath(perm, tv)) == trust_value(TrustPath(rtv, tv))
    i = data.draw(st.integers(0, len(rtv) - 1))
    zeroed = list(rtv)
    zeroed[i] = 0.0
    assert trust_value(TrustPath(zeroed, tv)) == 0.0


@given(st.lists(values, min_size=1, max_size=8), values, st.data())
def test_monotone(rtv, tv, data):
    i = data.draw(st.integers(0, len(rtv) - 1))
    bumped = list(rtv)
    bumped[i] = data.draw(st.floats(rtv[i], 4))
    base = trust_value(TrustPath(rtv, tv))
    assert trust_value(TrustPath(bumped, tv)) >= base
    assert trust_value(TrustPath(rtv, data.draw(st.floats(tv, 4)))) >= base


@given(st.integers(0, 10), values)
def test_full_trust_identity(k, tv):
    assert trust_value(TrustPath([4.0] * k, tv)) == tv
