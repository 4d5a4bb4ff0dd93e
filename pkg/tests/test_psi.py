import pytest
from hypothesis import given, settings, strategies as st

from ncdissect import InvalidObjectError
from ncdissect.dissections import Dissection, PointedDissection, enumerate_pointed, validate_pointed
from ncdissect.numbers import p_count
from ncdissect.psi import PsiCode, enumerate_codes, psi_decode, psi_encode


def pointed(s, n, diags, base):
    return PointedDissection(Dissection(s, n, diags), base)


@pytest.mark.parametrize(
    "pd,a,eps",
    [
        (pointed(1, 1, [], (1, 2, 3)), (), ()),
        (pointed(1, 4, [(1, 4)], (1, 4, 5, 6)), (1,), (0, 1, 0)),
        (pointed(1, 4, [(1, 3), (4, 6)], (1, 3, 4, 6)), (1, 4), (1, 1, 0)),
    ],
)
def test_encode_examples(pd, a, eps):
    code = psi_encode(pd)
    assert (code.a, code.eps) == (a, eps)


@pytest.mark.parametrize(
    "s,n,a,eps,pd",
    [
        (1, 2, (1,), (1,), pointed(1, 2, [(1, 3)], (1, 3, 4))),
        (2, 3, (), (0, 0), pointed(2, 3, [], tuple(range(1, 9)))),
        (1, 4, (1,), (0, 1, 0), pointed(1, 4, [(1, 4)], (1, 4, 5, 6))),
    ],
)
def test_decode_examples(s, n, a, eps, pd):
    assert psi_decode(s, n, a, eps) == pd


@pytest.mark.parametrize(
    "s,n,a,eps",
    [
        (1, 3, (1,), (0, 0)),  # ones/length mismatch
        (1, 3, (), (0,)),  # eps too short
        (1, 3, (6,), (1, 0)),  # a out of range (size 5)
        (1, 4, (3, 2), (1, 1, 0)),  # not non-decreasing
        (1, 3, (1,), (2, 0)),  # not a bit
    ],
)
def test_decode_rejects_malformed(s, n, a, eps):
    with pytest.raises(InvalidObjectError):
        psi_decode(s, n, a, eps)


def test_encode_rejects_invalid():
    with pytest.raises(InvalidObjectError):
        psi_encode(pointed(1, 4, [(1, 4), (3, 6)], (1, 2, 3)))


def test_code_enumeration_size():
    for s in (1, 2, 3):
        for n in range(1, 5):
            for i in range(n):
                codes = list(enumerate_codes(s, n, i))
                assert len(codes) == len(set(codes)) == p_count(s, n, i)


@pytest.mark.parametrize("s,n", [(1, 3), (1, 4), (2, 3), (3, 3)])
def test_round_trips_small(s, n):
    for i in range(n):
        for pd in enumerate_pointed(s, n, i):
            code = psi_encode(pd)
            assert psi_decode(s, n, code.a, code.eps) == pd
        for code in enumerate_codes(s, n, i):
            assert psi_encode(psi_decode(s, n, code.a, code.eps)) == code


def test_json_shape():
    code = PsiCode(1, 2, (1,), (1,))
    assert code.to_json() == {"s": 1, "n": 2, "a": [1], "eps": [1]}
    assert PsiCode.from_json(code.to_json()) == code


@st.composite
def codes(draw):
    s = draw(st.integers(1, 4))
    n = draw(st.integers(1, 9))
    i = draw(st.integers(0, n - 1))
    a = sorted(draw(st.lists(st.integers(1, s * n + 2), min_size=i, max_size=i)))
    ones = set(draw(st.permutations(range(n - 1)))[:i])
    eps = tuple(1 if k in ones else 0 for k in range(n - 1))
    return PsiCode(s, n, tuple(a), eps)


@settings(max_examples=300, deadline=None)
@given(codes())
def test_decode_is_total_beyond_exhaustive_range(code):
    pd = psi_decode(code.s, code.n, code.a, code.eps)
    assert validate_pointed(pd) is None
    assert len(pd.dissection.diagonals) == len(code.a)
    assert psi_encode(pd) == code
