import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cdmindex.dictionary import (
    Dictionary,
    DictionaryError,
    compute_root,
    encode_binary,
    parse_binary,
    parse_text,
)
from cdmindex.oracle import naive_root

from conftest import RUNNING


@pytest.fixture
def dic():
    return Dictionary(RUNNING)


def test_phi_and_inverse(dic):
    assert dic.phi(13) == (3, 2)
    assert dic.phi(1) == (1, 1)
    assert dic.phi(7) == (2, 1)
    assert dic.phi_inv(3, 2) == 13
    assert dic.phi_inv(1, 1) == 1
    assert dic.phi_inv(2, 5) == 11
    for k in range(1, dic.n + 1):
        assert dic.phi_inv(*dic.phi(k)) == k
    with pytest.raises(IndexError):
        dic.phi(15)
    with pytest.raises(IndexError):
        dic.phi_inv(1, 7)


def test_pred(dic):
    assert dic.pred(9) == 8
    assert dic.pred(7) == 11
    assert dic.pred(1) == 6
    assert Dictionary([b"ab", b"c"]).pred(3) == 3


def test_pred_is_permutation_of_cycles(dic):
    assert sorted(dic.pred(k) for k in range(1, dic.n + 1)) == list(range(1, dic.n + 1))
    for k in range(1, dic.n + 1):
        x = k
        for _ in range(dic.string_len(dic.phi(k)[0])):
            x = dic.pred(x)
        assert x == k


def test_lengths_and_roots(dic):
    assert [dic.string_len(h) for h in (1, 2, 3)] == [6, 5, 3]
    assert dic.root_len(1) == 3
    assert dic.root_len(2) == 5
    assert dic.string_start(3) == 12
    assert dic.maps.b1.to_string() == "10000010000100"
    assert dic.maps.b3.to_string() == "10010000100"


def test_compute_root_examples():
    assert compute_root(b"abcabc") == 3
    assert compute_root(b"a") == 1
    assert compute_root(b"aabaab") == 3
    assert compute_root(b"abab" * 3 + b"a") == 13


@settings(max_examples=300, deadline=None)
@given(st.binary(min_size=1, max_size=6).flatmap(lambda r: st.tuples(st.just(r), st.integers(1, 5))))
def test_compute_root_matches_divisor_scan(case):
    root, reps = case
    s = root * reps
    p = compute_root(s)
    assert p == naive_root(s)
    assert len(s) % p == 0 and s[:p] * (len(s) // p) == s


def test_circular_suffix(dic):
    assert dic.circular_suffix(13) == b"abc"
    assert dic.circular_suffix(7) == b"bcabc"
    for h in (1, 2, 3):
        assert dic.circular_suffix(dic.string_start(h)) == RUNNING[h - 1]
    # pred's suffix is the previous character prepended to a rotation
    for k in range(1, dic.n + 1):
        s, p = dic.circular_suffix(k), dic.circular_suffix(dic.pred(k))
        assert p == p[:1] + s[:-1]


def test_alphabet_is_effective_and_dense():
    d = Dictionary([b"zz", b"ax"])
    assert d.alphabet == b"axz"
    assert d.sigma == 3
    assert d.text.tolist() == [2, 2, 0, 1]


def test_rejects_empty_input():
    with pytest.raises(DictionaryError):
        Dictionary([])
    with pytest.raises(DictionaryError):
        Dictionary([b"a", b""])
    with pytest.raises(DictionaryError):
        parse_text(b"a\n\nb\n")
    with pytest.raises(DictionaryError):
        parse_text(b"")


def test_input_formats():
    assert parse_text(b"abcabc\nbcabc\ncab\n") == RUNNING
    assert parse_text(b"abcabc\nbcabc\ncab") == RUNNING
    assert parse_binary(encode_binary(RUNNING)) == RUNNING
    with pytest.raises(DictionaryError):
        parse_binary(encode_binary(RUNNING)[:-1])
    with pytest.raises(DictionaryError):
        parse_binary(encode_binary([b"a"]) + b"x")
