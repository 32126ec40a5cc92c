import random

from cdmindex import CdmIndex, NaiveIndex
from cdmindex.csa import default_sampling
from cdmindex.oracle import random_dictionary


def test_sa_rows(running):
    sa = running.sa
    assert [sa.lookup(t) for t in range(1, 12)] == [1, 13, 9, 2, 14, 7, 10, 3, 12, 8, 11]
    assert sa.n_star == 11
    assert sa.b4.to_string() == "10110111011"
    assert sa.b5.to_string() == "10101101101"
    assert sa.samples.tolist() == [1, 9, 14, 7, 3, 12, 11]
    assert running.maps.b3.to_string() == "10010000100"


def test_sa_lookup_walks(running):
    assert running.sa.lookup_with_steps(2) == (13, 1)
    assert running.sa.lookup_with_steps(1) == (1, 0)
    assert running.sa.lookup_with_steps(4) == (2, 1)


def test_single_root():
    ix = CdmIndex.build([b"aaa"])
    assert ix.n_star == 1 and ix.sa.lookup(1) == 1


def test_expand(running):
    sa = running.sa
    assert sa.expand_class(2) == [2, 5]
    assert sa.expand_class(1) == [1, 4]
    assert sa.expand_class(7) == [7]
    assert sa.expand_dj(3) == [2, 5, 14]
    assert sa.expand_dj(2) == [9]
    assert sa.expand_dj(6) == [3, 6, 12]


def test_round_trip_reconstructs_text(running):
    sa, e = running.sa, running.ebwt
    text = [None] * running.n
    for j in range(1, running.n_prime + 1):
        for k in sa.expand_dj(j):
            text[k - 1] = running.alphabet[e.first_symbol(j)]
    assert bytes(text) == b"abcabcbcabccab"


def test_default_sampling():
    assert default_sampling(1) == 1
    assert default_sampling(14) == 3
    assert default_sampling(10**6) == 19


def test_sa_lookup_random_corpus():
    rng = random.Random(2)
    for _ in range(250):
        strings = random_dictionary(rng)
        naive = NaiveIndex(strings)
        want = naive.sa()
        for s in (1, 2, 3, 5):
            ix = CdmIndex.build(strings, sa_sample=s)
            for t in range(1, ix.n_star + 1):
                k, steps = ix.sa.lookup_with_steps(t)
                assert k == want[t - 1]
                assert steps <= s
            for j, block in enumerate(naive.partition(), 1):
                assert ix.sa.expand_dj(j) == block
