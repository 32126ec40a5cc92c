import random

from cdmindex.dictionary import Dictionary
from cdmindex.ebwt import EbwtIndex, OmegaOrder
from cdmindex.oracle import NaiveIndex, random_dictionary

from conftest import RUNNING


def build(strings):
    dic = Dictionary(strings)
    order = OmegaOrder(dic)
    return dic, order, EbwtIndex.from_order(order, dic.sigma)


def test_partition_running_example():
    _, order, _ = build(RUNNING)
    assert order.n_prime == 8
    assert order.classes == [[1, 4, 13], [9], [2, 5, 14], [7], [10], [3, 6, 12], [8], [11]]


def test_partition_small_cases():
    _, order, _ = build([b"a"])
    assert order.n_prime == 1 and order.classes == [[1]]
    _, order, _ = build([b"ab", b"ab"])
    assert order.classes == [[1, 3], [2, 4]]


def test_bwt_rows(running):
    assert running.decode(running.ebwt.bwt.symbols.tolist()) == b"ccacabbb"
    assert running.decode(running.ebwt.bwt_star()) == b"aabbbccc"
    assert running.ebwt.b2.to_string() == "10100100"


def test_backward_search(running):
    a, b, c = 0, 1, 2
    e = running.ebwt
    assert e.bws(6, 8, b) == (3, 5)
    assert e.bws(1, 1, a) is None
    assert e.bws(1, 8, c) == (6, 8)
    assert e.bws(1, 8, 3) is None  # reserved out-of-alphabet rank


def test_prev_follow(running):
    e = running.ebwt
    assert e.prev(1) == 6
    assert e.prev(2) == 7
    assert e.follow(6) == 1
    assert e.follow(3) == 6
    for j in range(1, 9):
        assert e.follow(e.prev(j)) == j
        assert e.prev(e.follow(j)) == j
    _, _, unary = build([b"aaa"])
    assert unary.prev(1) == 1


def test_edge_monotonicity_and_decoding():
    rng = random.Random(21)
    for _ in range(60):
        strings = random_dictionary(rng, max_n=40)
        dic, order, e = build(strings)
        edges = sorted((e.prev(j), j, e.bwt.access(j)) for j in range(1, order.n_prime + 1))
        labels = [lab for _, _, lab in edges]
        assert labels == sorted(labels)
        for (_, d1, l1), (_, d2, l2) in zip(edges, edges[1:]):
            if l1 == l2:
                assert d1 < d2
        # cycles of prev, measured in characters, match the distinct roots
        seen, cycles = set(), []
        for j in range(1, order.n_prime + 1):
            if j in seen:
                continue
            x, length = j, 0
            while x not in seen:
                seen.add(x)
                x = e.prev(x)
                length += 1
            cycles.append(length)
        naive = NaiveIndex(dic)
        roots = {}
        for h, s in enumerate(strings):
            r = s[: dic.root_lens[h]]
            canon = min(r[i:] + r[:i] for i in range(len(r)))
            roots[canon] = len(r)
        assert sorted(cycles) == sorted(roots.values())
        assert naive.n_prime == order.n_prime


def test_bws_matches_brute_force():
    rng = random.Random(8)
    for _ in range(80):
        strings = random_dictionary(rng, max_n=40)
        dic, order, e = build(strings)
        naive = NaiveIndex(dic)
        assert order.classes == naive.partition()
        assert bytes(dic.alphabet[c] for c in e.bwt.symbols.tolist()) == naive.bwt()
        for _ in range(10):
            l = rng.randint(1, order.n_prime)
            r = rng.randint(l, order.n_prime)
            for c in range(dic.sigma):
                want = naive.back(l, r, dic.alphabet[c])
                got = e.bws(l, r, c)
                assert (list(range(got[0], got[1] + 1)) if got else []) == want
