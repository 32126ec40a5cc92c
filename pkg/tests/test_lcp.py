import random

import numpy as np

from cdmindex import CdmIndex, NaiveIndex
from cdmindex.lcp import INF, choose_samples, sampling_graph
from cdmindex.oracle import random_dictionary


def test_lcp_rows(running):
    lcp = running.lcp
    assert [lcp.lookup(j) for j in range(2, 9)] == [3, 0, 5, 2, 0, 4, 1]
    assert lcp.b6.to_string() == "1000001"
    assert lcp.samples.tolist() == [3, 1]


def test_lcp_lookup_examples(running):
    assert running.lcp.lookup(4) == 5
    assert running.lcp.lookup(3) == 0
    assert running.lcp.lookup(7) == 4


def test_lambda(running):
    assert running.lcp.lam(3, 4) == 5
    assert running.lcp.lam(5, 5) == INF
    assert running.lcp.lam(1, 8) == 0


def test_unary_dictionary_has_empty_lcp():
    ix = CdmIndex.build([b"aaaa", b"aa"])
    assert ix.n_prime == 1 and len(ix.lcp.b6) == 0


def test_sampling_graph_running_example(running):
    lcp = np.array([3, 0, 5, 2, 0, 4, 1])
    follow = np.array([running.ebwt.follow(j) for j in range(1, 9)])
    target = sampling_graph(lcp, follow)
    # D4 -> D7 -> D2 -> D5 -> D8 -> D3, D6 isolated
    assert {j: int(target[j]) for j in range(2, 9) if target[j]} == {4: 7, 7: 2, 2: 5, 5: 8, 8: 3}
    assert choose_samples(lcp, target, 2).astype(int).tolist() == [1, 0, 0, 0, 0, 0, 1]


def _walks_ok(lcp, target, mask, s):
    for j in range(2, len(lcp) + 2):
        x, steps = j, 0
        while lcp[x - 2] > 0 and not mask[x - 2]:
            x = int(target[x])
            steps += 1
        assert steps <= 2 * s - 2 if s > 1 else steps == 0


def test_lcp_random_corpus():
    rng = random.Random(6)
    for _ in range(250):
        strings = random_dictionary(rng)
        naive = NaiveIndex(strings)
        want = naive.lcp()
        if want:
            top = max(want)
            assert set(want) == set(range(top + 1))  # values are downward closed
            assert top <= naive.n_prime - 2
        for s in (1, 2, 3, 5):
            ix = CdmIndex.build(strings, lcp_sample=s)
            for j in range(2, ix.n_prime + 1):
                v, steps = ix.lcp.lookup_with_steps(j)
                assert v == want[j - 2]
                assert steps <= max(0, 2 * s - 2)
            full = ix.build_info["lcp_full"]
            follow = np.array([ix.ebwt.follow(j) for j in range(1, ix.n_prime + 1)])
            target = sampling_graph(full, follow)
            _walks_ok(full, target, choose_samples(full, target, s), s)
