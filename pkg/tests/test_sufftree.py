import random

import pytest

from cdmindex import CdmIndex, NaiveIndex
from cdmindex.oracle import random_dictionary
from cdmindex.sufftree import BalancedParens

Z = "1110100111010010011101001000"
B7 = "0010100001010010000101001000"
B8 = "1000110001111000000001100001"


def test_rows(running):
    t = running.tree
    assert "".join(map(str, t.z.bits.tolist())) == Z
    assert t.b7.to_string() == B7
    assert t.b8.to_string() == B8
    assert "".join(map(str, t.z_star.bits.tolist())) == "1101010100"
    assert t.marked_intervals() == {(1, 8), (2, 2), (3, 3), (4, 4), (7, 7)}


def test_interval_conversions(running):
    t = running.tree
    assert t.frominter(1, 8) == 1
    assert t.tointer(t.frominter(3, 4)) == (3, 4)
    assert t.frominter(2, 2) == 5
    for node in t.nodes():
        assert t.tointer(t.frominter(*node)) == node


def test_navigation(running):
    t = running.tree
    assert t.parent(t.frominter(3, 4)) == t.frominter(3, 5)
    assert t.lca(t.frominter(1, 1), t.frominter(2, 2)) == t.frominter(1, 2)
    assert t.leftmost(t.frominter(6, 8)) == t.frominter(6, 6)
    assert t.rightmost(t.frominter(3, 5)) == t.frominter(5, 5)
    assert t.parent(1) is None


def test_marked_tree_maps(running):
    t = running.tree
    assert t.nma(t.frominter(4, 4)) == t.toaux(t.frominter(4, 4))
    assert t.nma(t.frominter(6, 6)) == 1
    assert t.nma(t.frominter(1, 1)) == 1
    assert t.fromaux(t.toaux(t.frominter(7, 7))) == t.frominter(7, 7)
    with pytest.raises(ValueError):
        t.toaux(t.frominter(1, 2))


def test_len_rmq(running):
    t = running.tree
    assert t.len_rmq_min(1, 4) == 2
    assert t.len_rmq_min(5, 5) == 5
    assert t.len_rmq_min(1, 11) == 2


def test_single_class_tree():
    t = CdmIndex.build([b"aa", b"a"]).tree
    assert t.z.bits.tolist() == [1, 0]
    assert t.frominter(1, 1) == 1 and t.parent(1) is None and t.nma(1) == 1


def test_unbalanced_rejected():
    with pytest.raises(ValueError):
        BalancedParens([1, 1, 0])


def _check_tree(ix, naive):
    t = ix.tree
    nodes = t.nodes()
    assert set(nodes) == naive.nodes()
    leaves = [n for n in nodes if n[0] == n[1]]
    assert sorted(leaves) == [(j, j) for j in range(1, ix.n_prime + 1)]
    assert len(nodes) <= 2 * ix.n_prime - 1
    for z in (t.z, t.z_star):
        ex = z.excess
        assert ex.min() >= 0 and ex[-1] == 0
    opens = [i for i in range(1, len(t.z) + 1) if t.z.is_open(i)]
    marked = naive.marked()
    assert t.marked_intervals() == marked
    lcp = naive.lcp()
    for i in opens:
        node = t.tointer(i)
        p = t.parent(i)
        # brute-force nearest marked ancestor by climbing parents
        x = i
        while t.tointer(x) not in marked:
            x = t.parent(x)
        assert t.fromaux(t.nma(i)) == x
        if p is None:
            continue
        parent = t.tointer(p)
        assert parent == naive.parent_of(node, set(nodes))
        assert parent[0] <= node[0] and node[1] <= parent[1] and parent != node
        kids = [t.tointer(c) for c in opens if t.parent(c) == p]
        assert kids[0][0] == parent[0] and kids[-1][1] == parent[1]
        for a, b in zip(kids, kids[1:]):
            assert b[0] == a[1] + 1
        l, r = node
        if l < r:
            lam = naive.lam(l, r)
            if l >= 2:
                assert lcp[l - 2] < lam
            if r <= ix.n_prime - 1:
                assert lcp[r - 1] < lam
    for a in nodes:
        for b in nodes:
            inside = b[0] <= a[0] and a[1] <= b[1]
            apart = a[1] < b[0] or b[1] < a[0]
            assert inside or apart or (a[0] <= b[0] and b[1] <= a[1])


def test_topology_random_corpus():
    rng = random.Random(13)
    for _ in range(150):
        strings = random_dictionary(rng, max_n=40)
        ix = CdmIndex.build(strings, rng.choice([1, 2, 3]), rng.choice([1, 2, 3]))
        _check_tree(ix, NaiveIndex(strings))
