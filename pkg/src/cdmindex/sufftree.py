"""Suffix-tree topology over class intervals and the tree of marked nodes."""

from __future__ import annotations

import numpy as np

from .succinct import BitVector, RangeMin, Rmq, SparseTable


class BalancedParens:
    """Ordinal tree as a parenthesis bit string, navigated through its excess.

    Positions are 1-based; a node is named by the position of its opening 1.
    Searches use block minima over the excess array, so they cost O(log n).
    """

    def __init__(self, bits):
        self.bv = BitVector(bits)
        self.bits = self.bv.bits
        self.length = len(self.bits)
        steps = 2 * self.bits.astype(np.int64) - 1
        excess = np.zeros(self.length + 1, dtype=np.int64)
        np.cumsum(steps, out=excess[1:])
        if self.length and (excess.min() < 0 or excess[-1] != 0):
            raise ValueError("parenthesis string is not balanced")
        self.excess = excess
        self._ex = RangeMin(excess)

    def __len__(self):
        return self.length

    def is_open(self, i: int) -> bool:
        return self.bv[i] == 1

    def close(self, i: int) -> int:
        return self._ex.first_below(i + 1, int(self.excess[i]))

    def open(self, c: int) -> int:
        return self._ex.last_below(c - 1, int(self.excess[c]) + 1) + 1

    def parent(self, i: int):
        """Opening position of the parent, or None at the root."""
        t = self._ex.last_below(i - 1, int(self.excess[i - 1]))
        return None if t is None else t + 1

    def lca(self, a: int, b: int) -> int:
        if a > b:
            a, b = b, a
        if a == b or self.close(a) > b:
            return a
        k = self._ex.argmin(a, b)
        return self.parent(k + 1)

    def leftmost(self, i: int) -> int:
        return self.bv.select0(self.bv.rank0(i) + 1) - 1

    def rightmost(self, i: int) -> int:
        return self.bv.select1(self.bv.rank1(self.close(i)))

    def is_leaf(self, i: int) -> bool:
        return i < self.length and self.bv[i + 1] == 0


def build_nodes(lcp, n_prime: int):
    """lcp-interval tree of LCP[2..n'] with explicit leaves [j, j].

    Returns parallel lists (lb, rb, lam, parent, children); node 0 is the root
    and leaves carry lam = -1 as a placeholder for the infinite value.
    """
    lb, rb, lam, parent, kids = [1], [n_prime], [0], [-1], [[]]
    if n_prime == 1:
        return lb, rb, lam, parent, kids
    vals = np.asarray(lcp, dtype=np.int64).tolist() + [0]

    def new(l, r, v):
        lb.append(l)
        rb.append(r)
        lam.append(v)
        parent.append(-1)
        kids.append([])
        return len(lb) - 1

    stack = [0]
    for j in range(2, n_prime + 2):
        h = vals[j - 2]
        last = new(j - 1, j - 1, -1)
        while h < lam[stack[-1]]:
            top = stack.pop()
            kids[top].append(last)
            parent[last] = top
            rb[top] = j - 1
            last = top
        if h > lam[stack[-1]]:
            node = new(lb[last], -1, h)
            kids[node].append(last)
            parent[last] = node
            stack.append(node)
        else:
            kids[stack[-1]].append(last)
            parent[last] = stack[-1]
    return lb, rb, lam, parent, kids


def marked_nodes(lb, rb, lam, parent, class_min_len) -> np.ndarray:
    """Boolean mask of marked nodes.

    A non-root node is marked when a class beside it under its parent holds a
    circular suffix no longer than the parent's lambda. class_min_len[j-1] is
    the shortest |T_k| over k in D_j.
    """
    count = len(lb)
    mask = np.zeros(count, dtype=bool)
    mask[0] = True
    if count == 1:
        return mask
    lb = np.asarray(lb)
    rb = np.asarray(rb)
    lam = np.asarray(lam)
    par = np.asarray(parent)
    vals = np.asarray(class_min_len, dtype=np.int64)
    table = SparseTable(vals)
    v = np.arange(1, count)
    p = par[v]
    limit = lam[p]
    big = np.iinfo(np.int64).max

    def side_min(lo, hi):
        out = np.full(len(lo), big, dtype=np.int64)
        ok = lo <= hi
        if ok.any():
            out[ok] = vals[table.argmin(lo[ok] - 1, hi[ok] - 1)]
        return out

    left = side_min(lb[p], lb[v] - 1)
    right = side_min(rb[v] + 1, rb[p])
    mask[1:] = np.minimum(left, right) <= limit
    return mask


def emit_parens(kids, marked):
    """DFS emission of Z, B_7 (leaf openings) and B_8 (marked node symbols)."""
    count = len(kids)
    z = np.zeros(2 * count, dtype=np.uint8)
    b7 = np.zeros(2 * count, dtype=np.uint8)
    b8 = np.zeros(2 * count, dtype=np.uint8)
    marked = np.asarray(marked, dtype=bool).tolist()
    pos = 0
    stack = [(0, 0)]
    while stack:
        node, state = stack.pop()
        if state == 0:
            z[pos] = 1
            if not kids[node]:
                b7[pos] = 1
            if marked[node]:
                b8[pos] = 1
            pos += 1
            stack.append((node, 1))
            for child in reversed(kids[node]):
                stack.append((child, 0))
        else:
            if marked[node]:
                b8[pos] = 1
            pos += 1
    return z, b7, b8


class SuffixTreeTopology:
    """Z, B_7, Z*, B_8 and the Len RMQ, with interval/BP-index conversions."""

    def __init__(self, z, b7, z_star, b8, rmq_len: Rmq):
        self.z = BalancedParens(z)
        self.b7 = BitVector(b7)
        self.z_star = BalancedParens(z_star)
        self.b8 = BitVector(b8)
        self.rmq_len = rmq_len

    @classmethod
    def build(cls, lcp, n_prime: int, class_min_len, lens) -> "SuffixTreeTopology":
        lb, rb, lam, parent, kids = build_nodes(lcp, n_prime)
        marked = marked_nodes(lb, rb, lam, parent, class_min_len)
        z, b7, b8 = emit_parens(kids, marked)
        z_star = z[b8 == 1]
        return cls(z, b7, z_star, b8, Rmq.from_values(lens))

    @property
    def node_count(self) -> int:
        return len(self.z) // 2

    def frominter(self, l: int, r: int) -> int:
        a = self.b7.select1(l)
        return a if l == r else self.z.lca(a, self.b7.select1(r))

    def tointer(self, i: int) -> tuple[int, int]:
        return self.b7.rank1(self.z.leftmost(i)), self.b7.rank1(self.z.rightmost(i))

    def parent(self, i: int):
        return self.z.parent(i)

    def lca(self, a: int, b: int) -> int:
        return self.z.lca(a, b)

    def leftmost(self, i: int) -> int:
        return self.z.leftmost(i)

    def rightmost(self, i: int) -> int:
        return self.z.rightmost(i)

    def is_marked(self, i: int) -> bool:
        return self.b8[i] == 1

    def toaux(self, i: int) -> int:
        if not self.b8[i]:
            raise ValueError(f"BP position {i} is not a marked node")
        return self.b8.rank1(i)

    def fromaux(self, i_star: int) -> int:
        return self.b8.select1(i_star)

    def nma(self, i: int) -> int:
        j = self.b8.rank1(i)
        if self.z_star.is_open(j):
            return j
        return self.z_star.parent(self.z_star.open(j))

    def star_parent(self, i_star: int):
        return self.z_star.parent(i_star)

    def len_rmq_min(self, t1: int, t2: int) -> int:
        return self.rmq_len.rmq(t1, t2)

    def nodes(self) -> list[tuple[int, int]]:
        """All intervals in DFS order (for tests and dumps)."""
        opens = np.flatnonzero(self.z.bits == 1) + 1
        return [self.tointer(int(i)) for i in opens]

    def marked_intervals(self) -> set[tuple[int, int]]:
        opens = np.flatnonzero((self.z.bits == 1) & (self.b8.bits == 1)) + 1
        return {self.tointer(int(i)) for i in opens}
