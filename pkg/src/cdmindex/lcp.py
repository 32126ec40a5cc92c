"""Sampled LCP over the omega-sorted classes, and lambda for class intervals."""

from __future__ import annotations

import numpy as np

from .succinct import BitVector, Rmq, SparseTable

INF = float("inf")


def sampling_graph(lcp, follow) -> np.ndarray:
    """Out-edge target of every class in Q (0 = no edge).

    lcp[j] for j=2..n' sits at index j-2; follow[j-1] is follow(j). An edge
    leaves D_j when LCP[j] >= 1 and goes to the leftmost minimum of LCP over
    follow(j-1)+1..follow(j), where the lcp is exactly one smaller.
    """
    n_prime = len(follow)
    target = np.zeros(n_prime + 1, dtype=np.int64)
    if n_prime < 2:
        return target
    js = np.flatnonzero(lcp >= 1) + 2
    if len(js):
        lo = follow[js - 2] + 1
        hi = follow[js - 1]
        table = SparseTable(lcp)
        target[js] = table.argmin(lo - 2, hi - 2) + 2
    return target


def choose_samples(lcp, target, s: int) -> np.ndarray:
    """Boolean mask over j=2..n' of sampled classes.

    The distance from D_j to a sink of Q equals LCP[j], since each edge lowers
    the lcp by one. A node is sampled when LCP[j] = s-1 (mod s) and at least
    s-1 edges lead into it along some path; from any node a sampled node or a
    sink is then at most 2s-2 steps away.
    """
    m = len(lcp)
    if m == 0:
        return np.zeros(0, dtype=bool)
    up = np.zeros(m + 2, dtype=np.int64)
    order = np.argsort(-lcp, kind="stable")
    vals = lcp[order]
    cuts = np.flatnonzero(np.diff(vals)) + 1
    for group in np.split(order, cuts):
        g = int(lcp[group[0]])
        if g == 0:
            break
        js = group + 2
        np.maximum.at(up, target[js], up[js] + 1)
    ups = up[2:]
    return (lcp >= 1) & (lcp % s == (s - 1) % s) & (ups >= s - 1)


class SampledLcp:
    """B_6, LCP* and an RMQ over LCP[2..n'], recovering entries by follow-walks."""

    def __init__(self, b6: BitVector, samples, rmq: Rmq, s: int, ebwt):
        self.b6 = b6
        self.samples = np.asarray(samples, dtype=np.int64)
        self._samples = self.samples.tolist()
        self.rmq_lcp = rmq
        self.s = s
        self.ebwt = ebwt
        self.n_prime = ebwt.n_prime

    @classmethod
    def build(cls, lcp, ebwt, follow, s: int) -> "SampledLcp":
        lcp = np.asarray(lcp, dtype=np.int64)
        target = sampling_graph(lcp, follow)
        mask = choose_samples(lcp, target, s)
        return cls(BitVector(mask), lcp[mask], Rmq.from_values(lcp), s, ebwt)

    def lookup_with_steps(self, j: int) -> tuple[int, int]:
        if not 2 <= j <= self.n_prime:
            raise IndexError(f"LCP index {j} outside 2..{self.n_prime}")
        ebwt, b6 = self.ebwt, self.b6
        steps = 0
        while True:
            if ebwt.b2[j]:
                return steps, steps
            if b6[j - 1]:
                return self._samples[b6.rank1(j - 1) - 1] + steps, steps
            j1, j2 = ebwt.follow(j - 1), ebwt.follow(j)
            j = self.rmq_lcp.rmq(j1 + 1 - 1, j2 - 1) + 1
            steps += 1
            if steps > self.n_prime:
                raise RuntimeError("sampling graph walk did not terminate")

    def lookup(self, j: int) -> int:
        return self.lookup_with_steps(j)[0]

    def rmq(self, l: int, r: int) -> int:
        """Leftmost j in [l, r] (2 <= l <= r) minimising LCP[j]."""
        return self.rmq_lcp.rmq(l - 1, r - 1) + 1

    def lam(self, l: int, r: int):
        """lcp of S_l and S_r; INF when l == r."""
        if l == r:
            return INF
        return self.lookup(self.rmq(l + 1, r))
