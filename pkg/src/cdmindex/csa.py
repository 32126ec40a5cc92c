"""Sampled suffix array over class representatives."""

from __future__ import annotations

import math

import numpy as np

from .succinct import BitVector


def default_sampling(n: int) -> int:
    return max(1, int(math.floor(math.log2(n + 1))))


class SampledSuffixArray:
    """B_4 (class boundaries in SA), B_5 (sampled entries) and SA* (samples).

    Unsampled entries are recovered by walking pred: SA[t] = SA[t'] + 1 where
    t' holds the predecessor representative, which is found through prev on
    the eBWT and the rank of t inside its class block.
    """

    def __init__(self, b4: BitVector, b5: BitVector, samples, s: int, ebwt, maps):
        self.b4 = b4
        self.b5 = b5
        self.samples = np.asarray(samples, dtype=np.int64)
        self._samples = self.samples.tolist()
        self.s = s
        self.n_star = len(b4)
        self.ebwt = ebwt
        self.maps = maps

    @classmethod
    def build(cls, order, ebwt, maps, s: int):
        """Return (structure, full SA, Len); the full arrays are transient."""
        if s < 1:
            raise ValueError("sampling factor must be >= 1")
        perm = np.argsort(order.u_class, kind="stable")
        sa = order.u_pos[perm]
        cls_sorted = order.u_class[perm]
        b4 = np.ones(len(sa), dtype=np.uint8)
        b4[1:] = cls_sorted[1:] != cls_sorted[:-1]
        sampled = (order.u_off[perm] % s) == 0
        lens = order.u_len[perm]
        struct = cls(BitVector(b4), BitVector(sampled), sa[sampled], s, ebwt, maps)
        return struct, sa, lens

    def lookup_with_steps(self, t: int) -> tuple[int, int]:
        if not 1 <= t <= self.n_star:
            raise IndexError(f"SA index {t} outside 1..{self.n_star}")
        b4, b5 = self.b4, self.b5
        steps = 0
        while not b5[t]:
            j = b4.rank1(t)
            q = t - b4.select1(j) + 1
            t = b4.select1(self.ebwt.prev(j)) + q - 1
            steps += 1
        return self._samples[b5.rank1(t) - 1] + steps, steps

    def lookup(self, t: int) -> int:
        return self.lookup_with_steps(t)[0]

    def block(self, j: int) -> tuple[int, int]:
        """SA range [t1, t2] holding the representatives of D_j."""
        return self.b4.select1(j), self.b4.select1(j + 1) - 1

    def expand_class(self, k: int) -> list[int]:
        h = self.maps.string_of(k)
        rl = self.maps.root_len(h)
        reps = self.maps.string_len(h) // rl
        return [k + w * rl for w in range(reps)]

    def expand_dj(self, j: int) -> list[int]:
        t1, t2 = self.block(j)
        out = []
        for t in range(t1, t2 + 1):
            out.extend(self.expand_class(self.lookup(t)))
        return sorted(out)
