"""Omega-order partition of dictionary positions and the extended BWT over it."""

from __future__ import annotations

import numpy as np

from .succinct import BitVector, SymbolSequence


class OmegaOrder:
    """Classes D_1..D_n' of positions sharing one omega-string, in omega order.

    Work happens on the root universe: the n* positions k_h..k_h+|rho_h|-1 of
    each string. Every other position is congruent to one of these modulo its
    root length and therefore lands in the same class. Sorting is prefix
    doubling on the infinite periodic strings; ranks of each doubling level are
    kept so adjacent lcp values can be read off by binary lifting.
    """

    def __init__(self, dictionary):
        self.dictionary = dictionary
        lengths = dictionary.lengths
        root_lens = dictionary.root_lens
        starts0 = dictionary.starts - 1
        rstarts0 = np.concatenate(([0], np.cumsum(root_lens)[:-1]))
        self.n_star = n_star = int(root_lens.sum())
        owner = np.repeat(np.arange(dictionary.d), root_lens)
        self.u_base = rstarts0[owner]
        self.u_off = np.arange(n_star) - self.u_base
        self.u_rl = root_lens[owner]
        self.u_string = owner + 1
        self.u_pos = starts0[owner] + self.u_off + 1
        self.u_len = lengths[owner]
        self.u_char = dictionary.text[self.u_pos - 1]

        rank = self.u_char.astype(np.int64)
        count = int(len(np.unique(rank)))
        rank = np.searchsorted(np.unique(rank), rank)
        levels = [rank]
        h = 1
        while True:
            partner = self.u_base + (self.u_off + h) % self.u_rl
            key = rank * count + rank[partner]
            order = np.argsort(key, kind="stable")
            sk = key[order]
            fresh = np.empty(n_star, dtype=bool)
            fresh[0] = True
            fresh[1:] = sk[1:] != sk[:-1]
            new_rank = np.empty(n_star, dtype=np.int64)
            new_rank[order] = np.cumsum(fresh) - 1
            new_count = int(new_rank.max()) + 1
            levels.append(new_rank)
            if new_count == count:
                break
            rank, count, h = new_rank, new_count, h * 2
        self.levels = levels
        self.n_prime = count
        self.u_class = levels[-1] + 1

    def _root_index(self, k):
        """Root-universe index of position(s) k (1-based, vectorised)."""
        dic = self.dictionary
        k = np.asarray(k, dtype=np.int64)
        h = np.searchsorted(dic.starts, k, side="right") - 1
        off = (k - dic.starts[h]) % dic.root_lens[h]
        rstarts0 = np.concatenate(([0], np.cumsum(dic.root_lens)[:-1]))
        return rstarts0[h] + off

    def class_array(self) -> np.ndarray:
        """class_of for every position 1..n, as an array indexed by k-1."""
        return self.u_class[self._root_index(np.arange(1, self.dictionary.n + 1))]

    def class_of(self, k: int) -> int:
        return int(self.u_class[self._root_index(k)])

    @property
    def classes(self) -> list[list[int]]:
        cls = self.class_array()
        out = [[] for _ in range(self.n_prime)]
        for k, j in enumerate(cls.tolist(), 1):
            out[j - 1].append(k)
        return out

    def representatives(self) -> np.ndarray:
        """One root-universe index per class, indexed by j-1."""
        rep = np.empty(self.n_prime, dtype=np.int64)
        rep[self.u_class[::-1] - 1] = np.arange(self.n_star)[::-1]
        return rep

    def predecessor_class(self) -> np.ndarray:
        """psi as an array: psi[j-1] = class of pred(D_j)."""
        rep = self.representatives()
        pred = self.u_base[rep] + (self.u_off[rep] - 1) % self.u_rl[rep]
        return self.u_class[pred]

    def lcp_array(self) -> np.ndarray:
        """LCP[j] for j=2..n' (array index j-2), via binary lifting on levels."""
        rep = self.representatives()
        a, b = rep[:-1], rep[1:]
        lcp = np.zeros(len(a), dtype=np.int64)
        for lv in range(len(self.levels) - 1, -1, -1):
            ranks = self.levels[lv]
            pa = self.u_base[a] + (self.u_off[a] + lcp) % self.u_rl[a]
            pb = self.u_base[b] + (self.u_off[b] + lcp) % self.u_rl[b]
            lcp += (ranks[pa] == ranks[pb]) * (1 << lv)
        return lcp


class EbwtIndex:
    """BWT and B_2 of the omega-order partition, with backward search."""

    def __init__(self, bwt: SymbolSequence, b2: BitVector):
        self.bwt = bwt
        self.b2 = b2
        self.sigma = bwt.sigma
        self.n_prime = len(bwt)
        self._run_start = [b2.select1(c + 1) for c in range(self.sigma)]

    @classmethod
    def from_order(cls, order: OmegaOrder, sigma: int) -> "EbwtIndex":
        rep = order.representatives()
        pred = order.u_base[rep] + (order.u_off[rep] - 1) % order.u_rl[rep]
        bwt = order.u_char[pred]
        first = order.u_char[rep]
        b2 = np.ones(order.n_prime, dtype=np.uint8)
        b2[1:] = first[1:] != first[:-1]
        return cls(SymbolSequence(bwt, sigma), BitVector(b2))

    def bwt_star(self) -> list[int]:
        return sorted(self.bwt.symbols.tolist())

    def bws(self, l: int, r: int, c: int):
        """Interval of classes reached from [l, r] by prepending c, or None."""
        if not 0 <= c < self.sigma:
            return None
        lo = self.bwt.rank(c, l - 1)
        hi = self.bwt.rank(c, r)
        if lo == hi:
            return None
        base = self._run_start[c]
        return base + lo, base + hi - 1

    def prev(self, j: int) -> int:
        c = self.bwt.access(j)
        return self._run_start[c] + self.bwt.rank(c, j) - 1

    def follow(self, j: int) -> int:
        c = self.b2.rank1(j) - 1
        return self.bwt.select(c, j - self._run_start[c] + 1)

    def first_symbol(self, j: int) -> int:
        """BWT*[j], the first character of S_j."""
        return self.b2.rank1(j) - 1
