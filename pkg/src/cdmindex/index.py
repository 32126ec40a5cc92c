"""The assembled index: build from a dictionary, answer circular matching queries."""

from __future__ import annotations

import numpy as np

from .csa import SampledSuffixArray, default_sampling
from .dictionary import Dictionary
from .ebwt import EbwtIndex, OmegaOrder
from .lcp import SampledLcp
from .sufftree import SuffixTreeTopology


class CdmIndex:
    """All compressed components plus the alphabet needed to read patterns."""

    def __init__(self, alphabet: bytes, maps, ebwt, sa, lcp, tree):
        self.alphabet = bytes(alphabet)
        self.maps = maps
        self.ebwt = ebwt
        self.sa = sa
        self.lcp = lcp
        self.tree = tree
        self.sigma = len(self.alphabet)
        self.n = maps.n
        self.d = maps.d
        self.n_prime = ebwt.n_prime
        self.n_star = maps.n_star
        self._lookup = np.full(256, self.sigma, dtype=np.int64)
        self._lookup[np.frombuffer(self.alphabet, dtype=np.uint8)] = np.arange(self.sigma)

    @classmethod
    def build(cls, source, sa_sample: int | None = None, lcp_sample: int | None = None):
        dic = source if isinstance(source, Dictionary) else Dictionary(source)
        s_sa = sa_sample or default_sampling(dic.n)
        s_lcp = lcp_sample or default_sampling(dic.n)
        order = OmegaOrder(dic)
        ebwt = EbwtIndex.from_order(order, dic.sigma)
        sa, sa_full, lens = SampledSuffixArray.build(order, ebwt, dic.maps, s_sa)
        lcp_full = order.lcp_array()
        psi = order.predecessor_class()
        follow = np.empty(order.n_prime, dtype=np.int64)
        follow[psi - 1] = np.arange(1, order.n_prime + 1)
        lcp = SampledLcp.build(lcp_full, ebwt, follow, s_lcp)
        starts = np.flatnonzero(sa.b4.bits) if len(lens) else np.zeros(0, dtype=np.int64)
        class_min_len = np.minimum.reduceat(lens, starts)
        tree = SuffixTreeTopology.build(lcp_full, order.n_prime, class_min_len, lens)
        index = cls(dic.alphabet, dic.maps, ebwt, sa, lcp, tree)
        index.build_info = {"sa_full": sa_full, "lcp_full": lcp_full, "len": lens}
        return index

    def encode_pattern(self, pattern) -> list[int]:
        """Pattern bytes to ranks; bytes outside the alphabet get rank sigma."""
        if isinstance(pattern, str):
            pattern = pattern.encode()
        if not pattern:
            return []
        return self._lookup[np.frombuffer(bytes(pattern), dtype=np.uint8)].tolist()

    def decode(self, symbols) -> bytes:
        return bytes(self.alphabet[c] for c in symbols)

    def string_len_at(self, k: int) -> int:
        return self.maps.string_len(self.maps.string_of(k))

    def cdm(self, pattern):
        from .matcher import cdm

        return cdm(self, pattern)

    def cdm_adaptive(self, pattern):
        from .matcher import cdm_adaptive

        return cdm_adaptive(self, pattern)
