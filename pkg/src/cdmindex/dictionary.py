"""Input dictionaries of circular strings and the position bookkeeping around them."""

from __future__ import annotations

import struct

import numpy as np

from .succinct import BitVector


class DictionaryError(ValueError):
    pass


def compute_root(s) -> int:
    """Length of the primitive root of s, via the border (failure) array."""
    n = len(s)
    if n == 0:
        raise DictionaryError("root of an empty string is undefined")
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and s[i] != s[k]:
            k = fail[k - 1]
        if s[i] == s[k]:
            k += 1
        fail[i] = k
    p = n - fail[-1]
    return p if n % p == 0 else n


class PositionMaps:
    """B_1 (string starts) and B_3 (root starts) with the maps derived from them.

    This is all the index keeps about the layout of the input; the text itself
    is not needed once the index is built.
    """

    def __init__(self, b1: BitVector, b3: BitVector):
        self.b1 = b1
        self.b3 = b3
        self.n = len(b1)
        self.d = b1.count1
        self.n_star = len(b3)
        if b3.count1 != self.d:
            raise DictionaryError("B_1 and B_3 disagree on the string count")

    @classmethod
    def from_lengths(cls, lengths, root_lens) -> "PositionMaps":
        lengths = np.asarray(lengths, dtype=np.int64)
        root_lens = np.asarray(root_lens, dtype=np.int64)
        b1 = np.zeros(int(lengths.sum()), dtype=np.uint8)
        b1[np.concatenate(([0], np.cumsum(lengths)[:-1]))] = 1
        b3 = np.zeros(int(root_lens.sum()), dtype=np.uint8)
        b3[np.concatenate(([0], np.cumsum(root_lens)[:-1]))] = 1
        return cls(BitVector(b1), BitVector(b3))

    def _check_pos(self, k):
        if not 1 <= k <= self.n:
            raise IndexError(f"position {k} outside 1..{self.n}")

    def _check_str(self, h):
        if not 1 <= h <= self.d:
            raise IndexError(f"string index {h} outside 1..{self.d}")

    def phi(self, k: int) -> tuple[int, int]:
        self._check_pos(k)
        f = self.b1.rank1(k)
        return f, k - self.b1.select1(f) + 1

    def phi_inv(self, f: int, g: int) -> int:
        self._check_str(f)
        if not 1 <= g <= self.string_len(f):
            raise IndexError(f"offset {g} outside string {f}")
        return self.b1.select1(f) + g - 1

    def pred(self, k: int) -> int:
        self._check_pos(k)
        if self.b1[k] == 0:
            return k - 1
        return self.b1.select1(self.b1.rank1(k) + 1) - 1

    def string_of(self, k: int) -> int:
        self._check_pos(k)
        return self.b1.rank1(k)

    def string_start(self, h: int) -> int:
        self._check_str(h)
        return self.b1.select1(h)

    def string_len(self, h: int) -> int:
        self._check_str(h)
        return self.b1.select1(h + 1) - self.b1.select1(h)

    def root_len(self, h: int) -> int:
        self._check_str(h)
        return self.b3.select1(h + 1) - self.b3.select1(h)


class Dictionary:
    """A multiset of nonempty strings remapped to a dense alphabet 0..sigma-1."""

    def __init__(self, strings):
        strings = [bytes(s) for s in strings]
        if not strings:
            raise DictionaryError("dictionary must contain at least one string")
        for h, s in enumerate(strings, 1):
            if not s:
                raise DictionaryError(f"string {h} is empty")
        self.strings = strings
        self.d = len(strings)
        joined = np.frombuffer(b"".join(strings), dtype=np.uint8)
        present = np.zeros(256, dtype=bool)
        present[joined] = True
        self.alphabet = bytes(np.flatnonzero(present).tolist())
        self.sigma = len(self.alphabet)
        lookup = np.full(256, -1, dtype=np.int64)
        lookup[np.frombuffer(self.alphabet, dtype=np.uint8)] = np.arange(self.sigma)
        self.text = lookup[joined]
        self.n = len(self.text)
        self.lengths = np.array([len(s) for s in strings], dtype=np.int64)
        self.starts = np.concatenate(([1], 1 + np.cumsum(self.lengths)[:-1]))
        self.root_lens = np.array([compute_root(s) for s in strings], dtype=np.int64)
        self.maps = PositionMaps.from_lengths(self.lengths, self.root_lens)

    def __repr__(self):
        return f"Dictionary(d={self.d}, n={self.n}, sigma={self.sigma})"

    # thin delegations, so callers rarely need .maps explicitly
    def phi(self, k):
        return self.maps.phi(k)

    def phi_inv(self, f, g):
        return self.maps.phi_inv(f, g)

    def pred(self, k):
        return self.maps.pred(k)

    def string_len(self, h):
        return self.maps.string_len(h)

    def root_len(self, h):
        return self.maps.root_len(h)

    def string_start(self, h):
        return self.maps.string_start(h)

    def circular_suffix(self, k: int) -> bytes:
        f, g = self.maps.phi(k)
        s = self.strings[f - 1]
        return s[g - 1 :] + s[: g - 1]


def parse_text(data: bytes) -> list[bytes]:
    """One string per line; a single trailing newline is ignored."""
    if data.endswith(b"\n"):
        data = data[:-1]
    if not data:
        raise DictionaryError("input contains no strings")
    lines = data.split(b"\n")
    for h, line in enumerate(lines, 1):
        if not line:
            raise DictionaryError(f"line {h} is an empty string")
    return lines


def parse_binary(data: bytes) -> list[bytes]:
    """u32 count, then (u32 length, bytes) per string, little-endian."""
    if len(data) < 4:
        raise DictionaryError("binary input truncated")
    (count,) = struct.unpack_from("<I", data, 0)
    pos = 4
    out = []
    for h in range(count):
        if pos + 4 > len(data):
            raise DictionaryError(f"binary input truncated at string {h + 1}")
        (length,) = struct.unpack_from("<I", data, pos)
        pos += 4
        if length == 0:
            raise DictionaryError(f"string {h + 1} is empty")
        if pos + length > len(data):
            raise DictionaryError(f"binary input truncated at string {h + 1}")
        out.append(data[pos : pos + length])
        pos += length
    if pos != len(data):
        raise DictionaryError("trailing bytes after last string")
    if not out:
        raise DictionaryError("input contains no strings")
    return out


def encode_binary(strings) -> bytes:
    out = bytearray(struct.pack("<I", len(strings)))
    for s in strings:
        out += struct.pack("<I", len(s)) + bytes(s)
    return bytes(out)
