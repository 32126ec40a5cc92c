"""Succinct primitives: rank/select bitvectors, symbol sequences and range minima.

Every public position is 1-based. Internally bits live in 64-bit words held as
Python ints so that rank is one popcount and select is a bisect plus a short
in-word scan.
"""

from __future__ import annotations

import struct
from bisect import bisect_left

import numpy as np

WORD = 64
BLOCK = 32


def pack_bits(bits) -> bytes:
    """Pack a 0/1 sequence LSB-first into bytes."""
    arr = np.asarray(bits, dtype=np.uint8)
    return np.packbits(arr, bitorder="little").tobytes()


def unpack_bits(data: bytes, length: int) -> np.ndarray:
    arr = np.unpackbits(np.frombuffer(data, dtype=np.uint8), bitorder="little")
    if len(arr) < length:
        raise ValueError("bit payload shorter than declared length")
    return arr[:length].copy()


def _kth_set_bit(word: int, k: int) -> int:
    """0-based offset of the k-th (1-based) set bit of word."""
    for _ in range(k - 1):
        word &= word - 1
    return (word & -word).bit_length() - 1


class BitVector:
    """Static bitvector with 1-based rank and select.

    select_c(rank_c(len) + 1) returns len + 1, which lets callers compute run
    lengths without special cases.
    """

    def __init__(self, bits):
        arr = np.asarray(bits, dtype=np.uint8)
        if arr.ndim != 1:
            arr = arr.reshape(-1)
        if len(arr) and arr.max() > 1:
            raise ValueError("bitvector entries must be 0 or 1")
        self.bits = arr
        self.length = len(arr)
        nwords = self.length // WORD + 1
        raw = np.zeros(nwords * 8, dtype=np.uint8)
        packed = np.packbits(arr, bitorder="little")
        raw[: len(packed)] = packed
        words = raw.view("<u8")
        counts = np.bitwise_count(words).astype(np.int64)
        cum = np.zeros(nwords + 1, dtype=np.int64)
        np.cumsum(counts, out=cum[1:])
        self._words = words.tolist()
        self._ones = cum.tolist()
        self._zeros = (np.arange(nwords + 1, dtype=np.int64) * WORD - cum).tolist()
        self.count1 = int(cum[-1])
        self.count0 = self.length - self.count1

    def __len__(self):
        return self.length

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= self.length:
            raise IndexError(f"position {i} outside 1..{self.length}")
        q = i - 1
        return (self._words[q >> 6] >> (q & 63)) & 1

    def rank1(self, i: int) -> int:
        if not 0 <= i <= self.length:
            raise IndexError(f"rank position {i} outside 0..{self.length}")
        w = i >> 6
        return self._ones[w] + (self._words[w] & ((1 << (i & 63)) - 1)).bit_count()

    def rank0(self, i: int) -> int:
        return i - self.rank1(i)

    def rank(self, c: int, i: int) -> int:
        return self.rank1(i) if c else self.rank0(i)

    def select1(self, k: int) -> int:
        if not 1 <= k <= self.count1 + 1:
            raise IndexError(f"select_1 ordinal {k} outside 1..{self.count1 + 1}")
        if k == self.count1 + 1:
            return self.length + 1
        w = bisect_left(self._ones, k) - 1
        return w * WORD + _kth_set_bit(self._words[w], k - self._ones[w]) + 1

    def select0(self, k: int) -> int:
        if not 1 <= k <= self.count0 + 1:
            raise IndexError(f"select_0 ordinal {k} outside 1..{self.count0 + 1}")
        if k == self.count0 + 1:
            return self.length + 1
        w = bisect_left(self._zeros, k) - 1
        inv = ~self._words[w] & 0xFFFFFFFFFFFFFFFF
        return w * WORD + _kth_set_bit(inv, k - self._zeros[w]) + 1

    def select(self, c: int, k: int) -> int:
        return self.select1(k) if c else self.select0(k)

    def to_string(self) -> str:
        return "".join("1" if b else "0" for b in self.bits.tolist())

    def payload(self) -> bytes:
        return pack_bits(self.bits)

    @classmethod
    def from_string(cls, s: str) -> "BitVector":
        return cls([1 if ch == "1" else 0 for ch in s])


class SymbolSequence:
    """Sequence over {0..sigma-1} with access/rank/select, one bitvector per symbol."""

    def __init__(self, symbols, sigma: int):
        arr = np.asarray(symbols, dtype=np.int64)
        if len(arr) and (arr.min() < 0 or arr.max() >= sigma):
            raise ValueError("symbol outside alphabet")
        self.sigma = sigma
        self.symbols = arr
        self.length = len(arr)
        self._planes = [BitVector(arr == c) for c in range(sigma)]
        self._list = arr.tolist()

    def __len__(self):
        return self.length

    def _check_symbol(self, c):
        if not 0 <= c < self.sigma:
            raise IndexError(f"symbol {c} outside 0..{self.sigma - 1}")

    def access(self, i: int) -> int:
        if not 1 <= i <= self.length:
            raise IndexError(f"position {i} outside 1..{self.length}")
        return self._list[i - 1]

    def rank(self, c: int, i: int) -> int:
        self._check_symbol(c)
        return self._planes[c].rank1(i)

    def select(self, c: int, k: int) -> int:
        self._check_symbol(c)
        return self._planes[c].select1(k)


def symbol_width(sigma: int) -> int:
    return max(1, int(sigma - 1).bit_length())


def pack_symbols(symbols, sigma: int) -> bytes:
    """Fixed-width LSB-first packing of small integers."""
    width = symbol_width(sigma)
    arr = np.asarray(symbols, dtype=np.uint64)
    shifts = np.arange(width, dtype=np.uint64)
    bits = ((arr[:, None] >> shifts[None, :]) & 1).astype(np.uint8).reshape(-1)
    return pack_bits(bits)


def unpack_symbols(data: bytes, length: int, sigma: int) -> np.ndarray:
    width = symbol_width(sigma)
    bits = unpack_bits(data, length * width).reshape(length, width).astype(np.int64)
    return (bits << np.arange(width, dtype=np.int64)[None, :]).sum(axis=1)


class RangeMin:
    """Leftmost range-minimum over a numpy array (0-based, inclusive bounds).

    Blocks of BLOCK values are summarised by their minima; a sparse table over
    block minima answers the middle part of a query. The same tables support
    the forward/backward threshold searches used by the parenthesis code.
    """

    def __init__(self, values):
        vals = np.ascontiguousarray(values, dtype=np.int64)
        self.values = vals
        self.length = n = len(vals)
        nb = max(1, -(-n // BLOCK))
        padded = np.full(nb * BLOCK, np.iinfo(np.int64).max, dtype=np.int64)
        padded[:n] = vals
        grid = padded.reshape(nb, BLOCK)
        arg = grid.argmin(axis=1)
        self.nblocks = nb
        bmin = grid[np.arange(nb), arg]
        barg = arg + np.arange(nb) * BLOCK
        self._tmin = [bmin]
        self._targ = [barg]
        k = 1
        while (1 << k) <= nb:
            pm, pa = self._tmin[-1], self._targ[-1]
            half = 1 << (k - 1)
            left_m, right_m = pm[:-half], pm[half:]
            take_right = right_m < left_m
            self._tmin.append(np.where(take_right, right_m, left_m))
            self._targ.append(np.where(take_right, pa[half:], pa[:-half]))
            k += 1
        self._tmin_l = [t.tolist() for t in self._tmin]
        self._targ_l = [t.tolist() for t in self._targ]

    def _blocks(self, a: int, b: int):
        """(min, argmin) over blocks a..b inclusive."""
        k = (b - a + 1).bit_length() - 1
        m1, m2 = self._tmin_l[k][a], self._tmin_l[k][b - (1 << k) + 1]
        if m2 < m1:
            return m2, self._targ_l[k][b - (1 << k) + 1]
        return m1, self._targ_l[k][a]

    def argmin(self, i: int, j: int) -> int:
        if not 0 <= i <= j < self.length:
            raise IndexError(f"range [{i}, {j}] invalid for length {self.length}")
        vals = self.values
        bi, bj = i // BLOCK, j // BLOCK
        if bj - bi <= 1:
            return i + int(vals[i : j + 1].argmin())
        best = i + int(vals[i : (bi + 1) * BLOCK].argmin())
        best_v = vals[best]
        mv, ma = self._blocks(bi + 1, bj - 1)
        if mv < best_v:
            best, best_v = ma, mv
        tail = bj * BLOCK + int(vals[bj * BLOCK : j + 1].argmin())
        if vals[tail] < best_v:
            best = tail
        return best

    def first_below(self, start: int, threshold: int) -> int | None:
        """Smallest index t >= start with values[t] < threshold."""
        if start >= self.length:
            return None
        vals = self.values
        b = start // BLOCK
        end = min((b + 1) * BLOCK, self.length)
        hits = np.flatnonzero(vals[start:end] < threshold)
        if len(hits):
            return start + int(hits[0])
        b += 1
        for k in range(len(self._tmin_l) - 1, -1, -1):
            if b + (1 << k) <= self.nblocks and self._tmin_l[k][b] >= threshold:
                b += 1 << k
        if b >= self.nblocks:
            return None
        lo = b * BLOCK
        hits = np.flatnonzero(vals[lo : min(lo + BLOCK, self.length)] < threshold)
        return lo + int(hits[0])

    def last_below(self, end: int, threshold: int) -> int | None:
        """Largest index t <= end with values[t] < threshold."""
        if end < 0:
            return None
        vals = self.values
        b = end // BLOCK
        lo = b * BLOCK
        hits = np.flatnonzero(vals[lo : end + 1] < threshold)
        if len(hits):
            return lo + int(hits[-1])
        b -= 1
        for k in range(len(self._tmin_l) - 1, -1, -1):
            if b - (1 << k) + 1 >= 0 and self._tmin_l[k][b - (1 << k) + 1] >= threshold:
                b -= 1 << k
        if b < 0:
            return None
        lo = b * BLOCK
        hits = np.flatnonzero(vals[lo : lo + BLOCK] < threshold)
        return lo + int(hits[-1])


def cartesian_code(values) -> np.ndarray:
    """2n-bit shape code of the right-to-left min stack of values.

    Scanning right to left, each element pops every stacked element that is
    not smaller than itself (one 0 per pop) and is then pushed (one 1). The
    stack height seen by each element fixes all leftmost range minima.
    """
    vals = np.asarray(values, dtype=np.int64).tolist()
    n = len(vals)
    stack = []
    out = bytearray()
    for i in range(n - 1, -1, -1):
        v = vals[i]
        pops = 0
        while stack and stack[-1] >= v:
            stack.pop()
            pops += 1
        out.extend(b"\x00" * pops)
        out.append(1)
        stack.append(v)
    return np.frombuffer(bytes(out), dtype=np.uint8).copy()


def depths_from_code(code, n: int) -> np.ndarray:
    """Recover per-element stack heights (in left-to-right order) from the code."""
    code = np.asarray(code, dtype=np.int64)
    steps = 2 * code - 1
    excess = np.cumsum(steps)
    ones = np.flatnonzero(code == 1)
    if len(ones) != n:
        raise ValueError("shape code does not match array length")
    heights = excess[ones] - 1
    return heights[::-1].copy()


class Rmq:
    """Range-minimum structure over A[1..n] that does not keep A.

    The persistent form is the 2n-bit shape code from cartesian_code; queries
    run on the decoded stack heights, whose leftmost minimum over any range
    sits at the leftmost minimum of A.
    """

    def __init__(self, code, n: int):
        self.n = n
        self.code = np.asarray(code, dtype=np.uint8)
        self._rm = RangeMin(depths_from_code(self.code, n)) if n else None

    @classmethod
    def from_values(cls, values) -> "Rmq":
        values = np.asarray(values, dtype=np.int64)
        return cls(cartesian_code(values), len(values))

    def __len__(self):
        return self.n

    def rmq(self, i: int, j: int) -> int:
        if not 1 <= i <= j <= self.n:
            raise IndexError(f"rmq range [{i}, {j}] invalid for length {self.n}")
        return self._rm.argmin(i - 1, j - 1) + 1


class SparseTable:
    """Plain sparse table for vectorised leftmost-argmin batches during builds."""

    def __init__(self, values):
        vals = np.asarray(values, dtype=np.int64)
        self.values = vals
        levels = [np.arange(len(vals), dtype=np.int64)]
        k = 1
        while (1 << k) <= len(vals):
            prev = levels[-1]
            half = 1 << (k - 1)
            a, b = prev[:-half], prev[half:]
            levels.append(np.where(vals[b] < vals[a], b, a))
            k += 1
        self.levels = levels

    def argmin(self, lo, hi) -> np.ndarray:
        """Leftmost argmin for each 0-based inclusive pair (lo[q], hi[q])."""
        lo = np.asarray(lo, dtype=np.int64)
        hi = np.asarray(hi, dtype=np.int64)
        out = np.empty(len(lo), dtype=np.int64)
        if not len(lo):
            return out
        span = hi - lo + 1
        ks = np.floor(np.log2(span)).astype(np.int64)
        # guard against float rounding at exact powers of two
        ks = np.where((1 << (ks + 1)) <= span, ks + 1, ks)
        ks = np.where((1 << ks) > span, ks - 1, ks)
        for k in np.unique(ks):
            sel = ks == k
            a = self.levels[k][lo[sel]]
            b = self.levels[k][hi[sel] - (1 << k) + 1]
            out[sel] = np.where(self.values[b] < self.values[a], b, a)
        return out


# ---- binary section helpers -------------------------------------------------

STRUCT_MAGIC = 0x53524442  # "BDRS" little-endian
STRUCT_VERSION = 1


def write_bits(out: bytearray, bits) -> None:
    """Append one bit section: magic u32, version u8, len u64, packed bits."""
    arr = np.asarray(bits, dtype=np.uint8)
    out += struct.pack("<IBQ", STRUCT_MAGIC, STRUCT_VERSION, len(arr))
    out += pack_bits(arr)


def read_bits(buf: memoryview, pos: int) -> tuple[np.ndarray, int]:
    magic, version, length = struct.unpack_from("<IBQ", buf, pos)
    if magic != STRUCT_MAGIC or version != STRUCT_VERSION:
        raise ValueError("bad bit-section header")
    pos += 13
    nbytes = (length + 7) // 8
    if pos + nbytes > len(buf):
        raise ValueError("truncated bit section")
    bits = unpack_bits(bytes(buf[pos : pos + nbytes]), length)
    return bits, pos + nbytes
