"""Command-line front end and the on-disk index container.

File layout (all integers little-endian, bit arrays packed LSB-first):

    magic "CDMI" | version u16 | n u64 | d u64 | n' u64 | n* u64 | sigma u32
    | s_sa u32 | s_lcp u32 | payload length u64 | crc32(payload) u32 | payload

The payload is a sequence of sections, each framed by succinct.write_bits or
as a counted integer array: alphabet, B_1, B_3, BWT, B_2, B_4, B_5, SA*, B_6,
LCP*, rmq(LCP) shape code, rmq(Len) shape code, Z, B_7, Z*, B_8.
"""

from __future__ import annotations

import argparse
import random
import struct
import sys
import time
import zlib

import numpy as np

from .csa import SampledSuffixArray
from .dictionary import Dictionary, DictionaryError, PositionMaps, parse_binary, parse_text
from .ebwt import EbwtIndex
from .index import CdmIndex
from .lcp import SampledLcp
from .matcher import cdm, cdm_adaptive
from .oracle import ORACLE_CAP, NaiveIndex, check_index, random_dictionary, random_pattern
from .succinct import (
    BitVector,
    Rmq,
    SymbolSequence,
    pack_symbols,
    read_bits,
    unpack_symbols,
    write_bits,
)
from .sufftree import SuffixTreeTopology

MAGIC = b"CDMI"
VERSION = 1
HEADER = struct.Struct("<4sHQQQQIIIQI")

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class CorruptIndex(Exception):
    pass


# -- serialisation -------------------------------------------------------------


def _write_ints(out: bytearray, values, dtype: str) -> None:
    arr = np.asarray(values, dtype=dtype)
    out += struct.pack("<Q", len(arr)) + arr.tobytes()


def _read_ints(buf: memoryview, pos: int, dtype: str):
    (count,) = struct.unpack_from("<Q", buf, pos)
    pos += 8
    size = np.dtype(dtype).itemsize * count
    if pos + size > len(buf):
        raise CorruptIndex("truncated integer section")
    return np.frombuffer(bytes(buf[pos : pos + size]), dtype=dtype).astype(np.int64), pos + size


def serialize(index: CdmIndex) -> bytes:
    body = bytearray()
    body += struct.pack("<I", len(index.alphabet)) + index.alphabet
    write_bits(body, index.maps.b1.bits)
    write_bits(body, index.maps.b3.bits)
    body += struct.pack("<Q", index.n_prime) + pack_symbols(index.ebwt.bwt.symbols, index.sigma)
    write_bits(body, index.ebwt.b2.bits)
    write_bits(body, index.sa.b4.bits)
    write_bits(body, index.sa.b5.bits)
    _write_ints(body, index.sa.samples, "<u8")
    write_bits(body, index.lcp.b6.bits)
    _write_ints(body, index.lcp.samples, "<u4")
    write_bits(body, index.lcp.rmq_lcp.code)
    write_bits(body, index.tree.rmq_len.code)
    write_bits(body, index.tree.z.bits)
    write_bits(body, index.tree.b7.bits)
    write_bits(body, index.tree.z_star.bits)
    write_bits(body, index.tree.b8.bits)
    header = HEADER.pack(
        MAGIC,
        VERSION,
        index.n,
        index.d,
        index.n_prime,
        index.n_star,
        index.sigma,
        index.sa.s,
        index.lcp.s,
        len(body),
        zlib.crc32(body),
    )
    return header + bytes(body)


def deserialize(data: bytes) -> CdmIndex:
    if len(data) < HEADER.size:
        raise CorruptIndex("file shorter than header")
    magic, version, n, d, n_prime, n_star, sigma, s_sa, s_lcp, size, crc = HEADER.unpack_from(data)
    if magic != MAGIC:
        raise CorruptIndex("bad magic")
    if version != VERSION:
        raise CorruptIndex(f"unsupported version {version}")
    body = memoryview(data)[HEADER.size :]
    if len(body) != size:
        raise CorruptIndex("payload length mismatch")
    if zlib.crc32(body) != crc:
        raise CorruptIndex("checksum mismatch")
    try:
        (alen,) = struct.unpack_from("<I", body, 0)
        alphabet = bytes(body[4 : 4 + alen])
        pos = 4 + alen
        b1, pos = read_bits(body, pos)
        b3, pos = read_bits(body, pos)
        (bwt_len,) = struct.unpack_from("<Q", body, pos)
        pos += 8
        width = max(1, int(sigma - 1).bit_length())
        nbytes = (bwt_len * width + 7) // 8
        bwt = unpack_symbols(bytes(body[pos : pos + nbytes]), bwt_len, sigma)
        pos += nbytes
        b2, pos = read_bits(body, pos)
        b4, pos = read_bits(body, pos)
        b5, pos = read_bits(body, pos)
        sa_samples, pos = _read_ints(body, pos, "<u8")
        b6, pos = read_bits(body, pos)
        lcp_samples, pos = _read_ints(body, pos, "<u4")
        rmq_lcp_code, pos = read_bits(body, pos)
        rmq_len_code, pos = read_bits(body, pos)
        z, pos = read_bits(body, pos)
        b7, pos = read_bits(body, pos)
        z_star, pos = read_bits(body, pos)
        b8, pos = read_bits(body, pos)
    except (struct.error, ValueError) as exc:
        raise CorruptIndex(str(exc)) from exc
    if pos != len(body) or len(alphabet) != sigma or bwt_len != n_prime:
        raise CorruptIndex("section sizes disagree with header")
    maps = PositionMaps(BitVector(b1), BitVector(b3))
    if maps.n != n or maps.d != d or maps.n_star != n_star:
        raise CorruptIndex("position maps disagree with header")
    ebwt = EbwtIndex(SymbolSequence(bwt, sigma), BitVector(b2))
    sa = SampledSuffixArray(BitVector(b4), BitVector(b5), sa_samples, s_sa, ebwt, maps)
    lcp = SampledLcp(BitVector(b6), lcp_samples, Rmq(rmq_lcp_code, n_prime - 1), s_lcp, ebwt)
    tree = SuffixTreeTopology(z, b7, z_star, b8, Rmq(rmq_len_code, n_star))
    return CdmIndex(alphabet, maps, ebwt, sa, lcp, tree)


def save_index(index: CdmIndex, path) -> int:
    data = serialize(index)
    with open(path, "wb") as fh:
        fh.write(data)
    return len(data)


def load_index(path) -> CdmIndex:
    with open(path, "rb") as fh:
        return deserialize(fh.read())


# -- table rendering -------------------------------------------------------------


def _bits(bv) -> str:
    return "".join("1" if b else "0" for b in np.asarray(bv).tolist())


def _ints(values) -> str:
    return " ".join(str(int(v)) for v in values)


def render_section(index: CdmIndex, name: str) -> str:
    """One table in row form; raises KeyError for unknown names."""
    name = name.upper().replace("_", "")
    sa = index.sa
    if name == "BWT":
        return index.decode(index.ebwt.bwt.symbols.tolist()).decode("latin-1")
    if name == "BWT*":
        return index.decode(index.ebwt.bwt_star()).decode("latin-1")
    if name == "SA":
        return _ints(sa.lookup(t) for t in range(1, index.n_star + 1))
    if name == "SA*":
        return _ints(sa.samples)
    if name == "LCP":
        return _ints(index.lcp.lookup(j) for j in range(2, index.n_prime + 1))
    if name == "LCP*":
        return _ints(index.lcp.samples)
    if name == "LEN":
        return _ints(index.string_len_at(sa.lookup(t)) for t in range(1, index.n_star + 1))
    if name == "D":
        return " | ".join(_ints(sa.expand_dj(j)) for j in range(1, index.n_prime + 1))
    if name == "MARKED":
        return " ".join(f"[{l},{r}]" for l, r in sorted(index.tree.marked_intervals()))
    rows = {
        "B1": index.maps.b1.bits,
        "B2": index.ebwt.b2.bits,
        "B3": index.maps.b3.bits,
        "B4": sa.b4.bits,
        "B5": sa.b5.bits,
        "B6": index.lcp.b6.bits,
        "Z": index.tree.z.bits,
        "B7": index.tree.b7.bits,
        "Z*": index.tree.z_star.bits,
        "B8": index.tree.b8.bits,
    }
    return _bits(rows[name])


SECTIONS = ["BWT", "BWT*", "B1", "B2", "B3", "B4", "B5", "B6", "SA", "SA*", "LCP",
            "LCP*", "LEN", "D", "Z", "B7", "Z*", "B8", "MARKED"]


# -- commands --------------------------------------------------------------------


def _read_dictionary(path, binary: bool) -> Dictionary:
    with open(path, "rb") as fh:
        data = fh.read()
    return Dictionary(parse_binary(data) if binary else parse_text(data))


def cmd_build(args) -> int:
    try:
        dic = _read_dictionary(args.input, args.binary_input)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except DictionaryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    start = time.perf_counter()
    index = CdmIndex.build(dic, args.sa_sample, args.lcp_sample)
    try:
        size = save_index(index, args.output)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    elapsed = time.perf_counter() - start
    print(
        f"n={index.n} d={index.d} n'={index.n_prime} n*={index.n_star} "
        f"sigma={index.sigma} bytes={size} bytes/symbol={size / index.n:.3f} "
        f"seconds={elapsed:.2f}",
        file=sys.stderr,
    )
    return EXIT_OK


def _open_index(path):
    try:
        return load_index(path), None
    except OSError as exc:
        return None, f"error: {exc}"
    except CorruptIndex as exc:
        return None, f"error: corrupt index: {exc}"


def cmd_query(args) -> int:
    index, err = _open_index(args.index)
    if err:
        print(err, file=sys.stderr)
        return EXIT_IO
    if args.pattern_file is not None:
        try:
            with open(args.pattern_file, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_IO
        if data.endswith(b"\n"):
            data = data[:-1]
        patterns = data.split(b"\n") if data else []
    elif args.pattern is not None:
        patterns = [args.pattern.encode()]
    else:
        print("error: give a pattern or --pattern-file", file=sys.stderr)
        return EXIT_USAGE
    run = cdm_adaptive if args.adaptive else cdm
    out = sys.stdout
    for p in patterns:
        occ = run(index, p)
        out.write(f"occ\t{len(occ)}\n")
        for i, k in occ:
            f, g = index.maps.phi(k)
            out.write(f"{i}\t{k}\t{f}\t{g}\n")
    return EXIT_OK


def cmd_dump(args) -> int:
    index, err = _open_index(args.index)
    if err:
        print(err, file=sys.stderr)
        return EXIT_IO
    try:
        print(render_section(index, args.section))
    except KeyError:
        print(f"error: unknown section {args.section!r}; choose from {', '.join(SECTIONS)}",
              file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def _verify_one(strings, rng, patterns: int, max_m: int, fault: bool, s_sa=None, s_lcp=None):
    index = CdmIndex.build(strings, s_sa, s_lcp)
    naive = NaiveIndex(strings)
    pats = [random_pattern(rng, strings, max_m) for _ in range(patterns)]
    return check_index(index, naive, pats, fault=fault)


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    if args.input is not None:
        try:
            dic = _read_dictionary(args.input, args.binary_input)
        except (OSError, DictionaryError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_IO
        if dic.n > ORACLE_CAP:
            print(f"error: n={dic.n} exceeds oracle cap {ORACLE_CAP}", file=sys.stderr)
            return EXIT_USAGE
        index = CdmIndex.build(dic, args.sa_sample, args.lcp_sample)
        naive = NaiveIndex(dic)
        report = {
            "D": " | ".join(_ints(b) for b in naive.partition()),
            "BWT": naive.bwt().decode("latin-1"),
            "SA": _ints(naive.sa()),
            "LCP": _ints(naive.lcp()),
            "LEN": _ints(naive.lens()),
            "MARKED": " ".join(f"[{l},{r}]" for l, r in sorted(naive.marked())),
        }
        failed = False
        for name, want in report.items():
            got = render_section(index, name)
            ok = got == want
            failed |= not ok
            print(f"{name:7s} {'ok' if ok else 'MISMATCH'}  {got}")
        pats = [random_pattern(rng, dic.strings, args.max_m) for _ in range(args.trials)]
        bad = check_index(index, naive, pats, fault=args.inject_fault)
        if bad or failed:
            print("counterexample:", dic.strings, file=sys.stderr)
            for line in bad[:5]:
                print("  " + line, file=sys.stderr)
            return EXIT_VERIFY
        print(f"verified {len(pats)} patterns")
        return EXIT_OK
    for trial in range(args.trials):
        strings = random_dictionary(rng, max_n=args.max_n)
        s_sa = args.sa_sample or rng.choice([1, 2, 3, 5])
        s_lcp = args.lcp_sample or rng.choice([1, 2, 3, 5])
        bad = _verify_one(strings, rng, 2, args.max_m, args.inject_fault, s_sa, s_lcp)
        if bad:
            print(f"trial {trial}: counterexample dictionary={strings} s_sa={s_sa} "
                  f"s_lcp={s_lcp}", file=sys.stderr)
            for line in bad[:5]:
                print("  " + line, file=sys.stderr)
            return EXIT_VERIFY
    print(f"verified {args.trials} trials")
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cdmindex", description="circular dictionary matching index")
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build an index from a dictionary file")
    b.add_argument("input")
    b.add_argument("output")
    b.add_argument("--sa-sample", type=int, default=None)
    b.add_argument("--lcp-sample", type=int, default=None)
    b.add_argument("--binary-input", action="store_true")
    b.set_defaults(func=cmd_build)

    q = sub.add_parser("query", help="report every circular suffix occurring in a pattern")
    q.add_argument("index")
    q.add_argument("pattern", nargs="?")
    q.add_argument("--pattern-file", default=None)
    q.add_argument("--adaptive", action="store_true")
    q.set_defaults(func=cmd_query)

    v = sub.add_parser("verify", help="compare the compressed index with the brute-force oracle")
    v.add_argument("input", nargs="?")
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--max-n", type=int, default=60)
    v.add_argument("--max-m", type=int, default=40)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--sa-sample", type=int, default=None)
    v.add_argument("--lcp-sample", type=int, default=None)
    v.add_argument("--binary-input", action="store_true")
    v.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("dump", help="print one internal table")
    d.add_argument("index")
    d.add_argument("section")
    d.set_defaults(func=cmd_dump)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    for flag in ("sa_sample", "lcp_sample"):
        value = getattr(args, flag, None)
        if value is not None and value < 1:
            print(f"error: --{flag.replace('_', '-')} must be >= 1", file=sys.stderr)
            return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
