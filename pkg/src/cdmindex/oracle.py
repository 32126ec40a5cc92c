"""Brute-force reference answers computed from explicit omega-string expansions."""

from __future__ import annotations

from .dictionary import Dictionary

ORACLE_CAP = 512
INF = float("inf")


class NaiveIndex:
    """Every quantity of the compressed index, materialised the slow way.

    Each position k gets the first 2n characters of T_k^omega; two omega
    strings that agree that far are equal, and every lcp of distinct ones is
    shorter.
    """

    def __init__(self, dictionary, cap: int = ORACLE_CAP):
        dic = dictionary if isinstance(dictionary, Dictionary) else Dictionary(dictionary)
        if dic.n > cap:
            raise ValueError(f"oracle refuses n={dic.n} above cap {cap}")
        self.dic = dic
        self.n = n = dic.n
        width = 2 * n
        self.suffixes = {k: dic.circular_suffix(k) for k in range(1, n + 1)}
        self.expansions = {}
        for k, s in self.suffixes.items():
            reps = width // len(s) + 1
            self.expansions[k] = (s * reps)[:width]
        keys = sorted(set(self.expansions.values()))
        self.keys = keys
        self.n_prime = len(keys)
        where = {e: j for j, e in enumerate(keys, 1)}
        self.class_of = {k: where[e] for k, e in self.expansions.items()}

    # -- partition and eBWT -------------------------------------------------
    def partition(self) -> list[list[int]]:
        out = [[] for _ in range(self.n_prime)]
        for k in range(1, self.n + 1):
            out[self.class_of[k] - 1].append(k)
        return out

    def bwt(self) -> bytes:
        out = []
        for block in self.partition():
            k = block[0]
            out.append(self.expansions[self.dic.pred(k)][0])
        return bytes(out)

    def bwt_star(self) -> bytes:
        return bytes(e[0] for e in self.keys)

    def back(self, l: int, r: int, c: int) -> list[int]:
        """Classes j' with S_j' = c S_j for some j in [l, r]; c is a byte."""
        hits = set()
        for k in range(1, self.n + 1):
            if l <= self.class_of[k] <= r:
                p = self.dic.pred(k)
                if self.expansions[p][0] == c:
                    hits.add(self.class_of[p])
        return sorted(hits)

    def prev(self, j: int) -> int:
        k = self.partition()[j - 1][0]
        return self.class_of[self.dic.pred(k)]

    # -- suffix array, LCP, Len ---------------------------------------------
    def representatives(self) -> list[list[int]]:
        """D'_j: smallest position of each string inside D_j."""
        out = []
        for block in self.partition():
            seen = {}
            for k in block:
                h = self.dic.phi(k)[0]
                seen.setdefault(h, k)
            out.append(sorted(seen.values()))
        return out

    def sa(self) -> list[int]:
        return [k for block in self.representatives() for k in block]

    def lens(self) -> list[int]:
        return [len(self.suffixes[k]) for k in self.sa()]

    def lcp(self) -> list[int]:
        """LCP[2..n']."""
        out = []
        for a, b in zip(self.keys, self.keys[1:]):
            g = 0
            while a[g] == b[g]:
                g += 1
            out.append(g)
        return out

    def lam(self, l: int, r: int):
        if l == r:
            return INF
        return min(self.lcp()[l - 1 : r - 1])

    # -- suffix tree ---------------------------------------------------------
    def nodes(self) -> set[tuple[int, int]]:
        """Intervals [l, r] of all strings that prefix some S_j, as trie nodes."""
        out = {(1, self.n_prime)}
        lcp = self.lcp()
        for j in range(1, self.n_prime + 1):
            out.add((j, j))
        for l in range(1, self.n_prime + 1):
            for r in range(l + 1, self.n_prime + 1):
                inner = min(lcp[l - 1 : r - 1])
                left_ok = l == 1 or lcp[l - 2] < inner
                right_ok = r == self.n_prime or lcp[r - 1] < inner
                if left_ok and right_ok:
                    out.add((l, r))
        return out

    def parent_of(self, node, nodes=None):
        nodes = nodes if nodes is not None else self.nodes()
        l, r = node
        best = None
        for a, b in nodes:
            if a <= l and r <= b and (a, b) != (l, r):
                if best is None or b - a < best[1] - best[0]:
                    best = (a, b)
        return best

    def marked(self) -> set[tuple[int, int]]:
        nodes = self.nodes()
        part = self.partition()
        root = (1, self.n_prime)
        out = {root}
        for node in nodes:
            if node == root:
                continue
            pl, pr = self.parent_of(node, nodes)
            bound = self.lam(pl, pr)
            side = list(range(pl, node[0])) + list(range(node[1] + 1, pr + 1))
            if any(len(self.suffixes[k]) <= bound for j in side for k in part[j - 1]):
                out.add(node)
        return out

    # -- queries -------------------------------------------------------------
    def prefix_ends(self, pattern: bytes) -> list[int]:
        """t_i: largest x with pattern[i..x] a prefix of some omega-string."""
        out = []
        m = len(pattern)
        for i in range(1, m + 1):
            best = i - 1
            for e in self.keys:
                g = 0
                while i - 1 + g < m and g < len(e) and e[g] == pattern[i - 1 + g]:
                    g += 1
                best = max(best, i - 1 + g)
            out.append(best)
        return out

    def cdm(self, pattern: bytes) -> list[tuple[int, int]]:
        return naive_cdm(self.dic, pattern)


def naive_cdm(dictionary, pattern) -> list[tuple[int, int]]:
    """All (i, k) such that circular suffix k occurs in pattern at position i."""
    dic = dictionary if isinstance(dictionary, Dictionary) else Dictionary(dictionary)
    if isinstance(pattern, str):
        pattern = pattern.encode()
    out = []
    m = len(pattern)
    for k in range(1, dic.n + 1):
        s = dic.circular_suffix(k)
        for i in range(1, m - len(s) + 2):
            if pattern[i - 1 : i - 1 + len(s)] == s:
                out.append((i, k))
    return sorted(out)


def naive_root(s) -> int:
    """Smallest divisor p of |s| with s equal to its first p symbols repeated."""
    n = len(s)
    for p in range(1, n + 1):
        if n % p == 0 and s[:p] * (n // p) == s:
            return p
    raise ValueError("empty string has no root")


# -- random corpora ------------------------------------------------------------

LETTERS = b"abcd"


def random_dictionary(rng, max_n: int = 60, max_d: int = 6, sigma: int | None = None):
    """Random dictionary biased towards periodic strings, duplicates and rotations."""
    sigma = sigma or rng.randint(1, 4)
    letters = LETTERS[:sigma]
    d = rng.randint(1, max_d)
    out = []
    total = 0
    for _ in range(d):
        room = max_n - total
        if room <= 0:
            break
        kind = rng.random()
        if out and kind < 0.2:
            s = rng.choice(out)
        elif out and kind < 0.4:
            base = rng.choice(out)
            cut = rng.randrange(len(base))
            s = base[cut:] + base[:cut]
        elif kind < 0.7:
            root = bytes(rng.choice(letters) for _ in range(rng.randint(1, 4)))
            s = root * rng.randint(1, 5)
        else:
            s = bytes(rng.choice(letters) for _ in range(rng.randint(1, 12)))
        s = s[:room]
        out.append(s)
        total += len(s)
    # the effective alphabet is whatever occurs; that is fine for every check
    return out


def random_pattern(rng, strings, max_m: int = 40) -> bytes:
    m = rng.randint(0, max_m)
    letters = sorted(set(b"".join(strings)))
    if rng.random() < 0.1:
        letters = letters + [ord("z")]
    out = bytearray()
    while len(out) < m:
        if rng.random() < 0.6:
            s = rng.choice(strings)
            cut = rng.randrange(len(s))
            piece = (s[cut:] + s[:cut]) * rng.randint(1, 2)
            out += piece[: rng.randint(1, len(piece))]
        else:
            out.append(rng.choice(letters))
    return bytes(out[:m])


def check_index(index, naive, patterns, fault: bool = False) -> list[str]:
    """Compare every compressed answer with the oracle; return mismatch notes.

    Besides equality, the step and call counters are checked against their
    bounds. With fault=True one compressed answer is deliberately perturbed.
    """
    from .matcher import QueryStats, cdm, cdm_adaptive

    bad = []
    sa = naive.sa()
    got_sa = [index.sa.lookup_with_steps(t) for t in range(1, index.n_star + 1)]
    if fault and got_sa:
        got_sa[0] = (got_sa[0][0] + 1, got_sa[0][1])
    if [k for k, _ in got_sa] != sa:
        bad.append(f"sa_lookup {[k for k, _ in got_sa]} != {sa}")
    if any(steps > index.sa.s for _, steps in got_sa):
        bad.append("sa_lookup walk exceeded s steps")
    lcp = naive.lcp()
    got_lcp = [index.lcp.lookup_with_steps(j) for j in range(2, index.n_prime + 1)]
    if [v for v, _ in got_lcp] != lcp:
        bad.append(f"lcp_lookup {[v for v, _ in got_lcp]} != {lcp}")
    if any(steps > max(0, 2 * index.lcp.s - 2) for _, steps in got_lcp):
        bad.append("lcp_lookup walk exceeded 2s-2 steps")
    part = naive.partition()
    if index.n_prime != len(part):
        bad.append(f"n' {index.n_prime} != {len(part)}")
    else:
        for j, block in enumerate(part, 1):
            if index.sa.expand_dj(j) != block:
                bad.append(f"expand_dj({j}) != {block}")
    if index.tree.marked_intervals() != naive.marked():
        bad.append(f"marked {sorted(index.tree.marked_intervals())} != {sorted(naive.marked())}")
    for p in patterns:
        want = naive.cdm(p)
        stats = QueryStats()
        got = cdm(index, p, stats)
        if got != want:
            bad.append(f"cdm({p!r}) {got} != {want}")
        if stats.updates > 2 * len(p) + 1:
            bad.append(f"cdm({p!r}) used {stats.updates} quadruple updates")
        for calls, occ, climbs in stats.per_position:
            if calls > 3 * (occ + 1) + 2 * (climbs + 1):
                bad.append(f"cdm({p!r}) made {calls} find_min_len calls for occ={occ}")
        if stats.max_sa_steps > index.sa.s or stats.max_lcp_steps > max(0, 2 * index.lcp.s - 2):
            bad.append(f"cdm({p!r}) walk bound exceeded")
        if cdm_adaptive(index, p) != want:
            bad.append(f"cdm_adaptive({p!r}) != oracle")
    return bad
