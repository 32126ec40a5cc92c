"""Circular dictionary matching on the compressed index."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class PrefixMatchTable:
    """t_i and the class interval of P[i..t_i], for i = 1..m (list index i-1)."""

    t: list
    l: list
    r: list
    updates: int = 0


@dataclass
class QueryStats:
    updates: int = 0
    max_sa_steps: int = 0
    max_lcp_steps: int = 0
    # per pattern position: (find_min_len calls, occurrences, marked climbs)
    per_position: list = field(default_factory=list)
    switched: bool = False


class Matcher:
    """One query's worth of state over an immutable index.

    SA and LCP entries come from the sampled structures unless the adaptive
    mode has materialised them.
    """

    def __init__(self, index, adaptive: bool = False):
        self.ix = index
        self.adaptive = adaptive
        self.stats = QueryStats()
        self._sa = None
        self._lcp = None
        self._running = 0
        self._calls = 0

    # -- entry access ------------------------------------------------------
    def sa_at(self, t: int) -> int:
        if self._sa is not None:
            return self._sa[t]
        k, steps = self.ix.sa.lookup_with_steps(t)
        if steps > self.stats.max_sa_steps:
            self.stats.max_sa_steps = steps
        return k

    def lcp_at(self, j: int) -> int:
        if self._lcp is not None:
            return self._lcp[j]
        v, steps = self.ix.lcp.lookup_with_steps(j)
        if steps > self.stats.max_lcp_steps:
            self.stats.max_lcp_steps = steps
        return v

    def lam(self, l: int, r: int):
        if l == r:
            return float("inf")
        return self.lcp_at(self.ix.lcp.rmq(l + 1, r))

    def _tick(self, amount: int) -> None:
        if not self.adaptive or self._sa is not None:
            return
        self._running += amount
        if self._running >= self.ix.n:
            self.materialize()

    def materialize(self) -> None:
        ix = self.ix
        self._sa = [0] + [ix.sa.lookup(t) for t in range(1, ix.n_star + 1)]
        self._lcp = [0, 0] + [ix.lcp.lookup(j) for j in range(2, ix.n_prime + 1)]
        self.stats.switched = True

    # -- prefix matching ---------------------------------------------------
    def prefix_matches(self, symbols) -> PrefixMatchTable:
        ix = self.ix
        ebwt, tree = ix.ebwt, ix.tree
        m, top = len(symbols), ix.n_prime
        t = [0] * m
        ls = [0] * m
        rs = [0] * m
        i, j, l, r = m + 1, m, 1, top
        updates = 0
        while i > 1:
            updates += 1
            hit = ebwt.bws(l, r, symbols[i - 2])
            if hit is not None:
                t[i - 2] = j
                l, r = hit
                ls[i - 2], rs[i - 2] = l, r
                i -= 1
            elif j == i - 1:
                t[i - 2] = i - 2
                ls[i - 2], rs[i - 2] = 1, top
                i, j, l, r = i - 1, i - 2, 1, top
            else:
                p = tree.parent(tree.frominter(l, r))
                if p is None:
                    j, l, r = i - 1, 1, top
                else:
                    l, r = tree.tointer(p)
                    j = self.lam(l, r) + i - 1
        self.stats.updates += updates
        return PrefixMatchTable(t, ls, rs, updates)

    # -- enumeration -------------------------------------------------------
    def find_min_len(self, t1: int, t2: int, x):
        if t1 > t2:
            return None
        self._calls += 1
        if x <= 0:
            return None
        ix = self.ix
        best = ix.tree.len_rmq_min(t1, t2)
        k = self.sa_at(best)
        if ix.string_len_at(k) <= x:
            return best, k
        return None

    def enumerate_range(self, l: int, r: int, y) -> list[int]:
        """Every k in D_l..D_r with |T_k| <= y."""
        if l > r:
            return []
        sa = self.ix.sa
        out = []
        pending = [(sa.b4.select1(l), sa.b4.select1(r + 1) - 1)]
        while pending:
            a, b = pending.pop()
            hit = self.find_min_len(a, b, y)
            if hit is None:
                continue
            t_star, k = hit
            found = sa.expand_class(k)
            out.extend(found)
            self._tick(len(found))
            pending.append((t_star + 1, b))
            pending.append((a, t_star - 1))
        return out

    def cdm_at(self, pm: PrefixMatchTable, i: int) -> list[int]:
        ix = self.ix
        tree = ix.tree
        self._calls = 0
        li, ri = pm.l[i - 1], pm.r[i - 1]
        found = self.enumerate_range(li, ri, pm.t[i - 1] - i + 1)
        x = tree.nma(tree.frominter(li, ri))
        climbs = 0
        while x != 1:
            climbs += 1
            self._tick(1)
            node = tree.fromaux(x)
            lo, hi = tree.tointer(node)
            plo, phi = tree.tointer(tree.parent(node))
            bound = self.lam(plo, phi)
            found.extend(self.enumerate_range(plo, lo - 1, bound))
            found.extend(self.enumerate_range(hi + 1, phi, bound))
            x = tree.star_parent(x)
        if len(set(found)) != len(found):
            raise AssertionError(f"duplicate occurrence emitted at position {i}")
        self.stats.per_position.append((self._calls, len(found), climbs))
        return sorted(found)

    def run(self, symbols) -> list[tuple[int, int]]:
        pm = self.prefix_matches(symbols)
        out = []
        for i in range(1, len(symbols) + 1):
            out.extend((i, k) for k in self.cdm_at(pm, i))
        return out


def _symbols(index, pattern):
    if isinstance(pattern, (bytes, bytearray, str)):
        return index.encode_pattern(pattern)
    return list(pattern)


def compute_prefix_matches(index, pattern) -> PrefixMatchTable:
    return Matcher(index).prefix_matches(_symbols(index, pattern))


def find_min_len(index, t1, t2, x):
    return Matcher(index).find_min_len(t1, t2, x)


def enumerate_range(index, l, r, y) -> list[int]:
    return sorted(Matcher(index).enumerate_range(l, r, y))


def cdm_at(index, pm, i) -> list[int]:
    return Matcher(index).cdm_at(pm, i)


def cdm(index, pattern, stats: QueryStats | None = None) -> list[tuple[int, int]]:
    """Sorted list of (i, k): T_k occurs in the pattern at position i."""
    matcher = Matcher(index)
    out = matcher.run(_symbols(index, pattern))
    if stats is not None:
        stats.__dict__.update(matcher.stats.__dict__)
    return out


def cdm_adaptive(index, pattern, stats: QueryStats | None = None):
    """Same answer as cdm; switches to materialised SA/LCP once occ reaches n."""
    matcher = Matcher(index, adaptive=True)
    out = matcher.run(_symbols(index, pattern))
    if stats is not None:
        stats.__dict__.update(matcher.stats.__dict__)
    return out
