"""Brute-force ground truth by exhaustive scan of G(m,p,n).

Every group element is visited exactly once, its pinnacle set extracted, and
the results aggregated per set: how many witnesses it has and which color
sums they achieve.  Nothing here uses the counting formulas or the deciders,
so the reports are an independent check of both.

Two engines share one contract.  The reference engine walks real permutation
objects through the normative pinnacle extraction; the vectorized engine
fixes the magnitude word and sweeps all color vectors at once with numpy,
encoding each pinnacle set as a bitmap over the mn colored values.  The scan
is embarrassingly parallel over the leftmost word magnitude; partial reports
merge by summing histograms, so any partitioning yields the same report.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .wreath import ColoredValue, GenPerm, GroupParams, PinSet, color_sum, pinnacle_set

DEFAULT_MAX_ORDER = 10_000_000

# stats are keyed by the canonical pair tuple of a pinnacle set while scanning
RawKey = tuple[tuple[int, int], ...]
RawStats = dict[RawKey, dict[int, int]]


class BudgetExceeded(RuntimeError):
    """The requested group is larger than the configured scan budget."""

    def __init__(self, params: GroupParams, required: int, limit: int):
        self.params = params
        self.required = required
        self.limit = limit
        super().__init__(
            f"{params} has order {required}, exceeding the oracle budget {limit}; "
            f"raise max_order to at least {required}"
        )


@dataclass(frozen=True)
class OracleBudget:
    """Scan limits: group-order cap, partition width, canonical-order flag."""

    max_order: int = DEFAULT_MAX_ORDER
    partitions: int = 1
    deterministic: bool = True

    def __post_init__(self) -> None:
        if self.max_order < 1 or self.partitions < 1:
            raise ValueError("budget caps must be positive")


@dataclass(frozen=True)
class PinStats:
    """Witness tally for one pinnacle set: count plus color-sum histogram."""

    witness_count: int
    eps_histogram: tuple[tuple[int, int], ...]

    @property
    def eps_min(self) -> int:
        return self.eps_histogram[0][0]

    @property
    def eps_max(self) -> int:
        return self.eps_histogram[-1][0]

    @property
    def eps_values(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.eps_histogram)

    @property
    def eps_is_interval(self) -> bool:
        values = self.eps_values
        return values == tuple(range(values[0], values[-1] + 1))


def _set_sort_key(P: PinSet):
    return (len(P.elements), tuple((cv.color, cv.magnitude) for cv in P.elements))


@dataclass(eq=True)
class OracleReport:
    """Everything the scan learned about G(m,p,n)."""

    params: GroupParams
    stats: dict[PinSet, PinStats]
    scanned: int

    @property
    def total_admissible(self) -> int:
        return len(self.stats)

    def count_up_to(self, d: int) -> int:
        """How many admissible sets have cardinality at most d."""
        return sum(1 for P in self.stats if len(P) <= d)

    def sorted_sets(self) -> list[PinSet]:
        return sorted(self.stats, key=_set_sort_key)

    def by_cardinality(self) -> dict[int, list[PinSet]]:
        grouped: dict[int, list[PinSet]] = {}
        for P in self.sorted_sets():
            grouped.setdefault(len(P), []).append(P)
        return grouped


def _check_budget(g: GroupParams, budget: OracleBudget) -> None:
    if g.order > budget.max_order:
        raise BudgetExceeded(g, g.order, budget.max_order)


def _word_stream(n: int, firsts: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # magnitude words (position n down to 1) in lexicographic order, restricted
    # to a given set of leftmost magnitudes; the scan partitions on these
    universe = list(range(1, n + 1))
    if n == 1:
        if 1 in firsts:
            yield (1,)
        return
    for first in sorted(firsts):
        rest = [x for x in universe if x != first]
        for tail in itertools.permutations(rest):
            yield (first,) + tail


def enumerate_group(g: GroupParams, budget: OracleBudget | None = None) -> Iterator[GenPerm]:
    """Yield each element of G(m,p,n) exactly once, in the canonical order.

    The order is lexicographic on the magnitude word crossed with odometer
    order on the color word (rightmost color fastest), filtered to color sums
    divisible by p.
    """
    budget = budget or OracleBudget()
    _check_budget(g, budget)
    for mags in _word_stream(g.n, tuple(range(1, g.n + 1))):
        for colors in itertools.product(range(g.m), repeat=g.n):
            if sum(colors) % g.p:
                continue
            yield GenPerm.from_word(g.m, zip(colors, mags))


def witnesses_of(
    P: PinSet, g: GroupParams, budget: OracleBudget | None = None
) -> Iterator[GenPerm]:
    """All elements of G(m,p,n) whose pinnacle set is exactly P."""
    if P.m != g.m or P.n != g.n:
        raise ValueError(f"set over ({P.m},{P.n}) scanned in {g}")
    for w in enumerate_group(g, budget):
        if pinnacle_set(w) == P:
            yield w


def _merge_raw(into: RawStats, part: RawStats) -> None:
    for key, hist in part.items():
        mine = into.setdefault(key, {})
        for eps, count in hist.items():
            mine[eps] = mine.get(eps, 0) + count


def _scan_reference(m: int, p: int, n: int, firsts: tuple[int, ...]) -> tuple[RawStats, int]:
    # drives the normative GenPerm/pinnacle_set path; slow but definitionally
    # correct, used for small grids, cross-checks, and as the fallback engine
    stats: RawStats = {}
    scanned = 0
    for mags in _word_stream(n, firsts):
        for colors in itertools.product(range(m), repeat=n):
            if sum(colors) % p:
                continue
            w = GenPerm.from_word(m, zip(colors, mags))
            key = tuple(sorted((cv.color, cv.magnitude) for cv in pinnacle_set(w).elements))
            hist = stats.setdefault(key, {})
            eps = color_sum(w)
            hist[eps] = hist.get(eps, 0) + 1
            scanned += 1
    return stats, scanned


def _vector_key_bits(m: int, n: int) -> int:
    eps_width = n * (m - 1) + 1
    return m * n + eps_width.bit_length()


def _scan_vectorized(m: int, p: int, n: int, firsts: tuple[int, ...]) -> tuple[RawStats, int]:
    rows = m**n
    place = m ** np.arange(n - 1, -1, -1, dtype=np.int64)
    colors = (np.arange(rows, dtype=np.int64)[:, None] // place) % m
    eps = colors.sum(axis=1)
    if p > 1:
        keep = (eps % p) == 0
        colors = colors[keep]
        eps = eps[keep]
    # bit index of the colored value (c, x) is c*n + x - 1; a pinnacle set is
    # the OR of its members' bits, giving a sigma-independent integer key
    cell_base = np.left_shift(np.int64(1), colors * n)
    eps_width = n * (m - 1) + 1
    per_word = len(colors)

    agg: dict[int, int] = {}
    buf_keys: list = []
    buf_counts: list = []
    buffered = 0

    def _compact() -> None:
        nonlocal buffered
        if not buf_keys:
            return
        keys = np.concatenate(buf_keys)
        counts = np.concatenate(buf_counts)
        uniq, inverse = np.unique(keys, return_inverse=True)
        totals = np.zeros(len(uniq), dtype=np.int64)
        np.add.at(totals, inverse, counts)
        for key, total in zip(uniq.tolist(), totals.tolist()):
            agg[key] = agg.get(key, 0) + total
        buf_keys.clear()
        buf_counts.clear()
        buffered = 0

    scanned = 0
    for word in _word_stream(n, firsts):
        scanned += per_word
        # below[b]: word slot b sits strictly below slot b+1; slots never tie
        below = []
        for b in range(n - 1):
            if word[b] > word[b + 1]:
                below.append(colors[:, b] >= colors[:, b + 1])
            else:
                below.append(colors[:, b] > colors[:, b + 1])
        key = np.zeros(per_word, dtype=np.int64)
        for t in range(1, n - 1):
            peak = below[t - 1] & ~below[t]
            key += (cell_base[:, t] << (word[t] - 1)) * peak
        combined = key * eps_width + eps
        uniq, counts = np.unique(combined, return_counts=True)
        buf_keys.append(uniq)
        buf_counts.append(counts)
        buffered += len(uniq)
        if buffered >= 2_000_000:
            _compact()
    _compact()

    stats: RawStats = {}
    for combined_key, count in agg.items():
        bits, eps_value = divmod(combined_key, eps_width)
        pairs = []
        while bits:
            low = bits & -bits
            cell = low.bit_length() - 1
            color, mag = divmod(cell, n)
            pairs.append((color, mag + 1))
            bits ^= low
        hist = stats.setdefault(tuple(pairs), {})
        hist[eps_value] = hist.get(eps_value, 0) + count
    return stats, scanned


def _scan_task(args: tuple) -> tuple[RawStats, int]:
    m, p, n, firsts, engine = args
    if engine == "reference":
        return _scan_reference(m, p, n, firsts)
    return _scan_vectorized(m, p, n, firsts)


def _partition_firsts(n: int, partitions: int) -> list[tuple[int, ...]]:
    chunks = min(partitions, n)
    out: list[list[int]] = [[] for _ in range(chunks)]
    for x in range(1, n + 1):
        out[(x - 1) % chunks].append(x)
    return [tuple(chunk) for chunk in out]


def collect_pinnacle_sets(
    g: GroupParams,
    budget: OracleBudget | None = None,
    engine: str = "auto",
    parallel: bool = False,
) -> OracleReport:
    """Scan all of G(m,p,n) and report every pinnacle set it realizes.

    ``engine`` is "auto", "vectorized", or "reference".  Auto picks the numpy
    scan unless the bitmap key would overflow 62 bits (huge m with tiny n),
    then falls back to the reference walk.  With ``parallel=True`` the
    partitions run in separate processes; reports are identical either way.
    """
    budget = budget or OracleBudget()
    _check_budget(g, budget)
    if engine == "auto":
        engine = "vectorized" if _vector_key_bits(g.m, g.n) <= 62 else "reference"
    if engine not in ("vectorized", "reference"):
        raise ValueError(f"unknown engine {engine!r}")
    if engine == "vectorized" and _vector_key_bits(g.m, g.n) > 62:
        raise ValueError(f"vectorized keys overflow for (m={g.m}, n={g.n}); use reference")
    tasks = [
        (g.m, g.p, g.n, firsts, engine)
        for firsts in _partition_firsts(g.n, budget.partitions)
    ]
    if parallel and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=min(len(tasks), 8)) as pool:
            partials = list(pool.map(_scan_task, tasks))
    else:
        partials = [_scan_task(task) for task in tasks]
    merged: RawStats = {}
    scanned = 0
    for raw, part_scanned in partials:
        _merge_raw(merged, raw)
        scanned += part_scanned
    if scanned != g.order:
        raise RuntimeError(f"scanned {scanned} elements of {g}, expected {g.order}")
    stats: dict[PinSet, PinStats] = {}
    for key in sorted(merged):
        hist = merged[key]
        P = PinSet(g.m, g.n, tuple(ColoredValue(c, x) for c, x in key))
        stats[P] = PinStats(
            witness_count=sum(hist.values()),
            eps_histogram=tuple(sorted(hist.items())),
        )
    return OracleReport(params=g, stats=stats, scanned=scanned)


def count_admissible(g: GroupParams, budget: OracleBudget | None = None) -> int:
    """Total number of admissible pinnacle sets for G(m,p,n), by brute force."""
    return collect_pinnacle_sets(g, budget).total_admissible
