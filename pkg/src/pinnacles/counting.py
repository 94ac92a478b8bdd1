"""Exact counts of admissible pinnacle sets.

p(m, n, d) is the number of admissible pinnacle sets of cardinality at most d
in Z_m wr S_n, for 0 <= d <= floor((n-1)/2).  Four routes compute it: a
recursion lowering the modulus, a recursion lowering the degree, an
alternating binomial sum, and an all-nonnegative binomial sum.  They must
agree exactly; ``method="all"`` enforces that on every call.

Counts for the subgroups G(m,p,n) coincide with the full wreath product in
every case except odd n at the maximal cardinality, where the answer reduces
to the single irreducible total for G(p,p,n); that one number has no known
closed form and is delegated to the brute-force oracle.

Everything is plain Python integers, so results are exact at any size.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import TYPE_CHECKING

from .wreath import GroupParams

if TYPE_CHECKING:
    from .oracle import OracleBudget


def max_cardinality(n: int) -> int:
    """Largest possible pinnacle-set size in degree n: floor((n-1)/2)."""
    return (n - 1) // 2


def _validate(m: int, n: int, d: int) -> None:
    if m < 1 or n < 1:
        raise ValueError(f"m and n must be positive, got m={m}, n={n}")
    if not 0 <= d <= max_cardinality(n):
        raise ValueError(
            f"d={d} outside the valid range 0..{max_cardinality(n)} for degree n={n}"
        )


@lru_cache(maxsize=None)
def _rec_m(m: int, n: int, d: int) -> int:
    if d == 0:
        return 1
    if m == 1:
        return comb(n - 1, d)
    return sum(comb(n, i) * _rec_m(m - 1, n - i, d - i) for i in range(d + 1))


def count_recursion_m(m: int, n: int, d: int) -> int:
    """Recursion in the modulus, splitting on how many pinnacles use color 0."""
    _validate(m, n, d)
    return _rec_m(m, n, d)


@lru_cache(maxsize=None)
def _rec_n(m: int, n: int, d: int) -> int:
    # Evaluated on the formal extension to every d >= 0: the degree recursion
    # momentarily steps past the cardinality cap of the smaller degree, where
    # the value is the same alternating partial sum continued.  Intermediate
    # values may be negative there; top-level queries never are.
    if d == 0:
        return 1
    if m == 1:
        return comb(n - 1, d)
    if n == 1:
        return (m - 1) * (-1) ** (d + 1)
    return m * _rec_n(m, n - 1, d - 1) + _rec_n(m, n - 1, d)


def count_recursion_n(m: int, n: int, d: int) -> int:
    """Recursion in the degree: drop one letter, a pinnacle or not."""
    _validate(m, n, d)
    value = _rec_n(m, n, d)
    assert value >= 0
    return value


def count_closed_alternating(m: int, n: int, d: int) -> int:
    """Alternating partial binomial sum: sum_i C(n,i) m^i (-1)^(i+d)."""
    _validate(m, n, d)
    value = sum(comb(n, i) * m**i * (-1) ** (i + d) for i in range(d + 1))
    assert value >= 0
    return value


def count_closed_positive(m: int, n: int, d: int) -> int:
    """All-nonnegative form: sum_k (m-1)^k C(n,k) C(n-k-1, d-k)."""
    _validate(m, n, d)
    return sum(
        (m - 1) ** k * comb(n, k) * comb(n - k - 1, d - k) for k in range(d + 1)
    )


METHODS = {
    "recursion-in-m": count_recursion_m,
    "recursion-in-n": count_recursion_n,
    "closed-alternating": count_closed_alternating,
    "closed-positive": count_closed_positive,
}

METHOD_CHOICES = tuple(METHODS) + ("all",)

DEFAULT_METHOD = "closed-positive"


class CrossCheckMismatch(RuntimeError):
    """The four counting routes disagreed; carries every computed value."""

    def __init__(self, m: int, n: int, d: int, values: dict[str, int]):
        self.params = (m, n, d)
        self.values = dict(values)
        per_method = ", ".join(f"{k}={v}" for k, v in values.items())
        super().__init__(f"count mismatch at (m={m}, n={n}, d={d}): {per_method}")


def count_pinnacle_sets(m: int, n: int, d: int | None = None, method: str = DEFAULT_METHOD) -> int:
    """Admissible pinnacle sets of size <= d in Z_m wr S_n (d defaults to the cap)."""
    if d is None:
        d = max_cardinality(n)
    _validate(m, n, d)
    if method == "all":
        values = {name: fn(m, n, d) for name, fn in METHODS.items()}
        if len(set(values.values())) != 1:
            raise CrossCheckMismatch(m, n, d, values)
        return next(iter(values.values()))
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {METHOD_CHOICES}")
    return METHODS[method](m, n, d)


def count_total(m: int, n: int, method: str = DEFAULT_METHOD) -> int:
    """All admissible pinnacle sets in Z_m wr S_n (n >= 2)."""
    if n < 2:
        raise ValueError(f"total counts need n >= 2, got n={n}")
    return count_pinnacle_sets(m, n, max_cardinality(n), method)


def odd_maximal_correction(m: int, p: int, r: int) -> int:
    """The exact excess of #APS(m,p,2r+1) over #APS(p,p,2r+1) when p | m.

    With m = pk this is sum_i C(2r+1, i) p^i (k^i - 1) (-1)^(i+r), the
    difference of the two full-group totals at degree 2r+1.
    """
    k = m // p
    n = 2 * r + 1
    return sum(comb(n, i) * p**i * (k**i - 1) * (-1) ** (i + r) for i in range(r + 1))


def count_complex(
    g: GroupParams,
    d: int | None = None,
    method: str = DEFAULT_METHOD,
    budget: OracleBudget | None = None,
) -> int:
    """Admissible pinnacle sets of size <= d for the reflection group G(m,p,n).

    Equal to the full wreath-product count except in the odd-maximal case
    (n = 2r+1 and d = r), which reduces to the oracle-computed total for
    G(p,p,n) plus an explicit signed binomial correction.  The oracle refuses
    with a budget error when G(p,p,n) is too large to scan.
    """
    cap = max_cardinality(g.n)
    if d is None:
        d = cap
    _validate(g.m, g.n, d)
    odd_maximal = g.n % 2 == 1 and d == cap and g.n >= 3
    if g.p == 1 or not odd_maximal:
        return count_pinnacle_sets(g.m, g.n, d, method)
    from . import oracle

    r = (g.n - 1) // 2
    base = oracle.count_admissible(GroupParams(g.p, g.p, g.n), budget=budget)
    return base + odd_maximal_correction(g.m, g.p, r)
