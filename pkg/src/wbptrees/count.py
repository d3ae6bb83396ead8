"""
Exact counting of weighted bi-colored plane trees with a given passport.

The pipeline: the number of trees with a *simple* passport is a signed sum
over its balanced partitions (``count_ftree``); for a general passport the
filled passport and its divided passports enter through the rational table
G(d) = #FTree(fill(p/d)) / (d * p_factor(p/d)); totient and Moebius sums
then recover the total count and the count of trees with each rotational
symmetry order.  Everything is exact: big integers throughout, reduced
fractions for G, and hard integrality assertions on every final count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .passport import (
    ConsistencyError,
    Passport,
    _visit_partitions,
    _partition_elements,
    divide,
    divisor_set,
    fill,
    g_vector,
    print_passport,
)

# ---------------------------------------------------------------------------
# elementary number theory


def divisors(n: int) -> list:
    """Sorted positive divisors of n >= 1."""
    if n < 1:
        raise ValueError("n must be positive")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _factorize(n: int) -> list:
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            k = 0
            while n % d == 0:
                n //= d
                k += 1
            factors.append((d, k))
        d += 1
    if n > 1:
        factors.append((n, 1))
    return factors


def totient(n: int) -> int:
    """Euler's phi: count of 1 <= k <= n coprime to n."""
    if n < 1:
        raise ValueError("n must be positive")
    result = n
    for p, _ in _factorize(n):
        result = result // p * (p - 1)
    return result


def moebius(n: int) -> int:
    """Moebius mu: (-1)^k for squarefree n with k prime factors, else 0."""
    if n < 1:
        raise ValueError("n must be positive")
    factors = _factorize(n)
    if any(k > 1 for _, k in factors):
        return 0
    return -1 if len(factors) % 2 else 1


# ---------------------------------------------------------------------------
# simple passports

_ftree_memo: dict = {}


def count_ftree(p: Passport) -> int:
    """Number of trees with a simple passport, by the partition sum.

    Every partition into n balanced blocks of sizes s_1..s_n contributes
    (-1)^(n-1) (#p - 1)^(n-2) * prod (s_i - 1)!; the trivial partition's
    n = 1 term carries exponent -1, so the sum is evaluated in exact
    rationals and asserted integral at the end.  Nondecomposable passports
    reduce to (#p - 2)!.

    Results are memoized per canonical passport (the memo is a plain dict:
    inserts are atomic and recomputation is harmless).
    """
    if not p.is_simple():
        raise ValueError("count_ftree requires a simple passport")
    if not p.is_balanced():
        raise ValueError("count_ftree requires a balanced passport")
    if p.size() < 2:
        raise ValueError("count_ftree requires at least two vertices")
    cached = _ftree_memo.get(p)
    if cached is not None:
        return cached

    _, signed = _partition_elements(p)
    profiles: dict = {}

    def visit(blocks):
        key = tuple(sorted(len(b) for b in blocks))
        profiles[key] = profiles.get(key, 0) + 1

    _visit_partitions(signed, visit)

    m = p.size()
    total = Fraction(0)
    for sizes, mult in profiles.items():
        n = len(sizes)
        term = Fraction(-1) ** (n - 1) * Fraction(m - 1) ** (n - 2)
        for s in sizes:
            term *= math.factorial(s - 1)
        total += mult * term
    if total.denominator != 1 or total < 0:
        raise ConsistencyError(f"non-integral tree count {total} for {p}")
    result = int(total)
    return _ftree_memo.setdefault(p, result)


# ---------------------------------------------------------------------------
# the G table and symmetry-resolved counts


def _require_countable(p: Passport):
    if p.size() == 0:
        raise ValueError("empty passport")
    if p.has_star():
        raise ValueError("starred passports are counted through division "
                         "identities, not directly")
    if not p.is_balanced():
        raise ValueError(f"unbalanced passport {p}")


def big_g(p: Passport, d: int) -> Fraction:
    """G(d) = #FTree(p/d) / (d * p_factor(p/d)), an exact rational."""
    _require_countable(p)
    divided = divide(p, d)
    return Fraction(count_ftree(fill(divided)), d * divided.p_factor())


def count_trees(p: Passport) -> int:
    """Number of trees with passport p: G(1) + sum over entries i of
    sum over divisors 1 < d | g_i of phi(d) G(d)."""
    _require_countable(p)
    total = big_g(p, 1)
    for g in g_vector(p):
        for d in divisors(g):
            if d > 1:
                total += totient(d) * big_g(p, d)
    if total.denominator != 1 or total < 0:
        raise ConsistencyError(f"non-integral tree count {total} for {p}")
    return int(total)


def count_trees_sym(p: Passport, d: int) -> int:
    """Number of trees with passport p and rotation group of order exactly d:
    d * sum over multiples e of d in the divisor set of mu(e/d) G(e)."""
    _require_countable(p)
    if d < 1:
        raise ValueError("symmetry order must be positive")
    dset = divisor_set(p)
    if d not in dset:
        return 0
    total = d * sum(moebius(e // d) * big_g(p, e)
                    for e in sorted(dset) if e % d == 0)
    if total.denominator != 1 or total < 0:
        raise ConsistencyError(
            f"non-integral symmetry count {total} for {p} at order {d}")
    return int(total)


@dataclass(frozen=True)
class CountReport:
    """G table, total count, and symmetry census for one passport."""

    passport: Passport
    g_table: dict            # d -> Fraction, over the whole divisor set
    total: int
    by_symmetry: dict        # d -> positive count, zero orders omitted

    def to_json_dict(self) -> dict:
        return {
            "passport": print_passport(self.passport),
            "G": {str(d): str(v) for d, v in self.g_table.items()},
            "total": self.total,
            "by_symmetry": {str(d): v for d, v in self.by_symmetry.items()},
        }


def report(p: Passport) -> CountReport:
    """Assemble the full count report; total must equal the census sum."""
    _require_countable(p)
    ds = sorted(divisor_set(p))
    g_table = {d: big_g(p, d) for d in ds}
    by_symmetry = {}
    for d in ds:
        c = count_trees_sym(p, d)
        if c:
            by_symmetry[d] = c
    total = count_trees(p)
    if total != sum(by_symmetry.values()):
        raise ConsistencyError(
            f"census {by_symmetry} does not sum to total {total} for {p}")
    return CountReport(p, g_table, total, by_symmetry)
