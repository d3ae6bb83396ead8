"""
Closed-form tree counts for the two-weight passports (q^p | p^q).

For p maxima of weight q and q minima of weight p the partition structure
of the filled passport is controlled by g0 = gcd(p, q): every balanced
block consists of j*p/g0 black and j*q/g0 white elements for some j, so
partitions are classified by the type vector (n_1, ..., n_{g0}) counting
blocks of each j.  Divided passports contribute analogous types (s, n)
where the block holding the symmetric center has its own minimal solution.
Summing an explicit coefficient over the admissible types evaluates every
G(d) without enumerating a single partition, which is what makes this
module an independent fast path against the generic engine in ``count``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

from .count import divisors, totient
from .passport import ConsistencyError


class PqParams(NamedTuple):
    p: int
    q: int
    alpha: int
    g0: int
    g1: int
    g2: int


def pq_params(p: int, q: int) -> PqParams:
    """Validated parameter bundle; gcd(x, 0) = x makes g2 = p when q = 1."""
    if not (p > q >= 1):
        raise ValueError(f"need p > q >= 1, got p={p}, q={q}")
    return PqParams(p, q, p + q - 1,
                    math.gcd(p, q), math.gcd(p - 1, q), math.gcd(p, q - 1))


class TypeVector1(NamedTuple):
    """Block-type counts for an undivided passport: sum j*n_j = g0."""

    n: tuple


class TypeVectorD(NamedTuple):
    """Block-type counts with a center block: s + sum j*n_j = floor(g0/d)."""

    s: int
    n: tuple


def _bounded_type_vectors(total: int, length: int):
    """All (n_1..n_length) >= 0 with sum of j*n_j equal to total."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for n_last in range(total // length + 1):
        for head in _bounded_type_vectors(total - length * n_last, length - 1):
            yield head + (n_last,)


def admissible_types_1(p: int, q: int) -> list:
    """Types of partitions of the filled passport, i.e. solutions of
    sum j*n_j = g0."""
    g0 = pq_params(p, q).g0
    return [TypeVector1(n) for n in _bounded_type_vectors(g0, g0)]


def admissible_types_d(p: int, q: int, d: int) -> list:
    """Types of partitions of the divided passport: s + sum j*n_j =
    floor(g0/d)."""
    params = pq_params(p, q)
    if d <= 1 or (params.g1 % d != 0 and params.g2 % d != 0):
        raise ValueError(f"d={d} divides neither g1 nor g2 for (p,q)=({p},{q})")
    budget = params.g0 // d
    out = []
    for used in range(budget + 1):
        for n in _bounded_type_vectors(used, params.g0):
            out.append(TypeVectorD(budget - used, n))
    return out


def _block_product(n: tuple, p: int, q: int, g0: int) -> Fraction:
    """prod over j of (1/n_j!) * [ (j(p+q)/g0 - 1)! / ((jp/g0)!(jq/g0)!) ]^n_j."""
    value = Fraction(1)
    for j, nj in enumerate(n, start=1):
        if nj:
            bracket = Fraction(
                math.factorial(j * (p + q) // g0 - 1),
                math.factorial(j * p // g0) * math.factorial(j * q // g0))
            value *= bracket ** nj / math.factorial(nj)
    return value


def coeff_c1(t: TypeVector1, p: int, q: int) -> Fraction:
    """Contribution of all partitions of one type to G(1)."""
    g0 = pq_params(p, q).g0
    n = sum(t.n)
    return (Fraction(-1) ** (n - 1) * Fraction(p + q - 1) ** (n - 2)
            * _block_product(t.n, p, q, g0))


def _exact_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ConsistencyError(f"{what} is not an integer: {x}")
    return int(x)


def coeff_cd(t: TypeVectorD, p: int, q: int, d: int, side: str) -> Fraction:
    """Contribution of all partitions of one type to G(d), d > 1.

    ``side`` is "g1" when d divides g1 (center on the black side) or "g2"
    when d divides g2; it selects the second binomial argument.  Both
    binomial arguments are asserted integral: a fractional one is a hard
    error, never a silent zero.
    """
    params = pq_params(p, q)
    g0 = params.g0
    if side == "g1":
        if d <= 1 or params.g1 % d != 0:
            raise ValueError(f"d={d} does not divide g1={params.g1}")
        bottom_weight = q
    elif side == "g2":
        if d <= 1 or params.g2 % d != 0:
            raise ValueError(f"d={d} does not divide g2={params.g2}")
        bottom_weight = p
    else:
        raise ValueError(f"side must be 'g1' or 'g2', got {side!r}")

    frac = Fraction(g0 % d, d)          # the fractional part {g0/d}
    scale = t.s + frac
    top = _exact_int(scale * Fraction(p + q, g0) - Fraction(1, d),
                     "binomial top argument")
    bottom = _exact_int(scale * Fraction(bottom_weight, g0),
                        "binomial bottom argument")
    n = 1 + sum(t.n)
    return (Fraction(-1) ** (n - 1)
            * Fraction(p + q - 1) ** (n - 2) / Fraction(d) ** (n - 1)
            * math.comb(top, bottom)
            * _block_product(t.n, p, q, g0))


def partition_type_count_1(t: TypeVector1, p: int, q: int) -> int:
    """Number of partitions of the filled passport with a given type."""
    g0 = pq_params(p, q).g0
    value = Fraction(math.factorial(p) * math.factorial(q))
    for j, nj in enumerate(t.n, start=1):
        value /= (math.factorial(nj)
                  * math.factorial(j * p // g0) ** nj
                  * math.factorial(j * q // g0) ** nj)
    return _exact_int(value, "partition count")


def partition_type_count_d(t: TypeVectorD, p: int, q: int, d: int) -> int:
    """Number of partitions of the divided passport with a given type.

    Which of g1, g2 the divisor d belongs to is unambiguous (no d > 1 can
    divide both), so the orientation of the center block is inferred.
    """
    params = pq_params(p, q)
    g0 = params.g0
    frac = Fraction(g0 % d, d)
    scale = t.s + frac
    if d > 1 and params.g1 % d == 0:
        # center on the side with p points of weight q
        big_total, big_center = p - 1, scale * Fraction(p, g0) - Fraction(1, d)
        small_total, small_center = q, scale * Fraction(q, g0)
    elif d > 1 and params.g2 % d == 0:
        big_total, big_center = p, scale * Fraction(p, g0)
        small_total, small_center = q - 1, scale * Fraction(q, g0) - Fraction(1, d)
    else:
        raise ValueError(f"d={d} divides neither g1 nor g2 for (p,q)=({p},{q})")

    value = Fraction(math.factorial(big_total // d)
                     * math.factorial(small_total // d))
    value /= (math.factorial(_exact_int(big_center, "center block size"))
              * math.factorial(_exact_int(small_center, "center block size")))
    for j, nj in enumerate(t.n, start=1):
        value /= (math.factorial(nj)
                  * math.factorial(j * p // g0) ** nj
                  * math.factorial(j * q // g0) ** nj)
    return _exact_int(value, "partition count")


# ---------------------------------------------------------------------------
# the G table and the component count


def g_table_closed(p: int, q: int) -> dict:
    """G(d) for every admissible d, via the type sums."""
    params = pq_params(p, q)
    table = {1: sum((coeff_c1(t, p, q) for t in admissible_types_1(p, q)),
                    Fraction(0))}
    for side, g in (("g1", params.g1), ("g2", params.g2)):
        for d in divisors(g):
            if d > 1:
                if d in table:
                    raise ConsistencyError(
                        f"d={d} divides both g1 and g2 for (p,q)=({p},{q})")
                table[d] = sum((coeff_cd(t, p, q, d, side)
                                for t in admissible_types_d(p, q, d)),
                               Fraction(0))
    return dict(sorted(table.items()))


def g_when_coprime(p: int, q: int, d: int) -> Fraction:
    """G(d) in the g0 = 1 case, where no divided passport decomposes:
    (p+q-2)!/(p!q!) for d = 1 and a single binomial term otherwise."""
    params = pq_params(p, q)
    if params.g0 != 1:
        raise ValueError("closed binomial form requires gcd(p, q) = 1")
    if d == 1:
        return Fraction(math.factorial(p + q - 2),
                        math.factorial(p) * math.factorial(q))
    if params.g1 % d == 0:
        return Fraction(math.comb((p + q - 1) // d, q // d), p + q - 1)
    if params.g2 % d == 0:
        return Fraction(math.comb((p + q - 1) // d, p // d), p + q - 1)
    raise ValueError(f"d={d} divides neither g1 nor g2 for (p,q)=({p},{q})")


def count_closed(p: int, q: int) -> int:
    """Number of trees with passport (q^p | p^q):
    G(1) + sum over 1 < d | g1 of phi(d) G(d) + the same over g2."""
    table = g_table_closed(p, q)
    total = sum((totient(d) * g for d, g in table.items()), Fraction(0))
    return _exact_int(total, "tree count")
