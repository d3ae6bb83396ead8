"""Counting engine: number theory, partition sums, and symmetry counts."""

from fractions import Fraction

import pytest

from wbptrees.count import (
    big_g,
    count_ftree,
    count_trees,
    count_trees_sym,
    divisors,
    moebius,
    report,
    totient,
)
from wbptrees.passport import Passport, divisor_set, fill, parse_passport


# ---------------------------------------------------------------------------
# number theory


def test_totient():
    assert totient(1) == 1
    assert totient(3) == 2
    assert [totient(n) for n in range(1, 11)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]
    with pytest.raises(ValueError):
        totient(0)


def test_moebius():
    assert moebius(1) == 1
    assert moebius(4) == 0
    assert [moebius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    with pytest.raises(ValueError):
        moebius(0)


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    assert divisors(97) == [1, 97]
    with pytest.raises(ValueError):
        divisors(0)


def test_divisor_sum_identities():
    for n in range(1, 500):
        assert sum(totient(d) for d in divisors(n)) == n
        assert sum(moebius(d) for d in divisors(n)) == (1 if n == 1 else 0)


# ---------------------------------------------------------------------------
# simple-passport counts


def test_count_ftree_golden():
    assert count_ftree(fill(parse_passport("2^2 4^3 | 8^2"))) == 48
    assert count_ftree(parse_passport("2 4 2_* | 8")) == 2
    assert count_ftree(parse_passport("7 | 7")) == 1
    # nondecomposable: (size - 2)!
    assert count_ftree(parse_passport("9 4 | 6 5 2")) == 6


def test_count_ftree_validation():
    with pytest.raises(ValueError):
        count_ftree(parse_passport("2^2 | 4"))     # not simple
    with pytest.raises(ValueError):
        count_ftree(parse_passport("2 | 3"))       # unbalanced


def test_count_ftree_with_heavy_cancellation():
    # no tree has eight weight-1 vertices (they would all be leaves): the
    # signed partition sum cancels to zero across 131 terms
    assert count_ftree(fill(Passport([1] * 4, [1] * 4))) == 0


# ---------------------------------------------------------------------------
# G table


def test_big_g_golden():
    assert big_g(parse_passport("6^10 | 10^6"), 1) == Fraction(133, 15)
    assert big_g(parse_passport("6^10 | 10^6"), 3) == Fraction(2, 3)
    assert big_g(parse_passport("6^10 | 10^6"), 5) == Fraction(1, 5)
    assert big_g(parse_passport("2^2 4^3 | 8^2"), 2) == 1
    assert big_g(parse_passport("3^7 | 7^3"), 3) == Fraction(1, 3)
    with pytest.raises(ValueError):
        big_g(parse_passport("2^2 4^3 | 8^2"), 3)


def test_count_trees_golden():
    assert count_trees(parse_passport("6^10 | 10^6")) == 11
    assert count_trees(parse_passport("2^2 4^3 | 8^2")) == 3
    assert count_trees(parse_passport("3^7 | 7^3")) == 2
    for p in range(1, 9):
        assert count_trees(Passport([1] * p, [p])) == 1


def test_count_trees_validation():
    with pytest.raises(ValueError):
        count_trees(parse_passport("2 | 3"))
    with pytest.raises(ValueError):
        count_trees(parse_passport("|"))
    with pytest.raises(ValueError):
        count_trees(parse_passport("3 1 | 2_* 2"))


def test_count_trees_sym_golden():
    p = parse_passport("6^10 | 10^6")
    assert [count_trees_sym(p, d) for d in (1, 3, 5)] == [8, 2, 1]
    assert count_trees_sym(p, 2) == 0          # not in the divisor set
    assert count_trees_sym(parse_passport("3^7 | 7^3"), 3) == 1
    assert count_trees_sym(parse_passport("2^2 4^3 | 8^2"), 2) == 2
    assert count_trees_sym(parse_passport("2 | 1^2"), 2) == 1


def test_totient_recomposition():
    for text in ["6^10 | 10^6", "2^2 4^3 | 8^2", "1^12 | 12", "3^2 1^2 | 4 2^2"]:
        p = parse_passport(text)
        assert count_trees(p) == sum(count_trees_sym(p, d)
                                     for d in divisor_set(p))


def test_dual_divisor_system():
    # sum over multiples e of d of #Tree(p, e) / e recovers G(d)
    for text in ["6^10 | 10^6", "2^2 4^3 | 8^2", "1^12 | 12"]:
        p = parse_passport(text)
        ds = sorted(divisor_set(p))
        for d in ds:
            lhs = sum(Fraction(count_trees_sym(p, e), e)
                      for e in ds if e % d == 0)
            assert lhs == big_g(p, d)


# ---------------------------------------------------------------------------
# reports


def test_report_golden():
    rep = report(parse_passport("6^10 | 10^6"))
    assert rep.to_json_dict() == {
        "passport": "6^10 | 10^6",
        "G": {"1": "133/15", "3": "2/3", "5": "1/5"},
        "total": 11,
        "by_symmetry": {"1": 8, "3": 2, "5": 1},
    }


def test_report_single_edge():
    rep = report(parse_passport("7 | 7"))
    assert rep.total == 1
    assert rep.by_symmetry == {1: 1}
    assert rep.g_table == {1: Fraction(1)}


def test_report_star_tree():
    rep = report(parse_passport("1^3 | 3"))
    assert rep.total == 1
    assert rep.by_symmetry == {3: 1}
    assert rep.g_table == {1: Fraction(1, 3), 3: Fraction(1, 3)}


def test_report_key_order():
    keys = list(report(parse_passport("2^2 4^3 | 8^2")).to_json_dict())
    assert keys == ["passport", "G", "total", "by_symmetry"]
