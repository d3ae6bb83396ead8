"""Acceptance suite: one test per criterion, exact tolerances throughout.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
pass/fail lines and timings.
"""

import time
from contextlib import contextmanager
from fractions import Fraction
from functools import lru_cache

from wbptrees import closedform, count, oracle
from wbptrees.hcmu import balanced_passports
from wbptrees.passport import Passport, divide, divisor_set, fill, parse_passport

CORPUS_MAX_WEIGHT = 8
PQ_MAX_TOTAL = 16


@contextmanager
def criterion(number, description):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"\ncriterion {number}: FAIL - {description}")
        raise
    elapsed = time.perf_counter() - start
    print(f"\ncriterion {number}: PASS - {description} ({elapsed:.2f}s)")


@lru_cache(maxsize=1)
def corpus_data():
    """Shared once-per-session sweep over the criterion-2 corpus.

    For every balanced star-free passport with side weight <= 8 over
    weights <= 6: the oracle census, the formula report, the labeled census
    of the filling, and the oracle census of every divided passport.
    """
    records = []
    for p in balanced_passports(CORPUS_MAX_WEIGHT, 6):
        census = oracle.symmetry_census(p, CORPUS_MAX_WEIGHT)
        rep = count.report(p)
        labeled = oracle.labeled_symmetry_census(fill(p), CORPUS_MAX_WEIGHT)
        divided = {
            d: oracle.symmetry_census(divide(p, d), CORPUS_MAX_WEIGHT)
            for d in sorted(divisor_set(p)) if d > 1
        }
        records.append((p, census, rep, labeled, divided))
    return records


@lru_cache(maxsize=1)
def pq_data():
    """Closed-form and generic results for every p > q >= 1, p + q <= 16."""
    records = []
    for total in range(3, PQ_MAX_TOTAL + 1):
        for q in range(1, total):
            p = total - q
            if p <= q:
                continue
            passport = Passport([q] * p, [p] * q)
            records.append((p, q, passport,
                            closedform.g_table_closed(p, q),
                            closedform.count_closed(p, q),
                            count.report(passport)))
    return records


def test_criterion_1_golden_values():
    with criterion(1, "golden example values, tolerance 0"):
        rep = count.report(parse_passport("3^7 | 7^3"))
        assert rep.total == 2
        assert rep.by_symmetry == {1: 1, 3: 1}

        rep = count.report(parse_passport("6^10 | 10^6"))
        assert rep.total == 11
        assert rep.by_symmetry == {1: 8, 3: 2, 5: 1}
        assert rep.g_table == {1: Fraction(133, 15), 3: Fraction(2, 3),
                               5: Fraction(1, 5)}

        rep = count.report(parse_passport("2^2 4^3 | 8^2"))
        assert rep.total == 3
        assert rep.by_symmetry == {1: 1, 2: 2}
        assert count.count_ftree(fill(parse_passport("2^2 4^3 | 8^2"))) == 48

        rep = count.report(parse_passport("1^3 | 3"))
        assert rep.total == 1
        assert rep.by_symmetry == {3: 1}


def test_criterion_2_oracle_formula_equivalence():
    with criterion(2, "oracle census == formula census on the side-weight-8 "
                      "corpus (includes the shared corpus sweep)"):
        records = corpus_data()
        assert len(records) == 805
        for p, census, rep, _, _ in records:
            assert rep.by_symmetry == census, p
            assert rep.total == sum(census.values()), p
            for d in sorted(divisor_set(p)):
                assert count.count_trees_sym(p, d) == census.get(d, 0), (p, d)


def test_criterion_3_closed_form_generic_equivalence():
    with criterion(3, "closed form == generic engine for p + q <= 16"):
        records = pq_data()
        assert len(records) == 56
        for p, q, passport, closed_table, closed_count, rep in records:
            assert closed_count == rep.total, (p, q)
            assert closed_table == rep.g_table, (p, q)


def test_criterion_4_labeling_relation():
    with criterion(4, "p(passport) * #Tree(e) == e * #FTree(e), labeled side "
                      "counted by direct orbit enumeration"):
        for p, census, _, labeled, _ in corpus_data():
            pf = p.p_factor()
            for e in sorted(set(census) | set(labeled)):
                assert pf * census.get(e, 0) == e * labeled.get(e, 0), (p, e)


def test_criterion_5_division_identity():
    with criterion(5, "census(p/d) at order e == census(p) at order d*e"):
        for p, census, _, _, divided in corpus_data():
            for d, census_d in divided.items():
                orders = set(census_d) | {e // d for e in census if e % d == 0}
                for e in orders:
                    assert census_d.get(e, 0) == census.get(d * e, 0), (p, d, e)


def test_criterion_6_integrality_and_recomposition():
    with criterion(6, "all counts are nonnegative integers and totals "
                      "recompose from the symmetry census"):
        for p, census, rep, labeled, divided in corpus_data():
            values = ([rep.total] + list(rep.by_symmetry.values())
                      + list(census.values()) + list(labeled.values()))
            for v in values:
                assert isinstance(v, int) and v >= 0, p
            assert rep.total == sum(rep.by_symmetry.values()), p
        for p, q, passport, _, closed_count, rep in pq_data():
            assert isinstance(closed_count, int) and closed_count >= 0
            assert isinstance(rep.total, int) and rep.total >= 0
            assert rep.total == sum(rep.by_symmetry.values()), (p, q)


def test_criterion_7_star_tree_family():
    with criterion(7, "star trees count 1 with full rotational symmetry "
                      "(oracle to 8, formula to 50)"):
        for p in range(2, 9):
            passport = Passport([1] * p, [p])
            assert oracle.symmetry_census(passport, 8) == {p: 1}
        for p in range(2, 51):
            passport = Passport([1] * p, [p])
            rep = count.report(passport)
            assert rep.total == 1
            assert rep.by_symmetry == {p: 1}


def test_criterion_8_number_theory_identities():
    with criterion(8, "totient and Moebius divisor-sum identities to 10000"):
        phi = {n: count.totient(n) for n in range(1, 10001)}
        mu = {n: count.moebius(n) for n in range(1, 10001)}
        for n in range(1, 10001):
            ds = count.divisors(n)
            assert sum(phi[d] for d in ds) == n
            assert sum(mu[d] for d in ds) == (1 if n == 1 else 0)
