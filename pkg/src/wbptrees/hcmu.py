"""
The moduli census: which (p, q) admit HCMU spheres with one integral cone
angle, and how many connected components each pair contributes.

For cone angle 2*pi*alpha with the singularity at a saddle there are p
curvature maxima and q minima with alpha = p + q - 1, p > q >= 1, and
either q = 1 or q does not divide p.  Each admissible pair contributes one
component per tree with passport (q^p | p^q), evaluated by the closed
forms.  The football case (singularity at a curvature extremum) always
contributes a single extra component and is reported as a note, never
folded into the saddle total.

This module also hosts the formula-versus-oracle verification sweep used
by the CLI and the service.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import closedform, count, oracle
from .passport import Passport, divide, divisor_set, fill, print_passport

FOOTBALL_NOTE = ("the football case (singularity at a curvature extremum) "
                 "contributes 1 further component for every alpha > 1; it is "
                 "reported separately and not included in saddle_total")


def admissible(p: int, q: int) -> tuple:
    """Whether (p, q) occurs for a saddle singularity, with the reason."""
    if q < 1:
        return False, "q < 1"
    if p <= q:
        return False, "p <= q"
    if q > 1 and p % q == 0:
        return False, "q divides p"
    return True, None


@dataclass(frozen=True)
class CensusRow:
    p: int
    q: int
    admissible: bool
    reason: str = None
    count: int = None

    def to_json_dict(self) -> dict:
        out = {"p": self.p, "q": self.q, "admissible": self.admissible}
        if self.admissible:
            out["count"] = self.count
        else:
            out["reason"] = self.reason
        return out


@dataclass(frozen=True)
class PqCensus:
    alpha: int
    rows: tuple
    saddle_total: int
    football_note: str = FOOTBALL_NOTE

    def to_json_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "rows": [row.to_json_dict() for row in self.rows],
            "saddle_total": self.saddle_total,
            "football_note": self.football_note,
        }

    def to_text(self) -> str:
        lines = [f"alpha = {self.alpha}",
                 f"{'p':>4} {'q':>4} {'admissible':>10} {'count':>8}  reason"]
        for row in self.rows:
            count_s = str(row.count) if row.admissible else "-"
            reason = row.reason or ""
            lines.append(f"{row.p:>4} {row.q:>4} "
                         f"{str(row.admissible).lower():>10} {count_s:>8}  {reason}")
        lines.append(f"saddle_total = {self.saddle_total}")
        lines.append(f"note: {self.football_note}")
        return "\n".join(lines)


def census(alpha: int) -> PqCensus:
    """Component counts for every (p, q) with p + q = alpha + 1, p > q >= 1."""
    if alpha < 3:
        raise ValueError("the saddle census requires an integer alpha >= 3")
    rows = []
    total = 0
    for q in range(1, alpha // 2 + 1):
        p = alpha + 1 - q
        ok, reason = admissible(p, q)
        if ok:
            n = closedform.count_closed(p, q)
            total += n
            rows.append(CensusRow(p, q, True, count=n))
        else:
            rows.append(CensusRow(p, q, False, reason=reason))
    return PqCensus(alpha, tuple(rows), total)


# ---------------------------------------------------------------------------
# verification sweep


@dataclass
class VerifyReport:
    max_weight: int
    passports_checked: int = 0
    pq_checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "max_weight": self.max_weight,
            "passports_checked": self.passports_checked,
            "pq_checked": self.pq_checked,
            "failures": self.failures,
        }


def _partitions_bounded(total: int, max_part: int):
    """Weakly decreasing positive tuples with the given sum and part bound."""
    def rec(rest, bound):
        if rest == 0:
            yield ()
            return
        for part in range(min(rest, bound), 0, -1):
            for tail in rec(rest - part, part):
                yield (part,) + tail
    yield from rec(total, max_part)


def balanced_passports(max_side_weight: int, max_part: int = 6):
    """Every balanced star-free passport with side weight up to the bound."""
    for s in range(1, max_side_weight + 1):
        sides = list(_partitions_bounded(s, max_part))
        for black in sides:
            for white in sides:
                yield Passport(black, white)


def _check_passport(p: Passport, max_weight: int, failures: list):
    name = print_passport(p)
    census_o = oracle.symmetry_census(p, max_weight)
    rep = count.report(p)

    if rep.by_symmetry != census_o:
        failures.append(f"{name}: formula census {rep.by_symmetry} "
                        f"!= oracle census {census_o}")
    if rep.total != sum(census_o.values()):
        failures.append(f"{name}: total {rep.total} != oracle "
                        f"{sum(census_o.values())}")

    dset = divisor_set(p)
    for e in census_o:
        if e not in dset:
            failures.append(f"{name}: oracle order {e} outside the divisor "
                            f"set {sorted(dset)}")
    for d in sorted(dset):
        if count.count_trees_sym(p, d) != census_o.get(d, 0):
            failures.append(f"{name}: symmetry count mismatch at order {d}")

    # p(passport) * #Tree(p, e) = e * #FTree(p, e), labeled side counted
    # by direct orbit enumeration
    labeled = oracle.labeled_symmetry_census(fill(p), max_weight)
    pf = p.p_factor()
    for e in sorted(set(census_o) | set(labeled)):
        if pf * census_o.get(e, 0) != e * labeled.get(e, 0):
            failures.append(f"{name}: labeling relation fails at order {e}: "
                            f"{pf} * {census_o.get(e, 0)} != "
                            f"{e} * {labeled.get(e, 0)}")

    # dividing by d shifts the symmetry census by a factor d
    for d in sorted(dset):
        if d == 1:
            continue
        census_d = oracle.symmetry_census(divide(p, d), max_weight)
        for e in sorted(set(census_d) | {x // d for x in census_o if x % d == 0}):
            if census_d.get(e, 0) != census_o.get(d * e, 0):
                failures.append(
                    f"{name}: division census mismatch d={d} e={e}: "
                    f"{census_d.get(e, 0)} != {census_o.get(d * e, 0)}")


def _check_pq(p: int, q: int, failures: list):
    passport = Passport([q] * p, [p] * q)
    name = f"(p,q)=({p},{q})"
    closed_table = closedform.g_table_closed(p, q)
    generic_table = {d: count.big_g(passport, d)
                     for d in sorted(divisor_set(passport))}
    if closed_table != generic_table:
        failures.append(f"{name}: closed-form G table {closed_table} "
                        f"!= generic {generic_table}")
    if closedform.count_closed(p, q) != count.count_trees(passport):
        failures.append(f"{name}: closed-form count "
                        f"{closedform.count_closed(p, q)} != generic "
                        f"{count.count_trees(passport)}")


def run_verification(max_weight: int = 8, max_part: int = 6) -> VerifyReport:
    """Full formula-vs-oracle sweep.

    (a) every balanced star-free passport with side weight <= max_weight
    over weights <= max_part is checked against the oracle (census equality,
    the labeling relation, the division identity); (b) every p > q >= 1
    with p + q <= max_weight is checked closed form against the generic
    engine.
    """
    report = VerifyReport(max_weight)
    for p in balanced_passports(max_weight, max_part):
        _check_passport(p, max_weight, report.failures)
        report.passports_checked += 1
    for total in range(3, max_weight + 1):
        for q in range(1, total):
            p = total - q
            if p > q:
                _check_pq(p, q, report.failures)
                report.pq_checked += 1
    return report
