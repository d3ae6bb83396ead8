"""
Passports of weighted bi-colored plane trees, and their algebra.

A passport is a pair of multisets of labeled weights: the weights of the
black vertices and the weights of the white vertices of a tree.  Labels are
bookkeeping tokens used to break symmetry: the default label 0 is invisible
in printed notation, the star label marks the symmetric center of a divided
passport, and filling a passport attaches index labels that make all entries
pairwise distinct.

The operations here are the purely combinatorial ones: parsing/printing of
the power notation (``"2^2 4^3 | 8^2"``), filling, the g-vector and divisor
set that govern which rotational symmetries a passport can support, passport
division, and the enumeration of balanced partitions that feeds the tree
counting formulas.

All values are immutable after construction; every function is pure.
"""

from __future__ import annotations

import math
from itertools import groupby
from typing import Iterable, Iterator, NamedTuple, Union

STAR = "*"

#: a label is the default 0, another nonnegative integer, the star token,
#: or a (label, index) pair produced by filling
Label = Union[int, str, tuple]


class ConsistencyError(RuntimeError):
    """An internal invariant that is provably true failed to hold.

    Raised instead of silently returning garbage; callers treat it as a
    hard failure, never as bad user input.
    """


class PassportSyntaxError(ValueError):
    """Malformed passport notation, with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _label_key(label: Label) -> tuple:
    """Total order on labels: integers, then star, then composite labels."""
    if isinstance(label, int):
        return (0, label)
    if label == STAR:
        return (1,)
    base, index = label
    return (2, _label_key(base), index)


def _label_text(label: Label) -> str:
    """Printable form of a label; composite (0, s) collapses to plain s."""
    if isinstance(label, int):
        return str(label)
    if label == STAR:
        return STAR
    base, index = label
    if base == 0:
        return str(index)
    return f"{_label_text(base)}.{index}"


class LabeledWeight(NamedTuple):
    weight: int
    label: Label

    def sort_key(self):
        return (self.weight, _label_key(self.label))


def _coerce_entry(item) -> LabeledWeight:
    if isinstance(item, LabeledWeight):
        return item
    if isinstance(item, int):
        return LabeledWeight(item, 0)
    weight, label = item
    return LabeledWeight(weight, label)


class Passport:
    """A pair of multisets of labeled weights (black side, white side).

    Entries are stored canonically: within each side, descending by
    (weight, label), so equal passports compare and print identically.
    At most one entry in the whole passport may carry the star label.
    """

    __slots__ = ("black", "white", "_hash")

    def __init__(self, black: Iterable = (), white: Iterable = ()):
        b = tuple(sorted((_coerce_entry(e) for e in black),
                         key=LabeledWeight.sort_key, reverse=True))
        w = tuple(sorted((_coerce_entry(e) for e in white),
                         key=LabeledWeight.sort_key, reverse=True))
        for entry in b + w:
            if entry.weight < 1:
                raise ValueError(f"weights must be positive, got {entry.weight}")
        stars = sum(1 for e in b + w if e.label == STAR)
        if stars > 1:
            raise ValueError("at most one star label is allowed in a passport")
        object.__setattr__(self, "black", b)
        object.__setattr__(self, "white", w)
        object.__setattr__(self, "_hash", hash((b, w)))

    def __setattr__(self, name, value):
        raise AttributeError("Passport is immutable")

    def __eq__(self, other):
        if not isinstance(other, Passport):
            return NotImplemented
        return self.black == other.black and self.white == other.white

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Passport({print_passport(self)!r})"

    def __str__(self):
        return print_passport(self)

    def size(self) -> int:
        """Total number of vertices the passport prescribes."""
        return len(self.black) + len(self.white)

    def black_weight(self) -> int:
        return sum(e.weight for e in self.black)

    def white_weight(self) -> int:
        return sum(e.weight for e in self.white)

    def is_balanced(self) -> bool:
        """Black and white weight sums agree (true for every tree passport)."""
        return self.black_weight() == self.white_weight()

    def is_simple(self) -> bool:
        """All (weight, label) entries are pairwise distinct on each side."""
        return (len(set(self.black)) == len(self.black)
                and len(set(self.white)) == len(self.white))

    def has_star(self) -> bool:
        return any(e.label == STAR for e in self.black + self.white)

    def star_entry(self):
        """The starred entry and its side ('black'/'white'), or None."""
        for side in ("black", "white"):
            for e in getattr(self, side):
                if e.label == STAR:
                    return side, e
        return None

    def multiplicities(self, side: str) -> list:
        """Distinct entries of one side with multiplicities, ascending order.

        Ascending (weight, label) order mirrors the index convention of the
        power notation, which the g-vector follows.
        """
        entries = sorted(getattr(self, side), key=LabeledWeight.sort_key)
        return [(entry, len(list(grp))) for entry, grp in groupby(entries)]

    def p_factor(self) -> int:
        """Product of factorials of entry multiplicities (both sides)."""
        result = 1
        for side in ("black", "white"):
            for _, mult in self.multiplicities(side):
                result *= math.factorial(mult)
        return result


class PassportPartition(NamedTuple):
    """A split of a passport into balanced blocks (block order incidental)."""

    blocks: tuple

    def n(self) -> int:
        return len(self.blocks)


# ---------------------------------------------------------------------------
# notation


def parse_passport(text: str) -> Passport:
    """Parse power notation ``side '|' side`` into a canonical passport.

    Grammar: ``side = term (' '+ term)*`` where a term is
    ``weight ('_' (label | '*'))? ('^' mult)?`` with positive weight and
    multiplicity and nonnegative integer label.  Either side may be empty.
    Balance is not enforced here: divided passports parse with the same
    grammar.
    """
    s = text
    n = len(s)
    star_seen = False

    def skip_spaces(i):
        while i < n and s[i] == " ":
            i += 1
        return i

    def read_int(i):
        j = i
        while j < n and s[j].isdigit():
            j += 1
        if j == i:
            raise PassportSyntaxError("expected an integer", i)
        return int(s[i:j]), j

    def read_side(i, out):
        nonlocal star_seen
        while True:
            i = skip_spaces(i)
            if i >= n or s[i] == "|":
                return i
            if not s[i].isdigit():
                raise PassportSyntaxError(f"unexpected character {s[i]!r}", i)
            start = i
            weight, i = read_int(i)
            if weight == 0:
                raise PassportSyntaxError("zero weight", start)
            label: Label = 0
            if i < n and s[i] == "_":
                i += 1
                if i < n and s[i] == STAR:
                    if star_seen:
                        raise PassportSyntaxError("duplicated star label", i)
                    star_seen = True
                    label = STAR
                    i += 1
                else:
                    label, i = read_int(i)
            mult = 1
            if i < n and s[i] == "^":
                mpos = i + 1
                mult, i = read_int(mpos)
                if mult == 0:
                    raise PassportSyntaxError("zero multiplicity", mpos)
            if i < n and s[i] not in " |":
                raise PassportSyntaxError(f"unexpected character {s[i]!r}", i)
            if label == STAR and mult > 1:
                raise PassportSyntaxError("duplicated star label", start)
            out.extend([(weight, label)] * mult)

    black: list = []
    white: list = []
    i = read_side(0, black)
    if i >= n or s[i] != "|":
        raise PassportSyntaxError("expected '|'", i)
    i = read_side(i + 1, white)
    i = skip_spaces(i)
    if i != n:
        raise PassportSyntaxError(f"unexpected character {s[i]!r}", i)
    return Passport(black, white)


def print_passport(p: Passport) -> str:
    """Canonical power notation: descending entries, '^1' and '_0' omitted."""

    def fmt_side(entries):
        parts = []
        for entry, grp in groupby(entries):
            mult = len(list(grp))
            text = str(entry.weight)
            if entry.label != 0:
                text += "_" + _label_text(entry.label)
            if mult > 1:
                text += f"^{mult}"
            parts.append(text)
        return " ".join(parts)

    left = fmt_side(p.black)
    right = fmt_side(p.white)
    if left and right:
        return f"{left} | {right}"
    if right:
        return f"| {right}"
    if left:
        return f"{left} |"
    return "|"


# ---------------------------------------------------------------------------
# filling


def fill(p: Passport) -> Passport:
    """Make a passport simple by indexing repeated entries.

    Each group of m > 1 identical entries (K, k) becomes
    (K, (k, 1)) ... (K, (k, m)); a unique entry keeps its label, so filling
    is the identity on simple passports.
    """

    def fill_side(side):
        out = []
        for entry, mult in p.multiplicities(side):
            if mult == 1:
                out.append(entry)
            else:
                out.extend(LabeledWeight(entry.weight, (entry.label, s))
                           for s in range(1, mult + 1))
        return out

    return Passport(fill_side("black"), fill_side("white"))


def forget_fill(filled: Passport, base: Passport) -> dict:
    """The projection Fill(base) -> base that drops filling indexes.

    Returns a map from each entry of ``filled`` to the entry of ``base`` it
    came from.  Raises ValueError when ``filled`` is not the filling of
    ``base``.
    """
    if filled != fill(base):
        raise ValueError(f"{filled} is not the filling of {base}")
    base_entries = set(base.black) | set(base.white)
    mapping = {}
    for entry in filled.black + filled.white:
        if entry in base_entries:
            target = entry
        else:
            target = LabeledWeight(entry.weight, entry.label[0])
        mapping[entry] = target
    return mapping


# ---------------------------------------------------------------------------
# division


def g_vector(p: Passport) -> tuple:
    """Per-entry gcds controlling passport divisibility.

    For the i-th distinct black entry (K, multiplicity m):
    gcd(K; every other multiplicity on both sides; m - 1), and symmetrically
    for white entries.  Entries are taken in ascending (weight, label) order,
    black side first.  The convention gcd(x, 0) = x matters for unique
    entries, where m - 1 = 0.
    """
    if p.has_star():
        raise ValueError("g-vector is defined for star-free passports")
    blacks = p.multiplicities("black")
    whites = p.multiplicities("white")
    lam = [m for _, m in blacks]
    mu = [m for _, m in whites]
    gs = []
    for i, (entry, m) in enumerate(blacks):
        gs.append(math.gcd(entry.weight, m - 1,
                           *lam[:i], *lam[i + 1:], *mu))
    for j, (entry, m) in enumerate(whites):
        gs.append(math.gcd(entry.weight, m - 1,
                           *lam, *mu[:j], *mu[j + 1:]))
    return tuple(gs)


def divisor_set(p: Passport) -> set:
    """All d with a divided passport: {1} union {d > 1 : d | some g_i}.

    The sets {d > 1 : d | g_i} are pairwise disjoint across entries (d
    cannot divide both m and m - 1); this is asserted, not assumed.
    """
    owner = {}
    for i, g in enumerate(g_vector(p)):
        for d in range(2, g + 1):
            if g % d == 0:
                if d in owner:
                    raise ConsistencyError(
                        f"divisor {d} of {p} belongs to entries "
                        f"{owner[d]} and {i}")
                owner[d] = i
    return {1} | set(owner)


def divide(p: Passport, d: int) -> Passport:
    """The divided passport of one sector of a d-fold symmetric tree.

    The starred entry (the symmetric center) gets weight K/d; every other
    multiplicity is divided by d.  Dividing an already starred passport
    re-divides its starred entry, so divide(divide(p, d), e) equals
    divide(p, d * e).
    """
    if d < 1:
        raise ValueError("divisor must be positive")
    if d == 1:
        return p

    blacks = p.multiplicities("black")
    whites = p.multiplicities("white")

    if p.has_star():
        star_side, star = p.star_entry()
        center = (star_side, star)
        ok = star.weight % d == 0 and all(
            m % d == 0
            for side in (blacks, whites)
            for entry, m in side if entry.label != STAR)
    else:
        if d not in divisor_set(p):
            raise ValueError(f"{p} has no division by {d}")
        gs = g_vector(p)
        entries = [("black", e) for e, _ in blacks] + [("white", e) for e, _ in whites]
        owners = [entries[i] for i, g in enumerate(gs) if g % d == 0]
        if len(owners) != 1:
            raise ConsistencyError(f"division of {p} by {d} is not unique")
        center = owners[0]
        ok = True
    if not ok:
        raise ValueError(f"{p} has no division by {d}")

    def divide_side(side_name, groups):
        out = []
        for entry, mult in groups:
            if (side_name, entry) == center:
                out.append(LabeledWeight(entry.weight // d, STAR))
                mult -= 1
            out.extend([entry] * (mult // d))
        return out

    return Passport(divide_side("black", blacks), divide_side("white", whites))


# ---------------------------------------------------------------------------
# partitions


def _visit_partitions(signed, visit):
    """Drive ``visit`` over every partition of elements 0..len(signed)-1
    into blocks with zero signed weight sum.

    ``signed`` holds +weight for black elements and -weight for white ones,
    so a zero-sum block is exactly a balanced block.  Each partition is
    visited once: the block containing the least unassigned element is
    chosen first, which kills block-permutation duplicates.  The all-in-one
    block (the trivial partition) is always visited first because inclusion
    is explored before exclusion.
    """
    blocks = []

    def over(rem):
        if not rem:
            visit(blocks)
            return
        anchor = rem[0]
        rest = rem[1:]
        k = len(rest)
        weights = [signed[e] for e in rest]
        pos_suf = [0] * (k + 1)
        neg_suf = [0] * (k + 1)
        for i in range(k - 1, -1, -1):
            w = weights[i]
            pos_suf[i] = pos_suf[i + 1] + (w if w > 0 else 0)
            neg_suf[i] = neg_suf[i + 1] + (w if w < 0 else 0)
        inc = [anchor]
        exc = []
        inc_append, inc_pop = inc.append, inc.pop

        def go(i, acc):
            # recursion explores inclusion; the loop walks the exclusion
            # chain.  the block sum can still reach zero iff
            # 0 in [acc + neg_suf, acc + pos_suf]
            excluded = 0
            while acc + neg_suf[i] <= 0 <= acc + pos_suf[i]:
                if i == k:
                    blocks.append(tuple(inc))
                    over(tuple(exc))
                    blocks.pop()
                    break
                inc_append(rest[i])
                go(i + 1, acc + weights[i])
                inc_pop()
                exc.append(rest[i])
                excluded += 1
                i += 1
            if excluded:
                del exc[-excluded:]

        go(0, signed[anchor])

    over(tuple(range(len(signed))))


def _partition_elements(p: Passport):
    """Flat element list (side, entry) and signed weights for partitioning.

    Elements are ordered by descending weight with colors interleaved: the
    enumeration anchors blocks on the earliest remaining element, and
    deciding heavy elements first makes the reachable-sum pruning sharp
    (a lone heavy entry forces its counterweight immediately instead of
    after a subset blowup over the light entries).
    """
    elements = [("black", e) for e in p.black] + [("white", e) for e in p.white]
    elements.sort(key=lambda se: (-se[1].weight, se[0], _label_key(se[1].label)))
    signed = [e.weight if side == "black" else -e.weight
              for side, e in elements]
    return elements, signed


def enumerate_partitions(p: Passport) -> Iterator[PassportPartition]:
    """All partitions of a simple passport into balanced blocks.

    Yields the trivial 1-partition first, then every nontrivial partition
    exactly once, blocks unordered.  An unbalanced passport admits no
    partition at all (even the trivial one fails the balance condition).
    """
    if not p.is_simple():
        raise ValueError("partitions are defined for simple passports")
    elements, signed = _partition_elements(p)
    found = []

    def visit(blocks):
        built = []
        for block in blocks:
            built.append(Passport(
                black=[elements[i][1] for i in block if elements[i][0] == "black"],
                white=[elements[i][1] for i in block if elements[i][0] == "white"],
            ))
        found.append(PassportPartition(tuple(built)))

    _visit_partitions(signed, visit)
    yield from found
