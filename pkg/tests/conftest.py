"""Shared fixtures: tiny builders, worked-example data, independent
brute-force oracles, and seeded random instance generators.

The oracles re-derive everything from first principles (powerset filters,
exhaustive searches) so they share no code path with the library.
"""

from __future__ import annotations

import random
from functools import lru_cache

from hornkit import (
    AttrSet,
    Implication,
    ImplicationSet,
    SetFamily,
    Universe,
)

SEED = 0xC0FFEE


# -- builders ----------------------------------------------------------------


@lru_cache(maxsize=None)
def uni(n: int) -> Universe:
    return Universe(tuple(str(i + 1) for i in range(n)))


def aset(u: Universe, text: str) -> AttrSet:
    return u.parse_set(text)


def imp(u: Universe, line: str) -> Implication:
    left, right = line.split("->")
    return Implication(u.parse_set(left), u.parse_set(right))


def sig(u: Universe, *lines: str) -> ImplicationSet:
    return ImplicationSet(u, tuple(imp(u, line) for line in lines))


def fam(u: Universe, *lines: str) -> SetFamily:
    return SetFamily(u, tuple(u.parse_set(line) for line in lines))


def pairs(sigma: ImplicationSet) -> frozenset[tuple[int, int]]:
    return sigma.as_pair_set()


# -- worked-example data -------------------------------------------------------

U6 = uni(6)
U7 = uni(7)
U9 = uni(9)

#: four-implication family over [6]
EQ38 = sig(U6, "3 -> 5", "1 5 -> 4", "6 -> 3", "2 3 -> 1")

#: singleton-premise family over [9]
EQ15 = sig(
    U9,
    "1 -> 6",
    "2 -> 5 6",
    "3 -> 2",
    "4 -> 3 6 8 9",
    "5 -> 3 4 7",
    "6 -> 9",
    "7 -> 8",
    "8 -> 7",
)

#: its canonical base (full conclusions)
EQ15_GD = sig(
    U9,
    "1 -> 1 6 9",
    "2 -> 2 3 4 5 6 7 8 9",
    "3 -> 2 3 4 5 6 7 8 9",
    "4 -> 2 3 4 5 6 7 8 9",
    "5 -> 2 3 4 5 6 7 8 9",
    "6 -> 6 9",
    "7 -> 7 8",
    "8 -> 7 8",
)

#: a four-member closure system over [7], listed completely
FIG4A = fam(U7, "1 2", "1 2 3 4", "1 2 5", "1 2 3 4 5 6 7")

FIG4A_GD = sig(
    U7,
    "-> 1 2",
    "1 2 3 -> 1 2 3 4",
    "1 2 4 -> 1 2 3 4",
    "1 2 6 -> 1 2 3 4 5 6 7",
    "1 2 7 -> 1 2 3 4 5 6 7",
    "1 2 3 4 5 -> 1 2 3 4 5 6 7",
)

#: the meet-irreducibles of the EQ38 system
EQ25_MF = fam(
    U6,
    "1 2",
    "1 2 3 4 5",
    "1 2 4",
    "1 2 4 5",
    "1 3 4 5 6",
    "2 4 5",
    "2 5",
    "3 4 5 6",
    "3 5 6",
)

#: canonical direct base of that system
EQ27_CD = sig(
    U6,
    "1 3 -> 4",
    "1 6 -> 4",
    "2 3 -> 1 4",
    "2 6 -> 1 4",
    "1 5 -> 4",
    "6 -> 3 5",
    "3 -> 5",
)

#: its ten unit prime implicates (consensus fixpoint)
L6_PRIMES = sig(
    U6,
    "3 -> 5",
    "1 5 -> 4",
    "6 -> 3",
    "2 3 -> 1",
    "1 3 -> 4",
    "6 -> 5",
    "2 6 -> 1",
    "2 3 -> 4",
    "1 6 -> 4",
    "2 6 -> 4",
)

#: a Shock-minimized base of the EQ27 operator
SHOCK_MIN = sig(U6, "2 3 -> 2 3 1 4 5", "1 5 -> 1 5 4", "6 -> 6 3 5", "3 -> 3 5")

#: D-basis of a six-element lattice: binary primes then order-minimal ones
EQ35_DB = sig(
    U6,
    "2 -> 1",
    "6 -> 3",
    "6 -> 1",
    "5 -> 4",
    "3 -> 1",
    "1 4 -> 3",
    "2 4 -> 5",
    "1 5 -> 6",
    "2 4 -> 6",
    "2 3 -> 6",
)
EQ35_BINARY = sig(U6, "2 -> 1", "6 -> 3", "6 -> 1", "5 -> 4", "3 -> 1")

#: acyclic unit family whose nonredundant prime base is extracted in tests
ACYC7 = sig(
    U6,
    "4 -> 5",
    "6 -> 1",
    "2 3 -> 4",
    "2 3 -> 1",
    "3 5 -> 6",
    "3 4 -> 6",
    "2 3 4 -> 5",
)


# -- brute-force oracles -------------------------------------------------------


def brute_closed_masks(n: int, sigma: ImplicationSet) -> list[int]:
    """Filter the powerset by the closed-set predicate, directly."""
    ps = sigma.mask_pairs()
    out = []
    for m in range(1 << n):
        if all(prem & ~m != 0 or conc & ~m == 0 for prem, conc in ps):
            out.append(m)
    return out


def oracle_close(closed: list[int], full: int, m: int) -> int:
    """Closure as the intersection of the closed supersets of m."""
    acc = full
    for x in closed:
        if m & ~x == 0:
            acc &= x
    return acc


def brute_family_closed(n: int, family: SetFamily) -> list[int]:
    """All intersections of subfamilies (the generated closure system)."""
    full = (1 << n) - 1
    ms = family.masks()
    out = {full}
    frontier = {full}
    while frontier:
        new = set()
        for x in frontier:
            for y in ms:
                z = x & y
                if z not in out:
                    out.add(z)
                    new.add(z)
        frontier = new
    return sorted(out)


def brute_mtr(n: int, edges: list[int]) -> set[int]:
    """Minimal transversals by scanning the whole powerset."""
    hitting = [m for m in range(1 << n) if all(m & e for e in edges)]
    out = set()
    for m in hitting:
        if not any(h != m and h & ~m == 0 for h in hitting):
            out.add(m)
    return out


def brute_stems(n: int, closed: list[int]) -> dict[int, set[int]]:
    """stems(e) from the closure system: minimal U with e in close(U) \\ U."""
    full = (1 << n) - 1
    close = [oracle_close(closed, full, m) for m in range(1 << n)]
    stems: dict[int, set[int]] = {e: set() for e in range(n)}
    for m in sorted(range(1 << n), key=lambda m: m.bit_count()):
        gained = close[m] & ~m
        for e in range(n):
            if gained >> e & 1 and not any(s & ~m == 0 for s in stems[e]):
                stems[e].add(m)
    return stems


def brute_unit_primes(n: int, closed: list[int]) -> set[tuple[int, int]]:
    """All (premise mask, root) pairs of unit prime implicates."""
    stems = brute_stems(n, closed)
    return {(u, e) for e, us in stems.items() for u in us}


def brute_pseudoclosed(n: int, closed: list[int]) -> set[int]:
    """Pseudoclosed sets straight from the quasiclosure definition:
    minimal properly quasiclosed member of each closure class."""
    full = (1 << n) - 1
    close = [oracle_close(closed, full, m) for m in range(1 << n)]

    def quasi(m: int) -> int:
        while True:
            acc = m
            sub = m
            while True:
                if close[sub] != close[m]:
                    acc |= close[sub]
                if sub == 0:
                    break
                sub = (sub - 1) & m
            if acc == m:
                return m
            m = acc

    proper = [m for m in range(1 << n) if close[m] != m and quasi(m) == m]
    out = set()
    for m in proper:
        if not any(q != m and q & ~m == 0 and close[q] == close[m] for q in proper):
            out.add(m)
    return out


def brute_meet_irreducibles(n: int, closed: list[int]) -> set[int]:
    full = (1 << n) - 1
    out = set()
    for x in closed:
        if x == full:
            continue
        inter = full
        for y in closed:
            if y != x and x & ~y == 0:
                inter &= y
        if inter != x:
            out.add(x)
    return out


def exact_min_base_size(
    n: int, mod: set[int], allow_complications: bool = True
) -> int:
    """Exhaustive minimum size of a system with exactly mod as model set.

    Every implication (ordered premise/conclusion pair) and, optionally,
    every complication is a candidate; a candidate set is a base iff its
    members hold in every model and together exclude every non-model, so
    the search is an exact minimum set cover over exclusion sets.
    """
    universe = range(1 << n)
    nonmod = frozenset(m for m in universe if m not in mod)
    if not nonmod:
        return 0
    kills: set[frozenset[int]] = set()
    for a in universe:
        for b in universe:
            if b & ~a == 0:
                continue  # tautology excludes nothing
            kill = frozenset(x for x in universe if a & ~x == 0 and b & ~x)
            if kill and kill <= nonmod:
                kills.add(kill)
        if allow_complications:
            kill = frozenset(x for x in universe if a & ~x == 0)
            if kill and kill <= nonmod:
                kills.add(kill)
    pool = [k for k in kills if not any(k < other for other in kills)]
    biggest = max((len(k) for k in pool), default=0)

    def cover(remaining: frozenset[int], k: int) -> bool:
        if not remaining:
            return True
        if k * biggest < len(remaining):
            return False
        # branch on the element with the fewest covering candidates
        pick = min(remaining, key=lambda x: sum(x in cand for cand in pool))
        return any(
            cover(remaining - cand, k - 1) for cand in pool if pick in cand
        )

    k = 0
    while not cover(nonmod, k):
        k += 1
        assert k <= len(nonmod)
    return k


# -- random instances ----------------------------------------------------------


def rng_for(case: int) -> random.Random:
    return random.Random(SEED + case)


def rand_mask(rng: random.Random, n: int) -> int:
    return rng.getrandbits(n) & rng.getrandbits(n)


def rand_sigma(rng: random.Random, u: Universe, max_items: int | None = None) -> ImplicationSet:
    n = u.size
    k = rng.randint(1, max_items if max_items is not None else 2 * n)
    items = []
    for _ in range(k):
        prem = rand_mask(rng, n)
        conc = rand_mask(rng, n)
        if rng.random() < 0.1:
            prem = 0
        items.append(Implication(AttrSet(u, prem), AttrSet(u, conc)))
    return ImplicationSet(u, tuple(items))


def rand_antichain(rng: random.Random, u: Universe, k: int = 5) -> SetFamily:
    sets = tuple(
        AttrSet(u, rand_mask(rng, u.size) | (1 << rng.randrange(u.size)))
        for _ in range(k)
    )
    return SetFamily(u, sets).minimize()


def rand_family(rng: random.Random, u: Universe, k: int = 5) -> SetFamily:
    sets = tuple(AttrSet(u, rand_mask(rng, u.size)) for _ in range(k))
    return SetFamily(u, sets)
