"""Minimal transversals of simple hypergraphs, max(F,e) / cmax(F,e), the
stem <-> meet-irreducible bridges, M(F) extraction, and minimal keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .closure import enumerate_closed_lectic
from .core import AttrSet, ImplicationSet, SetFamily, Universe, bits
from .direct import StemTable
from .errors import UniverseMismatchError
from .rows import enumerate_compact, to_012


def _minimize_masks(masks: list[int]) -> list[int]:
    out: list[int] = []
    for m in sorted(set(masks), key=lambda m: m.bit_count()):
        if not any(k & ~m == 0 for k in out):
            out.append(m)
    return out


def _maximize_masks(masks: list[int]) -> list[int]:
    out: list[int] = []
    for m in sorted(set(masks), key=lambda m: -m.bit_count()):
        if not any(m & ~k == 0 for k in out):
            out.append(m)
    return out


def minimal_transversals(h: SetFamily) -> SetFamily:
    """The antichain of minimal hitting sets, by Berge multiplication with
    per-edge minimization. Non-antichain inputs are minimized first.

    Conventions: mtr of the empty hypergraph is {∅}; an empty edge admits no
    transversal at all.
    """
    u = h.universe
    edges = _minimize_masks(h.masks())
    if 0 in edges:
        return SetFamily(u, ())
    trs = [0]
    for edge in edges:
        nxt = []
        for t in trs:
            if t & edge:
                nxt.append(t)
            else:
                for x in bits(edge):
                    nxt.append(t | 1 << x)
        trs = _minimize_masks(nxt)
    fam = SetFamily(u, tuple(AttrSet(u, m) for m in trs))
    return fam.canonical()


ClosedSource = Union[ImplicationSet, SetFamily]


def max_noncovers(source: ClosedSource, e: int) -> SetFamily:
    """max(F,e): the closed sets maximal with e outside them.

    A family argument is an intersection-generating set of F and is scanned
    directly; an implication argument goes through the compressed rows of
    F(sigma), taking per row the largest member avoiding e.
    """
    u = source.universe
    if not 0 <= e < u.size:
        raise UniverseMismatchError(f"element position {e} outside universe")
    bit = 1 << e
    if isinstance(source, SetFamily):
        avoid = [m for m in source.masks() if not m & bit]
    else:
        # per 012-row the unique row-maximal member avoiding e; rows that
        # force e contribute nothing
        avoid = []
        for row in to_012(enumerate_compact(source)).rows:
            if row.ones & bit:
                continue
            avoid.append((row.ones | row.free) & ~bit)
    out = _maximize_masks(avoid)
    return SetFamily(u, tuple(AttrSet(u, m) for m in out)).canonical()


@dataclass(frozen=True, slots=True)
class MaxNonCover:
    """max(F,e) and its complement family cmax(F,e) for every element."""

    universe: Universe
    max_of: dict[int, SetFamily]
    cmax_of: dict[int, SetFamily]


def max_noncover_table(source: ClosedSource) -> MaxNonCover:
    u = source.universe
    max_of: dict[int, SetFamily] = {}
    cmax_of: dict[int, SetFamily] = {}
    if isinstance(source, ImplicationSet):
        rowmax = _rowmax_row_pairs(source)
    for e in range(u.size):
        if isinstance(source, SetFamily):
            fam = max_noncovers(source, e)
        else:
            bit = 1 << e
            avoid = [m & ~bit for ones, m in rowmax if not ones & bit]
            fam = SetFamily(
                u, tuple(AttrSet(u, x) for x in _maximize_masks(avoid))
            ).canonical()
        max_of[e] = fam
        cmax_of[e] = SetFamily(u, tuple(s.complement() for s in fam)).canonical()
    return MaxNonCover(universe=u, max_of=max_of, cmax_of=cmax_of)


def _rowmax_row_pairs(sigma: ImplicationSet) -> list[tuple[int, int]]:
    rows = to_012(enumerate_compact(sigma)).rows
    return [(r.ones, r.ones | r.free) for r in rows]


def meet_irreducibles(source: ClosedSource, method: str = "rows") -> SetFamily:
    """M(F): the union over e of max(F,e).

    method="rows" extracts it from the compressed row representation (the
    default; family sources scan the family per element instead);
    method="brute" uses the definition directly: a closed set other than E
    whose strict closed supersets intersect above it.
    """
    u = source.universe
    if method == "brute":
        return _meet_irreducibles_brute(source)
    if method != "rows":
        raise ValueError(f"unknown method {method!r}")
    table = max_noncover_table(source)
    masks: set[int] = set()
    for fam in table.max_of.values():
        masks.update(fam.masks())
    return SetFamily(u, tuple(AttrSet(u, m) for m in masks)).canonical()


def _meet_irreducibles_brute(source: ClosedSource) -> SetFamily:
    u = source.universe
    closed = [s.mask for s in enumerate_closed_lectic(source)]
    full = u.full_mask
    out = []
    for x in closed:
        if x == full:
            continue
        inter = full
        for y in closed:
            if y != x and x & ~y == 0:
                inter &= y
        if inter != x:
            out.append(x)
    return SetFamily(u, tuple(AttrSet(u, m) for m in out)).canonical()


def stems_from_meetirr(m: SetFamily, e: int) -> SetFamily:
    """stems(e) from a generating family, as mtr(cmax(F,e)) minus {e}.

    Also covers elements of ⋂F, for which the answer is {∅}.
    """
    u = m.universe
    mx = max_noncovers(m, e)
    cmax = SetFamily(u, tuple(s.complement() for s in mx))
    trans = minimal_transversals(cmax)
    bit = 1 << e
    keep = tuple(s for s in trans if s.mask != bit)
    return SetFamily(u, keep).canonical()


def cmax_from_stems(table: StemTable, e: int) -> SetFamily:
    """cmax(F,e) as mtr(stems(e) ∪ {{e}}); complementing gives max(F,e)."""
    u = table.universe
    edges = list(table.stems_of[e].sets) + [AttrSet(u, 1 << e)]
    return minimal_transversals(SetFamily(u, tuple(edges)))


def minimal_keys(source: ClosedSource) -> SetFamily:
    """All minimal generating sets of E: the minimal transversals of the
    complements of the hyperplanes (the maximal closed sets below E).
    """
    u = source.universe
    mi = meet_irreducibles(source)
    hyper = mi.maximize()
    comp = SetFamily(u, tuple(s.complement() for s in hyper))
    return minimal_transversals(comp)
