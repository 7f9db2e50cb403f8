"""Forward-chaining closure, family-intersection closure, quasiclosure,
semantic consequence, and lectic enumeration of closed sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Union

from .core import (
    AttrSet,
    ImplicationSet,
    Implication,
    SetFamily,
    Universe,
    bits,
    exhaustive_bound,
    submasks,
)
from .errors import BoundExceededError, UniverseMismatchError

#: switch to column-wise premise testing when |sigma| / |E| exceeds this
VERTICAL_THRESHOLD = 4

ClosureSource = Union[ImplicationSet, SetFamily, "Closure"]


def _close_rowwise(pairs: list[tuple[int, int]], mask: int) -> int:
    """Least fixpoint by repeated row-wise scans; fired rules drop out."""
    pending = range(len(pairs))
    while True:
        new = mask
        nxt = []
        for i in pending:
            prem, conc = pairs[i]
            if prem & ~mask == 0:
                new |= conc
            else:
                nxt.append(i)
        if new == mask:
            return mask
        mask = new
        pending = nxt


def _close_columnwise(
    n: int, pairs: list[tuple[int, int]], cols: list[int], mask: int
) -> int:
    """Least fixpoint testing premises column-by-column (vertical layout).

    cols[p] holds the rule indices whose premise contains position p, so the
    rules blocked at S are the union of cols[p] over p outside S.
    """
    all_rules = (1 << len(pairs)) - 1
    fired = 0
    while True:
        blocked = 0
        out = ~mask
        for p in range(n):
            if out >> p & 1:
                blocked |= cols[p]
        ready = all_rules & ~blocked & ~fired
        if not ready:
            return mask
        new = mask
        for i in bits(ready):
            new |= pairs[i][1]
        fired |= ready
        if new == mask:
            return mask
        mask = new


class Closure:
    """Memoizing wrapper around a closure operator.

    The memo is a benign interior cache (idempotent writes); everything else
    is immutable, so instances are safe to share across threads.
    """

    __slots__ = ("universe", "_fn", "_memo")

    def __init__(self, universe: Universe, fn: Callable[[int], int]):
        self.universe = universe
        self._fn = fn
        self._memo: dict[int, int] = {}

    def of_mask(self, mask: int) -> int:
        memo = self._memo
        got = memo.get(mask)
        if got is None:
            got = memo[mask] = self._fn(mask)
        return got

    def __call__(self, s: AttrSet) -> AttrSet:
        if s.universe != self.universe:
            raise UniverseMismatchError("set outside the operator's universe")
        return AttrSet(self.universe, self.of_mask(s.mask))

    @classmethod
    def from_sigma(cls, sigma: ImplicationSet, layout: str = "auto") -> Closure:
        n = sigma.universe.size
        pairs = sigma.mask_pairs()
        if layout == "auto":
            layout = "column" if len(pairs) > VERTICAL_THRESHOLD * n else "row"
        if layout == "row":
            fn = lambda mask: _close_rowwise(pairs, mask)
        elif layout == "column":
            cols = [0] * n
            for i, (prem, _) in enumerate(pairs):
                for p in bits(prem):
                    cols[p] |= 1 << i
            fn = lambda mask: _close_columnwise(n, pairs, cols, mask)
        else:
            raise ValueError(f"unknown layout {layout!r}")
        return cls(sigma.universe, fn)

    @classmethod
    def from_family(cls, family: SetFamily) -> Closure:
        full = family.universe.full_mask
        ms = family.masks()

        def fn(mask: int) -> int:
            acc = full
            for m in ms:
                if mask & ~m == 0:
                    acc &= m
            return acc

        return cls(family.universe, fn)

    @classmethod
    def wrap(cls, source: ClosureSource, layout: str = "auto") -> Closure:
        if isinstance(source, Closure):
            return source
        if isinstance(source, ImplicationSet):
            return cls.from_sigma(source, layout)
        if isinstance(source, SetFamily):
            return cls.from_family(source)
        raise TypeError(f"not a closure source: {source!r}")


@dataclass(frozen=True, slots=True)
class ClosureTrace:
    """The chain S, S', S'', ... ending with the repeated fixpoint."""

    rounds: tuple[AttrSet, ...]

    @property
    def closure(self) -> AttrSet:
        return self.rounds[-1]


def step(sigma: ImplicationSet, s: AttrSet) -> AttrSet:
    """One forward-chaining round: S plus the conclusions of premises inside S."""
    if s.universe != sigma.universe:
        raise UniverseMismatchError("set and family in different universes")
    mask = s.mask
    new = mask
    for prem, conc in sigma.mask_pairs():
        if prem & ~mask == 0:
            new |= conc
    return AttrSet(s.universe, new)


def close(sigma: ImplicationSet, s: AttrSet, layout: str = "auto") -> AttrSet:
    """Forward-chaining closure of s under sigma.

    Row-wise and column-wise (vertical layout) evaluation are bit-identical;
    layout only selects the internal loop shape.
    """
    return Closure.from_sigma(sigma, layout)(s)


def close_trace(sigma: ImplicationSet, s: AttrSet) -> ClosureTrace:
    rounds = [s]
    cur = s
    while True:
        nxt = step(sigma, cur)
        rounds.append(nxt)
        if nxt.mask == cur.mask:
            return ClosureTrace(tuple(rounds))
        cur = nxt


def close_family(family: SetFamily, s: AttrSet) -> AttrSet:
    """Intersection of family members containing s; E when none does."""
    return Closure.from_family(family)(s)


def is_closed(sigma: ImplicationSet, s: AttrSet) -> bool:
    """True iff every implication with premise inside s concludes inside s."""
    mask = s.mask
    for prem, conc in sigma.mask_pairs():
        if prem & ~mask == 0 and conc & ~mask:
            return False
    return True


def entails(sigma: ImplicationSet, query: Implication) -> bool:
    """True iff the conclusion of query lies in the closure of its premise."""
    cl = Closure.from_sigma(sigma).of_mask(query.premise.mask)
    return query.conclusion.mask & ~cl == 0


def equivalent(sigma1: ImplicationSet, sigma2: ImplicationSet) -> bool:
    """True iff the two families induce the same closure operator."""
    if sigma1.universe != sigma2.universe:
        raise UniverseMismatchError("families in different universes")
    c1 = Closure.from_sigma(sigma1)
    c2 = Closure.from_sigma(sigma2)
    for imp in sigma2:
        if imp.conclusion.mask & ~c1.of_mask(imp.premise.mask):
            return False
    for imp in sigma1:
        if imp.conclusion.mask & ~c2.of_mask(imp.premise.mask):
            return False
    return True


def quasiclosure(
    source: ClosureSource, s: AttrSet, bound: int | None = None
) -> AttrSet:
    """Least fixpoint of S° = S ∪ ⋃{c(U) : U ⊆ S, c(U) ≠ c(S)}.

    Quantifies over all subsets of the current set, so it refuses when the
    set grows beyond the exhaustive bound.
    """
    c = Closure.wrap(source)
    if s.universe != c.universe:
        raise UniverseMismatchError("set outside the operator's universe")
    limit = exhaustive_bound() if bound is None else bound
    cur = s.mask
    while True:
        if cur.bit_count() > limit:
            raise BoundExceededError(
                f"quasiclosure needs all subsets of a {cur.bit_count()}-element set"
                f" (bound {limit})"
            )
        c_cur = c.of_mask(cur)
        acc = cur
        for sub in submasks(cur):
            c_sub = c.of_mask(sub)
            if c_sub != c_cur:
                acc |= c_sub
        if acc == cur:
            return AttrSet(s.universe, cur)
        cur = acc


def enumerate_closed_lectic(source: ClosureSource) -> Iterator[AttrSet]:
    """Yield every closed set exactly once, in lectic order.

    Lectic order is taken on positions with the smallest position most
    significant (the usual NextClosure convention).
    """
    c = Closure.wrap(source)
    n = c.universe.size
    cur = c.of_mask(0)
    while True:
        yield AttrSet(c.universe, cur)
        nxt = _next_closed(c, n, cur)
        if nxt is None:
            return
        cur = nxt


def _next_closed(c: Closure, n: int, mask: int) -> int | None:
    for i in range(n - 1, -1, -1):
        bit = 1 << i
        if mask & bit:
            mask &= ~bit
        else:
            closed = c.of_mask(mask | bit)
            if (closed & ~mask) & (bit - 1) == 0:
                return closed
    return None
