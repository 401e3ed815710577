"""Star products of additive subgroups, the two nilpotency series, ideals, closures."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .core import Brace, CheckReport, UnsupportedStrategy
from .finite import CayleyBrace

DEFAULT_MAX_DEPTH = 10


def _require_table(brace: Brace) -> CayleyBrace:
    if not isinstance(brace, CayleyBrace):
        raise UnsupportedStrategy(f"{brace.name}: series need a finite Cayley-table brace")
    return brace


@dataclass(frozen=True)
class AdditiveSubgroup:
    """A subgroup of ``(A, +)`` stored as sorted element indices."""

    brace: CayleyBrace = field(repr=False, compare=False)
    members: frozenset[int]
    generators: tuple[int, ...] = field(default=(), compare=False)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x) -> bool:
        return self.brace.index(x) in self.members

    def elements(self) -> list:
        elems = self.brace.elements()
        return [elems[i] for i in sorted(self.members)]

    def indices(self) -> list[int]:
        return sorted(self.members)

    @property
    def is_zero(self) -> bool:
        return self.members == {self.brace.zero_index}


def additive_closure(brace: CayleyBrace, generators: Iterable[int]) -> AdditiveSubgroup:
    """Subgroup generated by the given element indices (worklist over cosets)."""
    A = brace._add
    z = brace.zero_index
    members = {z}
    gens = []
    for g in dict.fromkeys(generators):
        if g in members:
            continue
        gens.append(g)
        # H + <g> = union of cosets H + i g until i g falls in H
        new = set(members)
        shift = g
        while shift not in members:
            new.update(A[h][shift] for h in members)
            shift = A[shift][g]
        members = new
    return AdditiveSubgroup(brace, frozenset(members), tuple(gens))


def whole(brace: Brace) -> AdditiveSubgroup:
    b = _require_table(brace)
    return AdditiveSubgroup(b, frozenset(range(b.order())), tuple(range(b.order())))


def zero_subgroup(brace: Brace) -> AdditiveSubgroup:
    b = _require_table(brace)
    return AdditiveSubgroup(b, frozenset({b.zero_index}), ())


def subgroup_of(brace: Brace, elements: Iterable) -> AdditiveSubgroup:
    b = _require_table(brace)
    return additive_closure(b, [b.index(x) for x in elements])


def star_subgroup(brace: Brace, K: AdditiveSubgroup, L: AdditiveSubgroup) -> AdditiveSubgroup:
    """``K * L``: additive closure of ``{x * y : x in K, y in L}``."""
    b = _require_table(brace)
    S = b.star_table
    vals = np.unique(S[np.ix_(K.indices(), L.indices())])
    return additive_closure(b, vals.tolist())


def left_series(brace: Brace, max_depth: int = DEFAULT_MAX_DEPTH) -> list[AdditiveSubgroup]:
    """``A^1 = A``, ``A^{k+1} = A * A^k`` until zero, stabilisation or ``max_depth`` stages."""
    A = whole(brace)
    return _chain(brace, A, lambda cur: star_subgroup(brace, A, cur), max_depth)


def star_series(brace: Brace, max_depth: int = DEFAULT_MAX_DEPTH) -> list[AdditiveSubgroup]:
    """``A^(1) = A``, ``A^(n+1) = A^(n) * A``."""
    A = whole(brace)
    return _chain(brace, A, lambda cur: star_subgroup(brace, cur, A), max_depth)


def _chain(brace, start, step, max_depth):
    stages = [start]
    while len(stages) < max_depth and not stages[-1].is_zero:
        nxt = step(stages[-1])
        if nxt.members == stages[-1].members:
            break
        stages.append(nxt)
    return stages


def _vanishing(stages: list[AdditiveSubgroup]) -> int | None:
    for i, s in enumerate(stages, start=1):
        if s.is_zero:
            return i
    return None


@dataclass
class SeriesReport:
    left: list[AdditiveSubgroup]
    star: list[AdditiveSubgroup]
    max_depth: int

    @property
    def k(self) -> int | None:
        return _vanishing(self.left)

    @property
    def n(self) -> int | None:
        return _vanishing(self.star)

    @property
    def nilpotent(self) -> bool:
        return self.k is not None and self.n is not None

    @property
    def ns_class(self) -> tuple[int, int] | None:
        """``(n, k)`` with ``A^(n) = 0 = A^k`` both least, or None."""
        return (self.n, self.k) if self.nilpotent else None

    def to_dict(self) -> dict:
        return {
            "left_stage_sizes": [len(s) for s in self.left],
            "star_stage_sizes": [len(s) for s in self.star],
            "left_vanishes_at": self.k,
            "star_vanishes_at": self.n,
            "ns_class": list(self.ns_class) if self.nilpotent else None,
            "verdict": "nilpotent" if self.nilpotent else "not nilpotent within bound",
            "max_depth": self.max_depth,
        }


def series_report(brace: Brace, max_depth: int = DEFAULT_MAX_DEPTH) -> SeriesReport:
    return SeriesReport(left_series(brace, max_depth), star_series(brace, max_depth), max_depth)


def classify_NS(brace: Brace, max_depth: int = DEFAULT_MAX_DEPTH) -> tuple[int, int] | None:
    """``(n, k)`` or None when a series does not reach zero within ``max_depth``."""
    return series_report(brace, max_depth).ns_class


def _first_escape(brace: CayleyBrace, L: AdditiveSubgroup, pairs, name) -> CheckReport:
    S = brace._star_list()
    elems = brace.elements()
    examined = 0
    for a, b in pairs:
        examined += 1
        if S[a][b] not in L.members:
            return CheckReport(name, False, (elems[a], elems[b]), name, examined)
    return CheckReport(name, True, None, None, examined)


def is_left_ideal(brace: Brace, L: AdditiveSubgroup) -> CheckReport:
    """``a * b`` in L for all a in A, b in L; witness is the first ``(a, b)``."""
    b = _require_table(brace)
    pairs = ((a, y) for a in range(b.order()) for y in L.indices())
    return _first_escape(b, L, pairs, "left_ideal")


def is_ideal(brace: Brace, L: AdditiveSubgroup) -> CheckReport:
    """Left ideal, and also ``z * a`` in L for z in L, a in A."""
    b = _require_table(brace)
    rep = is_left_ideal(b, L)
    if not rep.passed:
        rep.name = "ideal"
        return rep
    pairs = ((z, a) for z in L.indices() for a in range(b.order()))
    out = _first_escape(b, L, pairs, "ideal")
    out.examined += rep.examined
    return out


def subbrace_closure(brace: Brace, S: Iterable) -> set:
    """Carrier of ``br(S)``: closure under +, -, product and inverse, always containing 0."""
    b = _require_table(brace)
    A, M = b._add, b._mul
    neg, inv = b._neg, b._inv
    members = [b.zero_index]
    seen = {b.zero_index}
    queue = [b.index(x) for x in S]
    while queue:
        x = queue.pop()
        if x in seen:
            continue
        seen.add(x)
        members.append(x)
        found = [neg[x], inv[x]]
        for y in members:
            found += (A[x][y], M[x][y], M[y][x])
        queue.extend(f for f in found if f not in seen)
    elems = b.elements()
    return {elems[i] for i in seen}
