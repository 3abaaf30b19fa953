"""L-topological spaces whose carrier is itself a fuzzy set, and cut subspaces."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import BaseMismatch, InternalInconsistency, InvalidSpace, LatticeMismatch
from .fuzzyset import FuzzySet, empty_like, fs_intersect, fs_leq, fs_union, fs_union_all, fuzzy_alpha_cut
from .lattice import Check


@dataclass(frozen=True)
class LTopSpace:
    carrier: FuzzySet
    opens: tuple

    def to_dict(self) -> dict:
        return {"carrier": self.carrier.to_dict(), "opens": [T.membership for T in self.opens]}


def _dedup(sets):
    out, seen = [], set()
    for T in sets:
        if T not in seen:
            seen.add(T)
            out.append(T)
    return tuple(out)


def check_topology(space: LTopSpace, subset_bound: int = 6, samples: int = 512, seed: int = 0) -> Check:
    """
    Verify the open-set conditions. Failures name the condition:
    ``("subset", i)`` for an open not inside the carrier, ``("condition 1", ...)``,
    ``("condition 2", i, j)`` or ``("condition 3", indices)``.

    Closure under arbitrary unions is checked over every subfamily when
    ``len(opens) <= subset_bound`` and over seeded samples otherwise; binary
    unions are always checked exhaustively (on a finite family they suffice).
    """
    A, opens = space.carrier, list(space.opens)
    for T in opens:
        if T.base != A.base:
            raise BaseMismatch("open set lives on a different base than the carrier")
        if T.lattice != A.lattice:
            raise LatticeMismatch("open set takes values in a different lattice")
    for i, T in enumerate(opens):
        if not fs_leq(T, A):
            return Check(False, ("subset", i))
    members = set(opens)
    if empty_like(A) not in members:
        return Check(False, ("condition 1", "empty set missing"))
    if A not in members:
        return Check(False, ("condition 1", "carrier missing"))
    for (i, S), (j, T) in itertools.combinations(enumerate(opens), 2):
        if fs_intersect(S, T) not in members:
            return Check(False, ("condition 2", i, j))
    for (i, S), (j, T) in itertools.combinations(enumerate(opens), 2):
        if fs_union(S, T) not in members:
            return Check(False, ("condition 3", (i, j)))
    n = len(opens)
    if n <= subset_bound:
        subfamilies = itertools.chain.from_iterable(itertools.combinations(range(n), r) for r in range(n + 1))
    else:
        rng = random.Random(seed)
        subfamilies = (tuple(i for i in range(n) if rng.random() < 0.5) for _ in range(samples))
    for idx in subfamilies:
        if fs_union_all((opens[i] for i in idx), A.base, A.lattice) not in members:
            return Check(False, ("condition 3", idx))
    return Check(True)


def subspace_via_cut(space: LTopSpace, alpha, **kwargs) -> LTopSpace:
    """Carrier cut at ``alpha``; opens are the cut intersected with each open."""
    ok = check_topology(space, **kwargs)
    if not ok:
        raise InvalidSpace(f"input is not an L-topological space: {ok.witness}")
    cut = fuzzy_alpha_cut(space.carrier, alpha)
    sub = LTopSpace(cut, _dedup(fs_intersect(cut, T) for T in space.opens))
    result = check_topology(sub, **kwargs)
    if not result:
        raise InternalInconsistency(f"cut subspace fails the open-set conditions: {result.witness}")
    return sub


def generated_topology(carrier: FuzzySet, generators) -> LTopSpace:
    """Smallest family containing ``generators``, the empty set and the carrier, closed under meets and joins."""
    opens = [empty_like(carrier), carrier]
    for G in generators:
        opens.append(fs_intersect(G, carrier))
    opens = list(_dedup(opens))
    seen = set(opens)
    i = 0
    while i < len(opens):
        for j in range(i):
            for H in (fs_intersect(opens[i], opens[j]), fs_union(opens[i], opens[j])):
                if H not in seen:
                    seen.add(H)
                    opens.append(H)
        i += 1
    return LTopSpace(carrier, tuple(opens))
