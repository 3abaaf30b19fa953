"""
Generate every bounded lattice with n <= 8 elements up to isomorphism.

A bounded lattice is a poset P with a new bottom and top adjoined, so the
generator grows naturally labeled posets on ``n - 2`` inner points: each new
point is placed above an order ideal of the earlier ones and never below
them. Lower bounds of earlier pairs are therefore final once placed, and a
pair without a greatest common lower bound prunes the branch immediately.
Joins are checked on complete posets. Isomorphic copies are removed by a
canonical form: the lexicographically least order matrix over relabelings
that respect a refinement of cheap order invariants.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .errors import BoundExceeded, SchemaError
from .lattice import Lattice, build_lattice, is_frame, is_prelinear, is_semilinear

MAX_SIZE = 8

PREDICATES = (
    "not_prelinear",
    "not_semilinear",
    "prelinear_and_not_semilinear",
    "semilinear_and_not_prelinear",
)


def _check_bound(n):
    if not 2 <= n <= MAX_SIZE:
        raise BoundExceeded(f"lattice size must be between 2 and {MAX_SIZE}, got {n}")


def _ideals(down, k):
    """Down-closed subsets of points ``0..k-1`` as bitmasks."""
    for mask in range(1 << k):
        if all(not (mask >> j) & 1 or (down[j] & ~mask) == 0 for j in range(k)):
            yield mask


def _has_greatest(mask, down_inc):
    """True if the points in ``mask`` are empty or have a greatest element."""
    if not mask:
        return True
    m = mask
    while m:
        low = m & -m
        j = low.bit_length() - 1
        if down_inc[j] & mask == mask:
            return True
        m ^= low
    return False


def _inner_posets(m):
    """Naturally labeled posets on ``m`` points whose pairwise meets exist once bounded."""
    down = [0] * m  # strict down-sets
    down_inc = [0] * m

    def extend(k):
        if k == m:
            yield list(down)
            return
        for ideal in _ideals(down, k):
            down[k] = ideal
            down_inc[k] = ideal | (1 << k)
            if all(_has_greatest(down_inc[k] & down_inc[j], down_inc) for j in range(k)):
                yield from extend(k + 1)
        down[k] = down_inc[k] = 0

    yield from extend(0)


def _joins_exist(down, m):
    up_inc = [(1 << i) for i in range(m)]
    for i in range(m):
        d = down[i]
        for j in range(m):
            if (d >> j) & 1:
                up_inc[j] |= 1 << i
    for i, j in itertools.combinations(range(m), 2):
        common = up_inc[i] & up_inc[j]
        if not common:
            continue
        if not any(up_inc[c] & common == common for c in range(m) if (common >> c) & 1):
            return False
    return True


def _full_order(down, m):
    """Order matrix of the bounded lattice: index 0 bottom, ``m + 1`` top."""
    n = m + 2
    leq = [[False] * n for _ in range(n)]
    for i in range(n):
        leq[0][i] = True
        leq[i][n - 1] = True
        leq[i][i] = True
    for i in range(m):
        for j in range(m):
            if (down[i] >> j) & 1:
                leq[j + 1][i + 1] = True
    return leq


def _canonical(leq):
    """``(code, order)``: least order-matrix code over invariant-respecting relabelings."""
    n = len(leq)
    below = [sum(leq[j][i] for j in range(n)) for i in range(n)]
    above = [sum(leq[i][j] for j in range(n)) for i in range(n)]
    inv = [(below[i], -above[i]) for i in range(n)]
    for _ in range(2):
        inv = [
            (
                inv[i],
                tuple(sorted(inv[j] for j in range(n) if leq[j][i] and j != i)),
                tuple(sorted(inv[j] for j in range(n) if leq[i][j] and j != i)),
            )
            for i in range(n)
        ]
    keys = sorted(set(inv))
    classes = [[i for i in range(n) if inv[i] == key] for key in keys]
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in classes)):
        order = [i for part in parts for i in part]
        code = tuple(leq[a][b] for a in order for b in order)
        if best is None or code < best[0]:
            best = (code, order)
    return best


def canonical_code(L: Lattice) -> tuple:
    """Isomorphism invariant: equal codes iff the lattices are order-isomorphic."""
    E = L.elements
    return _canonical([[L.leq(a, b) for b in E] for a in E])[0]


def isomorphic(L1: Lattice, L2: Lattice) -> bool:
    return len(L1) == len(L2) and canonical_code(L1) == canonical_code(L2)


def _lattice_from_order(leq, order):
    n = len(order)
    labels = ["bot", *(f"e{i}" for i in range(1, n - 1)), "top"] if n > 1 else ["bot"]
    name = {v: labels[k] for k, v in enumerate(order)}
    covers = [
        (name[a], name[b])
        for a in order
        for b in order
        if a != b and leq[a][b] and not any(c not in (a, b) and leq[a][c] and leq[c][b] for c in order)
    ]
    return build_lattice(labels, covers)


def enumerate_lattices(n: int, distributive_only: bool = False) -> Iterator[Lattice]:
    """
    Yield one representative of every isomorphism class of bounded lattices
    on ``n`` elements (distributive ones only if asked), labeled ``bot``,
    ``e1``, ..., ``top`` in canonical order.
    """
    _check_bound(n)
    m = n - 2
    seen = set()
    for down in _inner_posets(m):
        if not _joins_exist(down, m):
            continue
        leq = _full_order(down, m)
        code, order = _canonical(leq)
        if code in seen:
            continue
        seen.add(code)
        L = _lattice_from_order(leq, order)
        if distributive_only and not is_frame(L).holds:
            continue
        yield L


def count_lattices(n: int, distributive_only: bool = False) -> int:
    return sum(1 for _ in enumerate_lattices(n, distributive_only))


def _matches(L, predicate):
    if predicate == "not_prelinear":
        c = is_prelinear(L)
        return (not c.holds), c.witness
    if predicate == "not_semilinear":
        c = is_semilinear(L)
        return (not c.holds), c.witness
    if predicate == "prelinear_and_not_semilinear":
        c = is_semilinear(L)
        return is_prelinear(L).holds and not c.holds, c.witness
    if predicate == "semilinear_and_not_prelinear":
        c = is_prelinear(L)
        return is_semilinear(L).holds and not c.holds, c.witness
    raise SchemaError(f"unknown predicate {predicate!r}; choose from {list(PREDICATES)}")


def search(n: int, predicate: str, distributive_only: bool = False) -> list[tuple[Lattice, tuple]]:
    """All isomorphism classes of size ``n`` satisfying ``predicate``, with witnesses."""
    if predicate not in PREDICATES:
        raise SchemaError(f"unknown predicate {predicate!r}; choose from {list(PREDICATES)}")
    hits = []
    for L in enumerate_lattices(n, distributive_only):
        ok, witness = _matches(L, predicate)
        if ok:
            hits.append((L, witness))
    return hits
