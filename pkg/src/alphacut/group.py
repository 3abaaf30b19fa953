"""
Fuzzy groups on fuzzy carriers: a graded equality ``gr(x1 + x2 ~ x3)`` with
values in the lattice replaces the crisp multiplication table.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Mapping

from .errors import (
    AssociativityWitness,
    BaseMismatch,
    EmptyCutSupport,
    GroupError,
    InternalInconsistency,
    LatticeMismatch,
    NoIdentity,
    NoInverse,
    SchemaError,
    UnknownElement,
    UnknownPoint,
)
from .fuzzyset import FuzzySet, fuzzy_alpha_cut
from .lattice import Check


@dataclass(frozen=True)
class GradedOpTable:
    """Grades of ``x1 (+) x2 ~ x3``; triples not listed have grade bottom."""

    base: tuple
    lattice: object
    grades: Mapping = field(default_factory=dict)

    def __post_init__(self):
        points = set(self.base)
        for triple, g in self.grades.items():
            if len(triple) != 3 or not set(triple) <= points:
                raise UnknownPoint(f"graded triple {triple!r} uses unknown points")
            if g not in self.lattice:
                raise UnknownElement(f"grade {g!r} is not a lattice element")

    def __call__(self, x1, x2, x3):
        return self.grades.get((x1, x2, x3), self.lattice.bottom)

    def __hash__(self):
        return hash((self.base, tuple(sorted(self.grades.items(), key=repr))))

    def to_list(self) -> list:
        bot = self.lattice.bottom
        return [
            {"lhs": [x1, x2], "rhs": x3, "grade": g}
            for (x1, x2, x3), g in self.grades.items()
            if g != bot
        ]


@dataclass
class FuzzyGroup:
    carrier: FuzzySet
    op: GradedOpTable
    identity: object
    inverses: dict
    identity_candidates: tuple = ()
    inverse_candidates: dict = field(default_factory=dict)

    @property
    def support(self):
        return self.carrier.support

    def to_dict(self) -> dict:
        return {
            "support": list(self.support),
            "identity": self.identity,
            "inverses": dict(self.inverses),
        }


def _check_space(A: FuzzySet, gr: GradedOpTable):
    if A.base != gr.base:
        raise BaseMismatch("operation table and carrier use different bases")
    if A.lattice != gr.lattice:
        raise LatticeMismatch("operation table and carrier use different lattices")


def check_fuzzy_binary_op(A: FuzzySet, gr: GradedOpTable) -> Check:
    """
    Closure: every grade is below the memberships of all three points.
    Functionality: each support pair with a nonzero joint membership has
    exactly one support target at full grade and grade bottom elsewhere.
    """
    _check_space(A, gr)
    L = A.lattice
    X = A.base
    for x1, x2, x3 in itertools.product(X, repeat=3):
        bound = L.meet(L.meet(A(x1), A(x2)), A(x3))
        if not L.leq(gr(x1, x2, x3), bound):
            return Check(False, ("closure", x1, x2, x3))
    supp = A.support
    for a1, a2 in itertools.product(supp, repeat=2):
        full = L.meet(A(a1), A(a2))
        if full == L.bottom:
            continue
        hits = [a for a in supp if gr(a1, a2, a) == full]
        stray = [a for a in supp if gr(a1, a2, a) not in (full, L.bottom)]
        if len(hits) != 1 or stray:
            return Check(False, ("functionality", a1, a2, tuple(hits)))
    return Check(True)


def _full_targets(A, gr, supp):
    L = A.lattice
    return {
        (x, y): frozenset(z for z in supp if gr(x, y, z) == L.meet(A(x), A(y)))
        for x, y in itertools.product(supp, repeat=2)
    }


def check_fuzzy_group(A: FuzzySet, gr: GradedOpTable) -> FuzzyGroup:
    """
    Verify identity, inverse and graded associativity laws on the support.

    Associativity is read as stated: every choice of intermediates meeting
    the hypotheses must lead to the same product. Raises :class:`NoIdentity`,
    :class:`NoInverse` or :class:`AssociativityWitness` on failure.
    """
    _check_space(A, gr)
    L = A.lattice
    supp = A.support
    if not supp:
        raise GroupError("carrier has empty support")

    def law(x, y, z):
        return gr(x, y, z) == L.meet(A(x), A(y))

    identities = tuple(e for e in supp if all(law(a, e, a) and gr(e, a, a) == gr(a, e, a) for a in supp))
    if not identities:
        raise NoIdentity("no support element acts as identity")
    e = identities[0]

    inverse_candidates = {}
    for a in supp:
        cands = tuple(
            b for b in supp if A(a) == A(b) and law(a, b, e) and gr(b, a, e) == gr(a, b, e)
        )
        if not cands:
            raise NoInverse(f"{a!r} has no inverse", witness=(a,))
        inverse_candidates[a] = cands

    full = _full_targets(A, gr, supp)
    for a1, a2, a3 in itertools.product(supp, repeat=3):
        left = {a for b1 in full[a1, a2] for a in full[b1, a3]}
        right = {b for b2 in full[a2, a3] for b in full[a1, b2]}
        if left and right and (len(left) > 1 or left != right):
            raise AssociativityWitness(
                f"({a1!r} + {a2!r}) + {a3!r} and {a1!r} + ({a2!r} + {a3!r}) disagree",
                witness=(a1, a2, a3),
            )

    for a in supp:
        if not L.leq(A(a), A(e)):
            raise InternalInconsistency(f"membership of {a!r} exceeds that of the identity")
    return FuzzyGroup(
        A,
        gr,
        e,
        {a: c[0] for a, c in inverse_candidates.items()},
        identities,
        inverse_candidates,
    )


def restrict_op(gr: GradedOpTable, B: FuzzySet) -> GradedOpTable:
    """``gr'(x1,x2,x3) = gr(x1,x2,x3) & B(x1) & B(x2) & B(x3)``."""
    L = gr.lattice
    grades = {}
    for (x1, x2, x3), g in gr.grades.items():
        v = L.meet_all((g, B(x1), B(x2), B(x3)))
        if v != L.bottom:
            grades[x1, x2, x3] = v
    return GradedOpTable(gr.base, L, grades)


def restrict_to_cut(G: FuzzyGroup, alpha) -> FuzzyGroup:
    """Restrict ``G`` to its fuzzy ``alpha``-cut and re-verify the group laws."""
    cut = fuzzy_alpha_cut(G.carrier, alpha)
    if not cut.support:
        raise EmptyCutSupport(f"the {alpha!r}-cut has empty support")
    op = restrict_op(G.op, cut)
    ok = check_fuzzy_binary_op(cut, op)
    if not ok:
        raise InternalInconsistency(f"restricted operation is not a fuzzy operation: {ok.witness}")
    try:
        return check_fuzzy_group(cut, op)
    except GroupError as exc:
        raise InternalInconsistency(f"restriction to the cut is not a fuzzy group: {exc}") from exc


# ---------------------------------------------------------------------------
# classical groups and random fuzzy groups built on them


def _cyclic(n):
    return list(range(n)), lambda a, b: (a + b) % n


def _klein():
    return [0, 1, 2, 3], lambda a, b: a ^ b


def _s3():
    perms = list(itertools.permutations(range(3)))
    return list(range(6)), lambda a, b: perms.index(tuple(perms[a][perms[b][i]] for i in range(3)))


CLASSICAL_GROUPS = {
    "C2": lambda: _cyclic(2),
    "C3": lambda: _cyclic(3),
    "C4": lambda: _cyclic(4),
    "V4": _klein,
    "C5": lambda: _cyclic(5),
    "C6": lambda: _cyclic(6),
    "S3": _s3,
}


def classical_group(name):
    """``(points, mul)`` for a named group; points are ``g0, g1, ...``, ``g0`` the identity."""
    try:
        elems, mul = CLASSICAL_GROUPS[name]()
    except KeyError:
        raise SchemaError(f"unknown classical group {name!r}") from None
    labels = [f"g{i}" for i in elems]
    table = {(labels[a], labels[b]): labels[mul(a, b)] for a in elems for b in elems}
    return labels, table


def embed_group(labels, table, membership: Mapping, lattice, extra_points=()) -> tuple[FuzzySet, GradedOpTable]:
    """Fuzzy carrier and graded table with ``gr(a,b,ab) = A(a) & A(b)``."""
    base = tuple(labels) + tuple(extra_points)
    values = {**{x: lattice.bottom for x in extra_points}, **membership}
    A = FuzzySet.from_mapping(base, lattice, values)
    grades = {}
    for (a, b), c in table.items():
        g = lattice.meet(A(a), A(b))
        if g != lattice.bottom:
            grades[a, b, c] = g
    return A, GradedOpTable(base, lattice, grades)


def random_fuzzy_group(lattice, rng: random.Random, group: str | None = None):
    """
    A valid fuzzy group over ``lattice``: membership values drawn from the
    filter above a random nonzero element, then raised until
    ``A(ab) >= A(a) & A(b)`` and ``A(a) == A(a^-1)``. The support is the
    whole group or a random subgroup; an extra point of membership bottom is
    added sometimes.
    """
    name = group or rng.choice(sorted(CLASSICAL_GROUPS))
    labels, table = classical_group(name)
    nonzero = [x for x in lattice.elements if x != lattice.bottom]
    floor = rng.choice(nonzero)
    pool = [x for x in lattice.elements if lattice.leq(floor, x)]

    support = set(labels)
    if rng.random() < 0.4:
        support = {labels[0]}
        frontier = [rng.choice(labels)]
        while frontier:
            g = frontier.pop()
            if g in support:
                continue
            support.add(g)
            frontier.extend(table[g, h] for h in list(support))
            frontier.extend(table[h, g] for h in list(support))
    inverse = {a: next(b for b in labels if table[a, b] == labels[0]) for a in labels}

    value = {a: rng.choice(pool) for a in support}
    changed = True
    while changed:
        changed = False
        for a in support:
            v = lattice.join(value[a], value[inverse[a]])
            for b in support:
                c = table[a, b]
                w = lattice.join(value[c], lattice.meet(value[a], value[b]))
                if w != value[c]:
                    value[c], changed = w, True
            if v != value[a]:
                value[a], changed = v, True
    membership = {a: value.get(a, lattice.bottom) for a in labels}
    extra = ("z",) if rng.random() < 0.3 else ()
    return embed_group(labels, table, membership, lattice, extra)
