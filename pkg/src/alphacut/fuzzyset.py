"""L-fuzzy sets over finite base sets: cuts, pointwise algebra and images."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .errors import BaseMismatch, LatticeMismatch, SchemaError, UnknownElement, UnknownPoint


@dataclass(frozen=True)
class FuzzySet:
    """
    A membership map from a finite ``base`` into a lattice.

    ``values[i]`` is the membership of ``base[i]``. Equality is extensional:
    same base, same lattice, same values.
    """

    base: tuple
    lattice: object
    values: tuple

    def __post_init__(self):
        if len(self.base) != len(self.values):
            raise SchemaError("membership must be defined on every base point")
        if len(set(self.base)) != len(self.base):
            raise SchemaError("base points must be distinct")
        for v in self.values:
            if v not in self.lattice:
                raise UnknownElement(f"membership value {v!r} is not a lattice element")

    @classmethod
    def from_mapping(cls, base: Sequence, lattice, membership: Mapping) -> FuzzySet:
        missing = [x for x in base if x not in membership]
        if missing:
            raise SchemaError(f"membership missing for points {missing!r}")
        extra = [x for x in membership if x not in set(base)]
        if extra:
            raise UnknownPoint(f"membership given for unknown points {extra!r}")
        return cls(tuple(base), lattice, tuple(membership[x] for x in base))

    @classmethod
    def constant(cls, base: Sequence, lattice, value) -> FuzzySet:
        return cls(tuple(base), lattice, (value,) * len(base))

    def __call__(self, x):
        try:
            return self.values[self.base.index(x)]
        except ValueError:
            raise UnknownPoint(f"{x!r} is not a base point") from None

    @property
    def membership(self) -> dict:
        return dict(zip(self.base, self.values))

    @property
    def support(self) -> tuple:
        bot = self.lattice.bottom
        return tuple(x for x, v in zip(self.base, self.values) if v != bot)

    def is_empty(self) -> bool:
        return not self.support

    def to_dict(self) -> dict:
        return {"base": list(self.base), "membership": self.membership}

    def __repr__(self):
        inner = ", ".join(f"{x!r}: {v!r}" for x, v in zip(self.base, self.values))
        return f"FuzzySet({{{inner}}})"


@dataclass(frozen=True)
class CrispSet:
    base: tuple
    members: frozenset

    def __post_init__(self):
        if not self.members <= set(self.base):
            raise UnknownPoint("crisp set members must lie in the base")

    def __contains__(self, x):
        return x in self.members

    def sorted_members(self) -> list:
        return [x for x in self.base if x in self.members]


@dataclass(frozen=True)
class PointMap:
    """A total map between finite bases."""

    source: tuple
    target: tuple
    mapping: Mapping

    def __post_init__(self):
        target = set(self.target)
        for x in self.source:
            if x not in self.mapping:
                raise SchemaError(f"point map undefined at {x!r}")
            if self.mapping[x] not in target:
                raise UnknownPoint(f"{x!r} maps outside the target base")

    def __call__(self, x):
        return self.mapping[x]

    def __hash__(self):
        return hash((self.source, self.target, tuple(self.mapping[x] for x in self.source)))

    @classmethod
    def identity(cls, base: Sequence) -> PointMap:
        base = tuple(base)
        return cls(base, base, {x: x for x in base})

    def then(self, g: PointMap) -> PointMap:
        """The composite ``g . self``."""
        if self.target != g.source:
            raise BaseMismatch("composition needs matching intermediate bases")
        return PointMap(self.source, g.target, {x: g(self(x)) for x in self.source})


def compose(g: PointMap, f: PointMap) -> PointMap:
    """``g . f``: apply ``f`` first."""
    return f.then(g)


def _same_space(A: FuzzySet, B: FuzzySet):
    if A.base != B.base:
        raise BaseMismatch("fuzzy sets live on different bases")
    if A.lattice != B.lattice:
        raise LatticeMismatch("fuzzy sets take values in different lattices")


def characteristic(C: CrispSet, lattice) -> FuzzySet:
    """Top on members, bottom elsewhere."""
    return FuzzySet(C.base, lattice, tuple(lattice.top if x in C.members else lattice.bottom for x in C.base))


def empty_like(A: FuzzySet) -> FuzzySet:
    return FuzzySet.constant(A.base, A.lattice, A.lattice.bottom)


def alpha_cut(A: FuzzySet, alpha) -> CrispSet:
    """Points whose membership is at least ``alpha``."""
    leq = A.lattice.leq
    if alpha not in A.lattice:
        raise UnknownElement(f"{alpha!r} is not a lattice element")
    return CrispSet(A.base, frozenset(x for x, v in zip(A.base, A.values) if leq(alpha, v)))


def fuzzy_alpha_cut(A: FuzzySet, alpha) -> FuzzySet:
    """Keep memberships at least ``alpha``; everything else drops to bottom."""
    L = A.lattice
    if alpha not in L:
        raise UnknownElement(f"{alpha!r} is not a lattice element")
    return FuzzySet(A.base, L, tuple(v if L.leq(alpha, v) else L.bottom for v in A.values))


def fs_intersect(A: FuzzySet, B: FuzzySet) -> FuzzySet:
    _same_space(A, B)
    meet = A.lattice.meet
    return FuzzySet(A.base, A.lattice, tuple(meet(a, b) for a, b in zip(A.values, B.values)))


def fs_union(A: FuzzySet, B: FuzzySet) -> FuzzySet:
    _same_space(A, B)
    join = A.lattice.join
    return FuzzySet(A.base, A.lattice, tuple(join(a, b) for a, b in zip(A.values, B.values)))


def fs_union_all(family: Iterable[FuzzySet], base: Sequence, lattice) -> FuzzySet:
    """Pointwise join of ``family``; the empty union is the empty fuzzy set."""
    result = FuzzySet.constant(base, lattice, lattice.bottom)
    for F in family:
        result = fs_union(result, F)
    return result


def fs_intersect_all(family: Iterable[FuzzySet], base: Sequence, lattice) -> FuzzySet:
    result = FuzzySet.constant(base, lattice, lattice.top)
    for F in family:
        result = fs_intersect(result, F)
    return result


def fs_leq(A: FuzzySet, B: FuzzySet) -> bool:
    """Pointwise inclusion ``A <= B``."""
    _same_space(A, B)
    leq = A.lattice.leq
    return all(leq(a, b) for a, b in zip(A.values, B.values))


def fs_image(f: PointMap, A: FuzzySet) -> FuzzySet:
    """Image on ``f.target``: join of the memberships over each fiber."""
    if f.source != A.base:
        raise BaseMismatch("map source differs from the fuzzy set's base")
    L = A.lattice
    return FuzzySet(
        f.target,
        L,
        tuple(L.join_all(v for x, v in zip(A.base, A.values) if f(x) == y) for y in f.target),
    )


def cut_family(A: FuzzySet) -> list[FuzzySet]:
    """
    Distinct fuzzy alpha-cuts of ``A`` over every lattice element, in lattice
    element order. The bottom cut is ``A`` itself and always comes first.
    """
    L = A.lattice
    if not L.is_finite:
        # on a chain of floats only the membership values matter as thresholds
        thresholds = [L.bottom, *sorted(set(A.values)), L.top]
    else:
        thresholds = [L.bottom, *(a for a in L.elements if a != L.bottom)]
    family, seen = [], set()
    for alpha in thresholds:
        cut = fuzzy_alpha_cut(A, alpha)
        if cut not in seen:
            seen.add(cut)
            family.append(cut)
    return family


def unit_interval_set(points: Sequence[float], membership: Callable[[float], float]) -> FuzzySet:
    """Sample ``membership`` at finitely many ``points`` into a ``[0, 1]``-valued set."""
    from .lattice import UNIT_INTERVAL

    return FuzzySet(tuple(points), UNIT_INTERVAL, tuple(float(membership(x)) for x in points))
