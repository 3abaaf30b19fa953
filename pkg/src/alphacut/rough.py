"""Approximation spaces with exact rational rough membership."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BadParameters, SchemaError, UnknownPoint


@dataclass(frozen=True)
class ApproximationSpace:
    universe: tuple
    partition: tuple

    def __post_init__(self):
        seen = []
        for block in self.partition:
            if not block:
                raise SchemaError("partition blocks must be nonempty")
            seen.extend(block)
        if len(seen) != len(set(seen)):
            raise SchemaError("partition blocks overlap")
        if set(seen) != set(self.universe) or len(self.universe) != len(set(self.universe)):
            raise SchemaError("partition must cover the universe exactly")

    @classmethod
    def from_blocks(cls, universe: Sequence, blocks: Iterable[Iterable]) -> ApproximationSpace:
        return cls(tuple(universe), tuple(tuple(b) for b in blocks))

    def block_of(self, x) -> tuple:
        for block in self.partition:
            if x in block:
                return block
        raise UnknownPoint(f"{x!r} is not in the universe")

    def _subset(self, A) -> frozenset:
        A = frozenset(A)
        unknown = A - set(self.universe)
        if unknown:
            raise UnknownPoint(f"points {sorted(map(str, unknown))} are not in the universe")
        return A


@dataclass(frozen=True)
class RoughMembership:
    target: frozenset
    values: dict

    def __call__(self, x) -> Fraction:
        return self.values[x]


def parse_threshold(value) -> Fraction:
    """Exact rational from ``"2/3"``, ``"0.6"``, an int or a Fraction."""
    if isinstance(value, float):
        raise BadParameters("pass thresholds as strings or Fractions so they stay exact")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError):
        raise BadParameters(f"cannot read {value!r} as a rational threshold") from None


def rough_membership(S: ApproximationSpace, A) -> RoughMembership:
    """``|[x] & A| / |[x]|`` for every point."""
    A = S._subset(A)
    values = {}
    for block in S.partition:
        mu = Fraction(sum(1 for y in block if y in A), len(block))
        for x in block:
            values[x] = mu
    return RoughMembership(A, {x: values[x] for x in S.universe})


def pawlak_approx(S: ApproximationSpace, A) -> tuple[frozenset, frozenset]:
    A = S._subset(A)
    lower, upper = set(), set()
    for block in S.partition:
        if set(block) <= A:
            lower.update(block)
        if A.intersection(block):
            upper.update(block)
    return frozenset(lower), frozenset(upper)


def _unit(value, name):
    if not 0 <= value <= 1:
        raise BadParameters(f"{name} must lie in [0, 1]")


def prob_approx(S: ApproximationSpace, A, alpha, beta) -> tuple[frozenset, frozenset]:
    """Lower: ``mu >= alpha``. Upper: ``mu > beta`` (strict). Needs ``beta < alpha``."""
    alpha, beta = parse_threshold(alpha), parse_threshold(beta)
    _unit(alpha, "alpha")
    _unit(beta, "beta")
    if not beta < alpha:
        raise BadParameters("probabilistic approximation needs 0 <= beta < alpha <= 1")
    mu = rough_membership(S, A)
    lower = frozenset(x for x in S.universe if mu(x) >= alpha)
    upper = frozenset(x for x in S.universe if mu(x) > beta)
    return lower, upper


def fuzzy_approx(S: ApproximationSpace, A, alpha, beta) -> tuple[dict, dict]:
    """Keep ``mu(x)`` where it reaches the threshold, else 0; ``>=`` on both sides."""
    alpha, beta = parse_threshold(alpha), parse_threshold(beta)
    _unit(alpha, "alpha")
    _unit(beta, "beta")
    if beta > alpha:
        raise BadParameters("fuzzy approximation needs 0 <= beta <= alpha <= 1")
    mu = rough_membership(S, A)
    lower = {x: mu(x) if mu(x) >= alpha else Fraction(0) for x in S.universe}
    upper = {x: mu(x) if mu(x) >= beta else Fraction(0) for x in S.universe}
    return lower, upper


def set_partitions(items: Sequence):
    """Every partition of ``items`` into nonempty blocks (restricted growth order)."""
    items = list(items)
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[head], *part]
        for i in range(len(part)):
            yield [*part[:i], [head, *part[i]], *part[i + 1 :]]
