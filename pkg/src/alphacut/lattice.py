"""
Finite bounded lattices built from a Hasse diagram, plus the two implications
used throughout the package and the prelinear/semilinear classifiers.

A finite lattice is complete, and every join over a subset is a finite fold
of binary joins. So the frame law ``x & join(Y) == join(x & y for y in Y)``
reduces, by induction on ``|Y|``, to binary distributivity
``a & (b | c) == (a & b) | (a & c)`` (the empty case gives ``x & bot == bot``).
That is what :func:`is_frame` checks.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from numbers import Real
from typing import Hashable, Iterable, NamedTuple, Sequence

from .errors import CycleDetected, NotAFrame, NotALattice, SchemaError, Unbounded, UnknownElement

Label = Hashable


class Check(NamedTuple):
    """Outcome of a yes/no property test; ``witness`` is set iff it fails."""

    holds: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.holds


class Lattice:
    """
    An immutable finite bounded lattice.

    Use :func:`build_lattice` to construct one. Elements keep their input
    order, which is the order every exhaustive check walks, so witnesses are
    reproducible.
    """

    is_finite = True

    def __init__(self, elements, covers, leq, meet_table, join_table, bottom, top):
        self.elements = elements
        self.covers = covers
        self._index = {x: i for i, x in enumerate(elements)}
        self._leq = leq
        self._meet = meet_table
        self._join = join_table
        self.bottom = bottom
        self.top = top
        self._hash = hash((elements, leq))

    def __repr__(self):
        return f"Lattice({list(self.elements)!r})"

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        try:
            return x in self._index
        except TypeError:
            return False

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        if self is other:
            return True
        return self._hash == other._hash and self.elements == other.elements and self._leq == other._leq

    def __hash__(self):
        return self._hash

    def index(self, x) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise UnknownElement(f"{x!r} is not an element of the lattice") from None

    def leq(self, a, b) -> bool:
        return self._leq[self.index(a)][self.index(b)]

    def lt(self, a, b) -> bool:
        return a != b and self.leq(a, b)

    def meet(self, a, b):
        return self.elements[self._meet[self.index(a)][self.index(b)]]

    def join(self, a, b):
        return self.elements[self._join[self.index(a)][self.index(b)]]

    def meet_all(self, items: Iterable):
        """Greatest lower bound of ``items``; the empty meet is ``top``."""
        result = self._index[self.top]
        for x in items:
            result = self._meet[result][self.index(x)]
        return self.elements[result]

    def join_all(self, items: Iterable):
        """Least upper bound of ``items``; the empty join is ``bottom``."""
        result = self._index[self.bottom]
        for x in items:
            result = self._join[result][self.index(x)]
        return self.elements[result]

    def comparable(self, a, b) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    @cached_property
    def is_chain(self) -> bool:
        return all(self.comparable(a, b) for a, b in itertools.combinations(self.elements, 2))

    @cached_property
    def heights(self) -> dict:
        """Length of the longest chain from ``bottom`` to each element."""
        h = {}
        for x in sorted(self.elements, key=lambda e: sum(self._leq[i][self._index[e]] for i in range(len(self)))):
            below = [h[y] for y in h if self.lt(y, x)]
            h[x] = 1 + max(below) if below else 0
        return h

    @cached_property
    def hasse(self) -> tuple:
        """Cover pairs ``(lower, upper)`` of the order, in element order."""
        pairs = []
        for a in self.elements:
            for b in self.elements:
                if self.lt(a, b) and not any(self.lt(a, c) and self.lt(c, b) for c in self.elements):
                    pairs.append((a, b))
        return tuple(pairs)

    @cached_property
    def frame_check(self) -> Check:
        return is_frame(self)

    def to_dict(self) -> dict:
        return {"elements": list(self.elements), "covers": [list(p) for p in self.hasse]}


class UnitInterval:
    """
    The chain of floats in ``[0, 1]`` under the usual order.

    Stands in for the real unit interval; a chain is distributive, hence a
    frame, so both implications coincide on it.
    """

    is_finite = False
    is_chain = True
    bottom = 0.0
    top = 1.0

    def __repr__(self):
        return "UnitInterval()"

    def __eq__(self, other):
        return isinstance(other, UnitInterval)

    def __hash__(self):
        return hash(UnitInterval)

    def __contains__(self, x):
        return isinstance(x, Real) and not isinstance(x, bool) and 0.0 <= x <= 1.0

    def _check(self, x):
        if x not in self:
            raise UnknownElement(f"{x!r} is not in [0, 1]")
        return x

    def leq(self, a, b):
        return self._check(a) <= self._check(b)

    def lt(self, a, b):
        return self._check(a) < self._check(b)

    def meet(self, a, b):
        return min(self._check(a), self._check(b))

    def join(self, a, b):
        return max(self._check(a), self._check(b))

    def meet_all(self, items):
        return min((self._check(x) for x in items), default=self.top)

    def join_all(self, items):
        return max((self._check(x) for x in items), default=self.bottom)

    def comparable(self, a, b):
        return True

    @property
    def frame_check(self):
        return Check(True)

    def to_dict(self):
        return "unit-interval"


UNIT_INTERVAL = UnitInterval()


def build_lattice(elements: Sequence[Label], covers: Iterable[tuple]) -> Lattice:
    """
    Build a lattice from its elements and cover pairs ``(lower, upper)``.

    Non-cover pairs are accepted as long as the relation they generate is a
    bounded lattice order; the transitive closure is taken either way.
    """
    elements = tuple(elements)
    if len(set(elements)) != len(elements):
        raise SchemaError("lattice element labels must be distinct")
    if not elements:
        raise Unbounded("empty poset has no top or bottom")
    index = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    covers = tuple((a, b) for a, b in covers)
    succ = [set() for _ in range(n)]
    for a, b in covers:
        for x in (a, b):
            if x not in index:
                raise UnknownElement(f"cover references unknown element {x!r}")
        if a == b:
            raise CycleDetected(f"self-loop at {a!r}")
        succ[index[a]].add(index[b])

    order = _topological_order(succ, elements)
    up = [set() for _ in range(n)]
    for i in reversed(order):
        up[i].add(i)
        for j in succ[i]:
            up[i] |= up[j]
    leq = tuple(tuple(j in up[i] for j in range(n)) for i in range(n))

    bottoms = [i for i in range(n) if all(leq[i])]
    tops = [j for j in range(n) if all(leq[i][j] for i in range(n))]
    if not bottoms or not tops:
        missing = "bottom" if not bottoms else "top"
        raise Unbounded(f"poset has no global {missing}")

    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m = _extremum([k for k in range(n) if leq[k][i] and leq[k][j]], leq, greatest=True)
            if m is None:
                raise NotALattice(f"{elements[i]!r} and {elements[j]!r} have no unique meet", (elements[i], elements[j]))
            s = _extremum([k for k in range(n) if leq[i][k] and leq[j][k]], leq, greatest=False)
            if s is None:
                raise NotALattice(f"{elements[i]!r} and {elements[j]!r} have no unique join", (elements[i], elements[j]))
            meet[i][j] = meet[j][i] = m
            join[i][j] = join[j][i] = s
    return Lattice(
        elements,
        covers,
        leq,
        tuple(map(tuple, meet)),
        tuple(map(tuple, join)),
        elements[bottoms[0]],
        elements[tops[0]],
    )


def _topological_order(succ, elements):
    n = len(succ)
    indegree = [0] * n
    for i in range(n):
        for j in succ[i]:
            indegree[j] += 1
    ready = [i for i in range(n) if indegree[i] == 0]
    order = []
    while ready:
        i = ready.pop()
        order.append(i)
        for j in succ[i]:
            indegree[j] -= 1
            if indegree[j] == 0:
                ready.append(j)
    if len(order) != n:
        stuck = [elements[i] for i in range(n) if indegree[i] > 0]
        raise CycleDetected(f"cover relation has a cycle through {stuck!r}")
    return order


def _extremum(candidates, leq, greatest):
    for c in candidates:
        if all((leq[d][c] if greatest else leq[c][d]) for d in candidates):
            return c
    return None


def lattice_from_dict(data: dict) -> Lattice:
    try:
        elements = data["elements"]
        covers = data.get("covers", [])
    except (KeyError, TypeError, AttributeError):
        raise SchemaError("lattice spec needs an 'elements' list and a 'covers' list") from None
    if not isinstance(elements, list) or not isinstance(covers, list):
        raise SchemaError("'elements' and 'covers' must be lists")
    if any(not isinstance(c, (list, tuple)) or len(c) != 2 for c in covers):
        raise SchemaError("each cover must be a [lower, upper] pair")
    return build_lattice(elements, [tuple(c) for c in covers])


def chain(n: int, prefix: str = "c") -> Lattice:
    """The n-element chain ``c0 < c1 < ... < c{n-1}``."""
    labels = [f"{prefix}{i}" for i in range(n)]
    return build_lattice(labels, zip(labels, labels[1:]))


# ---------------------------------------------------------------------------
# implications


def godel_arrow(L, a, b):
    """``top`` if ``a <= b``, else ``b``."""
    return L.top if L.leq(a, b) else b


def residuated_impl(L, a, b):
    """Join of every ``c`` with ``c & a <= b``; only defined on frames."""
    if not L.is_finite:
        return godel_arrow(L, a, b)
    if not L.frame_check.holds:
        raise NotAFrame("residuated implication needs a distributive lattice")
    L.index(a), L.index(b)
    return L.join_all(c for c in L.elements if L.leq(L.meet(c, a), b))


ARROWS = {"godel": godel_arrow, "residuated": residuated_impl}


def get_arrow(name):
    try:
        return ARROWS[name]
    except KeyError:
        raise SchemaError(f"unknown arrow {name!r}; choose from {sorted(ARROWS)}") from None


# ---------------------------------------------------------------------------
# classification


def is_frame(L: Lattice) -> Check:
    """Binary distributivity, first failing ``(a, b, c)`` as witness."""
    for a, b, c in itertools.product(L.elements, repeat=3):
        if L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)):
            return Check(False, (a, b, c))
    return Check(True)


def is_prelinear(L: Lattice) -> Check:
    arrow = godel_arrow
    for a, b in itertools.product(L.elements, repeat=2):
        if L.join(arrow(L, a, b), arrow(L, b, a)) != L.top:
            return Check(False, (a, b))
    return Check(True)


def semilinear_violations(L: Lattice, distinct: bool = True):
    """
    Yield every triple ``(l1, l2, l3)`` where
    ``(l1 -> l2) & (l1 -> l3) != l1 -> (l2 & l3)`` for the Godel-like arrow.

    With ``distinct`` (the default) triples where ``l1`` equals ``l2`` or
    ``l3`` are skipped. Without that restriction any two incomparable
    elements ``x, y`` already fail at ``(x, x, y)``, so only chains would
    qualify.
    """
    arrow = godel_arrow
    for l1, l2, l3 in itertools.product(L.elements, repeat=3):
        if distinct and (l1 == l2 or l1 == l3):
            continue
        lhs = L.meet(arrow(L, l1, l2), arrow(L, l1, l3))
        if lhs != arrow(L, l1, L.meet(l2, l3)):
            yield (l1, l2, l3)


def is_semilinear(L: Lattice, distinct: bool = True) -> Check:
    witness = next(semilinear_violations(L, distinct), None)
    return Check(witness is None, witness)


@dataclass(frozen=True)
class ClassificationReport:
    frame: Check
    prelinear: Check
    semilinear: Check

    @property
    def is_frame(self):
        return self.frame.holds

    @property
    def is_prelinear(self):
        return self.prelinear.holds

    @property
    def is_semilinear(self):
        return self.semilinear.holds

    def to_dict(self) -> dict:
        out = {}
        for name in ("frame", "prelinear", "semilinear"):
            check = getattr(self, name)
            out[name] = {"holds": check.holds}
            if check.witness is not None:
                out[name]["witness"] = list(check.witness)
        return out


def classify(L: Lattice) -> ClassificationReport:
    return ClassificationReport(is_frame(L), is_prelinear(L), is_semilinear(L))


# ---------------------------------------------------------------------------
# arrow properties


@dataclass
class PropertyResult:
    holds: bool
    witness: tuple | None = None
    note: str = ""


@dataclass
class ArrowPropertyReport:
    results: dict = field(default_factory=dict)

    @property
    def all_hold(self):
        return all(r.holds for r in self.results.values())

    def __getitem__(self, key):
        return self.results[key]

    def to_dict(self):
        out = {}
        for key, r in self.results.items():
            entry = {"holds": r.holds}
            if r.witness is not None:
                entry["witness"] = [list(w) if isinstance(w, tuple) else w for w in r.witness]
            if r.note:
                entry["note"] = r.note
            out[key] = entry
        return out


def _subsets(elements, subset_bound, samples, seed):
    """Nonempty subsets: all of them when small, else a seeded sample."""
    elements = list(elements)
    if len(elements) <= subset_bound:
        for r in range(1, len(elements) + 1):
            yield from itertools.combinations(elements, r)
        return
    rng = random.Random(seed)
    for _ in range(samples):
        chosen = tuple(x for x in elements if rng.random() < 0.5)
        yield chosen or (rng.choice(elements),)


def check_arrow_properties(L: Lattice, subset_bound: int = 6, samples: int = 512, seed: int = 0) -> ArrowPropertyReport:
    """
    Exhaustively evaluate the listed laws of the Godel-like arrow on ``L``.

    Keys are ``"1"`` to ``"8"`` with ``"5'"`` standing for the implication
    "prelinear implies semilinear" on this lattice. Law ``"6"`` ranges over
    all nonempty subsets when ``len(L) <= subset_bound``, otherwise over
    ``samples`` seeded random subsets.
    """
    E = L.elements
    ar = lambda a, b: godel_arrow(L, a, b)  # noqa: E731
    leq, meet = L.leq, L.meet

    def first(it):
        w = next(it, None)
        return PropertyResult(w is None, w)

    report = ArrowPropertyReport()
    report.results["1"] = first((a,) for a in E if ar(a, a) != L.top)
    report.results["2"] = first(
        (a, b, c) for a, b, c in itertools.product(E, repeat=3) if not leq(meet(ar(a, b), ar(b, c)), ar(a, c))
    )
    report.results["3"] = first(
        (a, b, x) for a, b, x in itertools.product(E, repeat=3) if leq(a, b) and not leq(ar(b, x), ar(a, x))
    )
    report.results["4"] = first(
        (a, b, x) for a, b, x in itertools.product(E, repeat=3) if leq(a, b) and not leq(ar(x, a), ar(x, b))
    )
    pre, semi = is_prelinear(L), is_semilinear(L)
    if not pre.holds:
        report.results["5'"] = PropertyResult(True, note="vacuous: lattice is not prelinear")
    else:
        report.results["5'"] = PropertyResult(semi.holds, semi.witness)

    def prop6():
        for subset in _subsets(E, subset_bound, samples, seed):
            for b in E:
                if L.meet_all(ar(a, b) for a in subset) != ar(L.join_all(subset), b):
                    return PropertyResult(False, (subset, b))
        return PropertyResult(True)

    report.results["6"] = prop6()
    report.results["7"] = first((a, b) for a, b in itertools.product(E, repeat=2) if leq(a, b) != (ar(a, b) == L.top))
    report.results["8"] = first((a, b) for a, b in itertools.product(E, repeat=2) if not leq(meet(a, ar(a, b)), b))
    return report


# ---------------------------------------------------------------------------
# export


def to_dot(L: Lattice, name: str = "lattice") -> str:
    """Hasse diagram as Graphviz DOT, bottom at rank 0, one rank per height."""

    def q(x):
        return '"' + str(x).replace('"', '\\"') + '"'

    lines = [f"digraph {q(name)} {{", "  rankdir=BT;", "  node [shape=circle];"]
    by_height = {}
    for x in L.elements:
        by_height.setdefault(L.heights[x], []).append(x)
    for h in sorted(by_height):
        nodes = " ".join(q(x) + ";" for x in by_height[h])
        lines.append(f"  {{ rank=same; {nodes} }}  // height {h}")
    for a, b in L.hasse:
        lines.append(f"  {q(a)} -> {q(b)} [dir=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"
