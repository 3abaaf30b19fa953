"""
The lattice-valued inclusion relation on a family of fuzzy sets and a checker
for the nine localic-frame axioms.

Members of a family are compared extensionally. The structure's meet is
pointwise intersection, its arbitrary join is pointwise union and its top is
the union of all members (for a cut family that is the bottom cut, i.e. the
original fuzzy set).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Sequence

from .errors import BaseMismatch, FamilyNotClosed, LatticeMismatch, NotAChain, SchemaError
from .fuzzyset import FuzzySet, cut_family, fs_intersect, fs_union, fs_union_all
from .lattice import Check, get_arrow

LOCALIC_FRAME = "localic frame"
LOCALIC_PREORDER = "localic preordered set"
NEITHER = "neither"

AXIOMS = {
    "1": "R(a,a) = top",
    "2": "R(a,b) = top = R(b,a) implies a = b",
    "3": "R(a,b) & R(b,c) <= R(a,c)",
    "4": "R(a&b,a) = top = R(a&b,b)",
    "5": "R(a,T) = top",
    "6": "R(a,b) & R(a,c) = R(a,b&c)",
    "7": "R(a,join S) = top for a in S",
    "8": "meet{R(a,b) : a in S} = R(join S,b)",
    "9": "R(a & join S, join{a&b : b in S}) = top",
}


def graded_inclusion(F: FuzzySet, G: FuzzySet, arrow="godel"):
    """Meet over all points of ``F(x) -> G(x)``; top on an empty base."""
    L = F.lattice
    ar = get_arrow(arrow) if isinstance(arrow, str) else arrow
    return L.meet_all(ar(L, f, g) for f, g in zip(F.values, G.values))


@dataclass
class FuzzyRelation:
    family: tuple
    lattice: object
    values: list
    arrow: str = "godel"

    def __call__(self, i: int, j: int):
        return self.values[i][j]

    def to_dict(self) -> dict:
        return {
            "arrow": self.arrow,
            "family": [F.membership for F in self.family],
            "values": [list(row) for row in self.values],
        }


def _common_space(family: Sequence[FuzzySet]):
    if not family:
        raise SchemaError("family must be nonempty")
    first = family[0]
    for F in family[1:]:
        if F.base != first.base:
            raise BaseMismatch("family members live on different bases")
        if F.lattice != first.lattice:
            raise LatticeMismatch("family members take values in different lattices")
    return first.base, first.lattice


def relation_RL(family: Sequence[FuzzySet], arrow: str = "godel") -> FuzzyRelation:
    family = tuple(family)
    _, L = _common_space(family)
    values = [[graded_inclusion(F, G, arrow) for G in family] for F in family]
    return FuzzyRelation(family, L, values, arrow)


def close_family(family: Sequence[FuzzySet], adjoin_empty: bool = True) -> list[FuzzySet]:
    """
    Smallest extension of ``family`` closed under pairwise intersection and
    union, keeping the original members first. With ``adjoin_empty`` the
    empty fuzzy set (the empty union) is added too.
    """
    base, L = _common_space(list(family))
    out, seen = [], set()
    for F in family:
        if F not in seen:
            seen.add(F)
            out.append(F)
    if adjoin_empty:
        empty = FuzzySet.constant(base, L, L.bottom)
        if empty not in seen:
            seen.add(empty)
            out.append(empty)
    i = 0
    while i < len(out):
        for j in range(i + 1):
            for H in (fs_intersect(out[i], out[j]), fs_union(out[i], out[j])):
                if H not in seen:
                    seen.add(H)
                    out.append(H)
        i += 1
    return out


def is_closed(family: Sequence[FuzzySet]) -> Check:
    members = set(family)
    for (i, F), (j, G) in itertools.combinations_with_replacement(enumerate(family), 2):
        if fs_intersect(F, G) not in members:
            return Check(False, ("intersection", i, j))
        if fs_union(F, G) not in members:
            return Check(False, ("union", i, j))
    return Check(True)


@dataclass
class AxiomResult:
    holds: bool = True
    witness: dict | None = None
    failures: list = field(default_factory=list)


@dataclass
class AxiomReport:
    axioms: dict
    subsets_exhaustive: bool = True
    subsets_checked: int = 0

    @property
    def verdict(self) -> str:
        if all(r.holds for r in self.axioms.values()):
            return LOCALIC_FRAME
        if all(r.holds for k, r in self.axioms.items() if k != "6"):
            return LOCALIC_PREORDER
        return NEITHER

    @property
    def preorder_conditions_hold(self) -> bool:
        return all(r.holds for k, r in self.axioms.items() if k != "6")

    def failed(self) -> list[str]:
        return [k for k, r in self.axioms.items() if not r.holds]

    def to_dict(self) -> dict:
        axioms = {}
        for k, r in self.axioms.items():
            entry = {"pass": r.holds}
            if r.witness is not None:
                entry["witness"] = r.witness
            if r.failures:
                entry["failures"] = r.failures
            axioms[k] = entry
        return {
            "verdict": self.verdict,
            "axioms": axioms,
            "subsets": {"exhaustive": self.subsets_exhaustive, "checked": self.subsets_checked},
        }


def _subfamilies(n: int, subset_bound: int, samples: int, seed: int):
    """Index subsets of ``range(n)``: all when ``n <= subset_bound``, else a seeded sample."""
    if n <= subset_bound:
        for r in range(n + 1):
            yield from itertools.combinations(range(n), r)
        return
    yield ()
    for i in range(n):
        yield (i,)
    yield tuple(range(n))
    rng = random.Random(seed)
    for _ in range(samples):
        yield tuple(i for i in range(n) if rng.random() < 0.5)


def check_localic_axioms(
    family: Sequence[FuzzySet],
    R: FuzzyRelation | None = None,
    *,
    subset_bound: int = 6,
    samples: int = 512,
    seed: int = 0,
    verbose: bool = False,
) -> AxiomReport:
    """
    Check the nine localic-frame axioms on ``family`` with relation ``R``.

    Subset quantifiers include the empty subfamily, whose join is the empty
    fuzzy set. Witnesses refer to members by their index in ``family``; the
    first failure in deterministic order is reported, all of them with
    ``verbose``.
    """
    family = list(family)
    base, L = _common_space(family)
    closed = is_closed(family)
    if not closed:
        kind, i, j = closed.witness
        raise FamilyNotClosed(f"{kind} of members {i} and {j} is not in the family", closed.witness)
    if R is None:
        R = relation_RL(family)
    elif list(R.family) != family:
        raise SchemaError("relation was built over a different family")

    top, T = L.top, L.top
    index = {F: i for i, F in enumerate(family)}
    cache = {}

    def rel(F, G):
        i, j = index.get(F), index.get(G)
        if i is not None and j is not None:
            return R.values[i][j]
        key = (F.values, G.values)
        if key not in cache:
            cache[key] = graded_inclusion(F, G, R.arrow)
        return cache[key]

    whole = fs_union_all(family, base, L)
    results = {k: AxiomResult() for k in AXIOMS}

    def fail(key, witness):
        r = results[key]
        if r.holds:
            r.holds = False
            r.witness = witness
        if verbose:
            r.failures.append(witness)
        return not verbose

    n = len(family)
    meet_idx = [[index[fs_intersect(family[i], family[j])] for j in range(n)] for i in range(n)]
    Rv = R.values

    for i in range(n):
        if Rv[i][i] != T and fail("1", {"a": i, "R(a,a)": Rv[i][i]}):
            break
    for i, j in itertools.combinations(range(n), 2):
        if Rv[i][j] == T and Rv[j][i] == T and fail("2", {"a": i, "b": j}):
            break
    done = False
    for i, j, k in itertools.product(range(n), repeat=3):
        if done:
            break
        if not L.leq(L.meet(Rv[i][j], Rv[j][k]), Rv[i][k]):
            done = fail("3", {"a": i, "b": j, "c": k})
    for i, j in itertools.product(range(n), repeat=2):
        m = meet_idx[i][j]
        if (Rv[m][i] != T or Rv[m][j] != T) and fail("4", {"a": i, "b": j}):
            break
    for i in range(n):
        v = rel(family[i], whole)
        if v != top and fail("5", {"a": i, "R(a,T)": v}):
            break
    done = False
    for i, j, k in itertools.product(range(n), repeat=3):
        if done:
            break
        lhs, rhs = L.meet(Rv[i][j], Rv[i][k]), Rv[i][meet_idx[j][k]]
        if lhs != rhs:
            done = fail("6", {"a": i, "b": j, "c": k, "lhs": lhs, "rhs": rhs})

    exhaustive = n <= subset_bound
    checked = 0
    stop = {"7": False, "8": False, "9": False}
    for S in _subfamilies(n, subset_bound, samples, seed):
        checked += 1
        members = [family[s] for s in S]
        joined = fs_union_all(members, base, L)
        if not stop["7"]:
            for s in S:
                if rel(family[s], joined) != top:
                    stop["7"] = fail("7", {"a": s, "S": list(S)})
                    break
        if not stop["8"]:
            for b in range(n):
                lhs = L.meet_all(Rv[s][b] for s in S)
                rhs = rel(joined, family[b])
                if lhs != rhs:
                    stop["8"] = fail("8", {"b": b, "S": list(S), "lhs": lhs, "rhs": rhs})
                    break
        if not stop["9"]:
            for a in range(n):
                left = fs_intersect(family[a], joined)
                right = fs_union_all((family[meet_idx[a][s]] for s in S), base, L)
                if rel(left, right) != top:
                    stop["9"] = fail("9", {"a": a, "S": list(S)})
                    break
    return AxiomReport(results, exhaustive, checked)


def is_graded_frame(family: Sequence[FuzzySet], R: FuzzyRelation | None = None, **kwargs) -> bool:
    """Localic-frame check restricted to chain-valued families."""
    _, L = _common_space(list(family))
    if not L.is_chain:
        raise NotAChain("graded frames take values in a chain")
    return check_localic_axioms(family, R, **kwargs).verdict == LOCALIC_FRAME


def verify_cut_family(A: FuzzySet, arrow: str = "godel", **kwargs):
    """
    Cut family of ``A``, closed under intersection and union, with its
    relation and axiom report. Returns ``(family, relation, report)``.
    """
    family = close_family(cut_family(A))
    R = relation_RL(family, arrow)
    return family, R, check_localic_axioms(family, R, **kwargs)


def search_axiom6_failure(lattice, *, max_points: int = 4, generators: int = 3, budget: int = 2000, seed: int = 0, cuts_only: bool = False):
    """
    Random search for a closed family over ``lattice`` that breaks axiom 6.

    With ``cuts_only`` the candidates are cut families of random fuzzy sets;
    otherwise the closure of a few random fuzzy sets. Returns
    ``(family, report)`` for the first hit or ``None``.
    """
    rng = random.Random(seed)
    elements = list(lattice.elements)
    for _ in range(budget):
        base = tuple(f"x{i}" for i in range(rng.randint(1, max_points)))
        if cuts_only:
            A = FuzzySet(base, lattice, tuple(rng.choice(elements) for _ in base))
            family = close_family(cut_family(A))
        else:
            gens = [FuzzySet(base, lattice, tuple(rng.choice(elements) for _ in base)) for _ in range(rng.randint(1, generators))]
            family = close_family(gens)
        report = check_localic_axioms(family)
        if not report.axioms["6"].holds:
            return family, report
    return None
