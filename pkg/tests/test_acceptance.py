"""
Acceptance suite: one test per criterion. Each test records a summary line
through ``record_property("summary", ...)``; conftest prints them as a
PASS/FAIL block at the end of the run.
"""

import itertools
import random
import time
from fractions import Fraction

import pytest

from alphacut import catalog
from alphacut.enumeration import enumerate_lattices, search
from alphacut.errors import EmptyCutSupport
from alphacut.fuzzyset import (
    FuzzySet,
    PointMap,
    alpha_cut,
    characteristic,
    compose,
    fs_image,
    fs_intersect,
    fs_leq,
    fs_union,
    fuzzy_alpha_cut,
    unit_interval_set,
)
from alphacut.group import check_fuzzy_binary_op, check_fuzzy_group, random_fuzzy_group, restrict_to_cut
from alphacut.lattice import chain, classify, godel_arrow, is_frame, is_prelinear, is_semilinear, residuated_impl
from alphacut.localic import LOCALIC_FRAME, LOCALIC_PREORDER, search_axiom6_failure, verify_cut_family
from alphacut.rough import ApproximationSpace, fuzzy_approx, pawlak_approx, prob_approx, rough_membership, set_partitions
from alphacut.topology import check_topology, generated_topology, subspace_via_cut

from conftest import FRAMES_6, FRAMES_7, random_fuzzy_set, random_map

CHAINS_7 = [chain(n) for n in range(2, 8)]


def test_criterion_01_named_lattice_classifications(record_property):
    """Classification of M5, N6 and B3 with witnesses, under 1 s."""
    start = time.perf_counter()
    m5, n6, b3 = classify(catalog.m5()), classify(catalog.n6()), classify(catalog.b3())
    elapsed = time.perf_counter() - start
    assert m5.is_frame and m5.is_semilinear and not m5.is_prelinear
    assert m5.prelinear.witness == ("b", "c")
    assert n6.is_frame and not n6.is_semilinear
    assert n6.semilinear.witness == ("b", "a", "c")
    assert not b3.is_semilinear
    assert b3.semilinear.witness == ("a", "c", "d")
    assert elapsed < 1.0
    record_property("summary", f"M5 (b,c), N6 (b,a,c), B3 (a,c,d) reproduced in {elapsed:.3f}s")


def test_criterion_02_minimality(record_property):
    """Smallest non-prelinear, non-semilinear-distributive and semilinear-not-prelinear sizes."""
    start = time.perf_counter()
    for n in range(2, 5):
        assert search(n, "not_prelinear") == []
    for n in range(2, 6):
        assert search(n, "not_semilinear", distributive_only=True) == []
    six = search(6, "not_semilinear", distributive_only=True)
    assert len(six) >= 1
    for n in range(2, 5):
        assert search(n, "semilinear_and_not_prelinear") == []
    five = search(5, "semilinear_and_not_prelinear")
    assert len(five) >= 1
    elapsed = time.perf_counter() - start
    assert elapsed < 60
    record_property(
        "summary",
        f"non-prelinear first at n=5; non-semilinear frames first at n=6 ({len(six)} class); "
        f"semilinear-not-prelinear first at n=5 ({len(five)} class); {elapsed:.2f}s",
    )


def test_criterion_03_prelinear_implies_semilinear(record_property):
    """Prelinear implies semilinear over every distributive lattice with n <= 7."""
    start = time.perf_counter()
    checked = prelinear = 0
    for n in range(2, 8):
        for L in enumerate_lattices(n, distributive_only=True):
            checked += 1
            if is_prelinear(L):
                prelinear += 1
                assert is_semilinear(L), L
    elapsed = time.perf_counter() - start
    assert checked == 1 + 1 + 2 + 3 + 5 + 8
    assert elapsed < 600
    record_property("summary", f"{checked} frames, {prelinear} prelinear, 0 counterexamples, {elapsed:.2f}s")


def test_criterion_04_cut_family_verdicts(record_property):
    """Cut families over semilinear frames are localic frames; over any frame the preorder axioms hold."""
    start = time.perf_counter()
    rng = random.Random(404)
    semilinear = [L for L in FRAMES_7 if is_semilinear(L)]
    trials = 1200
    for _ in range(trials):
        A = random_fuzzy_set(rng.choice(semilinear), rng, max_points=5)
        assert verify_cut_family(A)[2].verdict == LOCALIC_FRAME, A
    non_semilinear = [L for L in FRAMES_7 if not is_semilinear(L)]
    for _ in range(trials):
        A = random_fuzzy_set(rng.choice(FRAMES_7 + non_semilinear), rng, max_points=5)
        assert verify_cut_family(A)[2].preorder_conditions_hold, A
    # exploratory: an axiom-6 failure over N6 exists for some closed family
    hit = search_axiom6_failure(catalog.n6(), budget=500, seed=0)
    assert hit is not None and hit[1].verdict == LOCALIC_PREORDER
    elapsed = time.perf_counter() - start
    assert elapsed < 300
    record_property(
        "summary",
        f"{trials} cut families over {len(semilinear)} semilinear frames all localic frames; "
        f"{trials} over all {len(FRAMES_7)} frames pass axioms 1-5,7-9; "
        f"N6 axiom-6 witness family of size {len(hit[0])}; {elapsed:.2f}s",
    )


def _random_instance(rng, lattices):
    L = rng.choice(lattices)
    A = random_fuzzy_set(L, rng, max_points=5)
    B = FuzzySet(A.base, L, tuple(rng.choice(L.elements) for _ in A.base))
    return L, A, B, rng.choice(L.elements), rng.choice(L.elements)


def test_criterion_05_cut_and_image_laws(record_property):
    """Cut and image laws on 1000+ random instances each; join-side equalities only on chains."""
    rng = random.Random(505)
    n = 1000
    counts = dict.fromkeys(
        ["below characteristic", "antitone", "meets", "joins (chains)", "joins <= (frames)", "image (chains)",
         "image <= (frames)", "monotone image", "composition", "associativity", "id_X", "id_Y"], 0)  # fmt: skip
    for _ in range(n):
        L, A, B, a1, a2 = _random_instance(rng, FRAMES_7)
        assert fs_leq(fuzzy_alpha_cut(A, a1), characteristic(alpha_cut(A, a1), L))
        counts["below characteristic"] += 1
        lo, hi = (a1, a2) if L.leq(a1, a2) else (a2, a1) if L.leq(a2, a1) else (L.bottom, a1)
        assert fs_leq(fuzzy_alpha_cut(A, hi), fuzzy_alpha_cut(A, lo))
        counts["antitone"] += 1
        assert fuzzy_alpha_cut(fs_intersect(A, B), a1) == fs_intersect(fuzzy_alpha_cut(A, a1), fuzzy_alpha_cut(B, a1))
        counts["meets"] += 1
        assert fs_leq(fs_union(fuzzy_alpha_cut(A, a1), fuzzy_alpha_cut(B, a1)), fuzzy_alpha_cut(fs_union(A, B), a1))
        counts["joins <= (frames)"] += 1

        f = random_map(A.base, rng, prefix="y")
        g = random_map(f.target, rng, prefix="z")
        h = random_map(g.target, rng, prefix="w")
        cut = fuzzy_alpha_cut(A, a1)
        assert fs_leq(fs_image(f, cut), fuzzy_alpha_cut(fs_image(f, A), a1))
        counts["image <= (frames)"] += 1
        assert fs_leq(fs_image(f, fuzzy_alpha_cut(A, hi)), fs_image(f, fuzzy_alpha_cut(A, lo)))
        counts["monotone image"] += 1
        assert fs_image(compose(g, f), cut) == fs_image(g, fs_image(f, cut))
        counts["composition"] += 1
        assert fs_image(compose(h, compose(g, f)), cut) == fs_image(compose(compose(h, g), f), cut)
        counts["associativity"] += 1
        assert fs_image(compose(f, PointMap.identity(A.base)), cut) == fs_image(f, cut)
        counts["id_X"] += 1
        assert fs_image(compose(PointMap.identity(f.target), f), cut) == fs_image(f, cut)
        counts["id_Y"] += 1

        L, A, B, a1, _ = _random_instance(rng, CHAINS_7)
        assert fuzzy_alpha_cut(fs_union(A, B), a1) == fs_union(fuzzy_alpha_cut(A, a1), fuzzy_alpha_cut(B, a1))
        counts["joins (chains)"] += 1
        f = random_map(A.base, rng)
        assert fs_image(f, fuzzy_alpha_cut(A, a1)) == fuzzy_alpha_cut(fs_image(f, A), a1)
        counts["image (chains)"] += 1
    assert min(counts.values()) >= 1000
    record_property(
        "summary",
        f"{n} instances per law, 0 failures; cut-of-join and image-of-cut as equalities on chains, "
        "as inclusions on all frames",
    )


@pytest.mark.xfail(strict=True, reason="a join can reach alpha when no joinand does; fails off chains, e.g. b | c = a in M5")
def test_criterion_05_join_laws_as_equalities_on_all_frames(record_property):
    """Cut preserving joins and images, as equalities over every frame <= 7 (expected to fail)."""
    rng = random.Random(506)
    failures = 0
    for _ in range(1000):
        L, A, B, a1, _ = _random_instance(rng, FRAMES_7)
        f = random_map(A.base, rng)
        failures += fuzzy_alpha_cut(fs_union(A, B), a1) != fs_union(fuzzy_alpha_cut(A, a1), fuzzy_alpha_cut(B, a1))
        failures += fs_image(f, fuzzy_alpha_cut(A, a1)) != fuzzy_alpha_cut(fs_image(f, A), a1)
    record_property("summary", f"{failures} failures in 2000 checks")
    assert failures == 0


def test_criterion_06_unit_interval_example(record_property):
    """Fuzzy 0.2-cut of x/(x+2) on [0, 10] sampled at k/100, boundary at x = 0.5."""
    points = [k / 100 for k in range(0, 1001)]
    A = unit_interval_set(points, lambda x: x / (x + 2))
    cut = fuzzy_alpha_cut(A, 0.2)
    for x in points:
        if x >= 0.5:
            assert cut(x) == x / (x + 2)
        else:
            assert cut(x) == 0.0
    assert cut(0.5) == 0.2 and cut(0.49) == 0.0
    record_property("summary", f"{len(points)} samples, boundary x=0.5 maps to exactly 0.2")


def test_criterion_07_fuzzy_group(record_property):
    """Group example, its l1 cut, and 500+ random crisp-group embeddings."""
    A, gr = catalog.group_example()
    assert check_fuzzy_binary_op(A, gr)
    G = check_fuzzy_group(A, gr)
    assert G.identity == "x4"
    assert all(G.inverses[x] == x for x in G.support)
    H = restrict_to_cut(G, "l1")
    assert H.support == ("x1", "x4")
    rng = random.Random(707)
    frames = [L for L in FRAMES_6 if len(L) > 1]
    trials, cuts = 600, 0
    for _ in range(trials):
        L = rng.choice(frames)
        A, gr = random_fuzzy_group(L, rng)
        G = check_fuzzy_group(A, gr)
        for alpha in L.elements:
            try:
                restrict_to_cut(G, alpha)
                cuts += 1
            except EmptyCutSupport:
                assert not fuzzy_alpha_cut(A, alpha).support
    record_property("summary", f"e=x4, self-inverse, l1-cut support {{x1,x4}}; {trials} groups, {cuts} cut subgroups")


def test_criterion_08_topology_subspaces(record_property):
    """Every alpha-cut subspace of 500+ random L-topological spaces is a space."""
    rng = random.Random(808)
    trials = subspaces = 0
    while trials < 600:
        L = rng.choice(FRAMES_6)
        A = random_fuzzy_set(L, rng, max_points=4)
        gens = [FuzzySet(A.base, L, tuple(rng.choice(L.elements) for _ in A.base)) for _ in range(rng.randint(0, 3))]
        space = generated_topology(A, gens)
        if len(space.opens) > 6:
            continue
        assert check_topology(space)
        trials += 1
        for alpha in L.elements:
            assert check_topology(subspace_via_cut(space, alpha))
            subspaces += 1
    record_property("summary", f"{trials} spaces with |tau| <= 6, {subspaces} cut subspaces, 0 failures")


def test_criterion_09_rough_sets(record_property):
    """Exhaustive over all partitions and subsets of universes up to five points."""
    thresholds = [Fraction(k, 12) for k in range(13)]
    cases = 0
    for n in range(1, 6):
        X = [str(i) for i in range(n)]
        for blocks in set_partitions(X):
            S = ApproximationSpace.from_blocks(X, blocks)
            for r in range(n + 1):
                for subset in itertools.combinations(X, r):
                    A = set(subset)
                    cases += 1
                    lower, upper = pawlak_approx(S, A)
                    assert lower <= A <= upper
                    mu = rough_membership(S, A)
                    for beta, alpha in itertools.combinations_with_replacement(thresholds, 2):
                        flo, fup = fuzzy_approx(S, A, alpha, beta)
                        assert all(flo[x] <= fup[x] for x in X)
                        fuzzy_lower_support = {x for x in X if flo[x] > 0}
                        assert fuzzy_lower_support == {x for x in X if mu(x) > 0 and mu(x) >= alpha}
                        assert {x for x in X if fup[x] > 0} == {x for x in X if mu(x) > 0 and mu(x) >= beta}
                        if beta < alpha:
                            plo, pup = prob_approx(S, A, alpha, beta)
                            assert fuzzy_lower_support == {x for x in plo if mu(x) > 0}
                            assert plo <= pup
    record_property("summary", f"{cases} (partition, subset) cases up to |X|=5, {len(thresholds)} thresholds")


def test_criterion_10_arrow_divergence(record_property):
    """Residuated and Goedel-like arrows differ on M5 and agree on chains up to eight elements."""
    m5 = catalog.m5()
    assert residuated_impl(m5, "b", "bot") == "c"
    assert godel_arrow(m5, "b", "bot") == "bot"
    pairs = 0
    for n in range(1, 9):
        C = chain(n)
        assert is_frame(C)
        for a, b in itertools.product(C.elements, repeat=2):
            assert residuated_impl(C, a, b) == godel_arrow(C, a, b)
            pairs += 1
    record_property("summary", f"M5: b->bot is c vs bot; {pairs} chain pairs agree")
