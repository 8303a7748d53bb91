"""Acceptance gate: ten criteria, each checked exactly against an independent oracle.

The conftest summary hook prints one PASS/FAIL line per criterion.
"""
import itertools
import random
from collections import defaultdict

import numpy as np
import pytest

from raagkit.fixtures import F2, GRAPHS, Z2, moebius, pinched_square, ray
from raagkit.gates import StandardCoset, gate_pair, gate_point, grid_check, psi_apply
from raagkit.geometry import distance, dual_hyperplanes, make_hyperplane, median
from raagkit.graph import salvetti_complex
from raagkit.hyperbolic import delta_estimate, fiber_sample, gromov_boundary_equal, gromov_product
from raagkit.invariants import act, act_all, classifying_invariant, decide_orbit_equiv
from raagkit.rays import infinite_label_classes, order_consistency_check, roller_adjacent, separating_hyperplanes
from raagkit.special import (
    check_special,
    develop_path,
    pi1_embedding,
    salvetti_local_isometry,
    verify_local_isometry,
)
from raagkit.words import ball, normal_form

from corpus import F2_FAMILY, fixture_rays
from oracles import ShuffleOracle, all_words, model_for

NAMES = sorted(GRAPHS)


def _subsets(vertices):
    return [U for r in range(len(vertices) + 1) for U in itertools.combinations(vertices, r)]


# 1 -------------------------------------------------------------------------------------


@pytest.mark.parametrize("name", NAMES)
def test_criterion_01_word_problem(name):
    graph = GRAPHS[name]()
    oracle = ShuffleOracle(graph.vertices, graph.edges)
    by_nf = defaultdict(set)
    by_oracle = defaultdict(set)
    for word in all_words(graph.vertices, 6):
        nf = normal_form(graph, word).word
        rep = oracle.canonical(word)
        by_nf[nf].add(rep)
        by_oracle[rep].add(nf)
    assert all(len(v) == 1 for v in by_nf.values())
    assert all(len(v) == 1 for v in by_oracle.values())


# 2 -------------------------------------------------------------------------------------


@pytest.mark.parametrize("name", ["P3", "Z2"])
def test_criterion_02_metric_is_hyperplane_count(name):
    graph = GRAPHS[name]()
    model = model_for(graph)
    pts = ball(graph.identity(), 4)
    images = [model.of(p) for p in pts]
    for a, ma in zip(pts, images):
        for b, mb in zip(pts, images):
            hs = dual_hyperplanes(a, b)
            assert len(hs) == len(set(hs)) == model.dist(ma, mb) == distance(a, b)


# 3 -------------------------------------------------------------------------------------


@pytest.mark.parametrize("name", NAMES)
def test_criterion_03_median(name):
    graph = GRAPHS[name]()
    model = model_for(graph)
    rng = random.Random(f"median-{name}")
    small = ball(graph.identity(), 1)
    big = ball(graph.identity(), 4)
    triples = list(itertools.product(small, repeat=3))
    triples += [tuple(rng.choice(big) for _ in range(3)) for _ in range(300)]
    for a, b, c in triples:
        brute = model.medians(model.of(a), model.of(b), model.of(c))
        assert brute == {model.of(median(a, b, c))}
    for _ in range(250):
        a, b, c = (rng.choice(big) for _ in range(3))
        m = median(a, b, c)
        assert all(median(*p) == m for p in itertools.permutations((a, b, c)))
        assert median(a, a, b) == a


# 4 -------------------------------------------------------------------------------------


@pytest.mark.parametrize("name", NAMES)
def test_criterion_04_gates(name):
    graph = GRAPHS[name]()
    model = model_for(graph)
    layers = model.spheres(6)
    one = graph.identity()
    subsets = _subsets(graph.vertices)

    # gate_point is the unique nearest point
    for base in ball(one, 1):
        for U in subsets:
            A = StandardCoset(base, U)
            for x in ball(one, 4):
                assert model.nearest(model.of(x), model.of(base), U, layers) == {model.of(gate_point(x, A))}

    # rho, psi and the translation against the definitions
    for UA in subsets:
        A = StandardCoset(one, UA)
        members = [g for g in ball(one, 1) if g in A]
        for bbase in ball(one, 2):
            for UB in subsets:
                B = StandardCoset(bbase, UB)
                pair = gate_pair(A, B)
                mB = model.of(B.base)
                common = [g for g in ball(one, 1) if g.letters and g.letters[0].vertex in pair.common]
                sample = set(members) | {pair.rhoA.base} | {pair.rhoA.base * v for v in common}

                def brute(a):
                    hits = model.nearest(model.of(a), mB, UB, layers)
                    assert len(hits) == 1
                    (b,) = hits
                    return b, model.dist(model.of(a), b)

                near = {a: brute(a) for a in sample}
                dAB = min(d for _, d in near.values())
                assert dAB == pair.distance
                for a, (b, d) in near.items():
                    assert (a in pair.rhoA) == (d == dAB)
                    if d == dAB:
                        # translation a^-1 psi(a) is the same for every member
                        assert model.mul(model.inv(model.of(a)), b) == model.of(pair.translation)
                        assert model.of(psi_apply(pair, a)) == b
                        for v in common:
                            assert psi_apply(pair, a * v) == psi_apply(pair, a) * v


# 5 -------------------------------------------------------------------------------------


@pytest.mark.parametrize("name", ["P3", "Z2"])
def test_criterion_05_grid(name):
    graph = GRAPHS[name]()
    model = model_for(graph)
    layers = model.spheres(8)
    rng = random.Random(f"grid-{name}")
    pts = ball(graph.identity(), 2)
    subsets = _subsets(graph.vertices)
    done = 0
    while done < 100:
        A = StandardCoset(rng.choice(pts), rng.choice(subsets))
        B = StandardCoset(rng.choice(pts), rng.choice(subsets))
        pair = gate_pair(A, B)
        if not pair.common:
            continue
        letters = [(v, s) for v in sorted(pair.common) for s in (1, -1)]
        u0 = normal_form(graph, [rng.choice(letters) for _ in range(rng.randint(0, 3))])
        u1 = normal_form(graph, [rng.choice(letters) for _ in range(rng.randint(0, 3))])
        a0, a1 = pair.rhoA.base * u0, pair.rhoA.base * u1
        rec = grid_check(a0, a1, B, A)
        assert rec.ok
        (b0,) = model.nearest(model.of(a0), model.of(B.base), B.generators, layers)
        (b1,) = model.nearest(model.of(a1), model.of(B.base), B.generators, layers)
        assert (model.of(rec.b0), model.of(rec.b1)) == (b0, b1)
        assert model.dist(model.of(a0), model.of(a1)) == model.dist(b0, b1)
        done += 1


# 6 -------------------------------------------------------------------------------------


def _sequence_codes(n, length):
    return np.array(list(itertools.product(range(n), repeat=length)), dtype=np.int64).reshape(-1, length)


@pytest.mark.parametrize("name", ["P3", "Z2"])
@pytest.mark.parametrize("length", [1, 2, 3])
def test_criterion_06_orbit_decider(name, length):
    """Brute force is the orbit relation restricted to translators in ball(6).

    Every brute-force edge must join sequences with equal invariants, every
    pair with equal invariants must get a witness that act() confirms, and
    sequences with different invariants must get no witness.
    """
    graph = GRAPHS[name]()
    one = graph.identity()
    hs = sorted({make_hyperplane(v, g) for g in ball(one, 2) for v in graph.vertices})
    index = {h: i for i, h in enumerate(hs)}
    translators = ball(one, 6)
    table = np.array([[index.get(act(g, h), -1) for h in hs] for g in translators], dtype=np.int64)

    codes = _sequence_codes(len(hs), length)
    seqs = [tuple(hs[i] for i in row) for row in codes]
    key_ids: dict = {}
    keys = np.array([key_ids.setdefault(classifying_invariant(s).key(), len(key_ids)) for s in seqs])
    place = len(hs) ** np.arange(length - 1, -1, -1)
    for row in table:
        image = row[codes]
        inside = (image >= 0).all(axis=1)
        assert (keys[inside] == keys[image[inside] @ place]).all()

    classes = defaultdict(list)
    for i, k in enumerate(keys):
        classes[k].append(i)
    for members in classes.values():
        for i in members:
            for j in members:
                g = decide_orbit_equiv(seqs[i], seqs[j])
                assert g is not None and act_all(g, seqs[i]) == seqs[j]

    rng = random.Random(f"orbit-{name}-{length}")
    for _ in range(3000):
        i, j = rng.randrange(len(seqs)), rng.randrange(len(seqs))
        if keys[i] != keys[j]:
            assert decide_orbit_equiv(seqs[i], seqs[j]) is None


# 7 -------------------------------------------------------------------------------------


@pytest.mark.parametrize("name", NAMES)
def test_criterion_07_order_consistency(name):
    graph = GRAPHS[name]()
    pts = ball(graph.identity(), 3)
    for r in fixture_rays(name):
        for label in sorted(infinite_label_classes(r)):
            for k in range(1, 9):
                for x in pts:
                    for y in pts:
                        assert order_consistency_check(r, x, y, label, k, 64)


# 8 -------------------------------------------------------------------------------------


def test_criterion_08_roller_graph_on_Z2():
    z = Z2()
    east0, east1, north = ray(z, "1", "a"), ray(z, "b", "a"), ray(z, "1", "b")
    sep = separating_hyperplanes(east0, east1, 64)
    assert sep.exact and sep.hyperplanes == (make_hyperplane("b", z.identity()),)
    assert roller_adjacent(east0, east1, 64) is True

    assert roller_adjacent(east0, north, 64) is False
    counts = []
    for horizon in (8, 16, 32, 64):
        s = separating_hyperplanes(east0, north, horizon)
        assert not s.exact
        counts.append(s.count)
    assert all(a < b for a, b in zip(counts, counts[1:]))

    report = fiber_sample([east0, east1], 64)
    degree = 2 * len(z.vertices)
    assert report.classes == ((0, 1),)
    assert report.max_adjacent_family == report.max_class_size == 2 <= degree - 2


# 9 -------------------------------------------------------------------------------------


def test_criterion_09_specialness_and_salvetti_map():
    for name in NAMES:
        X = salvetti_complex(GRAPHS[name]())
        assert check_special(X).special
        m = salvetti_local_isometry(X)
        assert verify_local_isometry(m)
        pi1_embedding(X, m)  # raises unless every relator maps to 1
        for sq in X.squares:
            assert develop_path(X, m, sq).is_identity()
    assert check_special(moebius()).one_sided
    assert check_special(pinched_square()).self_osculate


# 10 ------------------------------------------------------------------------------------


def test_criterion_10_hyperbolic_bridge():
    f, z = F2(), Z2()
    assert delta_estimate(f.identity(), 4) == 0
    assert delta_estimate(z.identity(), 3) > 0
    assert gromov_product(f.word("a a"), f.word("a b"), f.identity()) == 1

    rays = [ray(f, b, p) for b, p in F2_FAMILY]
    verdict = {}
    for i, j in itertools.product(range(len(rays)), repeat=2):
        verdict[i, j] = gromov_boundary_equal(rays[i], rays[j], 32).verdict
        assert verdict[i, j] in ("equal", "distinct")
    n = len(rays)
    for i in range(n):
        assert verdict[i, i] == "equal"
        for j in range(n):
            assert verdict[i, j] == verdict[j, i]
            for k in range(n):
                if verdict[i, j] == verdict[j, k] == "equal":
                    assert verdict[i, k] == "equal"
    # finitely many separating hyperplanes forces the same boundary point
    for family in (rays, fixture_rays("Z2"), fixture_rays("P3")):
        for r1, r2 in itertools.product(family, repeat=2):
            if separating_hyperplanes(r1, r2, 32).exact:
                assert gromov_boundary_equal(r1, r2, 32).verdict == "equal"
    for i, j in itertools.product(range(n), repeat=2):
        finite = separating_hyperplanes(rays[i], rays[j], 32).exact
        assert finite == (verdict[i, j] == "equal")
