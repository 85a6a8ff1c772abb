"""Acceptance suite. Each ``test_criterion_N`` maps to one criterion and the
terminal summary prints a pass/fail line per criterion."""

import math
import random
import subprocess
import sys
import time

import pytest

from impropriety.cli import main
from impropriety.exact import exact_impropriety
from impropriety.formats import to_edge_list
from impropriety.graph import validate_interval
from impropriety.ktree import certificate, gen_ktree, size_for_target, verify_ktree, walk_bound
from impropriety.outerplanar import (
    add_boundary, build_dual_tree, color_outerplanar, complete_to_maximal,
    outerplanar_embedding, unique_min_face,
)

import oracles
from conftest import complete, cycle, star


def test_criterion_1_outerplanar_defect_two(small_outerplanar, random_corpus):
    start = time.perf_counter()
    assert len(small_outerplanar) == 4800
    assert all(oracles.is_outerplanar(g) for g in random_corpus[:50])
    failures = []
    for g in (*small_outerplanar, *random_corpus):
        coloring, report = color_outerplanar(g)
        fresh = validate_interval(g, coloring)
        if not (fresh.is_interval and fresh.defect <= 2 and report == fresh):
            failures.append(g)
        if oracles.interval_defect(g, coloring.colors) not in ((1, 2) if g.m else (0,)):
            failures.append(g)
    assert not failures
    assert time.perf_counter() - start < 300


def test_criterion_2_unique_min_face(small_outerplanar, random_corpus):
    rng = random.Random(7)
    checked = 0
    for g in (*small_outerplanar, *random_corpus):
        if g.n < 3:
            continue
        emb = outerplanar_embedding(g)
        for tri in (add_boundary(emb), complete_to_maximal(emb)):
            for _ in range(10):
                dual = build_dual_tree(tri, rng.randrange(len(tri.faces)))
                for v in range(g.n):
                    unique_min_face(dual, tri, v)
                    checked += 1
    assert checked > 0


def test_criterion_3_exact_matches_naive(small_connected):
    start = time.perf_counter()
    assert len(small_connected) == 3390
    mismatches = [g for g in small_connected
                  if exact_impropriety(g).value != oracles.naive_impropriety(g)]
    assert not mismatches
    for t in range(2, 6):
        assert exact_impropriety(cycle(2 * t)).value == 1
    for t in range(1, 5):
        assert exact_impropriety(cycle(2 * t + 1)).value == 2
    for s in range(1, 7):
        assert exact_impropriety(star(s)).value == 1
    assert exact_impropriety(complete(3)).value == 2
    assert time.perf_counter() - start < 600


@pytest.mark.parametrize("k, m, n", [(2, 1, 1), (2, 1, 2), (2, 2, 1), (2, 2, 2), (3, 1, 1)])
def test_criterion_4_certificate_sound(k, m, n):
    res = exact_impropriety(gen_ktree(k, m, n).graph)
    assert res.exact
    assert res.value >= certificate(k, m, n).lower_bound


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_criterion_5_certificate_growth(k):
    start = time.perf_counter()
    bounds = [certificate(k, n, n).lower_bound for n in range(1, 10**4 + 1)]
    assert all(a <= b for a, b in zip(bounds, bounds[1:]))
    at = math.ceil(10**4 * (2 * k + 3) / 7)
    assert certificate(k, at, at).lower_bound > 100
    for target in range(1, 51):
        n, m = size_for_target(k, target)
        assert certificate(k, m, n).lower_bound >= target
    assert time.perf_counter() - start < 1.0


def _random_walk(g, rng, length):
    v = rng.randrange(g.n)
    while not g.neighbors[v]:
        v = rng.randrange(g.n)
    walk = [v]
    for _ in range(length):
        walk.append(rng.choice(sorted(g.neighbors[walk[-1]])))
    return walk


def test_criterion_6_walk_bound(small_outerplanar, random_corpus, small_connected):
    rng = random.Random(31337)
    solved = {}
    violations = 0
    triples = 0
    while triples < 10_000:
        if rng.random() < 0.6:
            g = rng.choice(small_outerplanar if rng.random() < 0.5 else random_corpus)
            colors = color_outerplanar(g)[0]
        else:
            i = rng.randrange(len(small_connected))
            g = small_connected[i]
            if i not in solved:
                solved[i] = exact_impropriety(g).witness
            colors = solved[i]
        if not g.m:
            continue
        walk = _random_walk(g, rng, rng.randint(1, 12))
        first = colors[g.edge_id(walk[0], walk[1])]
        last = colors[g.edge_id(walk[-2], walk[-1])]
        if abs(first - last) > walk_bound(g, walk):
            violations += 1
        triples += 1
    assert violations == 0


def test_criterion_7_ktree_2_3_4():
    w = gen_ktree(2, 3, 4)
    assert (w.graph.n, w.graph.m) == (14, 25)
    assert verify_ktree(w.graph, 2)


def _cli(*args):
    proc = subprocess.run([sys.executable, "-m", "impropriety.cli", *map(str, args)],
                          capture_output=True, text=True)
    return proc.returncode


def test_criterion_8_cli_contract(tmp_path, small_outerplanar, capsys):
    c5 = tmp_path / "c5.txt"
    c5.write_text(to_edge_list(cycle(5)))
    k4 = tmp_path / "k4.txt"
    k4.write_text(to_edge_list(complete(4)))
    bad = tmp_path / "bad.txt"
    bad.write_text("2\n0 0\n")
    big = tmp_path / "t.txt"
    big.write_text(to_edge_list(gen_ktree(2, 3, 4).graph))
    wrong = tmp_path / "wrong.col"
    wrong.write_text("0 0\n1 0\n2 5\n3 0\n4 0\n")
    assert _cli("color", c5) == 0
    assert _cli("color", bad) == 1
    assert _cli("color", k4) == 2
    assert _cli("exact", big, "--budget", 10) == 3
    assert _cli("verify", c5, wrong) == 4

    out = tmp_path / "out"
    failures = []
    for i, g in enumerate(small_outerplanar):
        gp = tmp_path / f"g{i}.txt"
        gp.write_text(to_edge_list(g))
        if main(["color", str(gp), "--emit", "coloring", "--out-dir", str(out)]) != 0:
            failures.append(i)
            continue
        if main(["verify", str(gp), str(out / f"g{i}.coloring")]) != 0:
            failures.append(i)
        capsys.readouterr()
    assert not failures
