"""The eight acceptance criteria, each at its stated scale and time budget.

Every test prints one ``criterion N: PASS|FAIL`` line (visible with or
without ``-s``) before asserting.
"""

from __future__ import annotations

import itertools
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from ababfree import (
    OrderedHypergraph,
    build_Hc,
    colorability_oracle,
    find_unsplittable_pair,
    is_abl_free_ordered,
    is_proper_coloring,
    monochromatic_edge_Hc,
    three_color,
)
from ababfree.constructions import hc_series
from ababfree.generators import (
    perturbed_realization,
    random_curve_family,
    random_free_hypergraph,
    random_points,
    random_stabbed_disks,
)
from ababfree.geometry import (
    boundary_intersections,
    compactify,
    crossing_count,
    enumerate_stabbed_disk_hypergraph,
    evenize,
    hypergraph_from_curves,
    hypergraph_from_stabbed_disks,
    is_even,
    realize_as_curves,
)
from fixtures import disk_triangle
from oracles import splits_brute

ORIGIN = (0, 0)


@pytest.fixture
def report(capsys):
    def emit(n: int, ok: bool, detail: str, elapsed: float, budget: float):
        within = elapsed < budget
        status = "PASS" if ok and within else "FAIL"
        with capsys.disabled():
            print(f"\ncriterion {n}: {status}  {detail}  [{elapsed:.1f}s cpu, budget {budget:.0f}s]")
        assert ok, detail
        assert within, f"criterion {n} took {elapsed:.1f}s > {budget}s"

    return emit


def _color_ok(h) -> bool:
    col = three_color(h)
    return is_proper_coloring(h, col) and col.palette_size <= 3


def test_criterion_1_three_colorable(report):
    rng = random.Random(1)
    t0 = time.process_time()
    counts = {"enumerated disks": 0, "random disks": 0, "curves t=2": 0, "realize+perturb": 0}
    failures = []
    for _ in range(30):
        s = random_points(rng, rng.randint(3, 15), avoid=ORIGIN)
        h = enumerate_stabbed_disk_hypergraph(s, ORIGIN)
        counts["enumerated disks"] += 1
        if not _color_ok(h):
            failures.append(h)
    for _ in range(3500):
        s = random_points(rng, rng.randint(1, 15), avoid=ORIGIN)
        h = hypergraph_from_stabbed_disks(s, random_stabbed_disks(rng, rng.randint(1, 20)))
        counts["random disks"] += 1
        if not _color_ok(h):
            failures.append(h)
    for _ in range(3300):
        s, fam = random_curve_family(rng, rng.randint(1, 10), rng.randint(1, 15), 2)
        h = hypergraph_from_curves(s, fam)
        counts["curves t=2"] += 1
        if not _color_ok(h):
            failures.append(h)
    for _ in range(3300):
        base = random_free_hypergraph(rng, rng.randint(1, 12), rng.randint(1, 10))
        s, fam = perturbed_realization(rng, base)
        h = hypergraph_from_curves(s, fam)
        counts["realize+perturb"] += 1
        if h != base or not _color_ok(h):
            failures.append(h)
    total = sum(counts.values())
    detail = f"{total} instances {counts}, {len(failures)} failures"
    report(1, total >= 10_000 and not failures, detail, time.process_time() - t0, 60)


def _splitter_families(n: int = 7, extra: int = 4):
    """Every (A, splitters) with A plus at most ``extra`` other edges, all pairwise ABAB-free.

    Only edges splitting some consecutive pair of A can change which pair is
    found for A, so these families cover every ABAB-free hypergraph on at
    most ``n`` vertices with at most ``extra + 1`` hyperedges.
    """
    subsets = list(range(1, 1 << n))

    def runs(a, b):
        r, prev = 0, None
        for v in range(n):
            ia, ib = a >> v & 1, b >> v & 1
            if ia != ib and ia != prev:
                r, prev = r + 1, ia
        return r

    free = [[runs(a, b) < 4 for b in subsets] for a in subsets]
    for ia, a in enumerate(subsets):
        verts = [v for v in range(n) if a >> v & 1]
        if len(verts) < 2:
            continue
        pairs = list(zip(verts, verts[1:]))
        cand = [
            j
            for j, b in enumerate(subsets)
            if j != ia and free[ia][j] and any(splits_brute(p, q, [v for v in range(n) if b >> v & 1]) for p, q in pairs)
        ]
        stack = [(0, [])]
        while stack:
            start, chosen = stack.pop()
            yield tuple(verts), [tuple(v for v in range(n) if subsets[j] >> v & 1) for j in chosen]
            if len(chosen) < extra:
                for k in range(start, len(cand)):
                    j = cand[k]
                    if all(free[i][j] for i in chosen):
                        stack.append((k + 1, chosen + [j]))


def test_criterion_2_unsplittable_pairs(report):
    t0 = time.process_time()
    checked = 0
    failures = []
    for a, others in _splitter_families():
        h = OrderedHypergraph(tuple(str(v) for v in range(7)), (a, *others))
        pair = find_unsplittable_pair(a, h)
        consecutive = list(zip(a, a[1:]))
        ok = pair in consecutive and not any(splits_brute(*pair, b) for b in h.edges)
        # leftmost: every earlier consecutive pair is split by some edge
        ok = ok and all(any(splits_brute(p, q, b) for b in h.edges) for p, q in consecutive[: consecutive.index(pair)])
        checked += 1
        if not ok:
            failures.append((a, others, pair))
    detail = f"{checked} (hyperedge, splitter family) cases on 7 vertices, {len(failures)} failures"
    report(2, checked > 0 and not failures, detail, time.process_time() - t0, 300)


def test_criterion_3_lower_bound_constructions(report):
    t0 = time.process_time()
    notes = []
    ok = True
    for c, m in [(2, 2), (2, 3), (3, 2)]:
        t1 = time.process_time()
        none = colorability_oracle(build_Hc(c, m), c) is None
        dt = time.process_time() - t1
        ok &= none and dt < 1
        notes.append(f"H_{c}(m={m}) not {c}-colorable={none} in {dt:.2f}s")
    t1 = time.process_time()
    count = 0
    for m in range(2, 10):
        for c, h in hc_series(m, 400):
            ok &= all(len(e) == m for e in h.edges) and is_abl_free_ordered(h, 2.5) is None
            count += 1
    dt = time.process_time() - t1
    ok &= dt < 60
    notes.append(f"{count} instances with <=400 vertices ABABA-free in {dt:.1f}s")
    rng = random.Random(3)
    h = build_Hc(3, 3)
    edges = set(h.edges)
    for _ in range(200):
        colors = [rng.randrange(3) for _ in range(h.n)]
        e = monochromatic_edge_Hc(3, 3, colors)
        ok &= e in edges and len({colors[v] for v in e}) == 1
    notes.append("H_3(m=3) monochromatic edge extracted for 200 random 3-colorings")
    report(3, ok, "; ".join(notes), time.process_time() - t0, 62)


def test_criterion_4_curves_give_free_hypergraphs(report):
    rng = random.Random(4)
    t0 = time.process_time()
    failures = 0
    for k in range(1000):
        t = k % 4 + 1
        s, fam = random_curve_family(rng, rng.randint(1, 8), rng.randint(1, 12), t)
        if fam.max_crossings() > t:
            failures += 1
            continue
        if is_abl_free_ordered(hypergraph_from_curves(s, fam), Fraction(t + 2, 2)) is not None:
            failures += 1
    report(4, failures == 0, f"1000 families, t in 1..4, {failures} failures", time.process_time() - t0, 30)


def _free_families(n: int, max_edges: int):
    """All sets of at most ``max_edges`` hyperedges on ``n`` ordered vertices that are ABAB-free."""
    edges = [c for k in range(1, n + 1) for c in itertools.combinations(range(n), k)]

    def runs(a, b):
        sa, sb = set(a), set(b)
        seq = [v in sa for v in range(n) if (v in sa) != (v in sb)]
        return sum(1 for k, x in enumerate(seq) if k == 0 or x != seq[k - 1])

    free = [[runs(a, b) < 4 for b in edges] for a in edges]
    stack = [(0, [])]
    while stack:
        start, chosen = stack.pop()
        yield [edges[i] for i in chosen]
        if len(chosen) < max_edges:
            for j in range(start, len(edges)):
                if all(free[i][j] for i in chosen):
                    stack.append((j + 1, chosen + [j]))


def test_criterion_5_realization_round_trip(report):
    t0 = time.process_time()
    count = 0
    failures = []
    for n in range(1, 7):
        labels = tuple(str(v) for v in range(n))
        for fam in _free_families(n, 4):
            h = OrderedHypergraph(labels, tuple(fam))
            s, curves = realize_as_curves(h)
            cs = curves.curves
            ok = hypergraph_from_curves(s, curves) == h
            ok = ok and all(crossing_count(cs[i], cs[j]) <= 2 for i in range(len(cs)) for j in range(i + 1, len(cs)))
            count += 1
            if not ok:
                failures.append(h)
    detail = f"{count} ABAB-free hypergraphs (n<=6, <=4 edges), {len(failures)} failures"
    report(5, not failures, detail, time.process_time() - t0, 120)


def test_criterion_6_evenize_and_compactify(report):
    rng = random.Random(6)
    t0 = time.process_time()
    failures = 0
    for _ in range(500):
        h = random_free_hypergraph(rng, rng.randint(1, 8), rng.randint(1, 6))
        s, fam = realize_as_curves(h)
        even = evenize(s, fam)
        ok = is_even(even) and hypergraph_from_curves(s, even) == h
        ok = ok and all(v % 2 == 0 for row in even.crossing_matrix() for v in row)
        polys, stab = compactify(even, s)
        ok = ok and all(p.is_simple() and p.contains(stab) for p in polys)
        ok = ok and all(
            len(boundary_intersections(polys[i], polys[j])) <= 2 for i in range(len(polys)) for j in range(i + 1, len(polys))
        )
        traces = {tuple(k for k in range(h.n) if p.contains(s.points[k])) for p in polys} - {()}
        ok = ok and traces == set(h.edges)
        failures += not ok
    report(6, failures == 0, f"500 realizations, {failures} failures", time.process_time() - t0, 60)


def test_criterion_7_two_colors_do_not_suffice(report):
    t0 = time.process_time()
    s, fam = disk_triangle()
    h = hypergraph_from_stabbed_disks(s, fam)
    ok = len(s) == 3 and len(fam) == 3 and set(h.edges) == {(0, 1), (0, 2), (1, 2)}
    ok = ok and colorability_oracle(h, 2) is None
    report(7, ok, "3 points, 3 disks through the origin, trace = triangle, 2-coloring: none", time.process_time() - t0, 1)


TRI = '{"vertices":["a","b","c"],"edges":[[0,1],[1,2],[0,2]]}'
SMALL = '{"vertices":["a","b","c","d"],"edges":[[0,1,3],[1,2]]}'


def _cli(argv, stdin, hash_seed):
    env = dict(os.environ, PYTHONHASHSEED=str(hash_seed))
    r = subprocess.run([sys.executable, "-m", "ababfree.cli", *argv], input=stdin.encode() if isinstance(stdin, str) else stdin, capture_output=True, env=env)
    return r.returncode, r.stdout, r.stderr


def test_criterion_8_cli_determinism(report, tmp_path):
    def out(argv, stdin=""):
        return _cli(argv, stdin, 0)[1].decode()

    curves = out(["realize"], SMALL)
    even = out(["evenize"], curves)
    polys = out(["compactify"], even)
    disks = out(["enum-disks", "--random", "9", "--seed", "3", "--emit-disks"])
    hyper = out(["enum-disks", "--random", "9", "--seed", "3"])
    attached = out(["color3", "--attach"], hyper)
    colors = tmp_path / "colors.json"
    colors.write_text(out(["color3"], SMALL))
    cases = [
        (["check-free", "--l", "2"], SMALL),
        (["find-order", "--l", "2"], SMALL),
        (["color3"], SMALL),
        (["gen-hc", "--c", "3", "--m", "3"], ""),
        (["gen-tree", "--a", "3", "--b", "3"], ""),
        (["from-curves"], curves),
        (["realize"], SMALL),
        (["evenize"], curves),
        (["compactify"], even),
        (["from-disks"], disks),
        (["enum-disks", "--random", "9", "--seed", "3"], ""),
        (["enum-disks"], disks),
        (["oracle-color", "--c", "3"], TRI),
        (["render", "--colors", str(colors)], curves),
        (["render"], polys),
        (["render"], disks),
        (["verify"], attached),
    ]
    t0 = time.process_time()
    wall = time.perf_counter()
    differing = []
    for argv, stdin in cases:
        first = _cli(argv, stdin.encode(), 1)
        second = _cli(argv, stdin.encode(), 2)
        if first != second or first[0] != 0:
            differing.append(argv[0])
    commands = sorted({argv[0] for argv, _ in cases})
    detail = f"{len(cases)} runs over {len(commands)} subcommands, differing or failing: {differing or 'none'}"
    # the runs happen in child processes, so charge their wall time
    report(8, not differing, detail, max(time.process_time() - t0, time.perf_counter() - wall), 120)
