"""Exit criteria on the 175-node corpus and on random graphs.

Each test records one PASS/FAIL line, printed in the "acceptance criteria"
section at the end of the pytest run.
"""

import itertools
import subprocess
import sys

import numpy as np
import pytest

from oracles import dense_google, pagerank_linear_solve, random_edges, square_crawl
from rankforge.gbpm import PROSE_TOP5
from rankforge.google import GoogleMatrix
from rankforge.graph import DirectedGraph, degree_distribution, fit_powerlaw
from rankforge.ranking import pagerank, two_d_rank, two_d_rank_sorted
from rankforge.spectrum import full_spectrum, spectral_stats, trace_check

ALPHA = 0.85


def _top5_check(computed_top8, expected):
    if computed_top8[:5] == list(expected):
        return True, f"exact top-5 {computed_top8[:5]}"
    # documented fallback: published top-5 contained in computed top-8
    ok = set(expected) <= set(computed_top8)
    return ok, f"FALLBACK top-8 {computed_top8} vs published {list(expected)}"


def test_c01_pagerank_top5(criterion, gbpm_analysis):
    ok, detail = _top5_check(gbpm_analysis.pagerank.top(8), PROSE_TOP5["pagerank"])
    criterion("C1 PageRank top-5 = 33 32 5 2 87", ok, detail)


def test_c02_cheirank_top5(criterion, gbpm_analysis):
    ok, detail = _top5_check(gbpm_analysis.cheirank.top(8), PROSE_TOP5["cheirank"])
    criterion("C2 CheiRank top-5 = 1 5 2 6 7", ok, detail)


def test_c03_twodrank_top5(criterion, gbpm_analysis):
    ok, detail = _top5_check(gbpm_analysis.twod.top(8), PROSE_TOP5["twodrank"])
    criterion("C3 2DRank top-5 = 5 2 119 1 48", ok, detail)


def test_c04_principals_at_rank_18(criterion, gbpm_analysis):
    k = int(gbpm_analysis.pagerank.k[0])
    criterion("C4 node 1 PageRank position 18 +/- 1", abs(k - 18) <= 1, f"K(1) = {k}")


def test_c05_correlator(criterion, gbpm_analysis):
    kappa = gbpm_analysis.kappa
    criterion("C5 kappa = 0.164 +/- 0.005", abs(kappa - 0.164) <= 0.005, f"kappa = {kappa:.6f}")


@pytest.fixture(scope="module")
def gbpm_spectrum(gbpm):
    gm = GoogleMatrix.from_graph(gbpm, ALPHA)
    return gm, full_spectrum(gm)


def test_c06_lambda2_and_bulk(criterion, gbpm_spectrum):
    _, s = gbpm_spectrum
    lam2 = s.moduli[1]
    bulk = s.moduli[2:].max()
    ok = abs(lam2 - 0.706) <= 0.005 and bulk < 0.52 + 0.01
    criterion(
        "C6 |lambda2| = 0.706 +/- 0.005 and max |lambda_3..175| < 0.53",
        ok,
        f"|lambda2| = {lam2:.6f}, max |lambda_3..| = {bulk:.6f} (lambda3 = {s.eigenvalues[2]:.6f})",
    )


def test_c07_fraction_above_0_1(criterion, gbpm_spectrum):
    _, s = gbpm_spectrum
    fraction, _ = spectral_stats(s, 0.1)
    criterion("C7 fraction |lambda| > 0.1 = 0.14 +/- 0.02", abs(fraction - 0.14) <= 0.02, f"fraction = {fraction:.4f}")


def _conjugate_closed(values, tol=1e-8):
    remaining = list(values)
    for z in values:
        j = min(range(len(remaining)), key=lambda i: abs(remaining[i] - np.conj(z)))
        if abs(remaining[j] - np.conj(z)) > tol:
            return False
        remaining.pop(j)
    return True


def _spectrum_ok(gm, s):
    n = gm.n
    return (
        len(s) == n
        and abs(s.eigenvalues[0] - 1) <= 1e-8
        and bool(np.all(s.moduli[1:] <= gm.alpha + 1e-8))
        and _conjugate_closed(s.eigenvalues)
        and trace_check(gm, s) < 1e-6 * n
    )


def test_c08_spectrum_invariants(criterion, gbpm_spectrum):
    rng = np.random.default_rng(8)
    failures = [] if _spectrum_ok(*gbpm_spectrum) else ["gbpm"]
    for trial in range(200):
        n = int(rng.integers(1, 61))
        alpha = float(rng.uniform(0.05, 0.95))
        gm = GoogleMatrix.from_graph(DirectedGraph.from_edges(n, random_edges(rng, n)), alpha)
        if not _spectrum_ok(gm, full_spectrum(gm)):
            failures.append(f"trial {trial} (n={n})")
    criterion("C8 spectrum invariants on corpus + 200 random graphs", not failures, f"failures: {failures or 'none'}")


def test_c09_property_suite(criterion, gbpm):
    rng = np.random.default_rng(9)
    problems = []

    graphs = [(gbpm.n, list(gbpm.links()), ALPHA)]
    for _ in range(100):
        n = int(rng.integers(1, 61))
        graphs.append((n, random_edges(rng, n), float(rng.uniform(0.05, 0.95))))
    for n, edges, alpha in graphs:
        gm = GoogleMatrix.from_graph(DirectedGraph.from_edges(n, edges), alpha)
        dense = gm.materialize()
        if np.abs(dense.sum(axis=0) - 1).max() > 1e-12:
            problems.append(f"column sums n={n}")
        pr = pagerank(gm)
        if abs(pr.p.sum() - 1) > 1e-10:
            problems.append(f"sum P n={n}")
        if pr.p.min() < (1 - alpha) / n - 1e-15:
            problems.append(f"P floor n={n}")
        if sorted(pr.k.tolist()) != list(range(1, n + 1)):
            problems.append(f"K not a permutation n={n}")

    exhaustive = 0
    for n in range(1, 7):
        perms = [np.array(p) for p in itertools.permutations(range(1, n + 1))]
        for k in perms:
            kl = k.tolist()
            for ks in perms:
                crawl = two_d_rank(k, ks).k2.tolist()
                exhaustive += 1
                if crawl != two_d_rank_sorted(k, ks).k2.tolist() or crawl != square_crawl(kl, ks.tolist()):
                    problems.append(f"2DRank K={kl} K*={ks.tolist()}")
    for _ in range(1000):
        n = int(rng.integers(1, 65))
        k, ks = rng.permutation(n) + 1, rng.permutation(n) + 1
        crawl = two_d_rank(k, ks).k2
        if sorted(crawl.tolist()) != list(range(1, n + 1)):
            problems.append(f"K2 not a permutation n={n}")
        if not np.array_equal(crawl, two_d_rank_sorted(k, ks).k2) or crawl.tolist() != square_crawl(k.tolist(), ks.tolist()):
            problems.append(f"2DRank random n={n}")
    criterion(
        "C9 property suite",
        not problems,
        f"{len(graphs)} graphs, {exhaustive} exhaustive + 1000 random 2DRank pairs; problems: {problems[:5] or 'none'}",
    )


def test_c10_oracle_equivalence(criterion):
    rng = np.random.default_rng(10)
    worst = 0.0
    with_dangling = 0
    for _ in range(100):
        n = int(rng.integers(1, 51))
        edges = random_edges(rng, n)
        g = DirectedGraph.from_edges(n, edges)
        with_dangling += bool(g.dangling())
        pr = pagerank(GoogleMatrix.from_graph(g, ALPHA))
        worst = max(worst, float(np.abs(pr.p - pagerank_linear_solve(n, edges, ALPHA)).max()))
    criterion(
        "C10 power iteration = linear solve to 1e-8 on 100 graphs",
        worst < 1e-8 and with_dangling > 0,
        f"max L-inf error {worst:.2e}; {with_dangling} graphs with dangling nodes",
    )


def test_c11_degree_fit(criterion, gbpm):
    nu = {d: fit_powerlaw(degree_distribution(gbpm, d)) for d in ("in", "out")}
    synthetic = fit_powerlaw({d: 1000 * d**-3.0 for d in (1, 2, 4, 8)})
    ok = all(2.0 <= v <= 4.0 for v in nu.values()) and abs(synthetic - 3.0) <= 1e-9
    criterion(
        "C11 degree fit nu in [2, 4] both directions; synthetic nu = 3 to 1e-9",
        ok,
        f"nu_in = {nu['in']:.4f}, nu_out = {nu['out']:.4f}, synthetic = {synthetic!r}",
    )


def test_c12_cli_determinism(criterion, tmp_path):
    mismatched = []
    scenario = tmp_path / "scenario.json"
    scenario.write_text('{"add": [[33, 1]], "remove": [[3, 5]]}')
    commands = [
        ["rank"],
        ["rank", "--format", "json"],
        ["spectrum"],
        ["spectrum", "--reversed"],
        ["degrees", "--fit"],
        ["perturb", "--scenario", str(scenario), "--format", "json"],
    ]
    for cmd in commands:
        outputs = []
        for run in ("a", "b"):
            out = tmp_path / f"{cmd[0]}-{len(cmd)}-{run}"
            subprocess.run(
                [sys.executable, "-m", "rankforge", *cmd, "--builtin", "gbpm", "--out", str(out)],
                check=True,
                capture_output=True,
            )
            outputs.append(out.read_bytes())
        if outputs[0] != outputs[1]:
            mismatched.append(" ".join(cmd))
    criterion("C12 byte-identical CLI outputs", not mismatched, f"{len(commands)} commands; mismatched: {mismatched or 'none'}")
