import numpy as np
import pytest

from oracles import leibniz_det, random_edges
from rankforge.google import GoogleMatrix
from rankforge.graph import DirectedGraph, reverse
from rankforge.spectrum import Spectrum, full_spectrum, sort_eigenvalues, spectral_stats, trace_check


def test_two_cycle(two_cycle):
    gm = GoogleMatrix.from_graph(two_cycle, 0.85)
    s = full_spectrum(gm)
    # characteristic polynomial of [[a, b], [b, a]] has roots a + b = 1, a - b = -0.85
    assert np.allclose(s.eigenvalues, [1.0, -0.85], atol=1e-12)
    assert trace_check(gm, s) < 1e-14
    assert spectral_stats(s, 0.0) == pytest.approx((1.0, 0.85))


def test_all_dangling():
    gm = GoogleMatrix.from_graph(DirectedGraph.from_edges(5, []), 0.85)
    s = full_spectrum(gm)
    assert s.eigenvalues[0] == pytest.approx(1.0, abs=1e-12)
    assert np.abs(s.eigenvalues[1:]).max() < 1e-12
    assert spectral_stats(s, 0.0)[0] == pytest.approx(0.2)
    assert trace_check(gm, s) < 1e-12


def test_sort_order():
    vals = np.array([0.5j, -0.5, 0.5, 1.0, -0.5j, 0.2])
    assert list(sort_eigenvalues(vals)) == [1.0, 0.5, 0.5j, -0.5j, -0.5, 0.2]


def test_gbpm(gbpm):
    gm = GoogleMatrix.from_graph(gbpm, 0.85)
    s = full_spectrum(gm)
    assert len(s) == 175
    assert s.eigenvalues[0] == pytest.approx(1.0, abs=1e-8)
    fraction, lam2 = spectral_stats(s, 0.1)
    assert lam2 == pytest.approx(0.706, abs=0.005)
    assert fraction == pytest.approx(0.14, abs=0.02)
    assert trace_check(gm, s) < 1e-6 * 175

    star = full_spectrum(GoogleMatrix.from_graph(reverse(gbpm), 0.85))
    assert abs(spectral_stats(star, 0.1)[0] - fraction) <= 0.05


def test_threshold_validation():
    with pytest.raises(ValueError):
        spectral_stats(Spectrum(np.array([1.0 + 0j]), 0.85), -1)


def _conjugate_closed(values, tol=1e-8):
    remaining = list(values)
    for z in values:
        match = min(range(len(remaining)), key=lambda i: abs(remaining[i] - np.conj(z)))
        if abs(remaining[match] - np.conj(z)) > tol:
            return False
        remaining.pop(match)
    return True


def test_random_graph_invariants(rng):
    for _ in range(40):
        n = int(rng.integers(1, 30))
        alpha = float(rng.uniform(0.1, 0.95))
        g = DirectedGraph.from_edges(n, random_edges(rng, n))
        gm = GoogleMatrix.from_graph(g, alpha)
        s = full_spectrum(gm)
        assert len(s) == n
        assert s.eigenvalues[0] == pytest.approx(1.0, abs=1e-8)
        assert np.all(s.moduli[1:] <= alpha + 1e-8)
        assert _conjugate_closed(s.eigenvalues)
        assert trace_check(gm, s) < 1e-6 * n


def test_determinant_small(rng):
    for _ in range(30):
        n = int(rng.integers(1, 7))
        gm = GoogleMatrix.from_graph(DirectedGraph.from_edges(n, random_edges(rng, n)), 0.85)
        s = full_spectrum(gm)
        det = leibniz_det(gm.materialize().tolist())
        assert abs(np.prod(s.eigenvalues) - det) < 1e-8
