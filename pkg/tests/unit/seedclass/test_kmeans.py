"""Unit tests for k-means and the elbow method."""

import numpy as np
import pytest

from v6forge.exceptions import TooFewGroups
from v6forge.seedclass import elbow, kmeans, knee


def _blobs(centres, per_blob=5, spread=0.01, rng_seed=0):
    rng = np.random.default_rng(rng_seed)
    points = [c + rng.uniform(-spread, spread, size=len(c)) for c in centres for _ in range(per_blob)]
    return np.array(points)


def _three_blobs():
    """Equilateral blobs: dims 0-7, 8-15 and 16-23 high in turn."""
    centres = []
    for blob in range(3):
        c = np.full(24, 0.1)
        c[blob * 8:(blob + 1) * 8] = 0.9
        centres.append(c)
    return _blobs(centres)


class TestKMeans:
    """Tests for kmeans."""

    def test_single_cluster_is_mean(self):
        points = _three_blobs()
        model = kmeans(points, 1)
        assert np.allclose(model.centroids[0], points.mean(axis=0))
        assert model.sse == pytest.approx(((points - points.mean(axis=0)) ** 2).sum())

    def test_recovers_two_blobs(self):
        points = _blobs([np.zeros(4), np.ones(4)])
        model = kmeans(points, 2, rng_seed=1)
        assert len(set(model.assignments[:5])) == 1
        assert len(set(model.assignments[5:])) == 1
        assert model.assignments[0] != model.assignments[5]

    def test_one_point_per_cluster_has_zero_sse(self):
        points = _three_blobs()[:4]
        assert kmeans(points, 4).sse == pytest.approx(0.0)

    def test_sse_trace_never_increases(self):
        model = kmeans(_three_blobs(), 3, rng_seed=4)
        trace = model.sse_trace
        assert all(b <= a + 1e-12 for a, b in zip(trace, trace[1:]))

    def test_deterministic_under_seed(self):
        points = _three_blobs()
        assert kmeans(points, 3, rng_seed=9).assignments == kmeans(points, 3, rng_seed=9).assignments

    def test_too_few_points(self):
        with pytest.raises(TooFewGroups) as exc_info:
            kmeans(np.zeros((2, 3)), 3)
        assert exc_info.value.k == 3

    def test_coincident_points(self):
        """Identical points still yield k centroids and zero SSE."""
        model = kmeans(np.zeros((4, 2)), 3)
        assert model.centroids.shape == (3, 2)
        assert model.sse == 0.0


class TestElbow:
    """Tests for elbow and knee."""

    def test_three_blobs_choose_three(self):
        result = elbow(_three_blobs(), k_max=8, rng_seed=2)
        assert result.chosen_k == 3
        assert len(result.sse_curve) == 8
        assert result.model_for(3).k == 3

    def test_curve_non_increasing(self):
        curve = elbow(_three_blobs(), k_max=6).sse_curve
        assert all(b <= a + 1e-9 for a, b in zip(curve, curve[1:]))

    def test_boundary_k_max_two(self):
        result = elbow(_blobs([np.zeros(3)]), k_max=2)
        assert len(result.sse_curve) == 2
        assert result.chosen_k in (1, 2)

    def test_override(self):
        assert elbow(_three_blobs(), k_max=4, override=2).chosen_k == 2

    def test_k_max_below_two(self):
        with pytest.raises(ValueError):
            elbow(_three_blobs(), k_max=1)

    @pytest.mark.parametrize("curve,expected", [
        ([100.0, 50.0, 1.0, 0.9, 0.8], 3),
        ([10.0, 10.0, 10.0], 1),
        ([5.0], 1),
    ])
    def test_knee(self, curve, expected):
        assert knee(curve) == expected
