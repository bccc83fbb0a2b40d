import collections
import math

import numpy as np

from vqbic import indexing
from vqbic import models
from tests import fixtures
from tests import harness


class TestDeltaBic(harness.TestCase):

    def test_identical_covariance(self):
        rng = np.random.default_rng(1)
        for dimension in (1, 2, 5, 13):
            stats = indexing.accumulate(fixtures.gaussian_frames(rng, 200, dimension))
            p = models.BicParams(1.5, dimension)
            expected = 1.5 * indexing.penalty(dimension, 400)
            self.assertAlmostEqual(indexing.delta_bic(stats, stats, p), expected, delta=1e-9 * expected)

    def test_penalty(self):
        self.assertAlmostEqual(indexing.penalty(2, 100), 11.5129, delta=1e-3)

    def test_symmetry(self):
        rng = np.random.default_rng(2)
        for _ in range(100):
            dimension = int(rng.integers(1, 8))
            a = indexing.accumulate(fixtures.gaussian_frames(rng, int(rng.integers(20, 200)), dimension))
            b = indexing.accumulate(fixtures.gaussian_frames(rng, int(rng.integers(20, 200)), dimension, mean=1.0))
            p = models.BicParams(float(rng.uniform(0.1, 5.0)), dimension)
            self.assertEqual(indexing.delta_bic(a, b, p), indexing.delta_bic(b, a, p))


class TestThreshold(harness.TestCase):

    def test_zero_spread(self):
        rng = np.random.default_rng(3)
        frames = fixtures.gaussian_frames(rng, 400, 5)
        segments = [models.FeatureMatrix(frames, i) for i in range(6)]
        estimate = indexing.estimate_lambda(segments)
        self.assertEqual(estimate.sigma, 0.0)
        self.assertEqual(estimate.lambda_act, 2 * estimate.lambda_bar)

    def test_scaling_invariance(self):
        rng = np.random.default_rng(4)
        frames = rng.standard_normal((300, 6)) + 2.0
        for scale in (0.05, 0.5, 7.0, 1e3):
            bounds = []
            for x in (frames, frames * scale):
                left = indexing.accumulate(x[:150])
                right = indexing.accumulate(x[150:])
                bounds.append(indexing.segment_lambda_bound(indexing.merge(left, right), left, right, 6))
            original, scaled = bounds
            self.assertAlmostEqual(scaled, original, delta=1e-6 * abs(original))

    def test_homogeneous_band(self):
        for seed in range(20):
            rng = np.random.default_rng(seed)
            segments = [fixtures.segment(rng, i, 1000, 13) for i in range(4)]
            estimate = indexing.estimate_lambda(segments)
            self.assertGreater(estimate.lambda_act, 0.0)
            self.assertLess(estimate.lambda_act, 10.0)


class TestStatisticsEngine(harness.TestCase):

    def test_randomized(self):
        rng = np.random.default_rng(5)
        for _ in range(1000):
            dimension = int(rng.integers(1, 7))
            count = int(rng.integers(dimension + 2, 120))
            frames = rng.standard_normal((count, dimension)) * rng.uniform(0.5, 3.0) + rng.uniform(-5, 5)
            split = int(rng.integers(1, count))

            merged = indexing.merge(indexing.accumulate(frames[:split]), indexing.accumulate(frames[split:]))
            pooled = indexing.accumulate(frames)
            self.assertEqual(merged.n, pooled.n)
            self.assertAllClose(merged.sum, pooled.sum, rtol=1e-9, atol=1e-9)
            self.assertAllClose(merged.scatter, pooled.scatter, rtol=1e-9, atol=1e-9)

            mean = frames.mean(axis=0)
            cov = (frames - mean).T @ (frames - mean) / count
            oracle = float(np.sum(np.log(np.linalg.eigvalsh(cov))))
            self.assertAlmostEqual(indexing.log_det_cov(pooled, 0.0), oracle, delta=1e-8)


def brute_force_purity(assignment, reference, weights):
    mass = collections.defaultdict(int)
    for key, cluster_id in assignment.items():
        mass[cluster_id, reference[key]] += weights[key]
    clusters = {c for c, _ in mass}
    speakers = {s for _, s in mass}
    total = sum(weights.values())
    cp = sum(max(mass[c, s] for s in speakers) for c in clusters)
    sp = sum(max(mass[c, s] for c in clusters) for s in speakers)
    return float(cp) / float(total), float(sp) / float(total)


class TestMetrics(harness.TestCase):

    def random_problem(self, rng):
        count = int(rng.integers(1, 60))
        speakers = [f'spk{i}' for i in range(int(rng.integers(1, 6)))]
        reference = {i: speakers[int(rng.integers(len(speakers)))] for i in range(count)}
        assignment = {i: int(rng.integers(1, 8)) for i in range(count)}
        weights = {i: int(rng.integers(1, 1000)) for i in range(count)}
        return assignment, reference, weights

    def test_brute_force(self):
        rng = np.random.default_rng(6)
        for _ in range(100):
            assignment, reference, weights = self.random_problem(rng)
            self.assertEqual(
                indexing.purity(assignment, reference, weights),
                brute_force_purity(assignment, reference, weights),
            )

    def test_refinement(self):
        rng = np.random.default_rng(7)
        for _ in range(100):
            assignment, reference, weights = self.random_problem(rng)
            cp, _ = indexing.purity(assignment, reference, weights)
            target = assignment[int(rng.integers(len(assignment)))]
            split = {
                k: (v + 100 if v == target and rng.random() < 0.5 else v)
                for k, v in assignment.items()
            }
            refined, _ = indexing.purity(split, reference, weights)
            self.assertGreaterEqual(refined, cp - 1e-12)
            self.assertTrue(math.isfinite(refined))
