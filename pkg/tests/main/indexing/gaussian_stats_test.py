import math

import numpy as np

from vqbic import errors
from vqbic import indexing
from vqbic import models
from tests import fixtures
from tests import harness

# Mean 0, covariance diag(1, 4).
CORNERS = np.array([[1, 2], [1, -2], [-1, 2], [-1, -2]], dtype=np.float32)


class TestAccumulate(harness.TestCase):

    def test_accumulate(self):
        stats = indexing.accumulate(models.FeatureMatrix(CORNERS))
        self.assertEqual(stats.n, 4)
        self.assertArrayEqual(stats.sum, np.zeros(2))
        self.assertArrayEqual(stats.scatter, np.diag([4.0, 16.0]))
        self.assertArrayEqual(stats.covariance, np.diag([1.0, 4.0]))

    def test_array(self):
        frames = fixtures.gaussian_frames(np.random.default_rng(1), 50, 4)
        self.assertEqual(indexing.accumulate(frames), indexing.accumulate(models.FeatureMatrix(frames)))

    def test_symmetric(self):
        frames = fixtures.gaussian_frames(np.random.default_rng(2), 200, 13)
        stats = indexing.accumulate(frames)
        self.assertArrayEqual(stats.scatter, stats.scatter.T)

    def test_empty(self):
        with self.assertRaises(errors.EmptySegmentError):
            indexing.accumulate(models.FeatureMatrix.empty(4))


class TestMerge(harness.TestCase):

    def setUp(self):
        rng = np.random.default_rng(3)
        self.a = fixtures.gaussian_frames(rng, 30, 3)
        self.b = fixtures.gaussian_frames(rng, 20, 3, mean=5.0)

    def test_pooled(self):
        merged = indexing.merge(indexing.accumulate(self.a), indexing.accumulate(self.b))
        pooled = indexing.accumulate(np.vstack([self.a, self.b]))
        self.assertEqual(merged.n, 50)
        self.assertAllClose(merged.sum, pooled.sum, rtol=1e-12)
        self.assertAllClose(merged.scatter, pooled.scatter, rtol=1e-12)

    def test_commutative(self):
        a = indexing.accumulate(self.a)
        b = indexing.accumulate(self.b)
        self.assertEqual(indexing.merge(a, b), indexing.merge(b, a))

    def test_identity(self):
        a = indexing.accumulate(self.a)
        self.assertEqual(indexing.merge(indexing.empty_stats(3), a), a)
        self.assertEqual(indexing.merge(a, indexing.empty_stats(3)), a)

    def test_dimension(self):
        with self.assertRaises(errors.DimensionMismatchError):
            indexing.merge(indexing.accumulate(self.a), indexing.empty_stats(4))

    def test_stack(self):
        stats = [indexing.accumulate(self.a), indexing.accumulate(self.b)]
        n, sums, scatters = indexing.stack_stats(stats)
        self.assertArrayEqual(n, np.array([30, 20]))
        self.assertEqual(sums.shape, (2, 3))
        self.assertEqual(scatters.shape, (2, 3, 3))


class TestLogDet(harness.TestCase):

    def setUp(self):
        self.stats = indexing.accumulate(CORNERS)

    def test_exact(self):
        self.assertAlmostEqual(indexing.log_det_cov(self.stats, ridge=0.0), math.log(4.0), places=12)

    def test_explicit_ridge(self):
        value = indexing.log_det_cov(self.stats, ridge=0.5)
        self.assertAlmostEqual(value, math.log(1.5 * 4.5), places=12)

    def test_default_ridge(self):
        weight = 1e-6 * 5.0 / 2
        expected = math.log((1.0 + weight) * (4.0 + weight))
        self.assertAlmostEqual(indexing.log_det_cov(self.stats), expected, places=12)

    def test_matches_slogdet(self):
        frames = fixtures.gaussian_frames(np.random.default_rng(4), 500, 13, scale=3.0)
        stats = indexing.accumulate(frames)
        sign, expected = np.linalg.slogdet(stats.covariance)
        self.assertEqual(sign, 1.0)
        self.assertAlmostEqual(indexing.log_det_cov(stats, ridge=0.0), expected, places=8)

    def test_floor(self):
        # A single frame has a zero covariance, which only the floor rescues.
        single = indexing.accumulate(np.array([[1.0, 2.0, 3.0]]))
        self.assertAlmostEqual(indexing.log_det_cov(single), 3 * math.log(1e-10), places=6)
        with self.assertRaises(errors.NotPosDefError):
            indexing.log_det_cov(single, ridge=0.0)

    def test_degenerate_hierarchy(self):
        self.assertTrue(issubclass(errors.NotPosDefError, errors.DegenerateCovarianceError))

    def test_invalid(self):
        with self.assertRaises(errors.ValidationError):
            indexing.log_det_cov(self.stats, ridge=-1.0)
        with self.assertRaises(errors.EmptySegmentError):
            indexing.log_det_cov(indexing.empty_stats(2))

    def test_half_terms(self):
        other = indexing.accumulate(fixtures.gaussian_frames(np.random.default_rng(5), 40, 2))
        terms = indexing.half_log_det_terms([self.stats, other], ridge=0.0)
        self.assertAlmostEqual(terms[0], 0.5 * 4 * math.log(4.0), places=12)
        self.assertAlmostEqual(terms[1], 0.5 * 40 * indexing.log_det_cov(other, ridge=0.0), places=10)
