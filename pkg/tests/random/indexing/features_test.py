import numpy as np

from vqbic import indexing
from tests import harness


class TestFrameCount(harness.TestCase):

    @harness.randomize(
        calls=1000,
        samples={'min_value': 0, 'max_value': 64000},
        window={'min_value': 1, 'max_value': 2048},
        hop={'min_value': 1, 'max_value': 1024},
    )
    def test_closed_form(self, samples: int, window: int, hop: int):
        starts = range(0, samples - window + 1, hop)
        self.assertEqual(indexing.frame_count(samples, window, hop), len(starts))


class TestDeltas(harness.TestCase):

    @harness.randomize(
        count={'min_value': 1, 'max_value': 60},
        dimension={'min_value': 1, 'max_value': 6},
        alpha={'min_value': -5.0, 'max_value': 5.0},
        beta={'min_value': -5.0, 'max_value': 5.0},
    )
    def test_linear(
        self,
        seed: harness.Seed,
        count: int,
        dimension: int,
        alpha: harness.Unit,
        beta: harness.Unit,
    ):
        rng = np.random.default_rng(seed)
        x = rng.normal(size=(count, dimension))
        y = rng.normal(scale=10.0, size=(count, dimension))
        combined = indexing.compute_deltas(alpha * x + beta * y)
        expected = alpha * indexing.compute_deltas(x) + beta * indexing.compute_deltas(y)
        self.assertAllClose(combined, expected, rtol=1e-9, atol=1e-9)

    @harness.randomize(calls=10, count={'min_value': 1, 'max_value': 40})
    def test_constant(self, seed: harness.Seed, count: int):
        row = np.random.default_rng(seed).normal(size=(1, 4))
        self.assertArrayEqual(indexing.compute_deltas(np.repeat(row, count, axis=0)), np.zeros((count, 4)))
