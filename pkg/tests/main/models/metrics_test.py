import bidict
import numpy as np

from vqbic import errors
from vqbic import models
from tests import harness


@harness.model_test_case({
    'type': models.PurityReport,
    'data': {
        'sp_segment': 1.0,
        'cp_segment': 2 / 3,
        'sp_frame': 1.0,
        'cp_frame': 0.75,
        'cluster_index': bidict.frozenbidict({7: 0}),
        'speaker_index': bidict.frozenbidict({'spk1': 0, 'spk2': 1}),
        'confusion': np.array([[300.0, 100.0]]),
    },
    'unequal': {
        'cp_frame': 0.5,
    },
    'record': {
        'sp_segment': 1.0,
        'cp_segment': 2 / 3,
        'sp_frame': 1.0,
        'cp_frame': 0.75,
        'n_clusters': 1,
        'n_speakers': 2,
    },
})
class TestPurityReport(harness.TestCase):

    def test_counts(self):
        self.assertEqual(self.model.n_clusters, 1)
        self.assertEqual(self.model.n_speakers, 2)

    def test_mass(self):
        self.assertEqual(self.model.mass(7, 'spk1'), 300.0)
        self.assertEqual(self.model.mass(7, 'spk2'), 100.0)
        with self.assertRaises(KeyError):
            self.model.mass(8, 'spk1')

    def test_dominant_speaker(self):
        self.assertEqual(self.model.dominant_speaker(7), 'spk1')

    def test_dominant_speaker_tie(self):
        report = self.model.replace(confusion=np.array([[100.0, 100.0]]))
        self.assertEqual(report.dominant_speaker(7), 'spk1')

    def test_to_text(self):
        text = self.model.to_text()
        lines = text.splitlines()
        self.assertEqual(lines[0], 'purity report')
        self.assertIn('segment level  SP 1.0000  CP 0.6667', lines)
        self.assertIn('frame level    SP 1.0000  CP 0.7500', lines)
        self.assertIn('       7      300      100', lines)
        summary = lines[lines.index('[summary]') + 1:]
        self.assertEqual(summary[3], 'cp_frame = 0.75')
        self.assertEqual(summary[-1], 'n_speakers = 2')
        self.assertTrue(text.endswith('\n'))

    def test_invalid(self):
        with self.assertRaises(errors.DimensionMismatchError):
            self.model.replace(confusion=np.zeros((2, 2)))
        with self.assertRaises(errors.ValidationError):
            self.model.replace(sp_segment=1.5)
        with self.assertRaises(errors.ValidationError):
            self.model.replace(cp_frame=-0.1)
        with self.assertRaises(bidict.ValueDuplicationError):
            self.model.replace(speaker_index={'spk1': 0, 'spk2': 0})
