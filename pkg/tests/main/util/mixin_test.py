import enum

from vqbic import errors
from vqbic import util
from tests import harness


class Window(util.StrEnumMixin, str, enum.Enum):
    HAMMING = 'hamming'
    HANN = 'hann'

    def description(self) -> str:
        return self.value.title()

    @classmethod
    def aliases(cls):
        return {'hanning': 'hann'}


class Plain(util.StrEnumMixin, str, enum.Enum):
    ONE = 'one'


class TestStrEnumMixin(harness.TestCase):

    def test_str(self):
        self.assertEqual(str(Window.HANN), 'hann')
        self.assertEqual(f'{Window.HAMMING}', 'hamming')

    def test_create_from_name(self):
        self.assertEqual(Window.create_from_name('hamming'), Window.HAMMING)
        self.assertEqual(Window.create_from_name('  HANN '), Window.HANN)
        self.assertEqual(Window.create_from_name('Hanning'), Window.HANN)
        self.assertEqual(Plain.create_from_name('one'), Plain.ONE)

    def test_unknown(self):
        with self.assertRaises(errors.ConfigError) as context:
            Window.create_from_name('blackman')
        self.assertIn('hamming, hann', str(context.exception))

    def test_description(self):
        self.assertEqual(Window.HANN.description(), 'Hann')
        with self.assertRaises(util.AbstractMethodError):
            Plain.ONE.description()
