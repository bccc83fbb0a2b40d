from .base import *
from .audio_error import *
from .feature_error import *
from .model_error import *
from .indexing_error import *
from .config_error import *

__all__ = (
    base.__all__
    + audio_error.__all__
    + feature_error.__all__
    + model_error.__all__
    + indexing_error.__all__
    + config_error.__all__
)
