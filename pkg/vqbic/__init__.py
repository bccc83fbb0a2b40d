# type: ignore
# Keep this import order, models pull in errors and util first.
from .models import *
from .indexing import *
from .errors import *

__version__ = '0.1.0'

__all__ = (
    indexing.__all__
    + models.__all__
    + errors.__all__
)
