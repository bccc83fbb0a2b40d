from .config import *
from .commands import *

__all__ = (
    config.__all__
    + commands.__all__
)
