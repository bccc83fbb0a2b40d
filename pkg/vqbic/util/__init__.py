# Globs
from .abc import *
from .coercion import *
from .dataclasses import *
from .mixin import *
from .parallel import *
from .stdint import *

__all__ = (
    abc.__all__
    + coercion.__all__
    + dataclasses.__all__
    + mixin.__all__
    + parallel.__all__
    + stdint.__all__
)
