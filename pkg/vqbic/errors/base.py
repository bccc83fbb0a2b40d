"""
    base
    ====

    Root of the vqbic exception hierarchy.

    Every error raised on purpose by the library derives from `VqbicError`
    and from exactly one of two branches, which the command-line front end
    maps to exit codes: `ValidationError` (bad input or violated
    precondition) and `IoError` (filesystem failure).

    License
    -------

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
"""

from __future__ import annotations
import typing

__all__ = [
    'IoError',
    'ValidationError',
    'VqbicError',
]


class VqbicError(Exception):
    """Base class for all vqbic errors."""


class ValidationError(VqbicError, ValueError):
    """Input data or parameters violate a documented precondition."""


class IoError(VqbicError, OSError):
    """A file or directory could not be read or written."""

    path: typing.Optional[str]

    def __init__(self, message: str, path: typing.Optional[str] = None):
        super().__init__(message)
        self.path = path

    def __str__(self) -> str:
        message = super().__str__()
        if self.path is None:
            return message
        return f'{message}: {self.path}'
