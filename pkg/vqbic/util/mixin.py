"""
    mixin
    =====

    Mixin classes.

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

from . import abc
from .. import errors

__all__ = [
    'EnumMixin',
    'StrEnumMixin',
]

StrEnumMixinType = typing.TypeVar('StrEnumMixinType', bound='StrEnumMixin')


class EnumMixin:
    """Mixin defining shared methods for enumerations."""

    __slots__ = ()

    def description(self) -> str:
        """Describe enumerated values in detail."""
        raise abc.AbstractMethodError


class StrEnumMixin(EnumMixin):
    """Mixin for string-valued enumerations read from configuration."""

    __slots__ = ()

    @classmethod
    def aliases(cls) -> typing.Mapping[str, str]:
        """Get alternate spellings accepted by `create_from_name`."""
        return {}

    def __str__(self) -> str:
        return typing.cast(str, getattr(self, 'value'))

    @classmethod
    def create_from_name(
        cls: typing.Type[StrEnumMixinType],
        name: str,
    ) -> StrEnumMixinType:
        """
        Create enumeration from its configuration spelling.

        :param name: Value or alias, case-insensitive.
        """

        key = name.strip().lower()
        key = cls.aliases().get(key, key)
        try:
            return cls(key)     # type: ignore
        except ValueError:
            choices = ', '.join(str(i) for i in cls)    # type: ignore
            raise errors.ConfigError(f'Unknown {cls.__name__} {name!r}, expected one of: {choices}.')
