"""
    coercion
    ========

    Conversion of record values (possibly text from a configuration file)
    to typed model fields.

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

from .. import errors

__all__ = [
    'AUTO',
    'as_bool',
    'auto_or',
    'coerce',
]

AUTO = 'auto'
TRUE_WORDS = ('1', 'true', 'yes', 'on')
FALSE_WORDS = ('0', 'false', 'no', 'off')


def as_bool(value: typing.Any) -> bool:
    """Coerce a value to bool, accepting the usual configuration spellings."""

    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in TRUE_WORDS:
        return True
    if text in FALSE_WORDS:
        return False
    raise errors.ConfigError(f'Expected a boolean, got {value!r}.')


def coerce(value: typing.Any, kind: typing.Callable[[typing.Any], typing.Any]) -> typing.Any:
    """Coerce a value with `kind`, raising a configuration error on failure."""

    if kind is bool:
        return as_bool(value)
    if kind is int and isinstance(value, float):
        if not value.is_integer():
            raise errors.ConfigError(f'Expected an integer, got {value!r}.')
        return int(value)
    try:
        return kind(value)
    except (TypeError, ValueError):
        name = getattr(kind, '__name__', str(kind))
        raise errors.ConfigError(f'Expected {name}, got {value!r}.')


def auto_or(value: typing.Any, kind: typing.Callable[[typing.Any], typing.Any]) -> typing.Any:
    """Coerce a value, mapping the "auto" keyword (or None) to None."""

    if value is None or (isinstance(value, str) and value.strip().lower() == AUTO):
        return None
    return coerce(value, kind)
