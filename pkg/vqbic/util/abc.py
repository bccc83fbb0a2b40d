"""
    abc
    ===

    Abstract base classes for vqbic models.

    Models exchange data in two interchange formats:

        record: a flat mapping of primitive values, used by the key-value
            configuration files and the machine-readable run report.
        binary: the little-endian file formats for feature matrices and
            codebooks.

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
    'AbstractMethodError',
    'Binary',
    'Model',
    'Object',
    'Record',
    'RecordFormat',
]

# TYPES

RecordType = typing.TypeVar('RecordType', bound='Record')
BinaryType = typing.TypeVar('BinaryType', bound='Binary')
RecordValue = typing.Union[int, float, str, bool, None]
RecordFormat = typing.Dict[str, RecordValue]

# EXCEPTIONS


class AbstractMethodError(NotImplementedError):
    pass


# MODELS


class Object:
    """Class-indexable object that just returns objects."""

    __slots__ = ()

    def __class_getitem__(cls, params):
        return cls


class Record(Object):
    """Model convertible to and from a flat record of primitives."""

    __slots__ = ()

    @classmethod
    def validate_record_keys(
        cls: typing.Type[RecordType],
        data: typing.Mapping[str, typing.Any],
        required_keys: typing.AbstractSet[str],
        all_keys: typing.AbstractSet[str],
    ) -> bool:
        """Validate the required keys are present and no unknown keys exist."""

        keys = set(data)
        return required_keys <= keys and not (keys - all_keys)

    def to_record(self: RecordType) -> RecordFormat:
        """
        Export model to record interchange format.

        :return: Flat mapping of field names to primitive values.
        """
        raise AbstractMethodError

    @classmethod
    def create_from_record(
        cls: typing.Type[RecordType],
        data: typing.Mapping[str, typing.Any],
    ) -> RecordType:
        """
        Load model from record interchange format.

        :param data: Flat mapping of field names to primitive values.
        :return: Native model.
        """
        raise AbstractMethodError


class Binary(Object):
    """
    Model convertible to and from a binary file format.

    Formats start with a 4-byte magic, checked by `check_magic`.
    """

    __slots__ = ()
    MAGIC: typing.ClassVar[bytes]

    def to_binary(self: BinaryType) -> bytes:
        """
        Export model to binary interchange format.

        :return: Model as bytes.
        """
        raise AbstractMethodError

    @classmethod
    def create_from_binary(
        cls: typing.Type[BinaryType],
        data: bytes,
    ) -> BinaryType:
        """
        Load model from binary interchange format.

        :param data: Raw bytes, including the magic.
        :return: Native model.
        """
        raise AbstractMethodError

    @classmethod
    def check_magic(cls, data: bytes) -> bytes:
        """Strip the magic from `data`, raising if it does not match."""

        size = len(cls.MAGIC)
        if data[:size] != cls.MAGIC:
            raise errors.BadMagicError(f'Expected magic {cls.MAGIC!r}, got {data[:size]!r}.')
        return data[size:]


class Model(Record, Binary):
    """Base class for models supporting both interchange formats."""

    __slots__ = ()
