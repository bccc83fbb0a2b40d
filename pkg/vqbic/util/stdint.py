"""
    stdint
    ======

    Fixed-width little-endian integers and 32-bit float payloads used by
    the binary feature and codebook formats.

    The module is named after <stdint.h>, which describes fixed-width
    (standard) integers in C, even though it has no relationship
    in terms of functionality.
"""

from __future__ import annotations
import typing

import numpy as np

from .. import errors

__all__ = [
    'F32_BYTES',
    'U32_BYTES',
    'U32_MAX',
    'f32_matrix_from_binary',
    'f32_matrix_to_binary',
    'u32_from_binary',
    'u32_iter_from_binary',
    'u32_to_binary',
]

U32_BITS = 32
F32_BITS = 32
U32_BYTES = U32_BITS // 8
F32_BYTES = F32_BITS // 8
U32_MAX = 0xFFFFFFFF

# Explicit little-endian dtype, independent of the host byte order.
F32_DTYPE = np.dtype('<f4')

YieldIntType = typing.Generator[int, None, None]

# HELPERS


def check_overflow(within_range: bool):
    """Raise exception if overflow."""
    if not within_range:
        raise OverflowError


# UINT32


def u32_to_binary(value: int) -> bytes:
    """Convert 32-bit unsigned int to little-endian bytes."""

    check_overflow(0 <= value <= U32_MAX)
    return value.to_bytes(U32_BYTES, 'little')


def u32_from_binary(data: bytes) -> int:
    """Convert little-endian bytes to a 32-bit unsigned int."""

    if len(data) != U32_BYTES:
        raise errors.DimensionMismatchError(f'Expected {U32_BYTES} bytes, got {len(data)}.')
    return int.from_bytes(data, 'little')


def u32_iter_from_binary(data: bytes) -> YieldIntType:
    """Iteratively convert consecutive 32-bit unsigned ints from bytes."""

    if len(data) % U32_BYTES != 0:
        raise errors.DimensionMismatchError('Buffer is not a multiple of 4 bytes.')
    for start in range(0, len(data), U32_BYTES):
        yield u32_from_binary(data[start:start + U32_BYTES])


# FLOAT32 MATRIX


def f32_matrix_to_binary(matrix: np.ndarray) -> bytes:
    """Serialize a 2-D matrix as row-major little-endian 32-bit floats."""

    if matrix.ndim != 2:
        raise errors.DimensionMismatchError(f'Expected a 2-D matrix, got {matrix.ndim}-D.')
    return np.ascontiguousarray(matrix, dtype=F32_DTYPE).tobytes(order='C')


def f32_matrix_from_binary(data: bytes, rows: int, cols: int) -> np.ndarray:
    """Deserialize exactly `rows` x `cols` little-endian 32-bit floats."""

    expected = rows * cols * F32_BYTES
    if len(data) != expected:
        raise errors.DimensionMismatchError(
            f'Payload holds {len(data)} bytes, header promises {expected}.'
        )
    matrix = np.frombuffer(data, dtype=F32_DTYPE, count=rows * cols)
    return matrix.reshape(rows, cols).astype(np.float32)
