"""
    parallel
    ========

    Bounded worker pool for embarrassingly parallel per-segment work.

    Results are always returned in input order, so callers fold them
    deterministically regardless of completion order.

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
import concurrent.futures
import os
import typing

__all__ = [
    'map_ordered',
    'resolve_threads',
]

T = typing.TypeVar('T')
U = typing.TypeVar('U')


def resolve_threads(threads: int = 0) -> int:
    """Get the worker count, where 0 means one worker per CPU."""

    if threads < 0:
        raise ValueError('Thread count must be non-negative.')
    if threads == 0:
        return os.cpu_count() or 1
    return threads


def map_ordered(
    func: typing.Callable[[T], U],
    items: typing.Iterable[T],
    threads: int = 1,
) -> typing.List[U]:
    """
    Apply `func` to every item, preserving input order.

    :param func: Pure function of one item.
    :param items: Items to process.
    :param threads: Worker cap, 0 for automatic, 1 runs inline.
    :return: List of results in input order.
    """

    items = list(items)
    workers = min(resolve_threads(threads), max(len(items), 1))
    if workers == 1:
        return [func(i) for i in items]

    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))
