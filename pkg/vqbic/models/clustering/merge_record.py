"""
    merge_record
    ============

    One entry of the merge log.

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

from ... import util

__all__ = ['MergeRecord']

OptionalInt = typing.Optional[int]


@util.dataclass(frozen=True, cosine_rank=None)
class MergeRecord:
    """
    Merge of cluster `id_b` into cluster `id_a`.

    :param iteration: Zero-based merge iteration.
    :param id_a: Surviving (lower) cluster id.
    :param id_b: Absorbed cluster id.
    :param delta_bic: ΔBIC of the merged pair.
    :param cosine_rank: (Optional) zero-based fast-match rank of the pair.
    """

    iteration: int
    id_a: int
    id_b: int
    delta_bic: float
    cosine_rank: OptionalInt

    def key(self) -> typing.Tuple[int, int, int, float]:
        """Get the record without the fast-match rank, which baseline runs lack."""
        return (self.iteration, self.id_a, self.id_b, self.delta_bic)

    def to_line(self) -> str:
        rank = '-' if self.cosine_rank is None else str(self.cosine_rank)
        return f'{self.iteration} {self.id_a} {self.id_b} {rank} {self.delta_bic!r}'
