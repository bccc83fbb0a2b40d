"""
    cluster_mode
    ============

    Agglomerative clustering strategy.
"""

from __future__ import annotations
import enum
import typing

from ... import util

__all__ = ['ClusterMode']


class ClusterMode(util.StrEnumMixin, str, enum.Enum):
    """Pair-selection strategy used at each merge iteration."""

    BASELINE = 'baseline'
    TWO_STAGE = 'two-stage'

    def description(self) -> str:
        return DESCRIPTION[self]

    @classmethod
    def aliases(cls) -> typing.Mapping[str, str]:
        return ALIASES


DESCRIPTION = {
    ClusterMode.BASELINE: "Full ΔBIC over every cluster pair",
    ClusterMode.TWO_STAGE: "Histogram cosine fast-match, then ΔBIC on the N best pairs",
}

ALIASES = {
    'baseline-bic': 'baseline',
    'two_stage': 'two-stage',
    'twostage': 'two-stage',
}
