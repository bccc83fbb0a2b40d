"""
    models
    ======

    Immutable domain models for speaker indexing.

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

# Do not import any of these models into the __init__ of the
# subdirectories, since models depend on one another.
# Just use glob imports at the models level.

# Audio
from .audio.audio_buffer import *
from .audio.segment_span import *

# Features
from .features.feature_config import *
from .features.feature_matrix import *

# Stats
from .stats.segment_stats import *

# BIC
from .bic.bic_params import *

# Codebook
from .codebook.codebook import *
from .codebook.histogram_vec import *

# Threshold
from .threshold.threshold_estimate import *

# Clustering
from .clustering.cluster import *
from .clustering.cluster_config import *
from .clustering.cluster_mode import *
from .clustering.cluster_state import *
from .clustering.merge_record import *

# Metrics
from .metrics.purity_report import *

# Config
from .config.run_config import *
from .config.run_report import *
from .config.synth_spec import *

__all__ = (
    # Audio
    audio.audio_buffer.__all__
    + audio.segment_span.__all__
    # Features
    + features.feature_config.__all__
    + features.feature_matrix.__all__
    # Stats
    + stats.segment_stats.__all__
    # BIC
    + bic.bic_params.__all__
    # Codebook
    + codebook.codebook.__all__
    + codebook.histogram_vec.__all__
    # Threshold
    + threshold.threshold_estimate.__all__
    # Clustering
    + clustering.cluster.__all__
    + clustering.cluster_config.__all__
    + clustering.cluster_mode.__all__
    + clustering.cluster_state.__all__
    + clustering.merge_record.__all__
    # Metrics
    + metrics.purity_report.__all__
    # Config
    + config.run_config.__all__
    + config.run_report.__all__
    + config.synth_spec.__all__
)
