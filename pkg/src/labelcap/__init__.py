"""Labeling capacity of pattern-label sets over finite alphabets."""

from .automaton import (
    DeterministicPresentation,
    OutputTransducer,
    build_reverse_transducer,
    capacity_via_automaton,
    determinize_image,
    exact_image_count,
    image_counts,
)
from .capacity import AUTOMATON, FORMULA, ORACLE_ESTIMATE, CapacityValue
from .closed_form import (
    cap_formula,
    capacity_polynomial,
    max_single_label_polynomial,
    multi_label_polynomial,
    order_labels_by_capacity,
    rll_capacity_polynomial,
)
from .errors import (
    BudgetExceededError,
    InvalidLabelError,
    LabelCapError,
    NoRootInBracketError,
    UnsupportedScopeError,
)
from .labeling import LabelingSequence, complete_labeling_sequence, labeling_sequence
from .maxcap import (
    PairSearchResult,
    best_pair_capacity,
    forbidden_substring_capacity,
    nine_label_lower_bound,
    pair_type_table_check,
    three_label_lower_bound,
)
from .oracle import (
    ImageCensus,
    capacity_slope_estimate,
    count_valid_labelings,
    enumerate_valid_labelings,
    rll_count,
)
from .pathunique import (
    DiGraph,
    complement_label_set,
    extremal_path_unique_graph,
    h_max,
    is_path_unique,
    minimal_label_count,
)
from .polynomial import IntPolynomial, largest_real_root
from .spectral import characteristic_polynomial, spectral_radius
from .words import (
    DNA,
    Alphabet,
    Label,
    LabelClass,
    LabelSet,
    almost_periodic,
    classify,
    cyclic_overlap,
    overlap,
    period,
)

__version__ = "0.1.0"
