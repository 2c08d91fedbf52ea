"""Linguistic diversity scoring for multilingual data sets.

Quantifies how diverse a set of languages is relative to a reference
sample: minmax Jaccard over binned language measurements, entropy-based
typological indices, per-language text statistics (mean word length,
type-token ratio, unigram entropy), and a WALS-based morphological
complexity score.
"""

from .analysis import (
    CorrelationResult,
    attach_gap,
    deserialize_report,
    gap_report,
    overlap_series,
    serialize_report,
    spearman,
)
from .diversity import (
    WeightVector,
    align_bins,
    bin_measurements,
    binary_entropy,
    jaccard_minmax,
    jmm_score,
    jmm_syn,
    normalization_scalar,
    syntactic_weights,
    ti_morph,
    ti_syn,
)
from .grammar import (
    MorphSpecSet,
    c_wals,
    c_wals_table,
    load_morph_specs,
    normalize_feature,
    transform_feature,
)
from .ingest import (
    CorpusSource,
    bundled_path,
    count_families,
    family_breakdown,
    load_corpus,
    load_feature_matrix,
    load_iso_list,
    load_name_lookup,
    load_numeric_table,
    load_profile_table,
    load_registry,
    save_registry,
)
from .model import (
    BinnedDistribution,
    BinOverlap,
    DeficitBin,
    DiversityReport,
    FeatureMatrix,
    GapReport,
    LanguageRecord,
    LanguageSet,
    MorphFeatureSpec,
    SurplusBin,
    TextProfile,
)
from .textstats import (
    TokenSequence,
    grapheme_length,
    mean_word_length,
    profile,
    sample_contiguous,
    tokenize,
    type_token_ratio,
    unigram_entropy,
)

__version__ = "0.1.0"

__all__ = [
    "BinnedDistribution",
    "BinOverlap",
    "CorpusSource",
    "CorrelationResult",
    "DeficitBin",
    "DiversityReport",
    "FeatureMatrix",
    "GapReport",
    "LanguageRecord",
    "LanguageSet",
    "MorphFeatureSpec",
    "MorphSpecSet",
    "SurplusBin",
    "TextProfile",
    "TokenSequence",
    "WeightVector",
    "align_bins",
    "attach_gap",
    "bin_measurements",
    "binary_entropy",
    "bundled_path",
    "c_wals",
    "c_wals_table",
    "count_families",
    "deserialize_report",
    "family_breakdown",
    "gap_report",
    "grapheme_length",
    "jaccard_minmax",
    "jmm_score",
    "jmm_syn",
    "load_corpus",
    "load_feature_matrix",
    "load_iso_list",
    "load_morph_specs",
    "load_name_lookup",
    "load_numeric_table",
    "load_profile_table",
    "load_registry",
    "mean_word_length",
    "normalization_scalar",
    "normalize_feature",
    "overlap_series",
    "profile",
    "sample_contiguous",
    "save_registry",
    "serialize_report",
    "spearman",
    "syntactic_weights",
    "ti_morph",
    "ti_syn",
    "tokenize",
    "transform_feature",
    "type_token_ratio",
    "unigram_entropy",
]
