"""Shared domain types: language identities, text profiles, feature
matrices, binned distributions, and score reports.

Pure data, no I/O and no scoring logic. Every type checks its invariants
at construction time and raises ``ValueError`` with a message naming the
violated invariant; instances are immutable afterwards and safe to share
across concurrent computations.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

ISO_CODE_RE = re.compile(r"^[a-z]{3}$")

ENDANGERMENT_LEVELS = frozenset({"safe", "vulnerable", "endangered", "extinct", "unknown"})
MATRIX_KINDS = frozenset({"binary_syntactic", "morphological_ordinal"})
TRANSFORMATIONS = frozenset({"none", "binarization", "reorder", "recategorization", "remove"})
SCORE_NAMES = frozenset({"jmm_morph", "jmm_syn", "ti_morph", "ti_syn", "c_wals"})

#: Tolerance for floating-point invariant checks on derived quantities.
_EPS = 1e-9


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


@dataclass(frozen=True)
class LanguageRecord:
    """Identity and metadata for one language.

    ``script_scale`` is a positive multiplier applied to observed word
    lengths; it compensates for logographic scripts whose written words
    are shorter than their romanized counterparts. The default 1.0 means
    no adjustment.
    """

    iso: str
    name: str
    family: str | None = None
    endangerment: str | None = None
    script_scale: float = 1.0

    def __post_init__(self) -> None:
        _require(
            bool(ISO_CODE_RE.match(self.iso)),
            f"iso must be exactly three ASCII lowercase letters, got {self.iso!r}",
        )
        if self.endangerment is not None:
            _require(
                self.endangerment in ENDANGERMENT_LEVELS,
                f"endangerment must be one of {sorted(ENDANGERMENT_LEVELS)}, "
                f"got {self.endangerment!r}",
            )
        _require(
            isinstance(self.script_scale, (int, float))
            and math.isfinite(self.script_scale)
            and self.script_scale > 0,
            f"script_scale must be a finite positive number, got {self.script_scale!r}",
        )


@dataclass(frozen=True)
class LanguageSet:
    """Ordered collection of :class:`LanguageRecord`, unique by iso code.

    Construction only enforces uniqueness; scoring operations reject
    empty sets at the point of use.
    """

    members: tuple[LanguageRecord, ...]

    def __init__(self, members: Iterable[LanguageRecord]) -> None:
        object.__setattr__(self, "members", tuple(members))
        seen: set[str] = set()
        for rec in self.members:
            _require(rec.iso not in seen, f"duplicate iso code {rec.iso!r} in language set")
            seen.add(rec.iso)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[LanguageRecord]:
        return iter(self.members)

    def __contains__(self, iso: str) -> bool:
        return any(rec.iso == iso for rec in self.members)

    @property
    def isos(self) -> tuple[str, ...]:
        return tuple(rec.iso for rec in self.members)

    def get(self, iso: str) -> LanguageRecord:
        for rec in self.members:
            if rec.iso == iso:
                return rec
        raise KeyError(f"no language {iso!r} in set")


@dataclass(frozen=True)
class TextProfile:
    """Per-language text statistics computed on one sampled window.

    ``sample_offset`` and ``seed`` record where the window came from so
    the profile can be recomputed exactly.
    """

    iso: str
    mean_word_length: float
    ttr: float
    unigram_entropy: float
    token_count: int
    sample_offset: int
    seed: int

    def __post_init__(self) -> None:
        _require(
            bool(ISO_CODE_RE.match(self.iso)),
            f"iso must be exactly three ASCII lowercase letters, got {self.iso!r}",
        )
        _require(
            self.mean_word_length >= 1.0,
            f"mean_word_length must be >= 1 (every kept token has at least one "
            f"grapheme), got {self.mean_word_length}",
        )
        _require(0.0 < self.ttr <= 1.0, f"ttr must lie in (0, 1], got {self.ttr}")
        _require(self.token_count >= 1, f"token_count must be positive, got {self.token_count}")
        _require(
            self.unigram_entropy >= -_EPS,
            f"unigram_entropy must be non-negative, got {self.unigram_entropy}",
        )
        bound = math.log2(self.token_count) if self.token_count > 1 else 0.0
        _require(
            self.unigram_entropy <= bound + _EPS,
            f"unigram_entropy {self.unigram_entropy} exceeds log2(token_count) = {bound}",
        )
        _require(
            self.sample_offset >= 0,
            f"sample_offset must be non-negative, got {self.sample_offset}",
        )


class FeatureMatrix:
    """Languages x named features with small non-negative integer cells.

    ``kind`` is ``"binary_syntactic"`` (all cells 0/1) or
    ``"morphological_ordinal"`` (final transformed values; per-feature
    ranges are validated against specs by the loader). Every cell must be
    populated: missing values never reach scoring.
    """

    def __init__(
        self,
        languages: Sequence[str],
        features: Sequence[str],
        values: np.ndarray | Sequence[Sequence[int]],
        kind: str,
    ) -> None:
        self.languages = tuple(languages)
        self.features = tuple(features)
        _require(kind in MATRIX_KINDS, f"kind must be one of {sorted(MATRIX_KINDS)}, got {kind!r}")
        self.kind = kind
        _require(
            len(set(self.languages)) == len(self.languages),
            "duplicate language codes in feature matrix",
        )
        _require(
            len(set(self.features)) == len(self.features),
            "duplicate feature identifiers in feature matrix",
        )
        arr = np.asarray(values)
        _require(
            arr.ndim == 2 and arr.shape == (len(self.languages), len(self.features)),
            f"values must have shape ({len(self.languages)}, {len(self.features)}), "
            f"got {arr.shape}",
        )
        _require(
            np.issubdtype(arr.dtype, np.integer),
            f"feature values must be integers, got dtype {arr.dtype}",
        )
        _require(bool(np.all(arr >= 0)), "feature values must be non-negative")
        if kind == "binary_syntactic":
            _require(
                bool(np.all((arr == 0) | (arr == 1))),
                "binary_syntactic matrix must contain only 0/1 values",
            )
        self.values = arr.astype(np.int64, copy=True)
        self.values.setflags(write=False)
        self._lang_index = {iso: i for i, iso in enumerate(self.languages)}
        self._feat_index = {f: j for j, f in enumerate(self.features)}

    @property
    def n_languages(self) -> int:
        return len(self.languages)

    @property
    def n_features(self) -> int:
        return len(self.features)

    def column(self, feature: str) -> np.ndarray:
        return self.values[:, self._feat_index[feature]]

    def row(self, iso: str) -> dict[str, int]:
        i = self._lang_index[iso]
        return {f: int(v) for f, v in zip(self.features, self.values[i])}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FeatureMatrix):
            return NotImplemented
        return (
            self.languages == other.languages
            and self.features == other.features
            and self.kind == other.kind
            and np.array_equal(self.values, other.values)
        )

    def __repr__(self) -> str:
        return (
            f"FeatureMatrix({self.n_languages} languages x {self.n_features} "
            f"features, kind={self.kind!r})"
        )


@dataclass(frozen=True)
class MorphFeatureSpec:
    """One WALS chapter with its value transformation.

    ``value_map`` maps raw WALS category codes to final values; an empty
    map means raw input cannot be transformed (only final values are
    accepted for that feature). For the ``remove`` transformation the
    dropped category is simply absent from the map.
    """

    chapter: str
    name: str
    transformation: str
    final_min: int
    final_max: int
    value_map: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        _require(bool(self.chapter), "chapter identifier must be non-empty")
        _require(
            self.transformation in TRANSFORMATIONS,
            f"transformation must be one of {sorted(TRANSFORMATIONS)}, "
            f"got {self.transformation!r}",
        )
        _require(
            self.final_min <= self.final_max,
            f"final_min {self.final_min} must be <= final_max {self.final_max} "
            f"for chapter {self.chapter}",
        )
        for raw, final in self.value_map.items():
            _require(
                self.final_min <= final <= self.final_max,
                f"value_map output {final} for raw {raw} lies outside "
                f"[{self.final_min}, {self.final_max}] in chapter {self.chapter}",
            )


@dataclass(frozen=True)
class BinnedDistribution:
    """Weighted histogram over equal-width, half-open bins.

    A value ``v`` falls in bin ``floor((v - anchor) / bin_width)``; bins
    cover ``[anchor + k*w, anchor + (k+1)*w)``. The anchor is fixed at
    0.0 throughout this package so bin assignment is deterministic and
    comparable across runs.
    """

    bin_width: float
    anchor: float
    weights: Mapping[int, float]

    def __init__(self, bin_width: float, weights: Mapping[int, float], anchor: float = 0.0) -> None:
        _require(
            math.isfinite(bin_width) and bin_width > 0,
            f"bin_width must be a finite positive number, got {bin_width}",
        )
        _require(math.isfinite(anchor), f"anchor must be finite, got {anchor}")
        w = {int(k): float(v) for k, v in weights.items()}
        _require(len(w) > 0, "distribution must have at least one bin")
        for k, v in w.items():
            _require(
                math.isfinite(v) and v >= 0,
                f"bin weights must be finite and non-negative, got {v} in bin {k}",
            )
        _require(any(v > 0 for v in w.values()), "at least one bin weight must be positive")
        object.__setattr__(self, "bin_width", float(bin_width))
        object.__setattr__(self, "anchor", float(anchor))
        object.__setattr__(self, "weights", w)

    def bin_of(self, value: float) -> int:
        _require(math.isfinite(value), f"cannot bin non-finite value {value}")
        return math.floor((value - self.anchor) / self.bin_width)

    def occupied(self) -> list[int]:
        return sorted(k for k, v in self.weights.items() if v > 0)

    def total(self) -> float:
        return sum(self.weights.values())


@dataclass(frozen=True)
class BinOverlap:
    """One aligned bin (or feature dimension) of a two-way comparison."""

    label: str
    dataset: float
    reference: float
    min_weight: float
    max_weight: float

    def to_dict(self) -> dict:
        return {
            "bin": self.label,
            "dataset": self.dataset,
            "reference": self.reference,
            "min": self.min_weight,
            "max": self.max_weight,
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "BinOverlap":
        return cls(
            label=d["bin"],
            dataset=float(d["dataset"]),
            reference=float(d["reference"]),
            min_weight=float(d["min"]),
            max_weight=float(d["max"]),
        )


@dataclass(frozen=True)
class SurplusBin:
    """Bin where the dataset carries more weight than the reference."""

    label: str
    excess: float

    def to_dict(self) -> dict:
        return {"bin": self.label, "excess": self.excess}

    @classmethod
    def from_dict(cls, d: Mapping) -> "SurplusBin":
        return cls(label=d["bin"], excess=float(d["excess"]))


@dataclass(frozen=True)
class DeficitBin:
    """Bin where the dataset falls short of the reference, with example
    reference languages that would fill it."""

    label: str
    shortfall: float
    examples: tuple[str, ...]

    def to_dict(self) -> dict:
        return {"bin": self.label, "shortfall": self.shortfall, "examples": list(self.examples)}

    @classmethod
    def from_dict(cls, d: Mapping) -> "DeficitBin":
        return cls(
            label=d["bin"],
            shortfall=float(d["shortfall"]),
            examples=tuple(d.get("examples", ())),
        )


@dataclass(frozen=True)
class GapReport:
    """Per-bin surplus/deficit of a dataset against the reference."""

    surplus_bins: tuple[SurplusBin, ...]
    deficit_bins: tuple[DeficitBin, ...]

    def __init__(
        self,
        surplus_bins: Iterable[SurplusBin],
        deficit_bins: Iterable[DeficitBin],
    ) -> None:
        object.__setattr__(self, "surplus_bins", tuple(surplus_bins))
        object.__setattr__(self, "deficit_bins", tuple(deficit_bins))
        surplus_labels = {b.label for b in self.surplus_bins}
        deficit_labels = {b.label for b in self.deficit_bins}
        overlap = surplus_labels & deficit_labels
        _require(
            not overlap,
            f"a bin may appear in at most one of surplus/deficit, got both for {sorted(overlap)}",
        )

    def to_dict(self) -> dict:
        return {
            "surplus": [b.to_dict() for b in self.surplus_bins],
            "deficit": [b.to_dict() for b in self.deficit_bins],
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "GapReport":
        return cls(
            surplus_bins=[SurplusBin.from_dict(x) for x in d.get("surplus", [])],
            deficit_bins=[DeficitBin.from_dict(x) for x in d.get("deficit", [])],
        )


@dataclass(frozen=True)
class DiversityReport:
    """A diversity score with its per-bin breakdown.

    For ``jmm_*`` scores with a per-bin table, the score must equal
    sum(min) / sum(max) over the table rows; this is validated on
    construction.
    """

    score_name: str
    value: float
    per_bin: tuple[BinOverlap, ...] | None = None
    normalization_c: float | None = None
    gap: GapReport | None = None

    def __post_init__(self) -> None:
        _require(
            self.score_name in SCORE_NAMES,
            f"score_name must be one of {sorted(SCORE_NAMES)}, got {self.score_name!r}",
        )
        _require(
            -_EPS <= self.value <= 1.0 + _EPS,
            f"score value must lie in [0, 1], got {self.value}",
        )
        if self.normalization_c is not None:
            _require(
                self.normalization_c >= 1.0 - _EPS,
                f"normalization scalar must be >= 1, got {self.normalization_c}",
            )
        if self.per_bin is not None:
            object.__setattr__(self, "per_bin", tuple(self.per_bin))
            if self.score_name.startswith("jmm"):
                num = sum(r.min_weight for r in self.per_bin)
                den = sum(r.max_weight for r in self.per_bin)
                _require(den > 0, "per_bin max weights sum to zero")
                _require(
                    abs(self.value - num / den) <= 1e-12,
                    f"score value {self.value} does not equal sum(min)/sum(max) "
                    f"= {num / den} over per_bin rows",
                )

    def to_dict(self) -> dict:
        d: dict = {"score_name": self.score_name, "value": self.value}
        d["normalization_c"] = self.normalization_c
        d["per_bin"] = [r.to_dict() for r in self.per_bin] if self.per_bin is not None else None
        d["gap"] = self.gap.to_dict() if self.gap is not None else None
        return d

    @classmethod
    def from_dict(cls, d: Mapping) -> "DiversityReport":
        per_bin = d.get("per_bin")
        gap = d.get("gap")
        return cls(
            score_name=d["score_name"],
            value=float(d["value"]),
            per_bin=tuple(BinOverlap.from_dict(r) for r in per_bin) if per_bin is not None else None,
            normalization_c=(
                float(d["normalization_c"]) if d.get("normalization_c") is not None else None
            ),
            gap=GapReport.from_dict(gap) if gap is not None else None,
        )
