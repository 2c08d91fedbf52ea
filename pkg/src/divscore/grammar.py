"""Morphological complexity from WALS-style feature values.

The complexity score for one language is the mean of 26 min-max
normalized morphology feature values. Each feature is a WALS chapter
whose raw category codes have been transformed so that larger final
values mean heavier use of morphology; the transformation type and the
final value range are configuration data carried by a spec file. The
bundled default file covers the 26 chapters (22A through 112A) used for
the published complexity column.

Canonical input is final-valued data (already-transformed integers).
Raw-to-final transformation is available only for features whose spec
carries an explicit value_map; features transformed by "none" get an
identity map derived from the final range at load time.
"""
from __future__ import annotations

import csv
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Mapping

from .ingest import bundled_path
from .model import FeatureMatrix, MorphFeatureSpec, _require

log = logging.getLogger(__name__)

SPEC_COLUMNS = ["chapter", "name", "transformation", "final_min", "final_max", "value_map"]

#: Number of features in the complexity score's feature set.
FEATURE_SET_SIZE = 26


@dataclass(frozen=True)
class MorphSpecSet:
    """The full morphology feature set: exactly 26 specs, unique chapters."""

    specs: tuple[MorphFeatureSpec, ...]

    def __init__(self, specs) -> None:
        object.__setattr__(self, "specs", tuple(specs))
        chapters = [s.chapter for s in self.specs]
        _require(
            len(set(chapters)) == len(chapters),
            "duplicate chapter identifiers in morphology spec set",
        )
        _require(
            len(self.specs) == FEATURE_SET_SIZE,
            f"the morphology feature set must contain exactly {FEATURE_SET_SIZE} "
            f"specs, got {len(self.specs)}",
        )

    def __len__(self) -> int:
        return len(self.specs)

    def __iter__(self) -> Iterator[MorphFeatureSpec]:
        return iter(self.specs)

    @property
    def chapters(self) -> tuple[str, ...]:
        return tuple(s.chapter for s in self.specs)

    def get(self, chapter: str) -> MorphFeatureSpec:
        for s in self.specs:
            if s.chapter == chapter:
                return s
        raise KeyError(f"no spec for chapter {chapter!r}")


def transform_feature(raw: int, spec: MorphFeatureSpec) -> int:
    """Map a raw WALS category code to its final value.

    Raises if the spec carries no value map (final values must then be
    supplied directly) or if the raw code is not a defined category,
    which also covers categories dropped by a "remove" transformation.
    """
    if not spec.value_map:
        raise ValueError(
            f"chapter {spec.chapter} has no raw-to-final value map configured; "
            f"supply final values directly or provide value_map pairs in the spec file"
        )
    if raw not in spec.value_map:
        raise ValueError(f"unknown raw category {raw} for chapter {spec.chapter}")
    return spec.value_map[raw]


def normalize_feature(value: int, spec: MorphFeatureSpec) -> float:
    """Min-max normalize a final value into [0, 1] over the declared range.

    Normalization uses the declared final range, never the observed one,
    so a language's score does not depend on which other languages are
    present. A degenerate range (final_min = final_max) normalizes to 0
    and is flagged with a warning.
    """
    _require(
        spec.final_min <= value <= spec.final_max,
        f"value {value} lies outside the final range [{spec.final_min}, "
        f"{spec.final_max}] for chapter {spec.chapter}",
    )
    if spec.final_min == spec.final_max:
        log.warning(
            "chapter %s has a degenerate final range [%d, %d]; normalized value defined as 0",
            spec.chapter,
            spec.final_min,
            spec.final_max,
        )
        return 0.0
    return (value - spec.final_min) / (spec.final_max - spec.final_min)


def c_wals(language_values: Mapping[str, int], specs: MorphSpecSet) -> float:
    """Mean of the normalized feature values for one language.

    ``language_values`` must cover every chapter in the spec set;
    partial coverage is rejected with the absent chapters listed. Extra
    chapters are ignored.
    """
    missing = sorted(s.chapter for s in specs if s.chapter not in language_values)
    if missing:
        raise ValueError(f"missing chapters for the complexity score: {', '.join(missing)}")
    normalized = [normalize_feature(language_values[s.chapter], s) for s in specs]
    return sum(normalized) / len(normalized)


def c_wals_table(matrix: FeatureMatrix, specs: MorphSpecSet) -> list[tuple[str, float]]:
    """Per-language complexity scores over a morphology matrix, sorted by iso."""
    _require(
        matrix.kind == "morphological_ordinal",
        f"complexity scores need a morphological_ordinal matrix, got kind {matrix.kind!r}",
    )
    return [(iso, c_wals(matrix.row(iso), specs)) for iso in sorted(matrix.languages)]


def _parse_value_map(cell: str, chapter: str) -> dict[int, int]:
    """Parse "raw:final;raw:final" pairs; empty cell means no map."""
    cell = cell.strip()
    if not cell:
        return {}
    mapping: dict[int, int] = {}
    for pair in cell.split(";"):
        pair = pair.strip()
        if not pair:
            continue
        try:
            raw_s, final_s = pair.split(":")
            raw, final = int(raw_s), int(final_s)
        except ValueError:
            raise ValueError(
                f"malformed value_map pair {pair!r} for chapter {chapter} "
                f"(expected raw:final integers)"
            ) from None
        if raw in mapping:
            raise ValueError(f"duplicate raw category {raw} in value_map for chapter {chapter}")
        mapping[raw] = final
    return mapping


def load_morph_specs(path=None) -> MorphSpecSet:
    """Read a morphology feature spec file.

    CSV with header ``chapter,name,transformation,final_min,final_max,
    value_map``; value_map holds semicolon-separated ``raw:final`` pairs
    and may be blank. Features with transformation "none" and a blank
    map get the identity map over their final range. Defaults to the
    bundled spec file.
    """
    path = Path(path) if path is not None else bundled_path("morph_feature_specs.csv")
    specs = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != SPEC_COLUMNS:
            raise ValueError(f"morphology spec file {path} header must be {','.join(SPEC_COLUMNS)}")
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != len(SPEC_COLUMNS):
                raise ValueError(
                    f"morphology spec file {path} row {lineno}: expected "
                    f"{len(SPEC_COLUMNS)} columns, got {len(row)}"
                )
            chapter, name, transformation = (c.strip() for c in row[:3])
            try:
                final_min, final_max = int(row[3]), int(row[4])
            except ValueError:
                raise ValueError(
                    f"morphology spec file {path} row {lineno}: final_min and "
                    f"final_max must be integers"
                ) from None
            value_map = _parse_value_map(row[5], chapter)
            if not value_map and transformation == "none":
                value_map = {v: v for v in range(final_min, final_max + 1)}
            try:
                specs.append(
                    MorphFeatureSpec(
                        chapter=chapter,
                        name=name,
                        transformation=transformation,
                        final_min=final_min,
                        final_max=final_max,
                        value_map=value_map,
                    )
                )
            except ValueError as exc:
                raise ValueError(f"morphology spec file {path} row {lineno}: {exc}") from None
    return MorphSpecSet(specs)
