"""Command-line interface.

Subcommands: profile, score, cwals, correlate, families. Machine-
readable output goes to standard output in the chosen format;
diagnostics go to standard error. Exit code is 0 iff no per-item
failures occurred. Every command is deterministic given identical
inputs, flags, and seed; rows are sorted by iso code.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from .analysis import SCHEMA_VERSION, attach_gap, serialize_report, spearman
from .diversity import jmm_score, jmm_syn, ti_morph, ti_syn
from .grammar import c_wals_table, load_morph_specs
from .ingest import (
    PROFILE_COLUMNS,
    bundled_path,
    count_families,
    family_breakdown,
    load_corpus,
    load_feature_matrix,
    load_iso_list,
    load_numeric_table,
    load_profile_table,
    load_registry,
)
from .model import ISO_CODE_RE, LanguageRecord, LanguageSet, _require
from .textstats import profile

log = logging.getLogger(__name__)

COMMANDS = ("profile", "score", "cwals", "correlate", "families")


@dataclass(frozen=True)
class RunConfig:
    """One validated CLI invocation."""

    command: str
    dataset: str | None = None
    reference: str | None = None
    registry: str | None = None
    specs: str | None = None
    level: str | None = None
    columns: tuple[str, str] | None = None
    bin_width: float = 1.0
    sample_target: int = 10000
    seed: int = 0
    format: str = "json"
    drop_incomplete: bool = False
    syn_dims: int = 103

    def __post_init__(self) -> None:
        _require(self.command in COMMANDS, f"command must be one of {COMMANDS}")
        _require(
            math.isfinite(self.bin_width) and self.bin_width > 0,
            f"--bin-width must be a positive number, got {self.bin_width}",
        )
        _require(
            self.sample_target >= 1,
            f"--sample-target must be >= 1, got {self.sample_target}",
        )
        _require(
            self.format in ("json", "csv", "svg"),
            f"--format must be json, csv, or svg, got {self.format!r}",
        )
        _require(self.syn_dims in (103, 206), f"--syn-dims must be 103 or 206, got {self.syn_dims}")
        if self.level is not None:
            _require(self.level in ("morph", "syn"), f"--level must be morph or syn")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divscore",
        description=(
            "Score the linguistic diversity of a multilingual data set against a "
            "reference sample."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def common(sp, formats=("json", "csv")):
        sp.add_argument("--format", choices=list(formats), default="json", help="output format")
        sp.add_argument("--registry", default=None, help="language registry CSV")

    p = sub.add_parser("profile", help="per-language text statistics over a corpus directory")
    p.add_argument("--dataset", required=True, help="corpus directory of <iso>.txt files")
    p.add_argument("--sample-target", type=int, default=10000, help="tokens per sample")
    p.add_argument("--seed", type=int, default=0, help="sampling RNG seed")
    common(p)

    p = sub.add_parser("score", help="diversity scores of a dataset against a reference")
    p.add_argument("--level", choices=["morph", "syn"], required=True)
    p.add_argument(
        "--dataset",
        required=True,
        help="corpus directory or profile table (morph); binary feature matrix CSV (syn)",
    )
    p.add_argument("--reference", required=True, help="same formats as --dataset")
    p.add_argument("--bin-width", type=float, default=1.0, help="measurement bin width")
    p.add_argument("--sample-target", type=int, default=10000, help="tokens per sample")
    p.add_argument("--seed", type=int, default=0, help="sampling RNG seed")
    p.add_argument(
        "--syn-dims",
        type=int,
        choices=[103, 206],
        default=103,
        help="one weight dimension per feature (103) or per feature value (206)",
    )
    p.add_argument("--drop-incomplete", action="store_true", help="drop rows with '?' cells")
    common(p, formats=("json", "csv", "svg"))

    p = sub.add_parser("cwals", help="per-language morphological complexity scores")
    p.add_argument("--dataset", default=None, help="morphology values CSV (default: bundled)")
    p.add_argument("--specs", default=None, help="feature spec CSV (default: bundled)")
    p.add_argument("--drop-incomplete", action="store_true", help="drop rows with '?' cells")
    common(p)

    p = sub.add_parser("correlate", help="Spearman correlation of two per-language columns")
    p.add_argument("x_column", help="column name in the dataset table")
    p.add_argument("y_column", help="column name in the reference table (or same table)")
    p.add_argument("--dataset", default=None, help="per-language table CSV (default: bundled)")
    p.add_argument("--reference", default=None, help="second table to join by iso (optional)")
    common(p)

    p = sub.add_parser("families", help="distinct language families in a language list")
    p.add_argument("--dataset", default=None, help="iso list file (default: bundled)")
    common(p)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        dataset=getattr(args, "dataset", None),
        reference=getattr(args, "reference", None),
        registry=getattr(args, "registry", None),
        specs=getattr(args, "specs", None),
        level=getattr(args, "level", None),
        columns=(
            (args.x_column, args.y_column) if hasattr(args, "x_column") else None
        ),
        bin_width=getattr(args, "bin_width", 1.0),
        sample_target=getattr(args, "sample_target", 10000),
        seed=getattr(args, "seed", 0),
        format=getattr(args, "format", "json"),
        drop_incomplete=getattr(args, "drop_incomplete", False),
        syn_dims=getattr(args, "syn_dims", 103),
    )


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _emit_json(payload: dict) -> None:
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _registry_or_none(cfg: RunConfig) -> LanguageSet | None:
    return load_registry(cfg.registry) if cfg.registry else None


def _record_for(iso: str, registry: LanguageSet | None) -> LanguageRecord:
    if registry is not None and iso in registry:
        return registry.get(iso)
    return LanguageRecord(iso=iso, name=iso)


def cmd_profile(cfg: RunConfig) -> int:
    dirp = Path(cfg.dataset)
    _require(dirp.is_dir(), f"--dataset must be a corpus directory, got {cfg.dataset!r}")
    files = sorted(dirp.glob("*.txt"))
    _require(bool(files), f"no <iso>.txt corpus files in {dirp}")
    registry = _registry_or_none(cfg)

    rows = []
    failures = 0
    for f in files:
        iso = f.stem
        try:
            _require(
                bool(ISO_CODE_RE.match(iso)),
                f"corpus file name must be <iso>.txt with a three-letter code, got {f.name}",
            )
            prof = profile(
                load_corpus(f, iso),
                _record_for(iso, registry),
                target=cfg.sample_target,
                seed=cfg.seed,
            )
            rows.append(prof)
        except ValueError as exc:
            failures += 1
            print(f"profile failed for {f.name}: {exc}", file=sys.stderr)

    if cfg.format == "json":
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "profiles": [
                    {
                        "iso": p.iso,
                        "mwl": p.mean_word_length,
                        "ttr": p.ttr,
                        "entropy": p.unigram_entropy,
                        "token_count": p.token_count,
                        "offset": p.sample_offset,
                        "seed": p.seed,
                    }
                    for p in rows
                ],
            }
        )
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(PROFILE_COLUMNS)
        for p in rows:
            writer.writerow(
                [
                    p.iso,
                    p.mean_word_length,
                    p.ttr,
                    p.unigram_entropy,
                    p.token_count,
                    p.sample_offset,
                    p.seed,
                ]
            )
        _emit(buf.getvalue())
    return 1 if failures else 0


def _morph_measurements(path_arg: str, cfg: RunConfig, registry) -> tuple[list[float], list[str]]:
    """Per-language mean word lengths from a corpus directory or a
    precomputed profile table, sorted by iso."""
    path = Path(path_arg)
    if path.is_dir():
        files = sorted(path.glob("*.txt"))
        _require(bool(files), f"no <iso>.txt corpus files in {path}")
        mwls, isos = [], []
        for f in files:
            iso = f.stem
            _require(
                bool(ISO_CODE_RE.match(iso)),
                f"corpus file name must be <iso>.txt with a three-letter code, got {f.name}",
            )
            prof = profile(
                load_corpus(f, iso),
                _record_for(iso, registry),
                target=cfg.sample_target,
                seed=cfg.seed,
            )
            mwls.append(prof.mean_word_length)
            isos.append(iso)
        return mwls, isos
    profiles = sorted(load_profile_table(path), key=lambda p: p.iso)
    return [p.mean_word_length for p in profiles], [p.iso for p in profiles]


def _score_morph(cfg: RunConfig) -> dict:
    registry = _registry_or_none(cfg)
    mwl_d, _ = _morph_measurements(cfg.dataset, cfg, registry)
    mwl_r, isos_r = _morph_measurements(cfg.reference, cfg, registry)

    report = jmm_score(mwl_d, mwl_r, cfg.bin_width)
    members: dict[str, list[str]] = {}
    for iso, m in zip(isos_r, mwl_r):
        members.setdefault(f"bin{math.floor(m / cfg.bin_width)}", []).append(iso)
    report = attach_gap(report, members)

    ti_d = ti_morph(mwl_d, cfg.bin_width) if len(mwl_d) >= 2 else None
    ti_r = ti_morph(mwl_r, cfg.bin_width) if len(mwl_r) >= 2 else None
    if ti_d is None or ti_r is None:
        print("ti_morph skipped for a single-language side", file=sys.stderr)
    return {
        "level": "morph",
        "bin_width": cfg.bin_width,
        "sample_target": cfg.sample_target,
        "seed": cfg.seed,
        "dataset_n": len(mwl_d),
        "reference_n": len(mwl_r),
        "jmm": report,
        "ti": {
            "score_name": "ti_morph",
            "dataset": ti_d,
            "reference": ti_r,
            "bin_universe": "occupied",
        },
    }


def _score_syn(cfg: RunConfig) -> dict:
    mat_d, dropped_d = load_feature_matrix(
        cfg.dataset, "binary_syntactic", drop_incomplete=cfg.drop_incomplete
    )
    mat_r, dropped_r = load_feature_matrix(
        cfg.reference, "binary_syntactic", drop_incomplete=cfg.drop_incomplete
    )
    for label, dropped in (("dataset", dropped_d), ("reference", dropped_r)):
        if dropped:
            print(f"{len(dropped)} {label} row(s) dropped: {', '.join(dropped)}", file=sys.stderr)

    count_zeros = cfg.syn_dims == 206
    report = jmm_syn(mat_d, mat_r, count_zeros=count_zeros)
    members: dict[str, list[str]] = {}
    for f in mat_r.features:
        col = mat_r.column(f)
        with_one = [iso for iso, v in zip(mat_r.languages, col) if v == 1]
        members[f"{f}=1" if count_zeros else f] = with_one
        if count_zeros:
            members[f"{f}=0"] = [iso for iso, v in zip(mat_r.languages, col) if v == 0]
    report = attach_gap(report, members)

    ti_d = ti_syn(mat_d) if mat_d.n_languages >= 2 else None
    ti_r = ti_syn(mat_r) if mat_r.n_languages >= 2 else None
    if ti_d is None or ti_r is None:
        print("ti_syn skipped for a single-language side", file=sys.stderr)
    return {
        "level": "syn",
        "syn_dims": cfg.syn_dims,
        "dataset_n": mat_d.n_languages,
        "reference_n": mat_r.n_languages,
        "jmm": report,
        "ti": {"score_name": "ti_syn", "dataset": ti_d, "reference": ti_r},
    }


def cmd_score(cfg: RunConfig) -> int:
    result = _score_morph(cfg) if cfg.level == "morph" else _score_syn(cfg)
    report = result["jmm"]
    print(f"normalization scalar c = {report.normalization_c!r}", file=sys.stderr)
    if cfg.format == "json":
        payload = dict(result)
        payload["schema_version"] = SCHEMA_VERSION
        payload["normalization_c"] = report.normalization_c
        payload["jmm"] = report.to_dict()
        _emit_json(payload)
    else:
        _emit(serialize_report(report, cfg.format).decode("utf-8"))
    return 0


def cmd_cwals(cfg: RunConfig) -> int:
    specs = load_morph_specs(cfg.specs)
    data = cfg.dataset if cfg.dataset else bundled_path("morph_values.csv")
    matrix, dropped = load_feature_matrix(
        data, "morphological_ordinal", drop_incomplete=cfg.drop_incomplete, specs=specs
    )
    if dropped:
        print(f"{len(dropped)} row(s) dropped: {', '.join(dropped)}", file=sys.stderr)
    rows = c_wals_table(matrix, specs)
    if cfg.format == "json":
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "c_wals": [{"iso": iso, "c_wals": val} for iso, val in rows],
            }
        )
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["iso", "c_wals"])
        for iso, val in rows:
            writer.writerow([iso, val])
        _emit(buf.getvalue())
    return 0


def cmd_correlate(cfg: RunConfig) -> int:
    x_col, y_col = cfg.columns
    dataset_path = cfg.dataset if cfg.dataset else bundled_path("mwl_cwals.csv")
    cols_x, table_x = load_numeric_table(dataset_path)
    if cfg.reference:
        cols_y, table_y = load_numeric_table(cfg.reference)
    else:
        cols_y, table_y = cols_x, table_x
    _require(x_col in cols_x, f"no numeric column {x_col!r}; available: {', '.join(cols_x)}")
    _require(y_col in cols_y, f"no numeric column {y_col!r}; available: {', '.join(cols_y)}")

    shared = sorted(set(table_x) & set(table_y))
    excluded = sorted(set(table_x).symmetric_difference(table_y))
    if not shared:
        raise ValueError("no overlapping languages between the two tables")
    if excluded:
        print(
            f"{len(excluded)} language(s) present in only one table, excluded: "
            f"{', '.join(excluded)}",
            file=sys.stderr,
        )
    result = spearman(
        [table_x[iso][x_col] for iso in shared],
        [table_y[iso][y_col] for iso in shared],
    )
    print(f"rho = {result.rho:.4f} over n = {result.n} languages", file=sys.stderr)
    if cfg.format == "json":
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "rho": result.rho,
                "n": result.n,
                "x": x_col,
                "y": y_col,
                "excluded": excluded,
            }
        )
    else:
        _emit(f"rho,n\n{result.rho},{result.n}\n")
    return 0


def cmd_families(cfg: RunConfig) -> int:
    registry = load_registry(cfg.registry if cfg.registry else bundled_path("registry.csv"))
    isos = load_iso_list(cfg.dataset if cfg.dataset else bundled_path("mbert_languages.txt"))

    seen: set[str] = set()
    records = []
    unknown = []
    for iso in isos:
        if iso in seen:
            continue
        seen.add(iso)
        if iso in registry:
            records.append(registry.get(iso))
        else:
            unknown.append(iso)
    unknown.sort()
    if unknown:
        print(f"unknown iso code(s) excluded: {', '.join(unknown)}", file=sys.stderr)

    subset = LanguageSet(records)
    count = count_families(subset)
    families, unlabeled = family_breakdown(subset)
    print(f"{count} distinct families over {len(subset)} languages", file=sys.stderr)
    if cfg.format == "json":
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "family_count": count,
                "families": families,
                "unlabeled": unlabeled,
                "unknown": unknown,
            }
        )
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["family", "iso"])
        for family, members in families.items():
            for iso in members:
                writer.writerow([family, iso])
        for iso in unlabeled:
            writer.writerow(["", iso])
        _emit(buf.getvalue())
    return 0


_DISPATCH = {
    "profile": cmd_profile,
    "score": cmd_score,
    "cwals": cmd_cwals,
    "correlate": cmd_correlate,
    "families": cmd_families,
}


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        cfg = _config_from_args(args)
        return _DISPATCH[cfg.command](cfg)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
