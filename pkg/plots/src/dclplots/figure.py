"""Render threshold-scan CSVs into figures: p_hat vs density with CI bands."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")  # no display server
import matplotlib.pyplot as plt

# Interface contract with the scan CSV writer; kept verbatim, never imported.
SCAN_HEADER = ("k", "n", "model", "param", "density", "trials", "sat",
               "p_hat", "ci_lo", "ci_hi", "seed", "solver", "mode", "wall_ms")

_NUMERIC = ("density", "p_hat", "ci_lo", "ci_hi")


class CsvFormatError(ValueError):
    """The input file does not follow the scan CSV schema."""


def load_scan(path) -> list[dict]:
    """Read one scan CSV; exact header required, at least one data row."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = tuple(next(reader))
        except StopIteration:
            raise CsvFormatError(f"{path}: empty file, expected the scan header") from None
        if header != SCAN_HEADER:
            missing = [c for c in SCAN_HEADER if c not in header]
            if missing:
                raise CsvFormatError(f"{path}: missing columns {', '.join(missing)}")
            raise CsvFormatError(f"{path}: header {header} is not the scan schema")
        rows = []
        for lineno, rec in enumerate(reader, start=2):
            if len(rec) != len(SCAN_HEADER):
                raise CsvFormatError(
                    f"{path}: line {lineno}: {len(rec)} fields, expected {len(SCAN_HEADER)}")
            row = dict(zip(SCAN_HEADER, rec))
            for key in _NUMERIC:
                try:
                    row[key] = float(row[key])
                except ValueError:
                    raise CsvFormatError(
                        f"{path}: line {lineno}: non-numeric {key} value {row[key]!r}") from None
            rows.append(row)
    if not rows:
        raise CsvFormatError(f"{path}: no data rows")
    return rows


@dataclass(frozen=True)
class PlotSpec:
    inputs: tuple          # scan CSV paths, one curve per file
    output: str            # image path, .svg or .png
    reference_lines: tuple = ()   # (value, label) pairs drawn as vertical lines

    def __post_init__(self):
        if not self.inputs:
            raise ValueError("at least one input CSV is required")
        suffix = Path(self.output).suffix.lower()
        if suffix not in (".svg", ".png"):
            raise ValueError(f"unsupported output format {suffix!r}; use .svg or .png")


def _curve_label(path, rows) -> str:
    ns = {row["n"] for row in rows}
    if len(ns) == 1:
        return f"n={ns.pop()}"
    return Path(path).stem


def render(spec: PlotSpec) -> str:
    """Draw the figure described by spec and return the output path."""
    curves = [(path, load_scan(path)) for path in spec.inputs]
    # fixed hashsalt + text-as-text + no date stamp keep the SVG byte-stable
    rc = {"svg.hashsalt": "dclplots", "svg.fonttype": "none"}
    with plt.rc_context(rc):
        fig, ax = plt.subplots(figsize=(6.4, 4.2))
        for path, rows in curves:
            rows = sorted(rows, key=lambda r: r["density"])
            xs = [r["density"] for r in rows]
            ax.fill_between(xs, [r["ci_lo"] for r in rows], [r["ci_hi"] for r in rows],
                            alpha=0.25, linewidth=0)
            ax.plot(xs, [r["p_hat"] for r in rows], marker="o", markersize=3,
                    label=_curve_label(path, rows))
        for value, label in spec.reference_lines:
            ax.axvline(value, linestyle="--", linewidth=1.0, color="black",
                       alpha=0.6, label=label)
        ax.set_xlabel("per-colour edge density")
        ax.set_ylabel("estimated Pr[disjoint covers exist]")
        ax.set_ylim(-0.02, 1.02)
        ax.legend(loc="best", fontsize=9)
        fig.tight_layout()
        if Path(spec.output).suffix.lower() == ".svg":
            fig.savefig(spec.output, metadata={"Date": None})
        else:
            fig.savefig(spec.output, dpi=120, metadata={"Software": "dcl-plots"})
        plt.close(fig)
    return spec.output
