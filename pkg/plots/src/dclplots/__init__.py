"""Figures from dcl threshold-scan CSVs; consumes only the CSV schema."""

from .figure import SCAN_HEADER, CsvFormatError, PlotSpec, load_scan, render

__all__ = ["SCAN_HEADER", "CsvFormatError", "PlotSpec", "load_scan", "render"]
