"""Contract tests for the scan-CSV renderer, mostly through the CLI."""

import csv
import math
import subprocess
import sys

import pytest

from dclplots import SCAN_HEADER, CsvFormatError, PlotSpec, load_scan, render

HEADER = list(SCAN_HEADER)


def scan_rows(n, points, trials=400, seed=11):
    # points: (m, p_hat) pairs; CI is a plain normal interval, good enough
    # for renderer input
    rows = []
    for m, p in points:
        half = 1.96 * math.sqrt(max(p * (1 - p), 1e-9) / trials)
        rows.append([2, n, "m", m, m / n, trials, round(p * trials), p,
                     max(0.0, p - half), min(1.0, p + half), seed,
                     "decide2", "simple", 12.5])
    return rows


def write_csv(path, rows, header=HEADER):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)
    return str(path)


FIVE_POINTS = [(700, 0.99), (850, 0.93), (1000, 0.52), (1150, 0.08), (1300, 0.01)]


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "dclplots", *map(str, args)],
                          capture_output=True, text=True)


def test_five_row_scan_with_reference_line_exits_zero(tmp_path):
    src = write_csv(tmp_path / "scan.csv", scan_rows(2000, FIVE_POINTS))
    out = tmp_path / "fig.svg"
    proc = run_cli(src, out, "--ref", "0.5:predicted-threshold")
    assert proc.returncode == 0
    assert str(out) in proc.stdout
    assert out.exists() and out.stat().st_size > 0
    text = out.read_text()
    assert "<svg" in text
    # svg.fonttype=none keeps label strings searchable in the output
    assert "predicted-threshold" in text
    assert "n=2000" in text


def test_png_output(tmp_path):
    src = write_csv(tmp_path / "scan.csv", scan_rows(2000, FIVE_POINTS))
    out = tmp_path / "fig.png"
    proc = run_cli(src, out)
    assert proc.returncode == 0
    assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_overlaid_curves_two_sizes(tmp_path):
    shallow = [(200, 0.90), (300, 0.75), (400, 0.50), (500, 0.25), (600, 0.10)]
    steep = [(800, 0.99), (1200, 0.95), (1600, 0.50), (2000, 0.05), (2400, 0.01)]
    a = write_csv(tmp_path / "a.csv", scan_rows(800, shallow))
    b = write_csv(tmp_path / "b.csv", scan_rows(3200, steep))

    # the synthetic data really is steeper at larger n (slope per unit density)
    def max_slope(points, n):
        dens = [(m / n, p) for m, p in points]
        return max(abs((p2 - p1) / (x2 - x1))
                   for (x1, p1), (x2, p2) in zip(dens, dens[1:]))

    assert max_slope(steep, 3200) > max_slope(shallow, 800)

    out = tmp_path / "overlay.svg"
    proc = run_cli(a, b, out, "--ref", "0.5")
    assert proc.returncode == 0
    text = out.read_text()
    assert "n=800" in text and "n=3200" in text


def test_missing_column_exits_3(tmp_path):
    rows = [r[:-1] for r in scan_rows(100, FIVE_POINTS)]
    src = write_csv(tmp_path / "bad.csv", rows, header=HEADER[:-1])
    proc = run_cli(src, tmp_path / "fig.svg")
    assert proc.returncode == 3
    assert "wall_ms" in proc.stderr


def test_header_only_csv_exits_3(tmp_path):
    src = write_csv(tmp_path / "empty.csv", [])
    proc = run_cli(src, tmp_path / "fig.svg")
    assert proc.returncode == 3
    assert "no data rows" in proc.stderr


def test_truly_empty_file_exits_3(tmp_path):
    src = tmp_path / "nothing.csv"
    src.write_text("")
    proc = run_cli(src, tmp_path / "fig.svg")
    assert proc.returncode == 3


def test_non_numeric_field_exits_3(tmp_path):
    rows = scan_rows(100, FIVE_POINTS)
    rows[2][7] = "oops"
    src = write_csv(tmp_path / "bad.csv", rows)
    proc = run_cli(src, tmp_path / "fig.svg")
    assert proc.returncode == 3
    assert "p_hat" in proc.stderr


def test_reordered_header_exits_3(tmp_path):
    header = HEADER[1:] + HEADER[:1]
    rows = [r[1:] + r[:1] for r in scan_rows(100, FIVE_POINTS)]
    src = write_csv(tmp_path / "shuffled.csv", rows, header=header)
    proc = run_cli(src, tmp_path / "fig.svg")
    assert proc.returncode == 3


def test_missing_file_exits_3(tmp_path):
    proc = run_cli(tmp_path / "nope.csv", tmp_path / "fig.svg")
    assert proc.returncode == 3
    assert "i/o error" in proc.stderr


def test_bad_output_extension_exits_2(tmp_path):
    src = write_csv(tmp_path / "scan.csv", scan_rows(100, FIVE_POINTS))
    proc = run_cli(src, tmp_path / "fig.pdf")
    assert proc.returncode == 2


def test_bad_ref_value_exits_2(tmp_path):
    src = write_csv(tmp_path / "scan.csv", scan_rows(100, FIVE_POINTS))
    proc = run_cli(src, tmp_path / "fig.svg", "--ref", "mid:label")
    assert proc.returncode == 2


def test_render_is_deterministic_and_read_only(tmp_path):
    src = write_csv(tmp_path / "scan.csv", scan_rows(500, FIVE_POINTS))
    before = open(src, "rb").read()
    spec = PlotSpec((src,), str(tmp_path / "one.svg"), ((0.5, "ref"),))
    first = open(render(spec), "rb").read()
    spec2 = PlotSpec((src,), str(tmp_path / "two.svg"), ((0.5, "ref"),))
    second = open(render(spec2), "rb").read()
    assert first == second
    assert open(src, "rb").read() == before


def test_load_scan_parses_numeric_columns(tmp_path):
    src = write_csv(tmp_path / "scan.csv", scan_rows(2000, FIVE_POINTS))
    rows = load_scan(src)
    assert len(rows) == 5
    assert rows[0]["density"] == pytest.approx(700 / 2000)
    assert all(r["ci_lo"] <= r["p_hat"] <= r["ci_hi"] for r in rows)
    assert rows[0]["solver"] == "decide2"  # non-numeric columns stay strings


def test_load_scan_rejects_short_data_row(tmp_path):
    rows = scan_rows(100, FIVE_POINTS)
    rows[1] = rows[1][:5]
    src = write_csv(tmp_path / "ragged.csv", rows)
    with pytest.raises(CsvFormatError, match="line 3"):
        load_scan(src)


def test_plotspec_guards():
    with pytest.raises(ValueError, match="at least one"):
        PlotSpec((), "fig.svg")
    with pytest.raises(ValueError, match="output format"):
        PlotSpec(("scan.csv",), "fig.gif")
