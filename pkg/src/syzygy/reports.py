"""Report rendering: JSON, delimited tables, and matplotlib figures.

The curve and histogram reports are written as a JSON document, a CSV table,
and PNG figures side by side, all derived from the same in-memory report so
they cannot drift apart.  JSON output is key-sorted with no floats or
timestamps: identical configuration and seed give identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

VERSION = "0.1.0"


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def json_dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def write_json(path, payload):
    Path(path).write_text(json_dumps(payload), encoding="utf-8")


def hilbert_table_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "h1_ideal", "h0_curve", "h0_ambient", "h0_ideal"])
    for r in rows:
        writer.writerow([r["n"], r["h1_ideal"], r["h0_curve"], r["h0_ambient"], r["h0_ideal"]])
    return buf.getvalue()


def histogram_csv(histogram) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["cubic_generators", "occurrences"])
    for k in sorted(histogram, key=int):
        writer.writerow([k, histogram[k]])
    return buf.getvalue()


def betti_csv(triples) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["i", "j", "rank"])
    for i, j, r in triples:
        writer.writerow([i, j, r])
    return buf.getvalue()


def render_hilbert_figure(rows, path, title):
    plt = _pyplot()
    ns = [r["n"] for r in rows]
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(ns, [r["h0_ambient"] for r in rows], "o-", label="sections of O(n)")
    ax.plot(ns, [r["h0_curve"] for r in rows], "s-", label="sections on the curve")
    ax.plot(ns, [r["h0_ideal"] for r in rows], "^-", label="sections of the ideal")
    ax.plot(ns, [r["h1_ideal"] for r in rows], "d--", label="first cohomology of the ideal")
    ax.set_xlabel("twist n")
    ax.set_ylabel("dimension")
    ax.set_title(title)
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _draw_betti_grid(ax, triples, title):
    if not triples:
        ax.set_axis_off()
        ax.set_title(title + " (empty)")
        return
    entries = {(i, j): r for i, j, r in triples}
    imax = max(i for i, _, _ in triples)
    rows = sorted({j - i for i, j, _ in triples})
    rlo, rhi = rows[0], rows[-1]
    ax.set_xlim(-0.5, imax + 0.5)
    ax.set_ylim(rhi + 0.5, rlo - 0.5)
    for i in range(imax + 1):
        for r in range(rlo, rhi + 1):
            v = entries.get((i, i + r), 0)
            ax.text(i, r, str(v) if v else ".", ha="center", va="center",
                    fontsize=11, color="black" if v else "#999999")
    ax.set_xticks(range(imax + 1))
    ax.set_yticks(range(rlo, rhi + 1))
    ax.set_xlabel("homological index")
    ax.set_ylabel("degree - index")
    ax.set_title(title)
    ax.grid(True, alpha=0.2)


def render_betti_figure(betti_module, betti_coordinate_ring, path):
    plt = _pyplot()
    fig, axes = plt.subplots(1, 2, figsize=(9.2, 3.6))
    _draw_betti_grid(axes[0], betti_module, "module Betti table")
    _draw_betti_grid(axes[1], betti_coordinate_ring, "coordinate-ring Betti table")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_histogram_figure(histogram, path, title):
    plt = _pyplot()
    keys = sorted(histogram, key=int)
    values = [histogram[k] for k in keys]
    fig, ax = plt.subplots(figsize=(5.4, 3.8))
    ax.bar([str(k) for k in keys], values, color="#4878a8")
    ax.set_xlabel("number of cubic generators")
    ax.set_ylabel("samples")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_curve_report(report, out_path, attempts=None):
    """report.json + report.csv + report.png + report_betti.png."""
    out = Path(out_path)
    payload = {"version": VERSION, "report": report.to_dict()}
    if attempts is not None:
        payload["attempts"] = attempts
    write_json(out, payload)
    stem = out.with_suffix("")
    csv_path = stem.with_suffix(".csv")
    csv_path.write_text(hilbert_table_csv(report.hilbert_table), encoding="utf-8")
    fig_path = stem.with_suffix(".png")
    render_hilbert_figure(
        report.hilbert_table,
        fig_path,
        f"degree {report.degree}, genus {report.genus} over F_{report.prime}",
    )
    betti_path = Path(str(stem) + "_betti.png")
    render_betti_figure(report.betti_module, report.betti_coordinate_ring, betti_path)
    return [out, csv_path, fig_path, betti_path]


def write_gorenstein_report(result, out_path):
    """result.json + result.csv + result.png."""
    out = Path(out_path)
    payload = {"version": VERSION, "experiment": result.to_dict()}
    write_json(out, payload)
    stem = out.with_suffix("")
    csv_path = stem.with_suffix(".csv")
    csv_path.write_text(
        histogram_csv(result.to_dict()["histogram"]), encoding="utf-8"
    )
    fig_path = stem.with_suffix(".png")
    render_histogram_figure(
        result.to_dict()["histogram"],
        fig_path,
        f"cubic generator counts, {result.accepted} samples, genus {result.g}",
    )
    return [out, csv_path, fig_path]
