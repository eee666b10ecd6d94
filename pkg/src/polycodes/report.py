"""Verification report rendering: delimited output plus figures.

`write_report` drops a CSV of per-record results next to two PNG figures:
the computed distances against the Singleton bound, and a per-check
pass/fail matrix.  Figure files carry no timestamps so repeated runs of
the same corpus are byte-stable.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

_SAVE_KW = {"dpi": 110, "metadata": {"Date": None}}


def write_report(results: list[dict], outdir: str | Path) -> list[Path]:
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    written = [_write_csv(results, out / "report.csv"),
               _plot_parameters(results, out / "parameters.png"),
               _plot_status(results, out / "status.png")]
    return written


def _write_csv(results: list[dict], path: Path) -> Path:
    cols = ["id", "q", "l", "n", "expected", "computed", "flags_expected",
            "flags_computed", "quantum_expected", "quantum_computed", "status"]
    with path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(cols)
        for r in results:
            w.writerow([
                r["id"], r["q"], r["l"], r["n"],
                " ".join(map(str, r["expected"])),
                " ".join(map(str, r["computed"])) if r["computed"] else "",
                " ".join(r["flags_expected"]),
                " ".join(r["flags_computed"]),
                " ".join(map(str, r.get("quantum_expected") or [])),
                " ".join(map(str, r.get("quantum_computed") or [])),
                r["status"],
            ])
    return path


def _plot_parameters(results: list[dict], path: Path) -> Path:
    fig, ax = plt.subplots(figsize=(6.0, 4.5))
    done = [r for r in results if r["computed"]]
    xs = [r["computed"][0] - r["computed"][1] + 1 for r in done]  # Singleton bound
    ys = [r["computed"][2] for r in done]
    qs = [r["q"] for r in done]
    sc = ax.scatter(xs, ys, c=qs, cmap="viridis", s=28, alpha=0.85)
    lim = max(xs + ys + [1]) + 1
    ax.plot([0, lim], [0, lim], "k--", lw=0.8, label="MDS: d = n-k+1")
    ax.plot([0, lim], [-1, lim - 1], "k:", lw=0.8, label="A-MDS: d = n-k")
    ax.set_xlabel("Singleton bound n-k+1")
    ax.set_ylabel("computed distance d")
    ax.set_title("Gray-image parameters vs Singleton bound")
    ax.legend(loc="upper left", fontsize=8)
    fig.colorbar(sc, ax=ax, label="q")
    fig.tight_layout()
    fig.savefig(path, **_SAVE_KW)
    plt.close(fig)
    return path


def _plot_status(results: list[dict], path: Path) -> Path:
    checks = ["params", "flags", "quantum"]
    fig, ax = plt.subplots(figsize=(6.0, max(2.0, 0.16 * len(results) + 1.2)))
    grid = []
    for r in results:
        row = []
        for c in checks:
            v = r["checks"].get(c)
            row.append(0.5 if v is None else (1.0 if v else 0.0))
        grid.append(row)
    im = ax.imshow(grid, cmap="RdYlGn", vmin=0, vmax=1, aspect="auto")
    ax.set_xticks(range(len(checks)), checks)
    ax.set_yticks(range(len(results)), [r["id"] for r in results], fontsize=6)
    ax.set_title("verification status (green pass / red fail / yellow skipped)")
    fig.tight_layout()
    fig.savefig(path, **_SAVE_KW)
    plt.close(fig)
    return path
