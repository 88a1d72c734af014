"""Optional matplotlib rendering for CLI reports.

Kept separate so the numerical core never imports matplotlib; the CLI
only pulls this module in when --figures is given.  All figures go to
files (Agg backend), alongside the delimited output.
"""

from __future__ import annotations

import os
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)
import numpy as np  # noqa: E402

from .bounds import BoundReport  # noqa: E402
from .extremal import b_value  # noqa: E402


def _ensure_dir(path: str) -> str:
    os.makedirs(path, exist_ok=True)
    return path


def render_table_figure(rows: Sequence[dict], out_dir: str) -> list[str]:
    """B(rho) curve with the tabulated points and their n thresholds."""
    _ensure_dir(out_dir)
    rhos = np.linspace(1.0, 4.0, 400)
    bs = np.array([b_value(r) for r in rhos])
    table = [r for r in rows if r["kind"] == "table"]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9.0, 3.6))
    ax1.plot(rhos, bs, label="B(rho)")
    ax1.plot(rhos, rhos, "--", color="gray", lw=0.8, label="rho")
    ax1.scatter([r["rho"] for r in table], [r["B"] for r in table],
                s=14, color="crimson", zorder=3)
    ax1.set_xlabel("rho")
    ax1.set_ylabel("B(rho)")
    ax1.legend(frameon=False)
    ax2.semilogy([r["rho"] for r in table], [r["n_min"] for r in table],
                 "o-", ms=4)
    ax2.set_xlabel("rho")
    ax2.set_ylabel("n threshold")
    fig.tight_layout()
    path = os.path.join(out_dir, "improvement_table.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return [path]


def render_verify_figures(reports: Sequence[BoundReport], suite: str,
                          out_dir: str) -> list[str]:
    """Margin scatter for any suite; n*eps_n trend when epsilon data present."""
    _ensure_dir(out_dir)
    paths: list[str] = []
    fig, ax = plt.subplots(figsize=(7.0, 3.4))
    margins = [r.margin for r in reports]
    colors = ["tab:green" if r.status in ("ok", "equality") else "tab:red"
              for r in reports]
    ax.scatter(range(len(margins)), margins, s=10, c=colors)
    ax.axhline(0.0, color="black", lw=0.8)
    ax.set_xlabel("report index")
    ax.set_ylabel("margin (rhs - lhs)")
    ax.set_title(f"suite: {suite}")
    fig.tight_layout()
    path = os.path.join(out_dir, f"margins_{suite}.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    paths.append(path)

    eps = [r for r in reports if r.bound_name == "epsilon_sandwich"]
    if eps:
        ns = np.array([r.inputs.get("n", i + 1) for i, r in enumerate(eps)],
                      dtype=float)
        vals = np.array([r.lhs for r in eps])
        uppers = np.array([r.rhs for r in eps])
        lowers = np.array([float(str(r.inputs.get("rho_summary", "0")
                                     ).split("=")[-1]) for r in eps])
        fig, ax = plt.subplots(figsize=(7.0, 3.4))
        ax.plot(ns, ns * vals, "o-", ms=3, label="n * value")
        ax.plot(ns, ns * uppers, "--", label="n * upper line")
        ax.plot(ns, ns * lowers, ":", label="n * lower line")
        ax.axhline(1.0 / (6.0 * np.sqrt(2.0 * np.pi)), color="gray", lw=0.8,
                   label="1/(6 sqrt(2 pi))")
        ax.set_xlabel("n")
        ax.set_ylabel("n * zeta_3(std binomial, N)")
        ax.legend(frameon=False, fontsize=8)
        fig.tight_layout()
        path = os.path.join(out_dir, "epsilon_trend.png")
        fig.savefig(path, dpi=150)
        plt.close(fig)
        paths.append(path)
    return paths
