"""Optional matplotlib rendering of report tables to PNG files.

CSV stays the primary plotting interface; these helpers just save quick
diagnostic figures next to the delimited output when the CLI is given
``--plot-dir``.  Import is deferred by the CLI so that plain runs never
touch matplotlib.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)

from .closure import ClosureOrder
from .radii import RadiusResult


def _finish(fig, path: Path) -> str:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return str(path)


def plot_sigma_table(rows: list[dict], path: Path) -> str:
    """Multiplier decay/growth over k, log-scaled in sigma."""
    ks = [r["k"] for r in rows]
    logs = [r["log_sigma"] for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ks, [v / math.log(10.0) for v in logs], "o-", ms=3)
    ax.set_xlabel("k")
    ax.set_ylabel("log10 sigma_k")
    ax.set_title("operator multipliers")
    ax.grid(True, alpha=0.3)
    return _finish(fig, path)


def plot_envelopes(rows: list[dict], path: Path) -> str:
    """Growth and distortion envelopes against the circle radius."""
    rs = [r["r"] for r in rows]
    fig, axes = plt.subplots(1, 2, figsize=(10, 4))
    axes[0].fill_between(
        rs, [r["growth_lower"] for r in rows], [r["growth_upper"] for r in rows], alpha=0.3
    )
    axes[0].set_title("|f| envelope")
    axes[1].fill_between(
        rs,
        [r["distortion_lower"] for r in rows],
        [r["distortion_upper"] for r in rows],
        alpha=0.3,
        color="tab:orange",
    )
    axes[1].set_title("|f'| envelope")
    for ax in axes:
        ax.set_xlabel("r")
        ax.grid(True, alpha=0.3)
    return _finish(fig, path)


def plot_radius_result(result: RadiusResult, path: Path) -> str:
    """Per-k candidate radii with the attained minimum highlighted."""
    ks = [c.k for c in result.per_k]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ks, [c.candidate for c in result.per_k], "o-", ms=3, label="candidate")
    if any(c.without_k_factor is not None for c in result.per_k):
        ax.plot(
            ks,
            [c.without_k_factor for c in result.per_k],
            "s--",
            ms=3,
            alpha=0.6,
            label="without k factor",
        )
    ax.axhline(result.radius, color="k", lw=0.8, ls=":")
    ax.plot([result.attained_k], [result.radius], "r*", ms=12)
    ax.set_xlabel("k")
    ax.set_ylabel("candidate radius")
    ax.set_title(f"{result.condition} radius, order {result.order:g}")
    ax.legend()
    ax.grid(True, alpha=0.3)
    return _finish(fig, path)


def plot_closure_order(order: ClosureOrder, path: Path) -> str:
    """Per-k closure orders, with invalid-denominator entries marked."""
    fig, ax = plt.subplots(figsize=(6, 4))
    good = [(e.k, e.value) for e in order.per_k if e.denominator_positive]
    bad = [e.k for e in order.per_k if not e.denominator_positive]
    if good:
        ax.plot([k for k, _ in good], [v for _, v in good], "o-", ms=3)
    for k in bad:
        ax.axvline(k, color="r", alpha=0.2)
    ax.axhline(1.0, color="k", lw=0.8, ls=":")
    ax.set_xlabel("k")
    ax.set_ylabel("order")
    ax.set_title(f"{order.kind} order per k")
    ax.grid(True, alpha=0.3)
    return _finish(fig, path)
