"""Matplotlib figure rendering for the report commands."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def save_table_figure(reports, path: str) -> None:
    """Area of each family against n, with the upper bound."""
    ns = [r.n for r in reports]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(ns, [r.area_regular for r in reports], "o-", label="regular")
    ax.plot(ns, [r.area_regular_plus for r in reports], "s-", label="regular-plus")
    ax.plot(ns, [r.area_mossinghoff for r in reports], "^-", label="mossinghoff")
    ax.plot(
        ns,
        [r.area_mossinghoff_prime for r in reports],
        "v-",
        label="mossinghoff-prime",
    )
    ax.plot(ns, [r.area_bn for r in reports], "d-", label="one-variable optimum")
    ax.plot(ns, [r.upper_bound for r in reports], "k--", label="upper bound")
    ax.set_xlabel("n")
    ax.set_ylabel("area")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_gap_figure(ns, values, limit, label: str, path: str) -> None:
    """Scaled gap sequence with its asymptotic limit."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(ns, values, "o-", label=label)
    ax.axhline(limit, color="k", linestyle="--", label="limit")
    ax.set_xlabel("n")
    ax.set_ylabel("scaled gap")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
