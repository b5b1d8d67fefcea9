"""Text and figure rendering of decision results."""

from __future__ import annotations

import csv
import io
from pathlib import Path

from .decision import DecisionResult, WeightedDecisionTable


def format_value(value, weighted: bool) -> str:
    # weighted values print with one decimal; -0.0 is shown as 0.0
    if weighted:
        return f"{round(value, 1) + 0.0:.1f}"
    return str(int(value))


def table_csv(result: DecisionResult, delimiter: str = ",") -> str:
    """Decision table with its ``d`` column, rows in universe order."""
    table = result.table
    weighted = isinstance(table, WeightedDecisionTable)
    cells = table.weighted_entries.tolist() if weighted else table.tri.entries.tolist()
    buf = io.StringIO()
    w = csv.writer(buf, delimiter=delimiter, lineterminator="\n")
    w.writerow(["object", *table.columns, "d"])
    for label, row, d in zip(table.rows, cells, table.decisions):
        w.writerow([label, *(format_value(v, weighted) for v in row), format_value(d, weighted)])
    return buf.getvalue()


def summary_lines(result: DecisionResult) -> list[str]:
    weighted = isinstance(result.table, WeightedDecisionTable)
    fmt = lambda d: format_value(d, weighted)  # noqa: E731
    blocks = lambda p: " ".join("{" + ",".join(b) + "}" for b in p.blocks)  # noqa: E731
    lines = [
        f"consistent: {'yes' if result.consistent else 'no'}",
        f"IND(C): {blocks(result.ind_parameters)}",
        f"IND(D): {blocks(result.ind_decisions)}",
    ]
    if result.reduction is not None:
        lines.append(f"eliminated: {', '.join(result.reduction.eliminated) or '-'}")
        lines.append(f"core: {', '.join(result.reduction.core) or '-'}")
    lines.append("ranking: " + ", ".join(f"{x} ({fmt(d)})" for x, d in result.ranking))
    lines.append("tiers: " + " > ".join("{" + ",".join(t) + "}" for t in result.tiers))
    lines.append(f"maximizers: {', '.join(result.maximizers)}")
    lines.append(f"optimal: {result.optimal}")
    return lines


def result_dict(result: DecisionResult) -> dict:
    table = result.table
    weighted = isinstance(table, WeightedDecisionTable)
    out = {
        "weighted": weighted,
        "columns": list(table.columns),
        "rows": list(table.rows),
        "entries": table.tri.entries.tolist(),
        "decisions": list(table.decisions),
        "consistent": result.consistent,
        "ind_parameters": [list(b) for b in result.ind_parameters.blocks],
        "ind_decisions": [list(b) for b in result.ind_decisions.blocks],
        "ranking": [{"object": x, "d": d} for x, d in result.ranking],
        "tiers": [list(t) for t in result.tiers],
        "maximizers": list(result.maximizers),
        "optimal": result.optimal,
    }
    if weighted:
        out["weights"] = list(table.weights)
        out["weighted_entries"] = table.weighted_entries.tolist()
    if result.reduction is not None:
        out["eliminated"] = list(result.reduction.eliminated)
        out["core"] = list(result.reduction.core)
        out["elimination_checks"] = [
            {
                "parameter": s.parameter,
                "consistent_without": s.consistent_without,
                "equality_without": s.equality_without,
                "same_decision_partition": s.same_decision_partition,
            }
            for s in result.reduction.steps
        ]
    return out


def plot_ranking(result: DecisionResult, path, title: str | None = None) -> Path:
    """Bar chart of decision values in ranking order; maximizers are highlighted."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    path = Path(path)
    labels = [x for x, _ in result.ranking]
    values = [d for _, d in result.ranking]
    best = set(result.maximizers)
    colors = ["tab:green" if x in best else "tab:gray" for x in labels]

    fig, ax = plt.subplots(figsize=(max(4.0, 0.6 * len(labels) + 1.5), 3.2))
    try:
        ax.bar(labels, values, color=colors)
        ax.axhline(0.0, color="black", linewidth=0.8)
        ax.set_ylabel("decision value d")
        ax.set_xlabel("object")
        weighted = isinstance(result.table, WeightedDecisionTable)
        ax.set_title(title or ("weighted decision values" if weighted else "decision values"))
        for i, v in enumerate(values):
            ax.annotate(
                format_value(v, weighted),
                (i, v),
                ha="center",
                va="bottom" if v >= 0 else "top",
                fontsize=8,
            )
        fig.tight_layout()
        fig.savefig(path)
    finally:
        plt.close(fig)
    return path
