"""Delimited output and figures for the scaling benchmark."""

from .rational import format_rational

BENCH_CSV_HEADER = "k,total_length,optimal_cost,normalized_cost,log2_len,ratio"


def bench_csv_lines(rows) -> list:
    """CSV lines (no trailing newlines) for benchmark rows; exact rationals, stable floats."""
    lines = [BENCH_CSV_HEADER]
    for row in rows:
        lines.append(
            ",".join(
                [
                    str(row.k),
                    format_rational(row.total_length),
                    format_rational(row.optimal_cost),
                    format_rational(row.normalized_cost),
                    format(row.log2_len, ".12g"),
                    format(row.ratio, ".12g"),
                ]
            )
        )
    return lines


def bench_csv_text(rows) -> str:
    return "\n".join(bench_csv_lines(rows)) + "\n"


def write_bench_csv(rows, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(bench_csv_text(rows))


def render_bench_figure(rows, path) -> None:
    """Plot normalized cost against stack size next to the cost/log2 ratio.

    Written to ``path`` (format from the extension).  pyplot is imported
    lazily with the Agg backend so the CSV path never needs a display.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ks = [row.k for row in rows]
    costs = [float(row.normalized_cost) for row in rows]
    logs = [row.log2_len for row in rows]
    ratios = [row.ratio for row in rows]

    fig, (top, bottom) = plt.subplots(2, 1, figsize=(6.0, 6.0), sharex=True)
    top.plot(ks, costs, "o-", label="normalized optimal cost")
    top.plot(ks, logs, "s--", color="gray", label="log2(total length)")
    top.set_ylabel("cost per unit length")
    top.set_xscale("log", base=2)
    top.legend()
    top.grid(True, alpha=0.3)

    bottom.plot(ks, ratios, "o-", color="tab:red")
    bottom.set_xlabel("block pairs k")
    bottom.set_ylabel("cost / log2(2k)")
    bottom.grid(True, alpha=0.3)

    fig.suptitle("Alternating-stack sorting cost scaling")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
