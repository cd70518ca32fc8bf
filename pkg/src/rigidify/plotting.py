"""Figure rendering for CLI reports.

Matplotlib is imported lazily so that library use never touches a display
stack; figures are written straight to files with the Agg backend.
"""

from __future__ import annotations


def _axes():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def save_mapping_space_figure(report: dict, path: str):
    """Draw the directed 1-skeleton of a mapping-space report."""
    import math

    plt = _axes()
    vertices = report["simplices"].get("0", [])
    edges = report["simplices"].get("1", [])
    face_rows = report["faces"].get("1", [])
    n = max(len(vertices), 1)
    coords = [(math.cos(2 * math.pi * k / n + math.pi / 2),
               math.sin(2 * math.pi * k / n + math.pi / 2)) for k in range(n)]
    fig, ax = plt.subplots(figsize=(5.5, 5.5))
    for (x, y), simplex in zip(coords, vertices):
        ax.plot([x], [y], "o", color="#1f3d7a", markersize=9)
        label = f"{simplex['beads']}@{''.join(map(str, simplex['vertices']))}"
        ax.annotate(label, (x, y), textcoords="offset points", xytext=(0, 11),
                    ha="center", fontsize=8)
    for simplex, row in zip(edges, face_rows):
        target = row[0][0]
        source = row[1][0]
        sx, sy = coords[source]
        tx, ty = coords[target]
        ax.annotate("", xy=(tx, ty), xytext=(sx, sy),
                    arrowprops=dict(arrowstyle="-|>", color="#7a1f3d",
                                    shrinkA=12, shrinkB=12))
    ax.set_title(f"mapping space {report['from']} -> {report['to']}  "
                 f"f-vector {report['f_vector']}", fontsize=10)
    ax.set_xlim(-1.5, 1.5)
    ax.set_ylim(-1.5, 1.5)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def save_homology_figure(report: dict, path: str):
    """Bar chart of ranks per dimension, annotated with torsion."""
    plt = _axes()
    rows = report["groups"]
    dims = [row["dim"] for row in rows]
    ranks = [row["betti"] for row in rows]
    fig, ax = plt.subplots(figsize=(5, 3.2))
    ax.bar(dims, ranks, color="#1f3d7a", width=0.6)
    for row in rows:
        if row["torsion"]:
            ax.annotate("+" + "+".join(f"Z/{t}" for t in row["torsion"]),
                        (row["dim"], row["betti"]), ha="center",
                        textcoords="offset points", xytext=(0, 4), fontsize=8)
    ax.set_xlabel("dimension")
    ax.set_ylabel("rank")
    ax.set_xticks(dims)
    ax.set_yticks(range(0, max(ranks, default=1) + 1))
    ax.set_title(f"homology of {report['target']}", fontsize=10)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
