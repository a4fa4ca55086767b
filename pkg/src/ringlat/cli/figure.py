"""Hasse diagram figure of an interval, drawn with matplotlib."""
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .render import node_tags  # noqa: E402

KIND_COLOR = {"ramified": "tab:red", "decomposed": "tab:blue", "inert": "tab:green"}


def layout(L):
    """Node positions: y is the longest chain from R, x spreads each level evenly."""
    levels = L.longest[0]
    by_level = {}
    for i in range(len(L)):
        by_level.setdefault(int(levels[i]), []).append(i)
    pos = {}
    for y, nodes in by_level.items():
        for k, i in enumerate(nodes):
            pos[i] = (k - (len(nodes) - 1) / 2, y)
    return pos


def hasse_figure(a, path, title=None):
    """Write the Hasse diagram of ``a.lattice`` to ``path`` (format from the suffix)."""
    L = a.lattice
    pos = layout(L)
    width = max(4.0, 1.4 * max(sum(1 for p in pos.values() if p[1] == y) for y in {p[1] for p in pos.values()}))
    height = max(3.0, 1.3 * (L.length + 1))
    fig, ax = plt.subplots(figsize=(width, height))
    for i, j in L.covers:
        (x0, y0), (x1, y1) = pos[i], pos[j]
        kind = L.label(i, j).kind if (i, j) in L.edge_labels else None
        ax.plot([x0, x1], [y0, y1], color=KIND_COLOR.get(kind, "gray"), lw=1.5, zorder=1)
        if kind:
            ax.text((x0 + x1) / 2, (y0 + y1) / 2, L.label(i, j).letter, fontsize=8,
                    ha="center", va="center", backgroundcolor="white", zorder=2)
    for i, (x, y) in pos.items():
        tags = [t for t in node_tags(a, i) if t != "atom"]
        ax.scatter([x], [y], s=220, color="white", edgecolor="black", zorder=3)
        ax.text(x, y, str(i), fontsize=8, ha="center", va="center", zorder=4)
        if tags:
            ax.text(x + 0.18, y, " ".join(tags), fontsize=7, ha="left", va="center", zorder=4)
    handles = [plt.Line2D([], [], color=c, label=k) for k, c in KIND_COLOR.items()]
    ax.legend(handles=handles, loc="upper left", fontsize=7, frameon=False)
    ax.set_title(title or (a.extension.name or "interval"), fontsize=10)
    ax.set_axis_off()
    ax.margins(0.15)
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata={"Software": None} if str(path).endswith(".png") else None)
    plt.close(fig)
    return path
