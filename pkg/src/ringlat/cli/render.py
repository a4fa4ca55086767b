"""Plain-text, markdown, DOT and TSV renderings of an analysis."""
import csv
import io
import json

from ..extlattice import KIND_LETTER


def _b(x):
    return "true" if x else "false"


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "basis"):
        return [list(r) for r in x.basis]
    if hasattr(x, "item"):
        return x.item()
    return x


def node_tags(a, i):
    """Short tags for node i: R, S, +R, tR, atom."""
    L = a.lattice
    tags = []
    if i == 0:
        tags.append("R")
    if i == len(L) - 1:
        tags.append("S")
    tags += sorted(L.flags(i))
    return tags


def summary(a):
    """Ordered (key, value) pairs shared by every report format."""
    E = a.extension
    S = E.S
    rows = [
        ("ring", E.name or "(unnamed)"),
        ("base", f"Z/{S.n}, rank {S.d}, |S| = {S.size}, |R| = {E.R.size}"),
    ]
    if E.is_trivial:
        rows.append(("interval", "trivial interval"))
    L = a.lattice
    rep = a.report
    dec = a.decomposition
    rows += [
        ("nodes", str(len(L))),
        ("length", str(L.length)),
        ("maximal chains by length", ", ".join(f"{k}:{v}" for k, v in rep.chain_length_spectrum.items())),
        ("lattice", " ".join(f"{k}={_b(v)}" for k, v in rep.flags.items())),
        ("type", " ".join(f"{k}={_b(v)}" for k, v in a.type_flags.as_dict().items())),
        (
            "canonical decomposition",
            f"+R = node {L.node_index(dec.seminormalization)}, "
            f"tR = node {L.node_index(dec.t_closure)}, S = node {len(L) - 1}",
        ),
        ("loewy series", " < ".join(str(k) for k in rep.loewy_series)),
        ("pinched at", "none" if rep.pinched_at is None else ", ".join(map(str, rep.pinched_at))),
        ("delta", _b(a.delta)),
        (
            "delta routes",
            f"bruteforce={_b(a.bruteforce.is_delta)} generators={_b(a.generators)} "
            f"characterized={_b(a.characterized.is_delta)} ({a.characterized.route}) "
            f"criterion={_b(a.criterion.is_delta)}",
        ),
        ("routes agree", _b(a.routes_agree)),
    ]
    if a.bruteforce.witness is not None:
        T, U, w = a.bruteforce.witness
        i, j = a.bruteforce.condition_trace["failing_pair"]
        rows.append(("delta witness", f"nodes {i} and {j}: {list(w)} lies in TU but not in T + U"))
    rows.append(("small delta", _b(a.small_delta)))
    gen = a.simple_generator
    rows.append(("simple generator", "none" if gen is None else str(list(gen))))
    pw = a.pointwise
    if pw is None:
        rows.append(("pointwise minimal", "n/a (R not local)"))
    else:
        pred = "n/a" if pw.predicted_delta is None else _b(pw.predicted_delta)
        rows.append(("pointwise minimal", f"{pw.kind} (predicted delta {pred})"))
    return rows


def node_rows(a):
    L = a.lattice
    levels = L.longest[0]
    for i, T in enumerate(L.nodes):
        yield {
            "node": i,
            "size": T.size,
            "dimension": T.additive_length,
            "level": int(levels[i]),
            "tags": ",".join(node_tags(a, i)),
            "basis": json.dumps([list(r) for r in T.basis]),
        }


def cover_rows(a):
    L = a.lattice
    for i, j in L.covers:
        lab = L.label(i, j)
        yield {
            "lower": i,
            "upper": j,
            "kind": lab.kind,
            "letter": lab.letter,
            "residue_degree": lab.residue_degree,
        }


def traces(a):
    return {
        "bruteforce": _jsonable(a.bruteforce.condition_trace),
        "characterized": {"route": a.characterized.route, **_jsonable(a.characterized.condition_trace)},
        "criterion": _jsonable(a.criterion.condition_trace),
    }


def render_text(a, expectations=None):
    out = io.StringIO()
    for k, v in summary(a):
        out.write(f"{k}: {v}\n")
    out.write("\nnodes (index size dimension level tags)\n")
    for r in node_rows(a):
        out.write(f"  {r['node']:>3} {r['size']:>6} {r['dimension']:>3} {r['level']:>3}  {r['tags']}\n")
    out.write("\ncovers\n")
    for r in cover_rows(a):
        out.write(f"  {r['lower']} -> {r['upper']}  {r['letter']}  ({r['kind']}, degree {r['residue_degree']})\n")
    if expectations:
        out.write("\nexpectations\n")
        for key, want, got, ok in expectations:
            out.write(f"  {'PASS' if ok else 'FAIL'} {key}: expected {want!r}, got {got!r}\n")
    out.write("\ntraces\n")
    out.write(json.dumps(traces(a), indent=2, sort_keys=True))
    out.write("\n")
    return out.getvalue()


def render_markdown(a, expectations=None):
    out = io.StringIO()
    E = a.extension
    out.write(f"# {E.name or 'extension'}\n\n")
    out.write("| property | value |\n|---|---|\n")
    for k, v in summary(a):
        out.write(f"| {k} | {v} |\n")
    out.write("\n## Nodes\n\n| node | size | dimension | level | tags |\n|---|---|---|---|---|\n")
    for r in node_rows(a):
        out.write(f"| {r['node']} | {r['size']} | {r['dimension']} | {r['level']} | {r['tags']} |\n")
    out.write("\n## Covers\n\n| lower | upper | type | residue degree |\n|---|---|---|---|\n")
    for r in cover_rows(a):
        out.write(f"| {r['lower']} | {r['upper']} | {r['kind']} | {r['residue_degree']} |\n")
    if expectations:
        out.write("\n## Expectations\n\n| key | expected | got | result |\n|---|---|---|---|\n")
        for key, want, got, ok in expectations:
            out.write(f"| {key} | {want!r} | {got!r} | {'PASS' if ok else 'FAIL'} |\n")
    out.write("\n## Traces\n\n```json\n")
    out.write(json.dumps(traces(a), indent=2, sort_keys=True))
    out.write("\n```\n")
    return out.getvalue()


def render_tsv(rows):
    rows = list(rows)
    out = io.StringIO()
    if not rows:
        return ""
    w = csv.DictWriter(out, fieldnames=list(rows[0]), delimiter="\t", lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return out.getvalue()


def render_dot(a, classify=True):
    """DOT digraph of the Hasse diagram, bottom to top; byte-stable."""
    L = a.lattice
    lines = ["digraph lattice {", "  rankdir=BT;", '  node [shape=box, fontname="Helvetica"];']
    for i, T in enumerate(L.nodes):
        tags = node_tags(a, i)
        label = f"{i}: dim {T.additive_length}"
        if tags:
            label += "\\n" + ", ".join(tags)
        lines.append(f'  n{i} [label="{label}"];')
    for i, j in L.covers:
        if classify and (i, j) in L.edge_labels:
            lines.append(f'  n{i} -> n{j} [label="{KIND_LETTER[L.label(i, j).kind]}"];')
        else:
            lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
