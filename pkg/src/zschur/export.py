"""Serialisation of class tables and quivers: CSV, JSON and Graphviz DOT."""

import csv
import io
import json

from .combinatorics import format_composition


def class_labels(classes):
    return [format_composition(c) for c in classes]


def table_csv(classes, rows):
    """CSV with a header row and a leading label column, classes in the given order."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    labels = class_labels(classes)
    w.writerow(["class"] + labels)
    for lab, row in zip(labels, rows):
        w.writerow([lab] + list(row))
    return buf.getvalue()


def table_json(classes, rows, name="table"):
    return json.dumps({"classes": class_labels(classes), name: [list(r) for r in rows]},
                      sort_keys=True)


def table_text(classes, rows):
    labels = class_labels(classes)
    width = max([len(s) for s in labels] + [1])
    cell = max([len(str(v)) for r in rows for v in r] + [1])
    lines = []
    for lab, row in zip(labels, rows):
        lines.append(lab.rjust(width) + "  " + " ".join(str(v).rjust(cell) for v in row))
    return "\n".join(lines)


def _dot_id(cls):
    return '"%s"' % format_composition(cls)


def quiver_dot(quiver, name="quiver"):
    """DOT text; connecting arrows are dashed, labels are reduced compositions."""
    lines = ["digraph %s {" % name, "  node [shape=plaintext];"]
    for v in quiver.vertices:
        lines.append("  %s;" % _dot_id(v))
    for a in quiver.arrows:
        attrs = []
        if a.multiplicity != 1:
            attrs.append('label="%d"' % a.multiplicity)
        if a.connecting:
            attrs.append("style=dashed")
        tail = " [%s]" % ", ".join(attrs) if attrs else ""
        lines.append("  %s -> %s%s;" % (_dot_id(a.source), _dot_id(a.target), tail))
    lines.append("}")
    return "\n".join(lines) + "\n"


def quiver_json(quiver):
    return json.dumps({
        "vertices": class_labels(quiver.vertices),
        "arrows": [{"source": format_composition(a.source),
                    "target": format_composition(a.target),
                    "multiplicity": a.multiplicity,
                    "connecting": a.connecting} for a in quiver.arrows],
    }, sort_keys=True)
