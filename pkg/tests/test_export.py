import csv
import io
import json

from zschur.export import quiver_dot, quiver_json, table_csv, table_json, table_text
from zschur.modules import Arrow, QuiverPresentation

CLASSES = [(1, 2), (3,)]
ROWS = [[2, 1], [1, 1]]


def test_csv_has_header_and_label_column():
    rows = list(csv.reader(io.StringIO(table_csv(CLASSES, ROWS))))
    assert rows[0] == ["class", "1,2", "3"]
    assert rows[1] == ["1,2", "2", "1"]


def test_json_table():
    data = json.loads(table_json(CLASSES, ROWS, name="cartan"))
    assert data == {"classes": ["1,2", "3"], "cartan": ROWS}


def test_text_table_aligns_labels():
    lines = table_text(CLASSES, ROWS).splitlines()
    assert lines == ["1,2  2 1", "  3  1 1"]


def test_dot_marks_connecting_arrows():
    q = QuiverPresentation([(1, 2), (3,), (2, 1)], [
        Arrow((1, 2), (2, 1), 1, "a"),
        Arrow((3,), (1, 2), 1, "b", connecting=True),
        Arrow((2, 1), (3,), 2, "c"),
    ])
    dot = quiver_dot(q)
    assert dot.startswith("digraph quiver {")
    assert '"1,2" -> "2,1";' in dot
    assert '"3" -> "1,2" [style=dashed];' in dot
    assert '"2,1" -> "3" [label="2"];' in dot
    data = json.loads(quiver_json(q))
    assert data["vertices"] == ["1,2", "3", "2,1"]
    assert [a["connecting"] for a in data["arrows"]] == [False, True, False]
