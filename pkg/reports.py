# reports.py
"""
Report assembly and rendering.

A Report is a command echo, the settings in force, and ordered sections. Each
section body is a list of row dicts (rendered as a table), a dict (key/value
lines) or a list of strings (an outline). The json format is a stable,
schema-versioned document; timings appear only when asked for, so two runs of
the same command print identical bytes.
"""

import json
from dataclasses import dataclass, field

import config

SCHEMA_VERSION = 1
WIDTH = 72


@dataclass
class Report:
    command: str
    title: str
    sections: list = field(default_factory=list)
    settings: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)
    failed: bool = False

    def add(self, heading, body):
        self.sections.append((heading, body))
        return self

    def as_dict(self, timings=False):
        document = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "title": self.title,
            "config": self.settings or config.current().as_dict(),
            "results": {heading: body for heading, body in self.sections},
            "failed": self.failed,
        }
        if timings:
            document["timings"] = {k: round(v, 4) for k, v in self.timings.items()}
        return document


def new_report(command, title):
    return Report(command, title, settings=config.current().as_dict())


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _cell(value):
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, dict):
        return ", ".join(f"{k}={_cell(v)}" for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return ", ".join(_cell(v) for v in value)
    return "" if value is None else str(value)


def _table(rows):
    columns = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    cells = [[_cell(row.get(c)) for c in columns] for row in rows]
    widths = [max([len(c)] + [len(r[k]) for r in cells]) for k, c in enumerate(columns)]
    lines = ["  ".join(f"{c:<{w}}" for c, w in zip(columns, widths)).rstrip(),
             "-" * min(WIDTH, sum(widths) + 2 * (len(widths) - 1))]
    for r in cells:
        lines.append("  ".join(f"{c:<{w}}" for c, w in zip(r, widths)).rstrip())
    return lines


def _body(body):
    if isinstance(body, dict):
        width = max((len(str(k)) for k in body), default=0)
        return [f"{k:<{width}} : {_cell(v)}" for k, v in body.items()]
    if isinstance(body, list) and body and all(isinstance(r, dict) for r in body):
        return _table(body)
    if isinstance(body, list):
        return [str(line) for line in body] or ["(none)"]
    return [_cell(body)]


def render_human(report, timings=False):
    lines = ["=" * WIDTH, report.title.upper(), "=" * WIDTH, f"command: {report.command}"]
    settings = report.settings or config.current().as_dict()
    lines.append("config:  " + ", ".join(f"{k}={v}" for k, v in settings.items()))
    for heading, body in report.sections:
        lines += ["", heading, "-" * len(heading)]
        lines += _body(body)
    if timings and report.timings:
        lines += ["", "timings"]
        lines += [f"  {k}: {v:.3f}s" for k, v in report.timings.items()]
    lines.append("=" * WIDTH)
    return "\n".join(lines) + "\n"


def render_json(report, timings=False):
    return json.dumps(report.as_dict(timings), indent=2, sort_keys=True) + "\n"


def render_report(report, fmt="human", timings=False):
    """The report as text in the given format ('human' or 'json')."""
    if fmt == "json":
        return render_json(report, timings)
    return render_human(report, timings)


# ---------------------------------------------------------------------------
# Section builders
# ---------------------------------------------------------------------------

def idempotent_rows(ring, classes):
    rows = []
    for cls in classes:
        rows.append({"idempotent": ring.format(cls.element),
                     "central": cls.central,
                     "S_l": cls.left_semicentral,
                     "S_r": cls.right_semicentral,
                     "inner": cls.inner,
                     "outer": cls.outer,
                     "trivial": cls.peirce_trivial})
    return rows


def witness_rows(ring, classes):
    rows = []
    for cls in classes:
        if cls.inner_witness:
            rows.append({"idempotent": ring.format(cls.element), "fails": "inner",
                         **cls.inner_witness})
        if cls.outer_witness:
            rows.append({"idempotent": ring.format(cls.element), "fails": "outer",
                         **cls.outer_witness})
    return rows


def tree_outline(ring, node, depth=0):
    """Indented outline of a Peirce tree, one line per node."""
    pad = "  " * depth
    head = f"{pad}- unity {ring.format(node.unity)} ({node.ring.size} elements)"
    if node.split is None:
        cert = node.certificate or {}
        lines = [head + f" leaf, {cert.get('nontrivial_checked', 0)} nontrivial idempotents"
                 " checked"]
    else:
        lines = [head + f" split at {node.ring.format(node.split)}"]
    for child in node.children:
        lines += tree_outline(ring, child, depth + 1)
    return lines


def carrier_grid(gmr):
    return [{"row": i + 1, **{f"col {j + 1}": f"{gmr.carriers[i][j].label} "
                                             f"({gmr.carriers[i][j].size})"
                              for j in range(gmr.n)}}
            for i in range(gmr.n)]
