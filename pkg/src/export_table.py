"""Plain-text and HTML rendering of result tables (TSV, Markdown, HTML)."""

import html as html_mod
from dataclasses import dataclass

FORMATS = ("tsv", "markdown", "html")

# ---------------------------------------------------------------------------
# Embedded stylesheet for the standalone HTML page
# ---------------------------------------------------------------------------
TABLE_CSS = """\
:root {
  --accent: #008ab0;
  --fill-bg: #f0f7fa;
  --text-primary: #2d2d2d;
}

body {
  font-family: -apple-system, 'Source Sans 3', sans-serif;
  font-size: 11pt;
  color: var(--text-primary);
  max-width: 800px;
  margin: 0 auto;
  padding: 32px 24px 48px;
}

h1 {
  font-size: 1.4em;
  color: var(--accent);
  border-bottom: 3px solid var(--accent);
  padding-bottom: 8px;
}

table {
  border-collapse: collapse;
  width: 100%;
}
th, td {
  padding: 4px 12px;
  text-align: right;
  font-variant-numeric: tabular-nums;
}
th:first-child, td:first-child { text-align: left; }
thead th {
  border-bottom: 2px solid var(--accent);
}
tbody tr:nth-child(even) { background: var(--fill-bg); }
"""


@dataclass(frozen=True)
class OutputTable:
    headers: tuple
    rows: tuple
    format: str = "tsv"

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(
                f"unknown format {self.format!r}; choose one of {', '.join(FORMATS)}"
            )
        headers = tuple(str(h) for h in self.headers)
        rows = tuple(tuple(str(cell) for cell in row) for row in self.rows)
        for i, row in enumerate(rows, start=1):
            if len(row) != len(headers):
                raise ValueError(
                    f"row {i} has {len(row)} cells, expected {len(headers)}"
                )
        object.__setattr__(self, "headers", headers)
        object.__setattr__(self, "rows", rows)

    def render(self, title=""):
        if self.format == "markdown":
            return render_markdown(self)
        if self.format == "html":
            return render_html(self, title)
        return render_tsv(self)


def render_tsv(table):
    """Header line then one line per row, tab-separated, newline-terminated."""
    lines = ["\t".join(table.headers)]
    lines += ["\t".join(row) for row in table.rows]
    return "\n".join(lines) + "\n"


def render_markdown(table):
    lines = [
        "| " + " | ".join(table.headers) + " |",
        "|" + "|".join(" --- " for _ in table.headers) + "|",
    ]
    lines += ["| " + " | ".join(row) + " |" for row in table.rows]
    return "\n".join(lines) + "\n"


def _esc(text):
    return html_mod.escape(str(text))


def render_html(table, title=""):
    """Self-contained HTML page with embedded CSS."""
    body_parts = []
    if title:
        body_parts.append(f"<h1>{_esc(title)}</h1>")
    body_parts.append("<table>")
    body_parts.append("  <thead>")
    body_parts.append(
        "    <tr>" + "".join(f"<th>{_esc(h)}</th>" for h in table.headers) + "</tr>"
    )
    body_parts.append("  </thead>")
    body_parts.append("  <tbody>")
    for row in table.rows:
        body_parts.append(
            "    <tr>" + "".join(f"<td>{_esc(c)}</td>" for c in row) + "</tr>"
        )
    body_parts.append("  </tbody>")
    body_parts.append("</table>")
    body_html = "\n".join(body_parts)

    return f"""<!DOCTYPE html>
<html lang="en">
<head>
  <meta charset="utf-8">
  <title>{_esc(title) or "Invariants"}</title>
  <style>
{TABLE_CSS}
  </style>
</head>
<body>
{body_html}
</body>
</html>
"""
