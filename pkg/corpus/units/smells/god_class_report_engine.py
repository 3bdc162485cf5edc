"""Report generation with every formatting rule inlined into one engine."""


class ReportEngine:
    def __init__(self, rows):
        self.rows = rows
        self.cache = {}

    def format_cell(self, value, kind):
        if value is None:
            return ""
        if kind == "int":
            return str(int(value))
        if kind == "pct":
            return str(round(value * 100, 1)) + "%"
        if kind == "money":
            return "$" + str(round(value, 2))
        if kind == "flag":
            return "yes" if value else "no"
        return str(value)

    def column_width(self, col):
        width = 0
        for row in self.rows:
            cell = row.get(col)
            if cell is None:
                continue
            if len(str(cell)) > width:
                width = len(str(cell))
            if width > 40:
                return 40
        return width

    def summarize(self, col):
        total = 0
        count = 0
        for row in self.rows:
            cell = row.get(col)
            if cell is None:
                continue
            if cell < 0:
                continue
            total += cell
            count += 1
        if count == 0:
            return 0
        return total / count

    def filter_rows(self, col, low, high):
        out = []
        for row in self.rows:
            cell = row.get(col)
            if cell is None:
                continue
            if low is not None and cell < low:
                continue
            if high is not None and cell > high:
                continue
            out.append(row)
        return out

    def render_html(self, cols):
        parts = ["<table>"]
        for row in self.rows:
            cells = []
            for col in cols:
                if col in row:
                    cells.append("<td>" + str(row[col]) + "</td>")
                else:
                    cells.append("<td></td>")
            parts.append("<tr>" + "".join(cells) + "</tr>")
        parts.append("</table>")
        return "".join(parts)

    def render_text(self, cols):
        lines = []
        for row in self.rows:
            cells = []
            for col in cols:
                if col not in row:
                    cells.append("-")
                elif row[col] is None:
                    cells.append("?")
                else:
                    cells.append(str(row[col]))
            lines.append(" | ".join(cells))
        return "\n".join(lines)

    def group_by(self, col):
        groups = {}
        for row in self.rows:
            key = row.get(col)
            if key is None:
                key = "none"
            if key not in groups:
                groups[key] = []
            groups[key].append(row)
        return groups

    def cached_summary(self, col):
        if col in self.cache:
            return self.cache[col]
        value = self.summarize(col)
        if value is None or value == 0:
            return 0
        self.cache[col] = value
        return value

    def trend(self, col):
        prev = None
        ups = 0
        downs = 0
        for row in self.rows:
            cell = row.get(col)
            if cell is None:
                continue
            if prev is not None and cell > prev:
                ups += 1
            elif prev is not None and cell < prev:
                downs += 1
            prev = cell
        if ups > downs:
            return "up"
        if downs > ups:
            return "down"
        return "flat"
