"""Scan a file, print each finding with its explanation, and write a SARIF report."""

from __future__ import annotations

import argparse
from pathlib import Path

from hybridscan.delivery import dump_sarif, emit_sarif
from hybridscan.detection import scan_units
from hybridscan.explanation.attribution import attribute
from hybridscan.explanation.render import render_explanation
from hybridscan.representation import SourceUnit

ROOT = Path(__file__).resolve().parent.parent


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("paths", nargs="*", default=[str(ROOT / "corpus/units/security/kitchen_sink.py")])
    parser.add_argument("--sarif", help="write a SARIF document here")
    args = parser.parse_args()

    result = scan_units([SourceUnit.from_path(p) for p in args.paths])
    views = {v.unit.path: v for v in result.views.values()}
    for f in result.findings:
        print(render_explanation(f, attribute(f, views[f.path]), "text"))
    print(f"{len(result.findings)} findings in {result.total_loc} lines")
    if args.sarif:
        Path(args.sarif).write_text(dump_sarif(emit_sarif(result.findings)), encoding="utf-8")
        print(f"SARIF written to {args.sarif}")


if __name__ == "__main__":
    main()
