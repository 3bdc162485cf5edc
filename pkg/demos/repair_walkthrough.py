"""Suggest, validate and rank repairs for every finding in a file, then show the best diffs."""

from __future__ import annotations

import argparse
from pathlib import Path

from hybridscan.detection import scan_unit
from hybridscan.evaluation.risk import risk_report
from hybridscan.repair import repair
from hybridscan.representation import SourceUnit

ROOT = Path(__file__).resolve().parent.parent


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("path", nargs="?", default=str(ROOT / "corpus/units/risk/account_api.py"))
    args = parser.parse_args()

    unit = SourceUnit.from_path(args.path)
    result = scan_unit(unit)
    views = next(iter(result.views.values()))
    for f in result.findings:
        ranked = repair(f, views)
        print(f"== {f.rule.value} at line {f.span.start_line} (confidence {f.confidence:.2f})")
        if not ranked:
            print("   no suggestion")
            continue
        top = ranked[0]
        v = top.validation
        status = "accepted" if v is not None and v.accepted else "advisory" if top.patch.advisory else "rejected"
        print(f"   {top.patch.description} [{status}, risk reduction {top.risk_reduction:.1f}]")
        if status == "accepted":
            print(top.diff(unit))

    fixed = unit
    for f in result.findings:
        rescan = scan_unit(fixed)
        current = next((g for g in rescan.findings if g.rule is f.rule and g.entity == f.entity), None)
        if current is None:
            continue
        ranked = repair(current, next(iter(rescan.views.values())))
        if ranked and ranked[0].validation is not None and ranked[0].validation.accepted:
            fixed = ranked[0].after(fixed)
    report = risk_report(result.findings, scan_unit(fixed).findings)
    print(f"average risk {report.average_before:.2f} ({report.band_before.value}) -> "
          f"{report.average_after:.2f} ({report.band_after.value})")


if __name__ == "__main__":
    main()
