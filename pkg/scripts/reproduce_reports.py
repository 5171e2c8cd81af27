#!/usr/bin/env python3
"""Reproduce the full report pack for both 72-dimensional S_3 liftings.

Writes into out/ (created next to the repository root):
  report_A0.json / report_A1.json   full structured reports
  quiver_A*.dot, separation_A*.dot  the Gabriel quivers and diagrams
  table_A*.json                     structure-constant tables

Run:  python scripts/reproduce_reports.py [outdir]
"""

import json
import pathlib
import sys
import time

from qlhopf.acceptance import table
from qlhopf.qldata import cached_builtin
from qlhopf.reports import full_report, report_dot_outputs


def main() -> int:
    outdir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "out")
    outdir.mkdir(parents=True, exist_ok=True)
    for lam in (0, 1):
        t0 = time.time()
        datum = cached_builtin("Q3_minus", lam=lam)
        tab = table(lam)
        doc = full_report(datum, tab=tab)
        (outdir / f"report_A{lam}.json").write_text(
            json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
        dots = report_dot_outputs(datum)
        (outdir / f"quiver_A{lam}.dot").write_text(dots["quiver"], encoding="utf-8")
        (outdir / f"separation_A{lam}.dot").write_text(
            dots["separation"], encoding="utf-8"
        )
        (outdir / f"table_A{lam}.json").write_text(
            json.dumps(tab.to_json(), indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
        )
        print(
            f"A{lam}: dim {doc['algebra']['dimension']}, "
            f"radical {doc['algebra']['radical_dimension']}, "
            f"{len(doc['simples'])} simples, "
            f"{doc['quiver']['arrow_count']} arrows "
            f"({time.time() - t0:.1f}s)"
        )
    print(f"reports written to {outdir}/")
    return 0


if __name__ == "__main__":
    sys.exit(main())
