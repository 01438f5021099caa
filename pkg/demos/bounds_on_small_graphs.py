"""
Energy bounds on a handful of graphs
====================================

full_report evaluates every bound with its hypotheses; inapplicable ones
carry a reason instead of a number.  The equality flag needs both a zero
slack and a recognised spectral shape.
"""

from alphaspec import full_report, generate

for spec, alpha in [("complete:3", 0.0), ("matching:2", 0.5), ("bipartite:3:3", 0.2),
                    ("star:3", 0.0), ("petersen", 0.3)]:
    rep = full_report(generate(spec), alpha)
    print(f"\n{spec} alpha={alpha}  E={rep.energy:.6f}  shape={rep.shape.classification}")
    for b in rep.bounds:
        if not b.applicable:
            print(f"   {b.name:16s} --  ({b.reason})")
            continue
        tag = " equality" if b.equality else ""
        print(f"   {b.name:16s} {b.value:10.6f}  slack {b.slack:+.2e}{tag}")
