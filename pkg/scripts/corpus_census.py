"""Tabulate ring and shelling verdicts over the generated corpus.

    python3 scripts/corpus_census.py [--max-rays 4] [--max-vertices 5] [--box 2] [--csv out.csv]

Prints one row per verdict combination with its count, and the number of
violations of the implications shellable => semishellable, pure semishellable
=> CM, clean => shellable.
"""

import argparse
import csv
import sys
import time
from collections import Counter

from toricface import BoxSpec, GF, QQ, is_cohen_macaulay, is_euler_fan
from toricface.corpus import small_coordinate_fans, small_geometric_fans
from toricface.shelling import cleanness_check, semishellability_check, shellability_search


def classify(fan, box):
    sh = bool(shellability_search(fan))
    semi = semishellability_check(fan)
    cl = bool(cleanness_check(fan, box))
    return {
        "family": "coordinate" if (fan.name or "").startswith("sc") else f"R^{fan.ambient_dim}",
        "dim": fan.dim,
        "pure": fan.pure,
        "cm_q": bool(is_cohen_macaulay(fan, QQ)),
        "cm_f2": bool(is_cohen_macaulay(fan, GF(2))),
        "euler": bool(is_euler_fan(fan)),
        "shellable": sh,
        "semishellable": semi.confidence if semi else "no",
        "clean": cl,
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-rays", type=int, default=4)
    ap.add_argument("--max-vertices", type=int, default=5)
    ap.add_argument("--box", type=int, default=2)
    ap.add_argument("--csv", help="also write one row per fan")
    args = ap.parse_args(argv)

    started = time.perf_counter()
    fans = list(small_geometric_fans(args.max_rays)) + list(small_coordinate_fans(args.max_vertices))
    rows = [classify(f, BoxSpec(args.box)) for f in fans]
    combos = Counter(tuple(r.items()) for r in rows)

    keys = list(rows[0])
    print("\t".join(["count"] + keys))
    for combo, n in sorted(combos.items(), key=lambda kv: (-kv[1], kv[0])):
        print("\t".join([str(n)] + [str(v) for _, v in combo]))

    violations = sum(
        (r["shellable"] and r["semishellable"] == "no")
        + (r["pure"] and r["semishellable"] == "exact" and not (r["cm_q"] and r["cm_f2"]))
        + (r["clean"] and not r["shellable"])
        for r in rows
    )
    print(f"\n{len(fans)} fans, {violations} implication violations, {time.perf_counter() - started:.1f}s")

    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=["name"] + keys)
            w.writeheader()
            for f, r in zip(fans, rows):
                w.writerow({"name": f.name or "", **r})
    return 1 if violations else 0


if __name__ == "__main__":
    sys.exit(main())
