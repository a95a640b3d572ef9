#!/usr/bin/env python3
"""Regenerate data/knots8.dat and data/knots9.dat from the KnotInfo CSV dump.

Usage: gen_knot_data.py <knotinfo_data_complete.csv> <out-dir>

The CSV ships with the `database_knotinfo` Python package. Reverse records
(8_17r, 9_32r, 9_33r) use the transposed Seifert matrix and an
orientation-reversed PD code.
"""
import csv
import json
import sys

NONREVERSIBLE_WITH_REVERSE = {"8_17", "9_32", "9_33"}


def reverse_pd(pd):
    n = 2 * len(pd)
    relabel = lambda e: n + 1 - e
    out = []
    for a, b, c, d in pd:
        out.append([relabel(c), relabel(d), relabel(a), relabel(b)])
    return out


def check_pd(name, pd):
    n = 2 * len(pd)
    for a, b, c, d in pd:
        if c % n != (a % n + 1) % n and not (a == n and c == 1):
            raise SystemExit(f"{name}: under strand not consecutive in {[a, b, c, d]}")


def fmt_matrix(v):
    return ";".join(",".join(str(x) for x in row) for row in v)


def fmt_pd(pd):
    return "".join("(" + ",".join(str(x) for x in q) + ")" for q in pd)


def main():
    src, outdir = sys.argv[1], sys.argv[2]
    csv.field_size_limit(10**9)
    rows = {}
    with open(src, newline="") as fh:
        for row in csv.DictReader(fh, delimiter="|"):
            try:
                c = int(row["crossing_number"])
            except ValueError:
                continue
            if 3 <= c <= 9:
                rows[row["name"]] = row

    def key(name):
        base = name.rstrip("r")
        c, k = base.split("_")
        return (int(c), int(k), name.endswith("r"))

    records = []
    for name, row in rows.items():
        sym = row["symmetry_type"].strip()
        reversible = sym in ("reversible", "fully amphicheiral")
        amphi = sym in ("negative amphicheiral", "fully amphicheiral")
        v = json.loads(row["seifert_matrix"])
        pd = json.loads(row["pd_notation"])
        check_pd(name, pd)
        c = int(row["crossing_number"])
        records.append((name, c, reversible, amphi, v, pd))
        if name in NONREVERSIBLE_WITH_REVERSE:
            vt = [list(r) for r in zip(*v)]
            rpd = reverse_pd(pd)
            check_pd(name + "r", rpd)
            records.append((name + "r", c, reversible, amphi, vt, rpd))
    records.sort(key=lambda r: key(r[0]))

    header = (
        "# Prime knots with their Seifert matrices and PD codes.\n"
        "# Source: KnotInfo (database_knotinfo CSV); regenerate with tools/gen_knot_data.py.\n"
        "# name | crossings | reversible | amphicheiral | seifert: rows ';' cols ',' | pd: (a,b,c,d)...\n"
    )
    for scope, limit in (("8", 8), ("9", 9)):
        sel = [r for r in records if r[1] <= limit]
        with open(f"{outdir}/knots{scope}.dat", "w") as out:
            out.write(header)
            for name, c, rev, amphi, v, pd in sel:
                out.write(
                    f"{name} | {c} | {str(rev).lower()} | {str(amphi).lower()} | "
                    f"seifert: {fmt_matrix(v)} | pd: {fmt_pd(pd)}\n"
                )
        print(scope, len(sel))


if __name__ == "__main__":
    main()
