#!/usr/bin/env python3
"""Plot a gridra report directory.

Usage:
    python3 plot_report.py <report-dir> [--out <dir>]

Reads limits.csv / demand.csv / daily_outage.csv as emitted by
`gridra report --out <report-dir>` and writes two figures:

    limits_vs_demand.png   committed capacity limits per QoS scheme vs demand
    daily_outage.png       daily shed-time fractions across the year
"""

import argparse
import csv
import os
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def read_csv(path):
    with open(path, newline="") as handle:
        return list(csv.DictReader(handle))


def plot_limits(report_dir, out_dir):
    rows = read_csv(os.path.join(report_dir, "limits.csv"))
    if not rows:
        return
    grid = rows[0]["grid"]
    dc_base = None  # limits are new-capacity; demand is total
    schemes = {}
    demand = {}
    for row in rows:
        year = int(row["year"])
        schemes.setdefault(row["scheme"], {})[year] = float(row["committed_limit_mw"])
        demand[year] = float(row["demand_mw"])

    fig, ax = plt.subplots(figsize=(7, 4.5))
    years = sorted(demand)
    for label, values in schemes.items():
        ax.plot(years, [values[y] for y in years], marker="o", label=f"{label} (committed)")
    ax.plot(years, [demand[y] for y in years], linestyle="--", color="black",
            label="projected demand (total)")
    ax.set_xlabel("year")
    ax.set_ylabel("MW")
    ax.set_title(f"{grid}: new-DC capacity limits vs demand")
    ax.legend(fontsize=8)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(os.path.join(out_dir, "limits_vs_demand.png"), dpi=150)


def plot_daily_outage(report_dir, out_dir):
    path = os.path.join(report_dir, "daily_outage.csv")
    if not os.path.exists(path):
        return
    rows = read_csv(path)
    if not rows:
        return
    days = [int(r["day_index"]) for r in rows]
    pct = [float(r["outage_pct"]) for r in rows]
    year = rows[0]["year"]

    fig, ax = plt.subplots(figsize=(7, 3.5))
    ax.bar(days, pct, width=1.0, color="tab:red")
    ax.set_xlabel("day of year")
    ax.set_ylabel("daily shed time (%)")
    ax.set_title(f"daily datacenter outage fractions, {year}")
    ax.grid(alpha=0.3, axis="y")
    fig.tight_layout()
    fig.savefig(os.path.join(out_dir, "daily_outage.png"), dpi=150)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("report_dir")
    parser.add_argument("--out", default=None)
    args = parser.parse_args()

    out_dir = args.out or args.report_dir
    os.makedirs(out_dir, exist_ok=True)
    plot_limits(args.report_dir, out_dir)
    plot_daily_outage(args.report_dir, out_dir)
    print(f"figures written to {out_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
