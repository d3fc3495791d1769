"""Print both d=3 tables (p < 100) as TSV, plus the cycle contributions for p = 7."""

import argparse

from shintani_classnum.cli import run_table, _tsv


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d", type=int, default=3)
    ap.add_argument("--pmax", type=int, default=100)
    args = ap.parse_args()
    for which in ("table1", "table2"):
        rows = run_table(args.d, args.pmax, which)["rows"]
        print(f"# {which}")
        print(_tsv(rows), end="")


if __name__ == "__main__":
    main()
