"""Compute h by every method on a (d, p) grid and report disagreements and timings."""

import argparse
import sys
import time

from shintani_classnum import class_number_direct, class_number_thm1, class_number_thm2, find_generator, make_field
from shintani_classnum.config import GridConfig

RUNNERS = {
    "thm1": lambda field, p: class_number_thm1(field, p, find_generator(field, p)),
    "thm2": class_number_thm2,
    "direct": class_number_direct,
}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d", type=int, nargs="+", default=list(GridConfig.d_values))
    ap.add_argument("--pmax", type=int, default=GridConfig.pmax)
    ap.add_argument("--methods", nargs="+", choices=sorted(RUNNERS), default=list(GridConfig.methods))
    args = ap.parse_args()
    cfg = GridConfig(tuple(args.d), args.pmax, tuple(args.methods))

    print("d\tp\t" + "\t".join(cfg.methods) + "\t" + "\t".join(f"ms_{m}" for m in cfg.methods))
    bad = 0
    for d, p in cfg.pairs():
        field = make_field(d)
        hs, ms = [], []
        for m in cfg.methods:
            start = time.perf_counter()
            hs.append(RUNNERS[m](field, p))
            ms.append(f"{(time.perf_counter() - start) * 1000:.1f}")
        bad += len(set(hs)) > 1
        print(f"{d}\t{p}\t" + "\t".join(map(str, hs)) + "\t" + "\t".join(ms))
    print(f"# {bad} disagreements", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
