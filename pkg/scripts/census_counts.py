"""Class counts per filter for orders 1..N (default 6).

    python scripts/census_counts.py [--max-order 6] [--jobs K]
"""

import argparse
import time

from amiable.enumeration import FILTER_MODES, census


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--max-order", type=int, default=6)
    p.add_argument("--jobs", type=int, default=None)
    args = p.parse_args()
    print("n  " + "  ".join(f"{m:>20}" for m in FILTER_MODES) + "  seconds")
    for n in range(1, args.max_order + 1):
        t0 = time.time()
        counts = [len(census(n, m, args.jobs)) for m in FILTER_MODES]
        print(f"{n}  " + "  ".join(f"{c:>20}" for c in counts) + f"  {time.time() - t0:7.1f}")


if __name__ == "__main__":
    main()
