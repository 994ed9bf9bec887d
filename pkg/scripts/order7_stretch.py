"""Order-7 run: conjecture check and the every-pair-generates-M property.

Enumerates the amiable semigroups of order 7 (filter applied at the leaves,
so memory stays small) and writes a JSON summary.

    python scripts/order7_stretch.py [--out results/order7.json]
"""

import argparse
import json
import time
import warnings
from pathlib import Path

from amiable.embedding import contains_M, noncommuting_idempotent_pairs, pair_generates_M
from amiable.enumeration import census
from amiable.green import green_partitions


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--out", default="results/order7.json")
    p.add_argument("--order", type=int, default=7)
    args = p.parse_args()
    warnings.simplefilter("ignore", RuntimeWarning)
    t0 = time.time()
    amiable = census(args.order, "amiable", extended=True)
    t_enum = time.time() - t0
    not_adequate = [t for t in amiable if not green_partitions(t).is_adequate]
    counterexamples = [t.rows() for t in not_adequate if contains_M(t) is None]
    bad_pairs = [(t.rows(), pair) for t in not_adequate for pair in noncommuting_idempotent_pairs(t)
                 if not pair_generates_M(t, *pair)]
    summary = {
        "order": args.order,
        "amiable": len(amiable),
        "amiable_not_adequate": len(not_adequate),
        "conjecture_counterexamples": counterexamples,
        "pairs_not_generating_M": len(bad_pairs),
        "first_bad_pair": bad_pairs[0] if bad_pairs else None,
        "enumeration_seconds": round(t_enum, 1),
    }
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    Path(args.out).write_text(json.dumps(summary, indent=2) + "\n")
    print(json.dumps({k: v for k, v in summary.items() if k != "first_bad_pair"}))


if __name__ == "__main__":
    main()
