#!/usr/bin/env python3
"""Populate the zero cache for the default desk grid.

Scans every primitive character with modulus up to --qmax to height
--height, plus deeper windows (height 101) for the modulus-1 and modulus-4
characters used by the derivative checks.  Idempotent: cached certified
windows are skipped.
"""

import argparse
import time

from zerokit.dirichlet.zerocache import ZeroLibrary


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--qmax", type=int, default=20)
    parser.add_argument("--height", type=float, default=51.0)
    parser.add_argument("--cache-dir", default="zero_cache")
    args = parser.parse_args()

    library = ZeroLibrary(args.cache_dir)
    started = time.perf_counter()
    total = 0
    for q in range(1, args.qmax + 1):
        summary = library.ensure(q, args.height)
        fresh = sum(v for v in summary.values() if isinstance(v, int))
        total += fresh
        print(f"q={q:3d}: {len(summary):3d} primitive characters, {fresh:5d} newly scanned zeros")
    for q in (1, 4):
        library.ensure(q, 101.0)
    print(f"done: {total} zeros in {time.perf_counter() - started:.1f}s -> {library.cache_dir}")


if __name__ == "__main__":
    main()
