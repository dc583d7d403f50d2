#!/usr/bin/env python3
"""Time the relation solver prime by prime and populate the cache directory.

Defaults to the desk range; --pmax 257 builds the full table
(about 5 s on a laptop).  Set HECKE2_CACHE_DIR to choose the output
directory.
"""

import argparse
import time

from hecke2.hecke import compute_charpoly, odd_primes_up_to, write_charpoly


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pmax", type=int, default=101)
    parser.add_argument("--write", action="store_true", help="write cache files")
    args = parser.parse_args()

    total = 0.0
    for p in odd_primes_up_to(args.pmax):
        start = time.perf_counter()
        cp = compute_charpoly(p)
        elapsed = time.perf_counter() - start
        total += elapsed
        terms = sum(len(sr) for sr in cp.s)
        line = f"p={p:<4} terms={terms:<5} {elapsed * 1000:8.1f} ms"
        if args.write:
            line += f"  -> {write_charpoly(cp)}"
        print(line)
    print(f"total {total:.2f} s")


if __name__ == "__main__":
    main()
