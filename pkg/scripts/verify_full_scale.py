#!/usr/bin/env python3
"""Run every claim suite at full-scale ranges.

Equivalent to `hecke2 verify all --pmax 500 --long`: image-structure sweeps
to k < 33000, low-degree closed forms for p < 500.  Takes a few minutes.
"""

import sys

from hecke2.verify import VerifyConfig, run_suite


def main() -> int:
    report = run_suite("all", VerifyConfig(kmax=4095, pmax=500, long=True))
    for line in report.lines():
        print(line)
    for claim in report.claims:
        if not claim.ok:
            print(f"# {claim.claim_id}: {claim.detail}", file=sys.stderr)
    print(report.summary())
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
