#!/usr/bin/env python3
"""Run the full verification harness against a populated zero cache.

Equivalent to `zerokit verify --suite all --scan-missing`; prints the
fixed-width summary and writes the JSON report next to the cache.
"""

import sys

from zerokit.cli import main

if __name__ == "__main__":
    sys.exit(
        main(
            [
                "verify",
                "--suite",
                "all",
                "--scan-missing",
                "--report-file",
                "verification_report.json",
                *sys.argv[1:],
            ]
        )
    )
