#!/usr/bin/env python3
"""Print the full constant-certification table and exit nonzero on failure.

Equivalent to `zerokit constants derive`, kept as a standalone script for
quick desk runs; pass --alpha/--eta to see which constants break away from
the reference parameters.
"""

import sys

from zerokit.cli import main

if __name__ == "__main__":
    sys.exit(main(["constants", "derive", *sys.argv[1:]]))
