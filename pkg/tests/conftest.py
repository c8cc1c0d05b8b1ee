"""Shared fixtures.

The zero library is expensive enough to build once per session: all primitive
characters with modulus up to 20, complete to height 51, plus deeper sets
(height 101) for the modulus-1 and modulus-4 characters used by the
derivative and explicit-formula checks.
"""

from __future__ import annotations

import pytest

from zerokit.dirichlet.zerocache import ZeroLibrary

LIBRARY_QMAX = 20
LIBRARY_HEIGHT = 51.0
DEEP_HEIGHT = 101.0


@pytest.fixture(scope="session")
def zero_library(tmp_path_factory) -> ZeroLibrary:
    library = ZeroLibrary(tmp_path_factory.mktemp("zero_cache"))
    for q in range(1, LIBRARY_QMAX + 1):
        library.ensure(q, LIBRARY_HEIGHT)
    library.ensure(1, DEEP_HEIGHT)
    library.ensure(4, DEEP_HEIGHT)
    return library
