import os
from pathlib import Path

import pytest

# one persistent cache directory per checkout, so repeated runs skip the
# expensive table builds
os.environ.setdefault(
    "CCLAB_CACHE_DIR", str(Path(__file__).resolve().parent.parent / ".cclab-cache")
)

from cclab import cache  # noqa: E402


@pytest.fixture(scope="session")
def grp():
    return cache.group


@pytest.fixture(scope="session")
def tbl():
    return cache.table
