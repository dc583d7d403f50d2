import os

import pytest


def pytest_collection_modifyitems(config, items):
    if os.environ.get("HECKE2_LONG"):
        return
    skip = pytest.mark.skip(reason="full-scale run; set HECKE2_LONG=1 to enable")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)
