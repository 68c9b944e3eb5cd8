import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "package",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("package")


def pytest_collection_modifyitems(config, items):
    if os.environ.get("OACM_EXPENSIVE"):
        return
    skip = pytest.mark.skip(reason="set OACM_EXPENSIVE=1 to run multi-minute checks")
    for item in items:
        if "expensive" in item.keywords:
            item.add_marker(skip)
