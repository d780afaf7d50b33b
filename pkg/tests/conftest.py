import sys

import pytest
from hypothesis import HealthCheck, settings

from isoprod.families import FAMILIES
from isoprod.homology import SurfaceHomology

settings.register_profile(
    "isoprod", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("isoprod")

_homology = {}


def surface_homology(rec):
    """One SurfaceHomology per family for the whole session."""
    if rec.name not in _homology:
        d = rec.datum()
        _homology[rec.name] = SurfaceHomology(d.group, d.V1, d.V2)
    return _homology[rec.name]


@pytest.fixture(params=FAMILIES, ids=lambda r: r.name)
def family(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
