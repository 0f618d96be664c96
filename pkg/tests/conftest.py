import os
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from mod2coh.catalog import builtin_catalog
from mod2coh.f2poly import GradedElement
from mod2coh.topology import projective_space

settings.register_profile("default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def elements(ring):
    """Hypothesis strategy for arbitrary elements of ``ring``."""
    return st.frozensets(st.sampled_from(ring.basis())).map(lambda t: GradedElement(ring, t))


def top_coefficient(c):
    """Coefficient of the (unique) top-degree basis monomial of c's ring."""
    ring = c.ring
    (top,) = ring.basis_in_degree(ring.top_degree)
    return int(top in c.terms)


@pytest.fixture(scope="session")
def catalog():
    return builtin_catalog()


@pytest.fixture(scope="session")
def rp():
    return {n: projective_space(n) for n in range(9)}


def fixture_path(name):
    return os.path.join(FIXTURES, name)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("tests.test_acceptance")
    lines = getattr(module, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
