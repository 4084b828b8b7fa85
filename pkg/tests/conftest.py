from __future__ import annotations

import sys
from fractions import Fraction as F
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True
)
settings.load_profile("default")

from gorcodes.simplex import SimplexGroup  # noqa: E402

# the eight listed elements of the non-Gorenstein example group
EXAMPLE_ELEMENTS = [
    (0, 0, 0, 0, 0, 0),
    (F(1, 2), F(1, 2), 0, 0, 0, 0),
    (0, F(1, 2), 0, F(1, 2), F(1, 2), F(1, 2)),
    (F(1, 4), F(1, 4), F(1, 2), F(1, 2), F(1, 2), 0),
    (F(1, 4), F(3, 4), F(1, 2), 0, 0, F(1, 2)),
    (F(1, 2), 0, 0, F(1, 2), F(1, 2), F(1, 2)),
    (F(3, 4), F(1, 4), F(1, 2), 0, 0, F(1, 2)),
    (F(3, 4), F(3, 4), F(1, 2), F(1, 2), F(1, 2), 0),
]


@pytest.fixture
def example_group() -> SimplexGroup:
    return SimplexGroup.from_fractions(EXAMPLE_ELEMENTS)
