import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from char2spec.gf import GF2, GF4, GF8, GF16


@pytest.fixture
def gf2():
    return GF2


@pytest.fixture
def gf4():
    return GF4


@pytest.fixture
def gf8():
    return GF8


@pytest.fixture
def gf16():
    return GF16
