"""
Pytest configuration and shared fixtures for the efountain tests
"""

import os
import pathlib
import sys

import pytest

# Add the parent directory to the path so we can import from efountain
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from efountain.catalan import generate_catalan
from efountain.corpus import enumerate_structures, rectangular_band, symmetric_inverse_monoid
from efountain.fountain import analyze_reduced_e_fountain
from efountain.semigroup import idempotents


@pytest.fixture(scope="session")
def fixtures_dir():
    """The fixtures/ directory at the repo root"""
    return pathlib.Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def ct3():
    return generate_catalan(3)


@pytest.fixture(scope="session")
def ct3_structure(ct3):
    """CT_3 with E = all idempotents; indices follow generate_catalan order:
    0=[1,2,3] 1=[1,3,3] 2=[2,2,3] 3=[2,3,3] 4=[3,3,3]"""
    return analyze_reduced_e_fountain(ct3.semigroup, idempotents(ct3.semigroup))


@pytest.fixture(scope="session")
def ct4():
    return generate_catalan(4)


@pytest.fixture(scope="session")
def ct4_structure(ct4):
    return analyze_reduced_e_fountain(ct4.semigroup, idempotents(ct4.semigroup))


@pytest.fixture(scope="session")
def rect2():
    """Square rectangular band of side 2: 0=(1,1) 1=(1,2) 2=(2,1) 3=(2,2), E = {0, 3}"""
    return rectangular_band(2)


@pytest.fixture(scope="session")
def rect2_structure(rect2):
    return analyze_reduced_e_fountain(rect2.semigroup, rect2.e_set)


@pytest.fixture(scope="session")
def rect3_structure():
    entry = rectangular_band(3)
    return analyze_reduced_e_fountain(entry.semigroup, entry.e_set)


@pytest.fixture(scope="session")
def i2_structure():
    entry = symmetric_inverse_monoid(2)
    return analyze_reduced_e_fountain(entry.semigroup, entry.e_set)


@pytest.fixture(scope="session")
def i3_structure():
    entry = symmetric_inverse_monoid(3)
    return analyze_reduced_e_fountain(entry.semigroup, entry.e_set)


@pytest.fixture(scope="session")
def corpus3():
    """Every enumerated structure of order at most 3"""
    return list(enumerate_structures(3))
