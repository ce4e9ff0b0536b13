"""Shared fixtures for the test suite"""
import pytest
from hypothesis import settings

from src.algebra import ModulePresentation, Ring, submodule_span, whole_module, zero_submodule


@pytest.fixture
def z4():
    return ModulePresentation.cyclic(4)


@pytest.fixture
def z8():
    return ModulePresentation.cyclic(8)


@pytest.fixture
def z12():
    return ModulePresentation.cyclic(12)


@pytest.fixture
def integers():
    """Z as a module over itself"""
    return ModulePresentation.ring_as_module(Ring.integers())


@pytest.fixture
def span():
    """span(module, *generators) shorthand"""
    def build(module, *generators):
        return submodule_span(module, [list(g) for g in generators])
    return build


@pytest.fixture
def whole():
    return whole_module


@pytest.fixture
def zero():
    return zero_submodule


settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")
