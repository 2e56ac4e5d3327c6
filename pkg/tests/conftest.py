import pytest

from spherical_orbits.io import example_names, load


@pytest.fixture(scope="session")
def docs():
    return {name: load(name) for name in example_names()}


@pytest.fixture(scope="session")
def clfan(docs):
    doc = docs["ex_clfan"]
    return doc.datum, doc.fan()
