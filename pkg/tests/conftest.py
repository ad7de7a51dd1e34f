from pathlib import Path

import pytest

from valuedyn.model import load_document

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def table1_path():
    return FIXTURES / "table1.model"


@pytest.fixture(scope="session")
def example5_path():
    return FIXTURES / "example5.model"


@pytest.fixture(scope="session")
def table1_text(table1_path):
    return table1_path.read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def example5_text(example5_path):
    return example5_path.read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def table1_doc(table1_path):
    return load_document(table1_path)


@pytest.fixture(scope="session")
def table1(table1_doc):
    return table1_doc.model


@pytest.fixture(scope="session")
def example5_doc(example5_path):
    return load_document(example5_path)
