"""Pytest configuration for degseq tests."""

import os

import pytest

from degseq.search.table import load_table


@pytest.fixture(autouse=True)
def clean_degseq_env(monkeypatch):
    """Keep DEGSEQ_* variables from the developer shell out of every test."""
    for key in list(os.environ):
        if key.startswith("DEGSEQ_"):
            monkeypatch.delenv(key)


@pytest.fixture(scope="session")
def table_rows():
    return load_table()


@pytest.fixture(scope="session")
def table_m(table_rows):
    """n -> m(n) from the embedded table."""
    return {row.n: row.m for row in table_rows}
