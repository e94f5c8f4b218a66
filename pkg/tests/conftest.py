import pathlib

import pytest

from finitary.model_io import parse_model

import criteria

CORPUS_DIR = pathlib.Path(__file__).resolve().parent.parent / "corpus"


def corpus_names() -> list[str]:
    return sorted(p.name for p in CORPUS_DIR.iterdir())


def load_corpus_model(name: str):
    return parse_model((CORPUS_DIR / name).read_text())


@pytest.fixture(scope="session")
def corpus_dir() -> pathlib.Path:
    return CORPUS_DIR


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = criteria.lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
