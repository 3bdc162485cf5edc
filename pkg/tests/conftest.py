import sys
from pathlib import Path

import pytest

TESTS = Path(__file__).resolve().parent
ROOT = TESTS.parent
sys.path.insert(0, str(TESTS))

from hybridscan.representation import SourceUnit, build_views  # noqa: E402

CORPUS = ROOT / "corpus"
UNITS = CORPUS / "units"
MANIFEST = CORPUS / "manifest.json"
FIXTURES = TESTS / "fixtures"


def unit(text: str, path: str = "t.py") -> SourceUnit:
    return SourceUnit.from_text(text, path)


def views(text: str, path: str = "t.py"):
    return build_views(unit(text, path))


def corpus_unit(rel: str) -> SourceUnit:
    # paths relative to the corpus root, like the manifest
    return SourceUnit.from_path(CORPUS / rel, root=CORPUS)


@pytest.fixture(scope="session")
def suite_views():
    return build_views(SourceUnit.from_path(FIXTURES / "dataflow_suite.py", root=ROOT))


# acceptance criterion number -> (passed, title, detail); filled in by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, title, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {n:>2}. {title}: {detail}")
