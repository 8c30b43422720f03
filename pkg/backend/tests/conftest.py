"""
Shared fixtures: testing session, registry, parsing and CLI helpers
"""
import pytest

from readonce import create_session
from readonce.cli import main
from readonce.models import VariableRegistry, VarSet
from readonce.parser import parse_formula
from readonce.recognizer import validate


@pytest.fixture
def session():
    return create_session('testing')


@pytest.fixture
def registry():
    return VariableRegistry()


@pytest.fixture
def parse(registry):
    """Parse formula text into the test's registry"""
    return lambda text: parse_formula(text, registry)


@pytest.fixture
def vs(registry):
    """VarSet from a whitespace-separated name list"""
    return lambda text: VarSet.from_names(registry, text.split())


@pytest.fixture
def make_instance():
    """Instance from lists like ['x1 x2', 'x3'] on a fresh registry"""
    def build(clauses, terms):
        return validate([c.split() for c in clauses], [t.split() for t in terms], VariableRegistry())
    return build


@pytest.fixture
def write(tmp_path):
    """Write a text file under tmp_path and return its path"""
    def write_file(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write_file


@pytest.fixture
def run_cli(session, capsys):
    """Run the CLI in-process; returns (exit_code, stdout, stderr)"""
    def run(*argv):
        code = main([str(arg) for arg in argv], session=session)
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return run

