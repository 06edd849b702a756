import sys
import subprocess
from pathlib import Path

import pytest

EXAMPLES_DIR = Path(__file__).resolve().parent


def run_script(script_path):
    """Run python script and return its exit code and combined output as a string."""
    proc = subprocess.run(
        [sys.executable, str(script_path)], stdout=subprocess.PIPE, stderr=subprocess.STDOUT, timeout=60
    )
    return proc.returncode, proc.stdout.decode()


@pytest.mark.parametrize("example_name", ["example_identities", "example_progress", "example_solve"])
def test_examples(example_name):
    """Test that examples used in our documentation have expected output."""
    code, output = run_script(EXAMPLES_DIR / f"{example_name}.py")
    assert code == 0, output

    expected_lines = (EXAMPLES_DIR / f"{example_name}.txt").read_text(encoding="utf-8").splitlines()
    assert [line.rstrip() for line in output.splitlines()] == [line.rstrip() for line in expected_lines]
