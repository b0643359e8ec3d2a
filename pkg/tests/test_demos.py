import runpy

import pytest

from conftest import ROOT

DEMOS = sorted((ROOT / "demos").glob("*.py"))
EXPECTED = {
    "worked_example.py": "characterisation: strict",
    "coarsening_and_extent.py": "extent 11/30 (brute force 11/30)",
    "regular_extension.py": "natural: [0, 1]  regular: [1, 1]",
    "constriction.py": "constricts: True, witness w2",
}


def test_every_demo_is_covered():
    assert {p.name for p in DEMOS} == set(EXPECTED)


@pytest.mark.parametrize("path", DEMOS, ids=[p.name for p in DEMOS])
def test_demo_runs(path, capsys):
    runpy.run_path(str(path), run_name="__main__")
    assert EXPECTED[path.name] in capsys.readouterr().out
