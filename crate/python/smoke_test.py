"""Build the extension module and exercise the Python API.

    python3 python/smoke_test.py
"""

import shutil
import subprocess
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def build():
    subprocess.run(
        ["cargo", "build", "--release", "-p", "skewspec-python", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    lib = ROOT / "target" / "release" / "libskewspec_py.so"
    out = Path(tempfile.mkdtemp()) / "skewspec.so"
    shutil.copy(lib, out)
    sys.path.insert(0, str(out.parent))


def main():
    build()
    import skewspec as ss

    digon = ss.Digraph(2, [(0, 1, 2), (1, 0, "3")])
    assert digon.is_pwls()
    assert ss.char_poly(digon) == "x^2 - 6"
    assert ss.char_poly(digon, "all-plus") == "x^2 + 6"
    assert ss.invariant_char_poly(digon) == "x^2 + 6"

    tri = ss.Digraph(3, [(0, 1, 1), (1, 0, 2), (1, 2, 1), (2, 1, 2), (2, 0, 4), (0, 2, 1)])
    v = ss.decide_invariance(tri)
    assert v["invariant"] and v["common_poly"] == "x^3 + 8x", v
    assert v["mu"] == ["1", "2", "4"], v

    asym = ss.Digraph(3, [(0, 1, 1), (1, 0, 2), (1, 2, 1), (2, 1, 2), (2, 0, Fraction(5)), (0, 2, 1)])
    b = ss.brute_force_invariance(asym)
    assert not b["invariant"] and b["signings"] == 8, b
    assert not ss.decide_invariance(asym)["invariant"]
    assert {ss.char_poly_coeffs(asym, "bits:" + f"{i:03b}")[2] for i in range(8)} == {"1", "-1"}
    try:
        ss.invariant_char_poly(asym)
        raise AssertionError("expected ValueError")
    except ValueError:
        pass

    c4 = ss.orientations_of_graph([(0, 1), (1, 2), (2, 3), (0, 3)], 4)
    assert not c4["all_same"]
    assert sorted(c4["distinct_polys"]) == ["x^4 + 4x^2", "x^4 + 4x^2 + 4"], c4
    assert ss.orientations_of_graph([(0, 1), (1, 2), (0, 2)], 3)["all_same"]

    path = ss.Digraph.from_graph([(0, 1), (1, 2)], 3)
    assert ss.Digraph.from_wdg(path.to_wdg()).arcs == path.arcs
    assert ss.cycles(tri) == [[0, 1], [0, 2], [1, 2], [0, 1, 2], [0, 2, 1]]
    assert ss.signed_cycle_coefficient(path, "bits:11", 2) == "2"
    assert ss.Digraph(2, [(0, 1, 1)]).validate() == ["missing reverse arc (2, 1)"]
    print("python smoke test passed")


if __name__ == "__main__":
    main()
