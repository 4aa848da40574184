"""Write the JSON fixture corpus under tests/fixtures/."""

import json
import pathlib
import subprocess
import sys

from cxlab import complex_core, fixtures

ROOT = pathlib.Path(__file__).resolve().parents[1] / "tests" / "fixtures"


def dump(name, data):
    with open(ROOT / name, "w") as fh:
        json.dump(data, fh, sort_keys=True, indent=1)
        fh.write("\n")


def main():
    ROOT.mkdir(parents=True, exist_ok=True)
    for name, make in fixtures.COMPLEXES.items():
        complex_core.dump_complex(make(), ROOT / f"{name}.json")
    dump("octahedron_skeleton.json", {"flag": True, "maximal_simplices": fixtures.octahedron_edges()})
    for name, make in fixtures.CATALOGS.items():
        dump(f"cat_{name}.json", make().to_json())
    dump("z2_axes.json", {"subgroups": [[[1, 0]], [[0, 1]]]})
    oracle = subprocess.run([sys.executable, str(ROOT.parents[1] / "scripts" / "census_oracle.py"),
                             "2", "3"], check=True, capture_output=True, text=True)
    dump("census.json", json.loads(oracle.stdout))


if __name__ == "__main__":
    main()
