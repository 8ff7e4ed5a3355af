#!/usr/bin/env python3
"""Regenerate the bundled triangulation fixtures.

Requires the `regina` Python package (authoring only; the library and CLI do
not depend on it). Each fixture is written as

    {"name": ..., "tets": [[[target_tet, target_face, [p0, p1, p2, p3]], ...4], ...]}

where vertex i of the source tetrahedron is glued to vertex p_i of the target.
"""

import json
import pathlib
import sys

import regina

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "triangulations"


def gluing_table(tri):
    tets = []
    for t in range(tri.size()):
        tet = tri.tetrahedron(t)
        records = []
        for f in range(4):
            adj = tet.adjacentTetrahedron(f)
            if adj is None:
                raise SystemExit(f"tetrahedron {t} face {f} is unglued")
            perm = tet.adjacentGluing(f)
            records.append([adj.index(), perm[f], [perm[i] for i in range(4)]])
        tets.append(records)
    return tets


def main():
    ex = regina.Example3
    fixtures = {
        "s3_1tet": ("3-sphere, one tetrahedron", ex.threeSphere()),
        "s3_2tet": ("3-sphere, two tetrahedra", ex.sphere()),
        "s3_5tet": ("3-sphere, boundary of the 4-simplex", ex.simplicialSphere()),
        "s2xs1": ("S^2 x S^1", ex.s2xs1()),
        "rp3": ("real projective space L(2,1)", ex.lens(2, 1)),
        "l31": ("lens space L(3,1)", ex.lens(3, 1)),
        "l41": ("lens space L(4,1)", ex.lens(4, 1)),
        "l51": ("lens space L(5,1)", ex.lens(5, 1)),
        "t3": ("3-torus, six tetrahedra", ex.threeTorus()),
    }
    OUT.mkdir(parents=True, exist_ok=True)
    for key, (desc, tri) in fixtures.items():
        doc = {"name": desc, "tets": gluing_table(tri)}
        text = json.dumps(doc, separators=(",", ":"))
        (OUT / f"{key}.json").write_text(text + "\n")
        print(key, tri.size(), tri.homology().str(), file=sys.stderr)


if __name__ == "__main__":
    main()
