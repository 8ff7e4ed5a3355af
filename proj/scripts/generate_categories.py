#!/usr/bin/env python3
"""Regenerate the bundled category fixtures (fusion rings and F-symbols).

F-symbols use the splitting-tree convention F^{abc}_d[e][f] with
e in a(x)b, f in b(x)c, in the unitary gauge where every F with a unit
among a, b, c equals 1. Only admissible 6-tuples are written.
"""

import itertools
import json
import math
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "categories"


def group_ring(n):
    fusion = [[i, j, (i + j) % n, 1] for i in range(n) for j in range(n)]
    dual = [(-i) % n for i in range(n)]
    return fusion, dual


def table(fusion, rank):
    N = [[[0] * rank for _ in range(rank)] for _ in range(rank)]
    for i, j, k, m in fusion:
        N[i][j][k] = m
    return N


def admissible(N, rank):
    for a, b, c, d, e, f in itertools.product(range(rank), repeat=6):
        if N[a][b][e] and N[e][c][d] and N[b][c][f] and N[a][f][d]:
            yield (a, b, c, d, e, f)


def pentagon_residual(F, N, rank):
    def get(a, b, c, d, e, f):
        return F.get((a, b, c, d, e, f), 0.0)

    worst = 0.0
    r = range(rank)
    for a, b, c, d in itertools.product(r, repeat=4):
        for e, f, g, k, l in itertools.product(r, repeat=5):
            lhs = get(f, c, d, e, g, l) * get(a, b, l, e, f, k)
            rhs = sum(get(a, b, c, g, f, h) * get(a, h, d, e, g, k) * get(b, c, d, k, h, l) for h in r)
            worst = max(worst, abs(lhs - rhs))
    return worst


def write(name, labels, dual, fusion, fvalue=None):
    rank = len(labels)
    doc = {"rank": rank, "labels": labels, "dual": dual, "fusion": sorted(fusion)}
    if fvalue is not None:
        N = table(fusion, rank)
        F = {t: fvalue(*t) for t in admissible(N, rank)}
        res = pentagon_residual(F, N, rank)
        assert res < 1e-12, (name, res)
        doc["fsymbols"] = [list(t) + [v.real, v.imag] for t, v in sorted(F.items())]
    OUT.mkdir(parents=True, exist_ok=True)
    lines = ["{"]
    items = list(doc.items())
    for idx, (key, val) in enumerate(items):
        sep = "," if idx + 1 < len(items) else ""
        if isinstance(val, list) and val and isinstance(val[0], list):
            body = ",\n    ".join(json.dumps(row) for row in val)
            lines.append(f'  "{key}": [\n    {body}\n  ]{sep}')
        else:
            lines.append(f'  "{key}": {json.dumps(val)}{sep}')
    lines.append("}")
    (OUT / f"{name}.json").write_text("\n".join(lines) + "\n")


def main():
    one = lambda *t: complex(1.0)

    write("trivial", ["1"], [0], [[0, 0, 0, 1]], one)

    fusion, dual = group_ring(2)
    write("vec_z2", ["1", "g"], dual, fusion, one)

    fusion, dual = group_ring(3)
    write("vec_z3", ["1", "g", "g2"], dual, fusion, one)

    phi = (1 + math.sqrt(5)) / 2
    fib_fusion = [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 1]]
    fib_matrix = [[1 / phi, 1 / math.sqrt(phi)], [1 / math.sqrt(phi), -1 / phi]]

    def fib(a, b, c, d, e, f):
        if (a, b, c, d) == (1, 1, 1, 1):
            return complex(fib_matrix[e][f])
        return complex(1.0)

    write("fib", ["1", "tau"], [0, 1], fib_fusion, fib)

    # 1, eps (the fermion), sigma
    ising_fusion = [
        [0, 0, 0, 1], [0, 1, 1, 1], [0, 2, 2, 1],
        [1, 0, 1, 1], [1, 1, 0, 1], [1, 2, 2, 1],
        [2, 0, 2, 1], [2, 1, 2, 1], [2, 2, 0, 1], [2, 2, 1, 1],
    ]
    h = 1 / math.sqrt(2)

    def ising(a, b, c, d, e, f):
        if (a, b, c, d) == (2, 2, 2, 2):
            return complex(-h if (e, f) == (1, 1) else h)
        if (a, b, c, d) == (1, 2, 1, 2) or (a, b, c, d) == (2, 1, 2, 1):
            return complex(-1.0)
        return complex(1.0)

    write("ising", ["1", "eps", "sigma"], [0, 1, 2], ising_fusion, ising)

    # Rep(S3): 1, sgn, rho (2-dimensional); ring only.
    reps3_fusion = [
        [0, 0, 0, 1], [0, 1, 1, 1], [0, 2, 2, 1],
        [1, 0, 1, 1], [1, 1, 0, 1], [1, 2, 2, 1],
        [2, 0, 2, 1], [2, 1, 2, 1], [2, 2, 0, 1], [2, 2, 1, 1], [2, 2, 2, 1],
    ]
    write("rep_s3", ["1", "sgn", "rho"], [0, 1, 2], reps3_fusion)


if __name__ == "__main__":
    main()
