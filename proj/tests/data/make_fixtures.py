"""Writes the triple JSON files used by the tests."""

import itertools
import json
import pathlib

HERE = pathlib.Path(__file__).parent


def cyclic(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def power(n, k):
    return [(k * x) % n for x in range(n)]


def sym3():
    perms = sorted(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    mul = [[index[tuple(p[q[i]] for i in range(3))] for q in perms] for p in perms]
    names = ["".join(map(str, p)) for p in perms]
    return mul, names


def inner(mul, h):
    n = len(mul)
    inv = [next(y for y in range(n) if mul[x][y] == 0) for x in range(n)]
    return [mul[mul[h][x]][inv[h]] for x in range(n)]


def triple(mul, a0, a1, names=None):
    group = {"order": len(mul), "mul": mul}
    if names:
        group["names"] = names
    return {"group": group, "a0": a0, "a1": a1}


def write(name, obj):
    (HERE / name).write_text(json.dumps(obj, indent=1) + "\n")


def main():
    ident = lambda n: list(range(n))
    for n, k, name in [(2, 1, "z2"), (3, 1, "z3"), (3, 2, "z3inv"), (4, 1, "z4"), (4, 3, "z4inv"),
                       (5, 2, "z5x2"), (5, 3, "z5x3"), (5, 4, "z5x4")]:
        write(name + ".json", triple(cyclic(n), ident(n), power(n, k)))
    write("z3swap.json", triple(cyclic(3), power(3, 2), ident(3)))
    s3, names = sym3()
    write("s3.json", triple(s3, ident(6), ident(6), names))
    write("s3inner.json", triple(s3, inner(s3, 1), inner(s3, 3), names))
    write("s3fixture.json", {"fixture": "s3"})
    write("bad_mul.json", triple([[0, 1], [1, 1]], [0, 1], [0, 1]))
    write("bad_hom.json", triple(cyclic(3), ident(3), [0, 1, 1]))


if __name__ == "__main__":
    main()
