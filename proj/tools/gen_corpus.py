#!/usr/bin/env python3
"""Writes the example complexes in corpus/ (run from the repository root)."""

import json
import os


def torus7(labels=None):
    """Seven-vertex torus; returns (triangles, xi) with xi the fibration class."""
    lab = labels or list(range(7))
    tris = []
    for i in range(7):
        tris.append(sorted([lab[i], lab[(i + 1) % 7], lab[(i + 3) % 7]]))
        tris.append(sorted([lab[i], lab[(i + 2) % 7], lab[(i + 3) % 7]]))
    step_value = {1: 0, 2: 1, 3: 1, 4: -1, 5: -1, 6: 0}
    xi = {}
    for i in range(7):
        for j in range(7):
            if i != j:
                xi[(lab[i], lab[j])] = step_value[(j - i) % 7]
    return tris, xi


def edges_of(tris):
    es = set()
    for t in tris:
        for a in range(len(t)):
            for b in range(a + 1, len(t)):
                es.add((t[a], t[b]))
    return sorted(es)


def doc(n, simplices, xi=None):
    d = {"vertices": n, "maximal_simplices": [sorted(s) for s in simplices]}
    if xi is not None:
        es = set()
        for s in simplices:
            s = sorted(s)
            for a in range(len(s)):
                for b in range(a + 1, len(s)):
                    es.add((s[a], s[b]))
        d["xi"] = [{"edge": [i, j], "value": xi.get((i, j), 0)} for (i, j) in sorted(es)]
    return d


def circle3(scale):
    return doc(3, [[0, 1], [1, 2], [0, 2]], {(0, 1): scale})


def torus():
    tris, xi = torus7()
    return doc(7, tris, xi)


def torus_exact():
    tris, _ = torus7()
    return doc(7, tris)


def mapping_torus_deg2():
    # Cylinder layers a(6) - c(6) - d(6) - b(3); a_j is identified with b_{j mod 3},
    # so the a-layer wraps twice around the b-circle.
    b = [0, 1, 2]
    c = list(range(3, 9))
    d = list(range(9, 15))
    a = [b[j % 3] for j in range(6)]
    tris = []
    xi = {}
    for j in range(6):
        k = (j + 1) % 6
        tris.append([a[j], a[k], c[j]])
        tris.append([a[k], c[j], c[k]])
        tris.append([c[j], c[k], d[j]])
        tris.append([c[k], d[j], d[k]])
        xi[(a[j], c[j])] = 1
        xi[(a[k], c[j])] = 1
    for m in range(3):
        d0, d1, d2 = d[2 * m], d[2 * m + 1], d[(2 * m + 2) % 6]
        tris.append([d0, d1, b[m]])
        tris.append([d1, d2, b[(m + 1) % 3]])
        tris.append([d1, b[m], b[(m + 1) % 3]])
    return doc(15, [sorted(t) for t in tris], xi)


def genus2():
    # Connected sum of two seven-vertex tori along the triangle {0,1,3}.
    ta, _ = torus7()
    relabel = [0, 1, 7, 3, 8, 9, 10]
    tb, xib = torus7(relabel)
    glue = [0, 1, 3]
    tris = [t for t in ta if t != glue] + [t for t in tb if t != glue]
    g = {3: 1}
    xi = {}
    for (i, j) in edges_of(tb):
        xi[(i, j)] = xib[(i, j)] - (g.get(j, 0) - g.get(i, 0))
    return doc(11, tris, xi)


def bouquet_torus_circle():
    tris, _ = torus7()
    return doc(9, tris + [[0, 7], [7, 8], [0, 8]], {(0, 7): 1})


def bouquet_two_circles():
    return doc(5, [[0, 1], [1, 2], [0, 2], [0, 3], [3, 4], [0, 4]], {(0, 1): 1})


def angle_cocycle(simplices, angle, n):
    """xi from a simplicial map to an n-cycle: +1 across the cut from n-1 to 0."""
    xi = {}
    for s in simplices:
        for a in range(len(s)):
            for b in range(a + 1, len(s)):
                i, j = s[a], s[b]
                da, db = angle[i], angle[j]
                xi[(i, j)] = 1 if (da, db) == (n - 1, 0) else -1 if (da, db) == (0, n - 1) else 0
    return xi


def annulus():
    tris = []
    for i in range(3):
        k = (i + 1) % 3
        tris.append(sorted([i, k, 3 + i]))
        tris.append(sorted([k, 3 + i, 3 + k]))
    return doc(6, tris, angle_cocycle(tris, [0, 1, 2, 0, 1, 2], 3))


def mobius():
    tris = [sorted([i, (i + 1) % 5, (i + 2) % 5]) for i in range(5)]
    # Crossing from vertex 3 or 4 to vertex 0 or 1 goes once around the core.
    return doc(5, tris, {(0, 3): -1, (0, 4): -1, (1, 4): -1})


def sphere():
    return doc(4, [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]])


def cone():
    return doc(4, [[0, 1, 3], [1, 2, 3], [0, 2, 3]])


CORPUS = {
    "c3": circle3(1),
    "c3_double": circle3(2),
    "torus": torus(),
    "torus_exact": torus_exact(),
    "mapping_torus_deg2": mapping_torus_deg2(),
    "genus2": genus2(),
    "bouquet_torus_circle": bouquet_torus_circle(),
    "bouquet_two_circles": bouquet_two_circles(),
    "annulus": annulus(),
    "mobius": mobius(),
    "sphere": sphere(),
    "cone": cone(),
}


def main():
    os.makedirs("corpus", exist_ok=True)
    for name, d in CORPUS.items():
        with open(os.path.join("corpus", name + ".json"), "w") as fh:
            json.dump(d, fh, separators=(",", ":"))
            fh.write("\n")


if __name__ == "__main__":
    main()
