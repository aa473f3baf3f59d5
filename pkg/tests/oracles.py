"""Independent oracles used to cross-check library results.

Everything in here is deliberately written the dumb way: brute force
over all subsets, plain DFS over coordinate vectors, sympy for linear
algebra.  None of it shares code (or clever ideas) with the package
under test, so agreement is meaningful.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

import sympy

from cremona.lattice import PicClass, pairing


# ---------------------------------------------------------------------------
# linear algebra via sympy


def sympy_rank(rows) -> int:
    return sympy.Matrix([[sympy.Rational(x) for x in row] for row in rows]).rank()


def sympy_kernel(rows, ncols):
    mat = sympy.Matrix([[sympy.Rational(x) for x in row] for row in rows])
    if mat.rows == 0:
        mat = sympy.zeros(1, ncols)
    return [tuple(Fraction(int(v.p), int(v.q)) for v in vec) for vec in mat.nullspace()]


# ---------------------------------------------------------------------------
# brute-force extremal rays
#
# A ray of the cone {x : u . x >= 0 for all normals u} (the dot here is
# whatever bilinear form the caller encodes in the rows) is extremal iff
# the normals vanishing on it span a hyperplane.  The oracle simply tries
# *every* subset of normals of *every* size, keeps those whose common
# kernel is one-dimensional, orients the kernel vector to satisfy the
# inequalities, and dedupes.


def _primitive_int_vector(vec) -> tuple[int, ...]:
    fracs = [Fraction(x) for x in vec]
    lcm = 1
    for f in fracs:
        lcm = lcm * f.denominator // gcd(lcm, f.denominator)
    ints = [int(f * lcm) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def brute_force_rays(minkowski_rows) -> set[tuple[int, ...]]:
    """All extremal rays of {x : row . x >= 0}, rows in standard-dot form."""
    rows = [tuple(row) for row in minkowski_rows]
    ncols = len(rows[0])
    found: set[tuple[int, ...]] = set()
    for size in range(ncols - 1, len(rows) + 1):
        for subset in itertools.combinations(rows, size):
            kern = sympy_kernel(subset, ncols)
            if len(kern) != 1:
                continue
            ray = _primitive_int_vector(kern[0])
            products = [sum(r * x for r, x in zip(row, ray)) for row in rows]
            if all(p >= 0 for p in products):
                found.add(ray)
            elif all(p <= 0 for p in products):
                found.add(tuple(-x for x in ray))
    return found


# ---------------------------------------------------------------------------
# brute-force (-1)-classes
#
# Straight search over multiplicity vectors in order, with nothing smarter
# than running-sum bounds.  Independent of the multiset-then-permute
# enumeration in the package.


def brute_force_minus_one(n: int, max_degree: int) -> set[tuple[int, ...]]:
    out: set[tuple[int, ...]] = set()
    for i in range(1, n + 1):
        coords = [0] * (n + 1)
        coords[i] = 1
        out.add(tuple(coords))

    def dfs(pos: int, s: int, q: int, prefix: tuple[int, ...], d: int) -> None:
        if pos == n:
            if s == 3 * d - 1 and q == d * d + 1:
                out.add((d,) + tuple(-m for m in prefix))
            return
        remaining = n - pos
        for m in range(0, d + 1):
            ns, nq = s + m, q + m * m
            if ns > 3 * d - 1 or nq > d * d + 1:
                break
            if ns + (remaining - 1) * d < 3 * d - 1:
                continue
            dfs(pos + 1, ns, nq, prefix + (m,), d)

    for d in range(1, max_degree + 1):
        dfs(0, 0, 0, (), d)
    return out


# ---------------------------------------------------------------------------
# tree canonical form (AHU), for comparing diagrams up to isomorphism
#
# Every diagram we care about is a tree whose edges carry a label.  Two
# such trees are isomorphic iff their canonical encodings agree, rooting
# at the tree's center (or the better of its two centers).


def tree_canonical_form(nodes, labelled_edges) -> str:
    adj: dict[object, list[tuple[object, object]]] = {v: [] for v in nodes}
    for a, b, label in labelled_edges:
        adj[a].append((b, label))
        adj[b].append((a, label))

    def centers() -> list[object]:
        alive = set(nodes)
        degree = {v: len(adj[v]) for v in nodes}
        leaves = [v for v in alive if degree[v] <= 1]
        while len(alive) > 2:
            next_leaves = []
            for leaf in leaves:
                alive.discard(leaf)
                for nb, _ in adj[leaf]:
                    if nb in alive:
                        degree[nb] -= 1
                        if degree[nb] == 1:
                            next_leaves.append(nb)
            leaves = next_leaves
        return sorted(alive, key=str)

    def encode(v, parent) -> str:
        children = sorted(
            f"({label}{encode(nb, v)})"
            for nb, label in adj[v]
            if nb != parent
        )
        return "[" + "".join(children) + "]"

    return min(encode(c, None) for c in centers())


# ---------------------------------------------------------------------------
# misc


def pairing_matrix(classes: list[PicClass]) -> list[list[int]]:
    return [[pairing(u, v) for v in classes] for u in classes]
