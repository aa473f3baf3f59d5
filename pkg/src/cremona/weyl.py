"""The Cremona group action on Z^{1,n}: generators, words, reduction, orbits.

The group W is generated by the quadratic transformations phi_{ijk}
(one for each triple of blown-up points) together with the coordinate
transpositions sigma_i = (i, i+1).  Every generator is an involutive
isometry of the pairing and fixes the canonical class K.

``reduce`` is the workhorse: it moves any K-nonpositive integer class
into the fundamental cone by sorting coordinates and applying phi_123
while x_0 + x_1 + x_2 + x_3 < 0 (each application strictly decreases
x_0, so the loop terminates), or else produces a violated curve class
proving the input is not nef.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .lattice import PicClass, basis_vector, canonical_class, pairing

__all__ = [
    "Generator",
    "Phi",
    "Sigma",
    "WeylWord",
    "ReductionResult",
    "apply_generator",
    "apply_word",
    "fixed_hyperplane_normal",
    "sort_coordinates",
    "reduce_class",
    "all_generators",
    "orbit",
    "OrbitResult",
]


@dataclass(frozen=True)
class Phi:
    """phi_{ijk}: the lattice action of the quadratic map based at points i<j<k."""

    i: int
    j: int
    k: int

    def __post_init__(self) -> None:
        if not (0 < self.i < self.j < self.k):
            raise ValueError(f"Phi indices must satisfy 0 < i < j < k, got {self}")

    def __repr__(self) -> str:
        return f"Phi({self.i},{self.j},{self.k})"


@dataclass(frozen=True)
class Sigma:
    """sigma_i: the transposition of coordinates x_i and x_{i+1}."""

    i: int

    def __post_init__(self) -> None:
        if self.i < 1:
            raise ValueError(f"Sigma index must be >= 1, got {self.i}")

    def __repr__(self) -> str:
        return f"Sigma({self.i})"


Generator = Phi | Sigma


@dataclass(frozen=True)
class WeylWord:
    """A finite sequence of generators, applied left to right."""

    gens: tuple[Generator, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.gens, tuple):
            object.__setattr__(self, "gens", tuple(self.gens))

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.gens)

    def __add__(self, other: "WeylWord") -> "WeylWord":
        return WeylWord(self.gens + other.gens)

    def reversed(self) -> "WeylWord":
        """The word read backwards; inverts the composition since every
        generator is an involution."""
        return WeylWord(self.gens[::-1])


def apply_generator(g: Generator, v: PicClass) -> PicClass:
    """Apply a single generator to a class."""
    x = list(v.coords)
    if isinstance(g, Phi):
        if g.k > v.n:
            raise ValueError(f"{g!r} out of range for n={v.n}")
        x0, xi, xj, xk = x[0], x[g.i], x[g.j], x[g.k]
        x[0] = 2 * x0 + xi + xj + xk
        x[g.i] = -x0 - xj - xk
        x[g.j] = -x0 - xi - xk
        x[g.k] = -x0 - xi - xj
    else:
        if g.i + 1 > v.n:
            raise ValueError(f"{g!r} out of range for n={v.n}")
        x[g.i], x[g.i + 1] = x[g.i + 1], x[g.i]
    return PicClass(v.n, tuple(x))


def apply_word(w: WeylWord | Iterable[Generator], v: PicClass) -> PicClass:
    for g in w:
        v = apply_generator(g, v)
    return v


def fixed_hyperplane_normal(g: Generator, n: int) -> PicClass:
    """The integer normal of the hyperplane the generator reflects across.

    phi_{ijk} fixes (e_0 - e_i - e_j - e_k)^perp, sigma_i fixes
    (e_i - e_{i+1})^perp; both normals have square -2.
    """
    if isinstance(g, Phi):
        if g.k > n:
            raise ValueError(f"{g!r} out of range for n={n}")
        coords = [0] * (n + 1)
        coords[0] = 1
        coords[g.i] = coords[g.j] = coords[g.k] = -1
        return PicClass(n, tuple(coords))
    if g.i + 1 > n:
        raise ValueError(f"{g!r} out of range for n={n}")
    coords = [0] * (n + 1)
    coords[g.i] = 1
    coords[g.i + 1] = -1
    return PicClass(n, tuple(coords))


def sort_coordinates(v: PicClass) -> tuple[PicClass, WeylWord]:
    """Sort x_1 <= ... <= x_n with a stable bubble sort, recording the swaps.

    The returned word w satisfies apply_word(w, v) == sorted vector, and
    being the bubble-sort decomposition it is a canonical reduced
    expression of the sorting permutation.
    """
    x = list(v.coords)
    n = v.n
    word: list[Generator] = []
    changed = True
    while changed:
        changed = False
        for i in range(1, n):
            if x[i] > x[i + 1]:
                x[i], x[i + 1] = x[i + 1], x[i]
                word.append(Sigma(i))
                changed = True
    return PicClass(n, tuple(x)), WeylWord(tuple(word))


@dataclass(frozen=True)
class ReductionResult:
    """Outcome of the fundamental-cone reduction.

    ``status`` is "in_cone" or "not_nef".  ``reduced`` is the final
    state, ``witness`` the word with apply_word(witness, input) ==
    reduced.  For "not_nef", ``violated`` is a class c with
    pairing(c, input) < 0 (the violated constraint pulled back to the
    input by the reversed witness word).
    """

    status: str
    reduced: PicClass
    witness: WeylWord
    violated: PicClass | None = None
    iterations: int = 0

    IN_CONE = "in_cone"
    NOT_NEF = "not_nef"


class KPositiveError(ValueError):
    """Raised for inputs on the K-positive side, where reduction says nothing."""


def _in_fundamental_cone_sorted(v: PicClass) -> bool:
    # assumes x_1 <= ... <= x_n already
    x = v.coords
    return x[0] + x[1] + x[2] + x[3] >= 0 and x[v.n] <= 0


def reduce_class(v: PicClass) -> ReductionResult:
    """Reduce a K-nonpositive integer class into the fundamental cone.

    Loop: sort the tail coordinates (recording transpositions); stop
    with "in_cone" once x_0 + x_1 + x_2 + x_3 >= 0 and x_n <= 0 (the
    remaining cone inequality 3x_0 >= -sum x_i holds throughout because
    it is W-invariant and holds on the input); otherwise apply phi_123
    while the first inequality fails, which strictly decreases x_0.  If
    x_0 falls to <= 0, or the sorted vector has x_n > 0, no translate of
    the cone contains v; report "not_nef" with a violated class that
    pairs negatively with the original input.
    """
    if v.n < 3:
        raise ValueError(f"reduction needs n >= 3, got n={v.n}")
    if v.is_zero():
        raise ValueError("cannot reduce the zero class")
    if pairing(v, canonical_class(v.n)) > 0:
        raise KPositiveError(
            "K-positive side not supported: pairing(v, K) > 0 "
            "(equivalently 3*x_0 < -sum(x_i))"
        )

    n = v.n
    current = v
    word: list = []
    phi_count = 0
    while True:
        current, sort_word = sort_coordinates(current)
        word.extend(sort_word.gens)
        x = current.coords
        if _in_fundamental_cone_sorted(current):
            return ReductionResult(
                ReductionResult.IN_CONE, current, WeylWord(tuple(word)),
                iterations=phi_count,
            )
        if x[0] <= 0:
            # x_0 can only keep decreasing; the input misses every
            # translate of the cone.  Pick a constraint the current
            # state violates and pull it back to the input.
            if x[n] > 0:
                culprit = basis_vector(n, n)  # pairing = -x_n < 0
            elif x[0] < 0:
                culprit = basis_vector(n, 0)  # pairing = x_0 < 0
            else:
                # x_0 = 0 with x_1 + x_2 + x_3 < 0, so x_1 < 0
                culprit = basis_vector(n, 0) - basis_vector(n, 1)
            return _not_nef(v, current, WeylWord(tuple(word)), culprit, phi_count)
        if x[0] + x[1] + x[2] + x[3] < 0:
            current = apply_generator(Phi(1, 2, 3), current)
            word.append(Phi(1, 2, 3))
            phi_count += 1
            continue
        # sorted, x_0 > 0, x_0 + x_1 + x_2 + x_3 >= 0, so x_n > 0 is the
        # failing inequality: e_n (a -1-curve) separates.
        culprit = basis_vector(n, n)
        return _not_nef(v, current, WeylWord(tuple(word)), culprit, phi_count)


def _not_nef(
    original: PicClass,
    reduced: PicClass,
    witness: WeylWord,
    culprit: PicClass,
    phi_count: int,
) -> ReductionResult:
    # pairing(culprit, reduced) = pairing(pulled_back, original) since
    # the generators are involutive isometries.
    pulled_back = apply_word(reversed(witness.gens), culprit)
    return ReductionResult(
        ReductionResult.NOT_NEF, reduced, witness, pulled_back, phi_count
    )


def all_generators(n: int) -> list[Generator]:
    """Every phi_{ijk} (i<j<k<=n) and every sigma_i (i<=n-1)."""
    gens: list[Generator] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                gens.append(Phi(i, j, k))
    for i in range(1, n):
        gens.append(Sigma(i))
    return gens


@dataclass(frozen=True)
class OrbitResult:
    classes: tuple[PicClass, ...]
    truncated: bool


def orbit(
    v: PicClass,
    max_degree: int | None = None,
    max_count: int | None = None,
) -> OrbitResult:
    """Breadth-first closure of v under all generators.

    With ``max_degree`` set, only classes of degree <= max_degree are
    kept or expanded (the closure within the degree-bounded subgraph).
    With ``max_count``, BFS layers are filled in lexicographic order
    until the budget is hit, and the result is flagged truncated.
    The returned classes are sorted lexicographically.
    """
    if max_degree is None and max_count is None:
        raise ValueError("need max_degree or max_count to bound the orbit")
    if max_degree is not None and v.coords[0] > max_degree:
        return OrbitResult((), False)

    gens = all_generators(v.n)
    seen: set[PicClass] = {v}
    frontier = [v]
    truncated = False
    while frontier:
        candidates: set[PicClass] = set()
        for u in frontier:
            for g in gens:
                w = apply_generator(g, u)
                if w in seen or w in candidates:
                    continue
                if max_degree is not None and w.coords[0] > max_degree:
                    continue
                candidates.add(w)
        layer = sorted(candidates, key=lambda c: c.coords)
        if max_count is not None and len(seen) + len(layer) > max_count:
            room = max_count - len(seen)
            layer = layer[:room]
            truncated = True
        seen.update(layer)
        frontier = layer
        if truncated:
            break
    return OrbitResult(tuple(sorted(seen, key=lambda c: c.coords)), truncated)
