"""Exact arithmetic in the lattice Z^{1,n} with the Minkowski pairing.

The lattice models the Picard group of the plane blown up at n points:
basis e_0 (line class) and e_1, ..., e_n (exceptional classes), with
e_0^2 = 1, e_i^2 = -1 and all mixed products zero.  Everything here is
integer or rational arithmetic; no floats, ever.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "PicClass",
    "RationalRay",
    "LightConePosition",
    "pairing",
    "canonical_class",
    "anticanonical_class",
    "basis_vector",
    "degree",
    "light_cone_position",
    "primitive",
]


@dataclass(frozen=True)
class PicClass:
    """An integer vector (x_0, x_1, ..., x_n) in Z^{1,n}.

    ``n`` is the number of blown-up points; ``coords`` has length n+1.
    Instances are immutable and hashable, so they can be collected in
    sets (orbits) and used as dict keys.
    """

    n: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not isinstance(self.coords, tuple):
            object.__setattr__(self, "coords", tuple(self.coords))
        if len(self.coords) != self.n + 1:
            raise ValueError(
                f"expected {self.n + 1} coordinates for n={self.n}, got {len(self.coords)}"
            )
        for c in self.coords:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coordinates must be exact integers, got {c!r}")

    # -- vector space conveniences these types get used with constantly --

    def __add__(self, other: "PicClass") -> "PicClass":
        self._check_same_lattice(other)
        return PicClass(self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "PicClass") -> "PicClass":
        self._check_same_lattice(other)
        return PicClass(self.n, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "PicClass":
        return PicClass(self.n, tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> "PicClass":
        if not isinstance(k, int):
            return NotImplemented
        return PicClass(self.n, tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def dot(self, other: "PicClass") -> int:
        return pairing(self, other)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def _check_same_lattice(self, other: "PicClass") -> None:
        if self.n != other.n:
            raise ValueError(f"lattice rank mismatch: n={self.n} vs n={other.n}")

    def __repr__(self) -> str:
        return f"PicClass({self.n}, {self.coords})"


@dataclass(frozen=True)
class RationalRay:
    """A nonzero rational vector understood projectively (up to positive scale).

    Stored in canonical form: denominators cleared, coordinates divided
    by their gcd, and the sign fixed so that x_0 > 0 whenever x_0 != 0
    (otherwise the first nonzero coordinate is positive).
    """

    n: int
    coords: tuple[Fraction, ...]

    @classmethod
    def from_coords(cls, n: int, coords: Iterable) -> "RationalRay":
        fracs = tuple(Fraction(c) for c in coords)
        if len(fracs) != n + 1:
            raise ValueError(f"expected {n + 1} coordinates for n={n}")
        if all(c == 0 for c in fracs):
            raise ValueError("the zero vector does not span a ray")
        ints = _clear_denominators(fracs)
        ints = _canonical_sign(ints)
        return cls(n, tuple(Fraction(c) for c in ints))

    def as_pic_class(self) -> PicClass:
        return PicClass(self.n, tuple(int(c) for c in self.coords))


@dataclass(frozen=True)
class LightConePosition:
    """Where a vector sits relative to the light cone {v : v.v >= 0}."""

    tag: str  # "interior" | "boundary" | "outside"
    forward: bool  # x_0 > 0

    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def pairing(u: PicClass, v: PicClass) -> int:
    """The signature-(1,n) product u_0*v_0 - sum_{i>=1} u_i*v_i."""
    if u.n != v.n:
        raise ValueError(f"lattice rank mismatch: n={u.n} vs n={v.n}")
    uc, vc = u.coords, v.coords
    return uc[0] * vc[0] - sum(a * b for a, b in zip(uc[1:], vc[1:]))


def basis_vector(n: int, i: int) -> PicClass:
    """e_i in Z^{1,n}; i = 0 is the line class, i >= 1 the exceptional ones."""
    if not 0 <= i <= n:
        raise ValueError(f"basis index {i} out of range for n={n}")
    return PicClass(n, tuple(1 if j == i else 0 for j in range(n + 1)))


def canonical_class(n: int) -> PicClass:
    """K = (-3, 1, ..., 1); K^2 = 9 - n."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return PicClass(n, (-3,) + (1,) * n)


def anticanonical_class(n: int) -> PicClass:
    """-K = (3, -1, ..., -1), the class the cone constructions actually use."""
    return -canonical_class(n)


def degree(v: PicClass) -> int:
    """degree(v) = v . e_0 = x_0."""
    return v.coords[0]


def light_cone_position(v: PicClass) -> LightConePosition:
    if v.is_zero():
        raise ValueError("the zero vector has no light-cone position")
    square = pairing(v, v)
    if square > 0:
        tag = LightConePosition.INTERIOR
    elif square == 0:
        tag = LightConePosition.BOUNDARY
    else:
        tag = LightConePosition.OUTSIDE
    return LightConePosition(tag, v.coords[0] > 0)


def primitive(v: PicClass | RationalRay) -> PicClass:
    """The primitive integer vector with canonical sign on the line spanned by v.

    Canonical sign means x_0 > 0 whenever x_0 != 0, otherwise the first
    nonzero coordinate is positive.
    """
    if isinstance(v, RationalRay):
        coords: Sequence = v.coords
        n = v.n
    else:
        coords = v.coords
        n = v.n
    if all(c == 0 for c in coords):
        raise ValueError("the zero vector has no primitive representative")
    ints = _clear_denominators(tuple(Fraction(c) for c in coords))
    return PicClass(n, _canonical_sign(ints))


def primitive_coords(coords: Sequence[Fraction | int]) -> tuple[int, ...]:
    """Clear denominators and divide by the gcd, keeping the input's sign.

    Unlike :func:`primitive` this does not canonicalize sign; ray
    enumeration orients by feasibility instead.
    """
    fracs = tuple(Fraction(c) for c in coords)
    if all(c == 0 for c in fracs):
        raise ValueError("zero vector")
    return _clear_denominators(fracs)


def _clear_denominators(fracs: tuple[Fraction, ...]) -> tuple[int, ...]:
    lcm = 1
    for c in fracs:
        d = c.denominator
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(c * lcm) for c in fracs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return tuple(c // g for c in ints)


def _canonical_sign(ints: tuple[int, ...]) -> tuple[int, ...]:
    lead = ints[0] if ints[0] != 0 else next(c for c in ints if c != 0)
    if lead < 0:
        return tuple(-c for c in ints)
    return ints
