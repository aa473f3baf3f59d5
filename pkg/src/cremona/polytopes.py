"""Polyhedral cones over hyperbolic polytopes.

A polytope in hyperbolic n-space is described here by the cone over it
in the lattice: a finite list of integer normal vectors u with u^2 < 0,
each contributing the inequality pairing(u, x) >= 0.  This module
builds the named cones (the sorted cone, its truncation at x_n <= 0,
and the further truncation by -K), classifies dihedral angles exactly,
assembles Gram and Cartan matrices, draws Coxeter diagrams, and
enumerates extremal rays by facet-subset kernels.

Everything is exact: angles are decided through the rational invariant
cos^2 = (u.v)^2 / (u^2 v^2), never through floating point.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .lattice import (
    LightConePosition,
    PicClass,
    anticanonical_class,
    basis_vector,
    light_cone_position,
    pairing,
    primitive_coords,
)
from .linalg import kernel_basis, rank, rref, solve_unique

__all__ = [
    "Halfspace",
    "ConePolytope",
    "MembershipResult",
    "AngleClass",
    "CartanEntry",
    "Ray",
    "CoxeterCheck",
    "DiagramEdge",
    "CoxeterDiagram",
    "VertexFormulaReport",
    "RegionRRow",
    "RegionRReport",
    "build_P_tilde",
    "build_P",
    "build_P_minus",
    "membership",
    "gram_matrix",
    "classify_angle",
    "cartan_matrix",
    "render_cartan_entry",
    "is_coxeter",
    "coxeter_diagram",
    "extremal_rays",
    "boundary_rays",
    "finite_volume",
    "is_implied",
    "redundant_constraints",
    "vertex_formula_families",
    "verify_vertex_formulas",
    "verify_region_R",
]


@dataclass(frozen=True)
class Halfspace:
    """The halfspace {x : pairing(normal, x) >= 0}.

    The normal is an unnormalized integer vector with normal^2 < 0, so
    that the bounding hyperplane actually meets hyperbolic space.
    """

    normal: PicClass

    def __post_init__(self) -> None:
        if pairing(self.normal, self.normal) >= 0:
            raise ValueError(
                f"halfspace normal must have negative self-pairing, "
                f"got {pairing(self.normal, self.normal)} for {self.normal.coords}"
            )


@dataclass(frozen=True)
class ConePolytope:
    """A cone cut out by halfspaces, with optional extra inequalities.

    ``extra_constraints`` are normals exempt from the negative-square
    requirement; they exist for toy cones in affine-style coordinates
    and play no role in the named hyperbolic polytopes.

    The halfspace list is *meant* to be minimal (no inequality implied
    by the rest); this is not enforced on construction.  Use
    redundant_constraints() to audit it.
    """

    n: int
    halfspaces: tuple[Halfspace, ...]
    extra_constraints: tuple[PicClass, ...] = ()

    def __post_init__(self) -> None:
        for u in self.all_normals:
            if u.n != self.n:
                raise ValueError(f"normal {u.coords} does not live in rank {self.n + 1}")

    @property
    def all_normals(self) -> tuple[PicClass, ...]:
        return tuple(h.normal for h in self.halfspaces) + self.extra_constraints


@dataclass(frozen=True)
class MembershipResult:
    contains: bool
    violated: PicClass | None

    def __bool__(self) -> bool:
        return self.contains


# ---------------------------------------------------------------------------
# named constructions


def build_P_tilde(n: int) -> ConePolytope:
    """The sorted cone: x_0 >= -x_1-x_2-x_3 and x_1 <= x_2 <= ... <= x_n.

    Normals are v_0 = e_0-e_1-e_2-e_3 and v_i = e_i-e_{i+1} for
    i = 1..n-1.  The cone is not pointed (it contains the line R.K).
    """
    if n < 3:
        raise ValueError(f"need n >= 3 for the sorted cone, got {n}")
    if n == 3:
        warnings.warn(
            "the sorted cone with n = 3 has only the v_0 facet and two "
            "transpositions; minimality checks are degenerate",
            stacklevel=2,
        )
    e = [basis_vector(n, i) for i in range(n + 1)]
    normals = [e[0] - e[1] - e[2] - e[3]]
    normals += [e[i] - e[i + 1] for i in range(1, n)]
    return ConePolytope(n=n, halfspaces=tuple(Halfspace(u) for u in normals))


def build_P(n: int) -> ConePolytope:
    """The sorted cone truncated at x_n <= 0 (normal e_n appended)."""
    base = build_P_tilde(n)
    extra = Halfspace(basis_vector(n, n))
    return ConePolytope(n=n, halfspaces=base.halfspaces + (extra,))


def build_P_minus(n: int) -> ConePolytope:
    """build_P(n) truncated by 3x_0 >= -sum x_i (normal -K appended).

    Only defined for n >= 10: at n = 9 the would-be normal -K has
    square 0 and the inequality is already implied by the others.
    """
    if n <= 9:
        raise ValueError(
            f"the -K truncation needs n >= 10 (at n = {n} the normal has "
            "square >= 0 and the inequality is implied by the others)"
        )
    base = build_P(n)
    extra = Halfspace(anticanonical_class(n))
    return ConePolytope(n=n, halfspaces=base.halfspaces + (extra,))


# ---------------------------------------------------------------------------
# membership and Gram data


def _as_pic_class(v) -> PicClass:
    return v.as_pic_class() if hasattr(v, "as_pic_class") else v


def membership(P: ConePolytope, v) -> MembershipResult:
    """Does v satisfy every inequality of P?  Reports the first violated normal."""
    w = _as_pic_class(v)
    if w.n != P.n:
        raise ValueError(f"rank mismatch: cone has n = {P.n}, vector has n = {w.n}")
    for u in P.all_normals:
        if pairing(u, w) < 0:
            return MembershipResult(contains=False, violated=u)
    return MembershipResult(contains=True, violated=None)


def gram_matrix(P: ConePolytope) -> tuple[tuple[int, ...], ...]:
    """G_ij = pairing(u_i, u_j) over the unnormalized normals."""
    normals = P.all_normals
    return tuple(tuple(pairing(u, v) for v in normals) for u in normals)


# ---------------------------------------------------------------------------
# exact angle classification
#
# With integer normals, cos^2(theta) = (u.v)^2 / (u^2 v^2) is rational.
# By Niven's theorem the only rational values of cos^2 at rational
# multiples of pi are 0, 1/4, 1/2, 3/4, 1 — so pi/2, pi/3, pi/4, pi/6
# are the only proper submultiples a lattice polytope can realize, and
# the classification below is complete.

PI_OVER = "pi_over"
ZERO_ANGLE = "zero_angle"
DIVERGENT = "divergent"
NON_SUBMULTIPLE = "non_submultiple"

_COS2_TO_M = {Fraction(1, 4): 3, Fraction(1, 2): 4, Fraction(3, 4): 6}


@dataclass(frozen=True)
class AngleClass:
    """Exact classification of the angle between two halfspaces.

    kind is one of PI_OVER (with m >= 2), ZERO_ANGLE (parallel at the
    boundary, m = infinity), DIVERGENT, or NON_SUBMULTIPLE.  cos2 is
    the rational (u.v)^2/(u^2 v^2) and sign the sign of u.v; together
    they determine the exact Cartan entry -2*sign*sqrt(cos2).
    """

    kind: str
    cos2: Fraction
    sign: int
    m: int | None = None


def classify_angle(u: Halfspace | PicClass, v: Halfspace | PicClass) -> AngleClass:
    """Classify the angle between two hyperplanes with negative-square normals."""
    a = u.normal if isinstance(u, Halfspace) else u
    b = v.normal if isinstance(v, Halfspace) else v
    a2, b2 = pairing(a, a), pairing(b, b)
    if a2 >= 0 or b2 >= 0:
        raise ValueError("angle classification needs normals of negative square")
    p = pairing(a, b)
    sign = (p > 0) - (p < 0)
    cos2 = Fraction(p * p, a2 * b2)
    if cos2 > 1:
        return AngleClass(DIVERGENT, cos2, sign)
    if p == 0:
        return AngleClass(PI_OVER, cos2, sign, m=2)
    if cos2 == 1:
        if p > 0:
            return AngleClass(ZERO_ANGLE, cos2, sign)
        return AngleClass(NON_SUBMULTIPLE, cos2, sign)
    if p > 0 and cos2 in _COS2_TO_M:
        return AngleClass(PI_OVER, cos2, sign, m=_COS2_TO_M[cos2])
    return AngleClass(NON_SUBMULTIPLE, cos2, sign)


@dataclass(frozen=True)
class CartanEntry:
    """Exact Cartan matrix entry a_ij = -2*sign*sqrt(cos2)."""

    sign: int
    cos2: Fraction


def cartan_matrix(P: ConePolytope) -> tuple[tuple[CartanEntry, ...], ...]:
    """The matrix a_ij = -v_i.v_j of the normalized normals, held exactly.

    Normalization is never materialized: each entry is stored as the
    pair (sign of pairing, cos^2), from which the value -2*sign*sqrt(cos2)
    is recovered symbolically.  Diagonal entries are always 2.
    """
    normals = P.all_normals
    out = []
    for u in normals:
        row = []
        for v in normals:
            ang = classify_angle(u, v)
            row.append(CartanEntry(sign=ang.sign, cos2=ang.cos2))
        out.append(tuple(row))
    return tuple(out)


def render_cartan_entry(entry: CartanEntry) -> str:
    """Exact text form of -2*sign*sqrt(cos2): "2", "0", "-1", "-sqrt(2)", "-2/sqrt(3)", ..."""
    if entry.sign == 0:
        return "0"
    square = 4 * entry.cos2  # value^2, a reduced nonnegative rational
    a, b = square.numerator, square.denominator
    ra, rb = isqrt(a), isqrt(b)
    if ra * ra == a and rb * rb == b:
        mag = f"{ra}" if rb == 1 else f"{ra}/{rb}"
    elif rb * rb == b:
        mag = f"sqrt({a})" if rb == 1 else f"sqrt({a})/{rb}"
    elif ra * ra == a:
        mag = f"{ra}/sqrt({b})"
    else:
        mag = f"sqrt({a}/{b})"
    return f"-{mag}" if entry.sign > 0 else mag


@dataclass(frozen=True)
class CoxeterCheck:
    is_coxeter: bool
    offending: tuple[tuple[int, int, AngleClass], ...]

    def __bool__(self) -> bool:
        return self.is_coxeter


def is_coxeter(P: ConePolytope) -> CoxeterCheck:
    """All pairwise angles submultiples of pi, zero, or divergent?"""
    normals = P.all_normals
    bad = []
    for i, j in itertools.combinations(range(len(normals)), 2):
        ang = classify_angle(normals[i], normals[j])
        if ang.kind == NON_SUBMULTIPLE:
            bad.append((i, j, ang))
    return CoxeterCheck(is_coxeter=not bad, offending=tuple(bad))


# ---------------------------------------------------------------------------
# Coxeter diagrams

EDGE_PLAIN = "plain"
EDGE_DASHED = "dashed"
EDGE_DOTTED = "dotted"


@dataclass(frozen=True)
class DiagramEdge:
    i: int
    j: int
    style: str  # plain / dashed / dotted
    multiplicity: int  # parallel strands to draw (m-2 for angle pi/m)
    m: int | None  # angle denominator, None for dashed/dotted


@dataclass(frozen=True)
class CoxeterDiagram:
    labels: tuple[str, ...]
    edges: tuple[DiagramEdge, ...]

    def to_dot(self) -> str:
        lines = ["graph coxeter {", "  node [shape=circle];"]
        for lab in self.labels:
            lines.append(f"  {lab};")
        for e in self.edges:
            a, b = self.labels[e.i], self.labels[e.j]
            if e.style == EDGE_PLAIN:
                lines.extend(f"  {a} -- {b};" for _ in range(e.multiplicity))
            else:
                lines.append(f"  {a} -- {b} [style={e.style}];")
        lines.append("}")
        return "\n".join(lines)

    def to_ascii(self) -> str:
        marker = {EDGE_DASHED: "~~", EDGE_DOTTED: ".."}
        lines = [f"nodes: {' '.join(self.labels)}"]
        for e in self.edges:
            a, b = self.labels[e.i], self.labels[e.j]
            if e.style == EDGE_PLAIN:
                lines.append(f"{a} {'=' * e.multiplicity if e.multiplicity > 1 else '--'} {b}  (pi/{e.m})")
            elif e.style == EDGE_DASHED:
                lines.append(f"{a} {marker[e.style]} {b}  (parallel)")
            else:
                lines.append(f"{a} {marker[e.style]} {b}  (divergent)")
        if len(lines) == 1:
            lines.append("(no edges)")
        return "\n".join(lines)


def coxeter_diagram(P: ConePolytope) -> CoxeterDiagram:
    """Nodes per halfspace, m-2 strands for angle pi/m, dashed for zero angle,
    dotted for divergent.  Undefined (error) if P is not a Coxeter polytope."""
    check = is_coxeter(P)
    if not check:
        pairs = ", ".join(f"({i},{j}) cos2={a.cos2}" for i, j, a in check.offending)
        raise ValueError(f"diagram undefined: non-submultiple angles at {pairs}")
    normals = P.all_normals
    labels = tuple(f"v{i}" for i in range(len(normals)))
    edges = []
    for i, j in itertools.combinations(range(len(normals)), 2):
        ang = classify_angle(normals[i], normals[j])
        if ang.kind == PI_OVER:
            if ang.m > 2:
                edges.append(DiagramEdge(i, j, EDGE_PLAIN, ang.m - 2, ang.m))
        elif ang.kind == ZERO_ANGLE:
            edges.append(DiagramEdge(i, j, EDGE_DASHED, 1, None))
        elif ang.kind == DIVERGENT:
            edges.append(DiagramEdge(i, j, EDGE_DOTTED, 1, None))
    return CoxeterDiagram(labels=labels, edges=tuple(edges))


# ---------------------------------------------------------------------------
# extremal rays


@dataclass(frozen=True)
class Ray:
    """An extremal ray: primitive generator, light-cone position, and the
    indices (into all_normals) of the inequalities vanishing on it."""

    generator: PicClass
    position: LightConePosition
    active_set: tuple[int, ...]


def _minkowski_row(u: PicClass) -> tuple[int, ...]:
    """Standard-dot row r with r.x = pairing(u, x)."""
    c = u.coords
    return (c[0],) + tuple(-x for x in c[1:])


def extremal_rays(P: ConePolytope) -> list[Ray]:
    """All extremal rays of the cone, by facet-subset kernel enumeration.

    For each subset of n normals of rank n, the kernel is a rational
    line; its primitive generator joins the result if one orientation
    satisfies every inequality.  Requires the cone to be pointed.
    """
    normals = P.all_normals
    dim = P.n + 1
    rows = [_minkowski_row(u) for u in normals]
    if kernel_basis(rows, dim):
        raise ValueError(
            "cone is not pointed: it contains a line, so extremal rays "
            "do not determine it"
        )
    found: dict[tuple[int, ...], Ray] = {}
    for subset in itertools.combinations(range(len(normals)), P.n):
        sub_rows = [rows[i] for i in subset]
        kern = kernel_basis(sub_rows, dim)
        if len(kern) != 1:
            continue
        vec = primitive_coords(kern[0])
        if vec[0] < 0:
            vec = tuple(-x for x in vec)
        for cand in (vec, tuple(-x for x in vec)):
            gen = PicClass(n=P.n, coords=cand)
            if all(pairing(u, gen) >= 0 for u in normals):
                if cand not in found:
                    active = tuple(
                        i for i, u in enumerate(normals) if pairing(u, gen) == 0
                    )
                    assert rank([rows[i] for i in active]) == P.n
                    found[cand] = Ray(
                        generator=gen,
                        position=light_cone_position(gen),
                        active_set=active,
                    )
                break
    return [found[key] for key in sorted(found)]


def boundary_rays(P: ConePolytope) -> list[Ray]:
    """Extremal rays on the light cone (square zero): ideal vertices."""
    return [r for r in extremal_rays(P) if r.position.tag == "boundary"]


def finite_volume(P: ConePolytope) -> bool:
    """True iff the cone sits inside the closed forward light cone:
    every extremal ray has square >= 0 and positive degree."""
    return all(
        pairing(r.generator, r.generator) >= 0 and r.generator.coords[0] > 0
        for r in extremal_rays(P)
    )


# ---------------------------------------------------------------------------
# minimality audit


def _nonnegative_combination(target: PicClass, among: list[PicClass]) -> bool:
    """Is target = sum lambda_i u_i with lambda_i >= 0 over some subset?

    By Caratheodory it suffices to scan linearly independent subsets,
    but at these sizes scanning every subset is cheap enough.
    """
    dim = target.n + 1
    cols = [u.coords for u in among]
    for size in range(1, len(cols) + 1):
        for subset in itertools.combinations(cols, size):
            matrix = [[subset[j][i] for j in range(size)] for i in range(dim)]
            aug = [row + [target.coords[i]] for i, row in enumerate(matrix)]
            m, pivots = rref(aug)
            if size in pivots:  # inconsistent
                continue
            if pivots != list(range(size)):  # dependent columns; a smaller subset covers it
                continue
            coeffs = [m[i][size] for i in range(size)]
            if all(c >= 0 for c in coeffs):
                return True
    return False


def is_implied(P: ConePolytope, normal: PicClass) -> bool:
    """Does the inequality pairing(normal, x) >= 0 follow from P's?

    True exactly when normal is a nonnegative combination of P's normals
    (Farkas).  Accepts any integer normal, including square >= 0 ones
    that could not join the halfspace list themselves.
    """
    return _nonnegative_combination(normal, list(P.all_normals))


def redundant_constraints(P: ConePolytope) -> tuple[int, ...]:
    """Indices (into all_normals) of inequalities implied by the others.

    An inequality pairing(u, x) >= 0 follows from the rest exactly when
    u is a nonnegative combination of the remaining normals (Farkas).
    """
    normals = list(P.all_normals)
    out = []
    for i, u in enumerate(normals):
        others = normals[:i] + normals[i + 1 :]
        if _nonnegative_combination(u, others):
            out.append(i)
    return tuple(out)


# ---------------------------------------------------------------------------
# vertex formula verification for the -K truncation


def _vec(n: int, head: int, tail: list[int]) -> PicClass:
    coords = (head, *tail, *([0] * (n - len(tail))))
    return PicClass(n=n, coords=primitive_coords(coords))


def vertex_formula_families(n: int) -> dict[str, list[PicClass]]:
    """The eight closed-form vertex families, primitivized.

    Families (before clearing common factors):
      (1:0...), (1:-1:0...), (2:-1:-1:0...),
      (3:(-1)^k:0...) k=3..9,
      (m:(-3)^m:0...) m=10..n,
      (b-2:-(b-6):(-2)^b:0...) b=9..n-1,
      (2b-2:-(b-3):-(b-3):(-4)^b:0...) b=8..n-2,
      (3b:(-b)^a:(-(9-a))^b:0...) a=3..8, 10<=a+b<=n.
    """
    fams: dict[str, list[PicClass]] = {
        "unit": [_vec(n, 1, [])],
        "line": [_vec(n, 1, [-1])],
        "conic": [_vec(n, 2, [-1, -1])],
        "cubic": [_vec(n, 3, [-1] * k) for k in range(3, 10)],
        "triple": [_vec(n, m, [-3] * m) for m in range(10, n + 1)],
        "double_tail": [
            _vec(n, b - 2, [-(b - 6)] + [-2] * b) for b in range(9, n)
        ],
        "quadruple_tail": [
            _vec(n, 2 * b - 2, [-(b - 3), -(b - 3)] + [-4] * b)
            for b in range(8, n - 1)
        ],
        "two_block": [
            _vec(n, 3 * b, [-b] * a + [-(9 - a)] * b)
            for a in range(3, 9)
            for b in range(10 - a, n - a + 1)
        ],
    }
    return fams


@dataclass(frozen=True)
class VertexFormulaReport:
    n: int
    expected_count: int
    formula_rays: tuple[PicClass, ...]
    computed_rays: tuple[PicClass, ...]
    count_ok: bool
    sets_equal: bool

    def ok(self) -> bool:
        return self.count_ok and self.sets_equal


def verify_vertex_formulas(n: int) -> VertexFormulaReport:
    """Check the closed-form families against facet-subset enumeration.

    The families should produce exactly the 9n-71 extremal rays of the
    -K-truncated cone.  Desk scale only (10 <= n <= 14).
    """
    if not 10 <= n <= 14:
        raise ValueError(f"vertex formula check supports 10 <= n <= 14, got {n}")
    fams = vertex_formula_families(n)
    formula = sorted({v.coords for vs in fams.values() for v in vs})
    computed = [r.generator for r in extremal_rays(build_P_minus(n))]
    expected = 9 * n - 71
    return VertexFormulaReport(
        n=n,
        expected_count=expected,
        formula_rays=tuple(PicClass(n=n, coords=c) for c in formula),
        computed_rays=tuple(computed),
        count_ok=(len(formula) == expected == len(computed)),
        sets_equal=(formula == [r.coords for r in computed]),
    )


# ---------------------------------------------------------------------------
# the region R of the finite-volume proof
#
# R lives in rational 3-space with coordinates (x_1, x_2, x_n) — an
# affine chart, handled with the standard inner product, independent of
# the Minkowski machinery.  Its five facets pin down the vertices of
# the -K-truncated cone with a tail of equal middle coordinates.


@dataclass(frozen=True)
class RegionRRow:
    triple: tuple[int, int, int]
    point: tuple[Fraction, Fraction, Fraction] | None
    is_vertex: bool
    f_value: Fraction | None


@dataclass(frozen=True)
class RegionRReport:
    n: int
    rows: tuple[RegionRRow, ...]
    all_triples_meet: bool
    vertex_count: int
    max_f_at_vertices: Fraction
    f_le_1_at_vertices: bool
    f_lt_1_when_xn_negative: bool

    def ok(self) -> bool:
        return (
            self.all_triples_meet
            and self.f_le_1_at_vertices
            and self.f_lt_1_when_xn_negative
        )


def _region_constraints(n: int) -> list[tuple[tuple[int, int, int], int]]:
    # coeffs . (x_1, x_2, x_n) >= rhs
    return [
        ((1, 2, 0), -1),
        ((-1, 1, 0), 0),
        ((0, -1, 1), 0),
        ((0, 0, -1), 0),
        ((1, n - 2, 1), -3),
    ]


def verify_region_R(n: int) -> RegionRReport:
    """Enumerate the triple intersections of region R's five facet planes.

    For each of the 10 triples: solve exactly, decide whether the point
    satisfies all five inequalities (a vertex of R), and evaluate
    f = x_1^2 + (n-2)x_2^2 + x_n^2.  The report checks f <= 1 at every
    vertex with equality possible only when x_n = 0.
    """
    if n < 10:
        raise ValueError(f"region R is only considered for n >= 10, got {n}")
    cons = _region_constraints(n)
    rows = []
    for triple in itertools.combinations(range(5), 3):
        mat = [list(cons[i][0]) for i in triple]
        rhs = [cons[i][1] for i in triple]
        point = solve_unique(mat, rhs)
        if point is None:
            rows.append(RegionRRow(triple, None, False, None))
            continue
        feasible = all(
            sum(c * x for c, x in zip(coeffs, point)) >= r for coeffs, r in cons
        )
        f = point[0] ** 2 + (n - 2) * point[1] ** 2 + point[2] ** 2
        rows.append(RegionRRow(triple, point, feasible, f))
    vertices = [r for r in rows if r.is_vertex]
    max_f = max(r.f_value for r in vertices)
    return RegionRReport(
        n=n,
        rows=tuple(rows),
        all_triples_meet=all(r.point is not None for r in rows),
        vertex_count=len(vertices),
        max_f_at_vertices=max_f,
        f_le_1_at_vertices=all(r.f_value <= 1 for r in vertices),
        f_lt_1_when_xn_negative=all(
            r.f_value < 1 for r in vertices if r.point[2] < 0
        ),
    )
