"""Newton polyhedra of monomial supports in Z^3 and derived invariants.

The polyhedron is built by exhaustive candidate-normal generation, which is
exact and complete for the tiny supports that arise here.  On top of it:
isolatedness/convenience/rational-homology-sphere predicates, the weight
function, the spectrum part in (-1, 0], the Poincare series of the induced
filtration, and the central-face/arm anatomy of the diagram.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import floor

from . import kernels
from .errors import ClassificationFailed, NoCompactFace, NotIsolated, NotRationalHomologySphere
from .lattice import IntVec3, content, cross, dot, vec_sub
from .polygon import convex_hull

_UNITS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


class Support:
    """Finite set of exponent vectors in the nonnegative octant."""

    def __init__(self, points):
        pts = set()
        for p in points:
            p = tuple(int(x) for x in p)
            if len(p) != 3 or any(x < 0 for x in p):
                raise ValueError(f"support point {p} is not a nonnegative 3-vector")
            if p == (0, 0, 0):
                raise ValueError("constant term (0,0,0) does not define a singularity")
            pts.add(p)
        if not pts:
            raise ValueError("support must be nonempty")
        self.points = tuple(sorted(pts))

    def __eq__(self, other):
        return isinstance(other, Support) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return f"Support({list(self.points)})"


def brieskorn(a, b, c) -> Support:
    """Support of x^a + y^b + z^c."""
    return Support([(a, 0, 0), (0, b, 0), (0, 0, c)])


@dataclass(frozen=True)
class Face2D:
    normal: IntVec3
    value: int
    vertices: tuple  # cyclic hull order; empty for noncompact faces
    compact: bool

    def touches_hyperplane(self, axis) -> bool:
        return any(v[axis] == 0 for v in self.vertices)

    def touches_axis(self, axis) -> bool:
        other = [k for k in range(3) if k != axis]
        return any(v[other[0]] == 0 and v[other[1]] == 0 for v in self.vertices)


@dataclass
class NewtonPolyhedron:
    support: Support
    compact_faces: list
    noncompact_faces: list
    adjacency: dict = field(default_factory=dict)  # frozenset of two normals -> t

    def all_faces(self):
        return list(self.compact_faces) + list(self.noncompact_faces)

    def face_by_normal(self, normal):
        for f in self.all_faces():
            if f.normal == tuple(normal):
                return f
        raise KeyError(normal)

    def t_between(self, n1, n2) -> int:
        return self.adjacency.get(frozenset((tuple(n1), tuple(n2))), 0)

    def neighbors_of(self, normal):
        """(face, t) pairs over faces adjacent to the given one, t > 0."""
        normal = tuple(normal)
        out = []
        for key, t in sorted(self.adjacency.items(), key=lambda kv: sorted(kv[0])):
            if normal in key:
                (other,) = key - {normal}
                out.append((self.face_by_normal(other), t))
        return out


def is_isolated(support: Support) -> bool:
    """Kouchnirenko's support criterion for an isolated singular point.

    For every coordinate subset I, at least |I| indices i admit a support
    point p with p - e_i in the octant face spanned by I: p_j = 0 outside
    I union {i}, p_i >= 1, and p_i = 1 exactly when i lies outside I (this
    is the "distance at most one from each coordinate axis" clause).
    """
    pts = support.points
    for size in (1, 2, 3):
        for subset in combinations(range(3), size):
            witnesses = set()
            for i in range(3):
                need_one = i not in subset
                outside = [j for j in range(3) if j not in subset and j != i]
                for p in pts:
                    if p[i] < 1 or (need_one and p[i] != 1):
                        continue
                    if all(p[j] == 0 for j in outside):
                        witnesses.add(i)
                        break
            if len(witnesses) < size:
                return False
    return True


def is_convenient(support: Support) -> bool:
    """True when the support meets all three coordinate axes."""
    for c in range(3):
        others = [j for j in range(3) if j != c]
        if not any(p[c] > 0 and p[others[0]] == 0 and p[others[1]] == 0 for p in support.points):
            return False
    return True


def _candidate_normals(pts):
    diffs = [vec_sub(p, q) for p, q in combinations(pts, 2)]
    raw = list(_UNITS)
    gens = diffs + list(_UNITS)
    for d1, d2 in combinations(gens, 2):
        raw.append(cross(d1, d2))
    normals = set()
    for v in raw:
        c = content(v)
        if c == 0:
            continue
        v = tuple(x // c for x in v)
        if all(x <= 0 for x in v):
            v = tuple(-x for x in v)
        if any(x < 0 for x in v):
            continue
        normals.add(v)
    return normals


def _affine_rank2(vectors) -> bool:
    nonzero = [v for v in vectors if v != (0, 0, 0)]
    for v1, v2 in combinations(nonzero, 2):
        if cross(v1, v2) != (0, 0, 0):
            return True
    return False


def _hull_in_plane(points, normal):
    """Cyclically ordered hull vertices of coplanar 3D points."""
    drop = max(range(3), key=lambda k: abs(normal[k]))
    keep = [k for k in range(3) if k != drop]
    proj = {}
    for p in points:
        proj[(p[keep[0]], p[keep[1]])] = p
    hull2 = convex_hull(proj.keys())
    return tuple(proj[q] for q in hull2)


def newton_polyhedron(support: Support) -> NewtonPolyhedron:
    """All two dimensional faces of the Newton polyhedron of the support.

    Candidate normals are cross products of support-point differences with
    each other and with the coordinate unit vectors, plus the unit vectors;
    a candidate survives when its minimal set, together with the coordinate
    rays it leaves invariant, spans an affine plane.
    """
    if not is_isolated(support):
        raise NotIsolated(f"{support} does not define an isolated singularity")
    pts = support.points
    compact, noncompact = [], []
    for normal in sorted(_candidate_normals(pts)):
        value = min(dot(normal, p) for p in pts)
        minimal = [p for p in pts if dot(normal, p) == value]
        anchor = minimal[0]
        spanning = [vec_sub(p, anchor) for p in minimal]
        rays = [e for k, e in enumerate(_UNITS) if normal[k] == 0]
        if not _affine_rank2(spanning + rays):
            continue
        if all(x > 0 for x in normal):
            vertices = _hull_in_plane(minimal, normal)
            compact.append(Face2D(normal, value, vertices, True))
        else:
            noncompact.append(Face2D(normal, value, (), False))

    poly = NewtonPolyhedron(support, compact, noncompact)
    for face in compact:
        verts = face.vertices
        for i in range(len(verts)):
            p, q = verts[i], verts[(i + 1) % len(verts)]
            others = [
                g
                for g in poly.all_faces()
                if g.normal != face.normal
                and dot(g.normal, p) == g.value == dot(g.normal, q)
            ]
            if len(others) != 1:
                raise AssertionError(f"edge [{p}, {q}] should lie on exactly one other face, got {others}")
            key = frozenset((face.normal, others[0].normal))
            t = content(vec_sub(q, p))
            prev = poly.adjacency.setdefault(key, t)
            if prev != t:
                raise AssertionError(f"inconsistent adjacency length on {key}")
    return poly


def make_convenient(support: Support) -> Support:
    """Add x_c^d monomials, d as small as equisingularity allows.

    Keeping every old compact face a face is necessary but not sufficient:
    the boundary faces created by too-small axis points can carry extra
    topology (the padded polynomial then has a different link).  So d grows
    until the padded diagram blows down to the same minimal plumbing graph
    as the original and leaves the Saito spectrum part unchanged, which is
    what "d large" buys in the equisingular completion.
    """
    from .graph import minimal_model, oka_graph, tree_code

    if not is_isolated(support):
        raise NotIsolated(f"{support} does not define an isolated singularity")
    poly = newton_polyhedron(support)
    old = {(f.normal, f.value, frozenset(f.vertices)) for f in poly.compact_faces}
    d = 1 + max(max(p) for p in support.points)
    reference = reference_spectrum = None
    if poly.compact_faces:
        d = max(
            -(-face.value // face.normal[c])
            for face in poly.compact_faces
            for c in range(3)
            if face.normal[c] > 0
        )
        reference = tree_code(minimal_model(oka_graph(support).graph))
        reference_spectrum = saito_spectrum(poly)
    limit = d + 400
    while d <= limit:
        new_points = set(support.points)
        for e in _UNITS:
            new_points.add(tuple(d * x for x in e))
        enlarged = Support(new_points)
        new_poly = newton_polyhedron(enlarged)
        new = {(f.normal, f.value, frozenset(f.vertices)) for f in new_poly.compact_faces}
        if old <= new and (
            reference is None
            or (
                tree_code(minimal_model(oka_graph(enlarged).graph)) == reference
                and saito_spectrum(new_poly) == reference_spectrum
            )
        ):
            return enlarged
        d += 1
    raise AssertionError(f"no equisingular convenient completion found for {support}")


def ensure_convenient(support: Support) -> Support:
    return support if is_convenient(support) else make_convenient(support)


def is_rhs_link(support: Support) -> bool:
    """True when no all-positive lattice point lies on a compact face."""
    poly = newton_polyhedron(support)
    return not _positive_diagram_points(poly)


def _positive_diagram_points(poly: NewtonPolyhedron):
    """Lattice points with all coordinates positive on the union of compact faces."""
    found = set()
    faces = poly.all_faces()
    for face in poly.compact_faces:
        lo = [min(v[c] for v in face.vertices) for c in range(3)]
        hi = [max(v[c] for v in face.vertices) for c in range(3)]
        for p0 in range(max(lo[0], 1), hi[0] + 1):
            for p1 in range(max(lo[1], 1), hi[1] + 1):
                for p2 in range(max(lo[2], 1), hi[2] + 1):
                    p = (p0, p1, p2)
                    if dot(face.normal, p) != face.value:
                        continue
                    if all(dot(g.normal, p) >= g.value for g in faces):
                        found.add(p)
    return sorted(found)


def _require_compact(poly: NewtonPolyhedron):
    if not poly.compact_faces:
        raise NoCompactFace(f"{poly.support} has no compact 2-dimensional face")


def newton_weight(poly: NewtonPolyhedron, p) -> Fraction:
    """min over compact faces of l_n(p) / wt_n(f); equals 1 on the diagram."""
    _require_compact(poly)
    return min(Fraction(dot(f.normal, p), f.value) for f in poly.compact_faces)


def _weight_box(poly, bound):
    """Box certainly containing every p >= 0 with weight(p) <= bound."""
    hi = []
    for c in range(3):
        hi.append(max(floor(Fraction(bound) * f.value / f.normal[c]) for f in poly.compact_faces))
    return hi


def _points_with_weight_at_most(poly, bound, positive):
    """(point, weight) pairs over the region weight <= bound, exact."""
    _require_compact(poly)
    bound = Fraction(bound)
    hi = _weight_box(poly, bound)
    lo = [1, 1, 1] if positive else [0, 0, 0]
    rows, cuts = [], []
    for f in poly.compact_faces:
        # Q * l_n(p) <= P * w_n  <=>  row . p < cut  over integers
        rows.append(tuple(bound.denominator * a for a in f.normal))
        cuts.append(bound.numerator * f.value + 1)
    out = []
    for p in kernels.collect_violating(rows, cuts, lo, hi):
        out.append((p, newton_weight(poly, p)))
    return out


def saito_spectrum(poly: NewtonPolyhedron) -> Counter:
    """Multiset of weight(p) - 1 over positive lattice points p with weight <= 1."""
    spectrum = Counter()
    for _, w in _points_with_weight_at_most(poly, 1, positive=True):
        spectrum[w - 1] += 1
    return spectrum


class PuiseuxPoly:
    """Finitely many terms coeff * t^exponent with rational exponents."""

    def __init__(self, terms=None):
        data = {}
        for e, c in dict(terms or {}).items():
            if c:
                data[Fraction(e)] = int(c)
        self._terms = data

    def terms(self):
        return sorted(self._terms.items())

    def coefficient(self, e) -> int:
        return self._terms.get(Fraction(e), 0)

    def substitute_inverse(self):
        """t -> 1/t."""
        return PuiseuxPoly({-e: c for e, c in self._terms.items()})

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        return isinstance(other, PuiseuxPoly) and self._terms == other._terms

    def __repr__(self):
        body = " + ".join(f"{c}*t^{e}" for e, c in self.terms()) or "0"
        return f"PuiseuxPoly({body})"


def poincare_newton(poly: NewtonPolyhedron, max_exponent) -> PuiseuxPoly:
    """Terms of (1 - t) * sum_p t^weight(p) with exponent <= max_exponent.

    Both factors are enumerated out to max_exponent + 1 before multiplying,
    so the reported coefficients are exact.
    """
    bound = Fraction(max_exponent)
    if bound <= 0:
        raise ValueError("max_exponent must be positive")
    histogram = Counter()
    for _, w in _points_with_weight_at_most(poly, bound + 1, positive=False):
        histogram[w] += 1
    terms = {}
    for e, n in histogram.items():
        if e <= bound:
            terms[e] = n - histogram.get(e - 1, 0)
    return PuiseuxPoly(terms)


def poincare_pol_part(poly: NewtonPolyhedron) -> PuiseuxPoly:
    """sum of t^(1 - weight(p)) over positive lattice points under the diagram."""
    terms = Counter()
    for _, w in _points_with_weight_at_most(poly, 1, positive=True):
        terms[1 - w] += 1
    return PuiseuxPoly(terms)


@dataclass
class AnatomyReport:
    kind: str  # "central_face" | "central_edges"
    central_face: Face2D | None
    central_shape: str | None  # "triangle" | "trapezoid" | "polygon"
    central_edge_count: int
    arms: dict  # axis -> ordered list of face normals, center outward
    degenerate_arms: list


def _diagram_edges(poly):
    """Edges of compact faces with the set of compact faces containing them."""
    seen = {}
    for face in poly.compact_faces:
        verts = face.vertices
        for i in range(len(verts)):
            p, q = verts[i], verts[(i + 1) % len(verts)]
            key = frozenset((p, q))
            seen.setdefault(key, set()).add(face.normal)
    return seen


def classify_diagram(poly: NewtonPolyhedron) -> AnatomyReport:
    """Central face / central edge diagnosis and the arm chains per axis."""
    _require_compact(poly)
    if _positive_diagram_points(poly):
        raise NotRationalHomologySphere("diagram has an interior positive lattice point")

    candidates = [
        f for f in poly.compact_faces if all(f.touches_hyperplane(a) for a in range(3))
    ]
    strict = [f for f in candidates if not any(f.touches_axis(a) for a in range(3))]
    central_edges = []
    for edge, owners in _diagram_edges(poly).items():
        if len(owners) == 2:
            p, q = tuple(edge)
            if all(min(p[a], q[a]) == 0 for a in range(3)):
                central_edges.append(edge)

    central = None
    if len(strict) == 1:
        central = strict[0]
    elif not strict and len(candidates) == 1 and not central_edges:
        central = candidates[0]

    if central is not None:
        kind = "central_face"
        edge_count = 0
    elif central_edges and not strict:
        kind = "central_edges"
        edge_count = len(central_edges)
    else:
        raise ClassificationFailed(
            f"ambiguous anatomy: {len(candidates)} central face candidates, "
            f"{len(central_edges)} central edges"
        )

    shape = None
    if central is not None:
        if len(central.vertices) == 3:
            shape = "triangle"
        elif len(central.vertices) == 4 and _is_trapezoid(central.vertices):
            shape = "trapezoid"
        else:
            shape = "polygon"

    arms, degenerate = {}, []
    for axis in range(3):
        planes = [a for a in range(3) if a != axis]
        members = [
            f
            for f in poly.compact_faces
            if f is not central
            and all(v[planes[0]] == 0 or v[planes[1]] == 0 for v in f.vertices)
        ]
        arms[axis] = [f.normal for f in _order_arm(poly, members, central)]
        if not members:
            degenerate.append(axis)
    return AnatomyReport(kind, central, shape, edge_count, arms, degenerate)


def _is_trapezoid(vertices):
    n = len(vertices)
    dirs = [vec_sub(vertices[(i + 1) % n], vertices[i]) for i in range(n)]
    return any(cross(dirs[i], dirs[(i + 2) % n]) == (0, 0, 0) for i in range(2))


def _order_arm(poly, members, central):
    if len(members) <= 1:
        return list(members)
    member_keys = {f.normal for f in members}
    adj = {f.normal: [] for f in members}
    for key, t in poly.adjacency.items():
        a, b = tuple(key)
        if t > 0 and a in member_keys and b in member_keys:
            adj[a].append(b)
            adj[b].append(a)
    start = None
    if central is not None:
        for f in members:
            if poly.t_between(f.normal, central.normal) > 0:
                start = f.normal
                break
    if start is None:
        ends = [k for k, nb in adj.items() if len(nb) <= 1]
        start = sorted(ends)[0] if ends else sorted(member_keys)[0]
    order, seen = [start], {start}
    while len(order) < len(members):
        nxt = [k for k in adj[order[-1]] if k not in seen]
        if not nxt:
            order.extend(sorted(member_keys - seen))
            break
        order.append(nxt[0])
        seen.add(nxt[0])
    by_key = {f.normal: f for f in members}
    return [by_key[k] for k in order]
