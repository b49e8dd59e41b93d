"""Empty integral polygons: classification, support functions and point counts.

Everything here lives in Z^2 with exact arithmetic.  Callers working in an
affine plane of Z^3 are expected to supply their own identification with Z^2.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd

from .errors import ClassificationFailed, Degenerate, NotAVertex, NotEmpty

IntVec2 = tuple[int, int]


def _cross2(a: IntVec2, b: IntVec2) -> int:
    return a[0] * b[1] - a[1] * b[0]


def _sub2(a, b):
    return (a[0] - b[0], a[1] - b[1])


def content2(v) -> int:
    return gcd(abs(v[0]), abs(v[1]))


def convex_hull(points):
    """Vertices of the convex hull in counterclockwise order (monotone chain).

    Collinear boundary points are dropped, so the result lists vertices only.
    """
    pts = sorted(set(map(tuple, points)))
    if len(pts) <= 2:
        return pts

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and _cross2(_sub2(out[-1], out[-2]), _sub2(p, out[-2])) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    return lower[:-1] + upper[:-1]


class LatticePolygon2:
    """Convex integral polygon, vertices stored in counterclockwise order."""

    def __init__(self, points):
        hull = convex_hull(points)
        if len(hull) < 3:
            raise Degenerate(f"affine hull of {sorted(set(map(tuple, points)))} is not 2-dimensional")
        self.vertices = tuple(hull)

    def __eq__(self, other):
        return isinstance(other, LatticePolygon2) and set(self.vertices) == set(other.vertices)

    def __hash__(self):
        return hash(frozenset(self.vertices))

    def __repr__(self):
        return f"LatticePolygon2({list(self.vertices)})"

    def edges(self):
        """Directed boundary edges (p, q) in counterclockwise order."""
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def edge_contents(self):
        return [content2(_sub2(q, p)) for p, q in self.edges()]

    def contains(self, p, strict=False):
        for a, b in self.edges():
            c = _cross2(_sub2(b, a), _sub2(p, a))
            if c < 0 or (strict and c == 0):
                return False
        return True

    def interior_points(self):
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        pts = []
        for x in range(min(xs) + 1, max(xs)):
            for y in range(min(ys) + 1, max(ys)):
                if self.contains((x, y), strict=True):
                    pts.append((x, y))
        return pts

    def is_empty(self):
        return not self.interior_points()


@dataclass(frozen=True)
class AffineMap2:
    """x -> M x + t with M unimodular, so it maps Z^2 onto Z^2."""

    matrix: tuple  # ((a, b), (c, d))
    shift: IntVec2

    def __post_init__(self):
        (a, b), (c, d) = self.matrix
        if abs(a * d - b * c) != 1:
            raise ValueError("matrix is not unimodular")

    def apply(self, p):
        (a, b), (c, d) = self.matrix
        return (a * p[0] + b * p[1] + self.shift[0], c * p[0] + d * p[1] + self.shift[1])

    def compose(self, other):
        """self after other."""
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = other.matrix
        m = ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
        return AffineMap2(m, self.apply(other.shift))


IDENTITY_MAP = AffineMap2(((1, 0), (0, 1)), (0, 0))


@dataclass(frozen=True)
class EmptyPolygonClass:
    tag: str  # "big_triangle" | "t_triangle" | "t_trapezoid" | "ts_trapezoid"
    t: int | None
    s: int | None
    normalizing_map: AffineMap2

    def normal_form_vertices(self):
        if self.tag == "big_triangle":
            return {(0, 0), (2, 0), (0, 2)}
        if self.tag == "t_triangle":
            return {(0, 0), (self.t, 0), (0, 1)}
        if self.tag == "t_trapezoid":
            return {(0, 0), (self.t, 0), (0, 1), (1, 1)}
        if self.tag == "ts_trapezoid":
            return {(0, 0), (self.t, 0), (0, 1), (self.s, 1)}
        raise ValueError(self.tag)


def _complement_basis(d: IntVec2) -> IntVec2:
    """Some u with det(d, u) = 1, for primitive d."""
    # Bezout: dx * y - dy * x = 1
    dx, dy = d
    g, x, y = _xgcd(dx, dy)
    assert g == 1
    # dx*x + dy*y = 1  ->  u = (-y, x) gives dx*x - dy*(-y) = 1
    return (-y, x)


def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def classify_empty_polygon(polygon: LatticePolygon2) -> EmptyPolygonClass:
    """Identify the affine type of an empty polygon and a witnessing map.

    The four families (big triangle, t-triangle, t-trapezoid,
    (t,s)-trapezoid) exhaust empty polygons up to integral affine
    isomorphism; the returned map carries the input onto the exact
    normal-form vertex set.
    """
    if not polygon.is_empty():
        raise NotEmpty(f"{polygon} has interior lattice points")

    verts = polygon.vertices
    n = len(verts)
    edges = polygon.edges()
    contents = polygon.edge_contents()
    base_idx = max(range(n), key=lambda i: (contents[i], -i))
    p, q = edges[base_idx]
    t = contents[base_idx]
    d = ((q[0] - p[0]) // t, (q[1] - p[1]) // t)
    u = _complement_basis(d)
    # coordinates of x - p in basis (d, u); interior ends up in y > 0
    det_inv = ((u[1], -u[0]), (-d[1], d[0]))
    base_map = AffineMap2(
        det_inv,
        (-(det_inv[0][0] * p[0] + det_inv[0][1] * p[1]), -(det_inv[1][0] * p[0] + det_inv[1][1] * p[1])),
    )
    moved = [base_map.apply(v) for v in verts]
    top = max(y for _, y in moved)
    tops = sorted(v for v in moved if v[1] == top)
    bottoms = sorted(v for v in moved if v[1] == 0)
    if bottoms != [(0, 0), (t, 0)] or top < 1:
        raise ClassificationFailed(f"unexpected normalized shape {sorted(moved)}")

    def sheared(k):
        # (x, y) -> (x - k*y, y)
        return AffineMap2(((1, -k), (0, 1)), (0, 0)).compose(base_map)

    if top == 2:
        if n != 3 or len(tops) != 1 or t != 2 or tops[0][0] % 2:
            raise ClassificationFailed(f"not an empty polygon shape: {sorted(moved)}")
        return EmptyPolygonClass("big_triangle", None, None, sheared(tops[0][0] // 2))
    if top != 1:
        raise ClassificationFailed(f"lattice width {top} over a longest edge")
    if len(tops) == 1:
        return EmptyPolygonClass("t_triangle", t, None, sheared(tops[0][0]))
    if len(tops) == 2:
        s = tops[1][0] - tops[0][0]
        final = sheared(tops[0][0])
        if s == 1:
            return EmptyPolygonClass("t_trapezoid", t, None, final)
        if 1 < s <= t:
            return EmptyPolygonClass("ts_trapezoid", t, s, final)
    raise ClassificationFailed(f"unexpected top edge structure {tops}")


def vertex_is_regular(polygon: LatticePolygon2, p) -> bool:
    """True when the primitive edge directions at vertex p form a Z^2 basis."""
    p = tuple(p)
    verts = polygon.vertices
    if p not in verts:
        raise NotAVertex(f"{p} is not a vertex of {polygon}")
    i = verts.index(p)
    prev_v = verts[i - 1]
    next_v = verts[(i + 1) % len(verts)]
    dirs = []
    for w in (prev_v, next_v):
        v = _sub2(w, p)
        c = content2(v)
        dirs.append((v[0] // c, v[1] // c))
    return abs(_cross2(dirs[0], dirs[1])) == 1


@dataclass(frozen=True)
class SupportFunction:
    """Primitive integral affine function; value linear . x + const."""

    linear: IntVec2
    const: int
    level: Fraction  # value on the dilated edge, in (-1, 0]

    def __call__(self, p):
        return self.linear[0] * p[0] + self.linear[1] * p[1] + self.const


class DilatedPolygonSpec:
    """An empty polygon together with a dilation factor and boundary choices.

    eps maps an edge index (position in base.edges()) to 1 when the open
    polygon excludes that edge; allowed only where the dilated edge sits at
    an integral level.
    """

    def __init__(self, base: LatticePolygon2, r, eps=None):
        r = Fraction(r)
        if r <= 0:
            raise ValueError("dilation factor must be positive")
        if not base.is_empty():
            raise NotEmpty("base polygon must be empty")
        self.base = base
        self.r = r
        self.eps = {i: 0 for i in range(len(base.edges()))}
        for i, e in (eps or {}).items():
            if e not in (0, 1):
                raise ValueError("eps values must be 0 or 1")
            if e == 1 and edge_support_function(self, i).level != 0:
                raise ValueError(f"edge {i} does not sit at an integral level; eps must be 0")
            self.eps[i] = e


def edge_support_function(spec: DilatedPolygonSpec, edge_index: int, rho=None) -> SupportFunction:
    """Support function of edge `edge_index` of the rho-dilated base polygon.

    The affine function is >= its level on rho*F, and the level lies in
    (-1, 0].  By default rho is the spec's dilation factor.
    """
    rho = spec.r if rho is None else Fraction(rho)
    edges = spec.base.edges()
    if not (0 <= edge_index < len(edges)):
        raise IndexError(edge_index)
    p, q = edges[edge_index]
    d = _sub2(q, p)
    c = content2(d)
    d = (d[0] // c, d[1] // c)
    eta = (-d[1], d[0])  # left normal: counterclockwise boundary keeps the interior left
    value_on_edge = rho * (eta[0] * p[0] + eta[1] * p[1])
    const = floor(-value_on_edge)  # puts the level in (-1, 0]
    return SupportFunction(eta, const, value_on_edge + const)


def _count_points(spec: DilatedPolygonSpec, rho) -> int:
    """|rho F^- intersect Z^2| by direct enumeration, exact."""
    rho = Fraction(rho)
    if rho < 0:
        raise ValueError("negative dilation")
    supports = [edge_support_function(spec, i, rho) for i in range(len(spec.base.edges()))]
    xs = [rho * v[0] for v in spec.base.vertices]
    ys = [rho * v[1] for v in spec.base.vertices]
    count = 0
    for x in range(ceil(min(xs)), floor(max(xs)) + 1):
        for y in range(ceil(min(ys)), floor(max(ys)) + 1):
            vals = [f((x, y)) for f in supports]
            # integral value >= level in (-1, 0]  <=>  value >= 0
            if any(v < 0 for v in vals):
                continue
            if any(spec.eps[i] and vals[i] == 0 for i in range(len(vals))):
                continue
            count += 1
    return count


def dilated_content(spec: DilatedPolygonSpec) -> int:
    """Constant value of sum_S c_S (l_{rS} - eps_S); constancy is verified."""
    supports = [edge_support_function(spec, i) for i in range(len(spec.base.edges()))]
    contents = spec.base.edge_contents()

    def total(p):
        return sum(c * (f(p) - spec.eps[i]) for i, (c, f) in enumerate(zip(contents, supports)))

    probes = [total(p) for p in ((0, 0), (1, 0), (0, 1))]
    if probes[0] != probes[1] or probes[0] != probes[2]:
        raise ClassificationFailed(f"support-function sum is not constant: {probes}")
    return probes[0]


def count_dilated_points(spec: DilatedPolygonSpec) -> int:
    """|rF^- ∩ Z^2| for r < 1, and the layer count against (r-1)F^- for r >= 1."""
    if spec.r < 1:
        return _count_points(spec, spec.r)
    return _count_points(spec, spec.r) - _count_points(spec, spec.r - 1)
