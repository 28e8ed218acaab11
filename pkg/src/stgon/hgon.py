"""Planar h-gons of each Dynkin type.

An :class:`HGon` stores vertices ``V_0..V_{h-1}`` as complex numbers; edges
are ``z_j = V_j - V_{j-1}`` with indices taken modulo ``h``.  Types D, B and
G2 also carry two punctures ``B_+`` and ``B_-``.

Geometric predicates use an absolute margin ``tol * diameter`` for lengths
and ``tol * diameter**2`` for cross products.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import lru_cache

import numpy as np

from .dynkin import DynkinType, far_end_choices, folding_data, source_type
from .exact import rank, solve_dependent

DEFAULT_TOL = 1e-9


class InvalidHGon(ValueError):
    """The polygon violates the defining relations of its type."""


class DegenerateHGon(ValueError):
    """An edge (or a charge derived from it) vanishes."""


def cross(a: complex, b: complex) -> float:
    return a.real * b.imag - a.imag * b.real


@dataclass(frozen=True)
class HGon:
    type: DynkinType
    vertices: np.ndarray = field(compare=False)
    punctures: tuple[complex, complex] | None = None
    tol: float = DEFAULT_TOL
    far_end_choice: int | None = None

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=complex).reshape(-1)
        object.__setattr__(self, "vertices", v)
        if self.punctures is not None:
            p = tuple(complex(x) for x in self.punctures)
            if len(p) != 2:
                raise ValueError("expected exactly two punctures")
            object.__setattr__(self, "punctures", p)

    @property
    def h(self) -> int:
        return len(self.vertices)

    def V(self, k: int) -> complex:
        return complex(self.vertices[k % self.h])

    @property
    def edges(self) -> np.ndarray:
        """``edges[j] = z_j = V_j - V_{j-1}``."""
        v = self.vertices
        return v - np.roll(v, 1)

    def z(self, k: int) -> complex:
        return complex(self.edges[k % self.h])

    @property
    def center(self) -> complex:
        return complex(self.vertices.mean())

    @property
    def diameter(self) -> float:
        v = self.vertices
        return float(np.abs(v[:, None] - v[None, :]).max())

    @property
    def scale(self) -> float:
        return max(self.diameter, 1e-300)

    def translate(self, c: complex) -> "HGon":
        p = None if self.punctures is None else tuple(x + c for x in self.punctures)
        return replace(self, vertices=self.vertices + c, punctures=p)

    def transform(self, a: complex) -> "HGon":
        """Apply ``x -> a * x`` (rotation and scaling about the origin)."""
        p = None if self.punctures is None else tuple(a * x for x in self.punctures)
        return replace(self, vertices=self.vertices * a, punctures=p)

    def centered(self) -> "HGon":
        return self.translate(-self.center)

    def to_source(self) -> "HGon":
        """The same polygon viewed in the simply-laced type it folds from."""
        fd = folding_data(self.type)
        if fd is None:
            return self
        punct = self.punctures
        if fd.source.family == "D" and punct is None:
            punct = (self.center, self.center)
        if fd.source.family != "D":
            punct = None
        return replace(self, type=fd.source, punctures=punct, far_end_choice=None)


# -- relations ---------------------------------------------------------------

def _row(h, terms):
    r = [0] * h
    for k, c in terms:
        r[k % h] += c
    return r


def type_relations(t: DynkinType) -> dict[str, list[list[int]]]:
    """Integer relation rows on the edge vector ``(z_0, ..., z_{h-1})``.

    Keys: ``closure``, ``symmetry`` and the type-specific families.
    """
    h = t.h
    out = {"closure": [[1] * h]}
    if t.symmetric:
        out["symmetry"] = [_row(h, [(j, 1), (j + h // 2, 1)]) for j in range(h // 2)]
    fam, n = t.family, t.rank
    if (fam, n) in (("E", 6), ("F", 4)):
        out["triangle"] = [_row(h, [(j, 1), (j + 4, 1), (j + 8, 1)]) for j in range(4)]
        out["square"] = [_row(h, [(j, 1), (j - 3, -1), (j - 6, 1), (j - 9, -1)]) for j in range(3)]
    elif (fam, n) == ("E", 7):
        out["hexagon"] = [_row(h, [(j + k, 1) for k in (0, 1, 6, 7, 12, 13)]) for j in range(3)]
    elif (fam, n) == ("E", 8):
        out["triangle"] = [_row(h, [(j, 1), (j + 10, 1), (j + 20, 1)]) for j in range(10)]
        out["pentagon"] = [_row(h, [(j + 6 * k, 1) for k in range(5)]) for j in range(6)]
    elif fam == "G":
        out["triangle"] = [_row(h, [(j, 1), (j + 2, 1), (j + 4, 1)]) for j in range(2)]
    return out


def relation_rank(t: DynkinType) -> int:
    """Exact rank of the type relations after imposing central symmetry.

    For symmetric types the relations are rewritten on ``z_0..z_{h/2-1}``
    via ``z_{j+h/2} = -z_j``.
    """
    if not ((t.family == "E") or t.family in "FG"):
        raise ValueError(f"relation rank is defined for E6, E7, E8, F4, G2; got {t}")
    rels = type_relations(t)
    rows = [r for k, rs in rels.items() if k not in ("closure", "symmetry") for r in rs]
    h = t.h
    if t.symmetric:
        half = h // 2
        reduced = []
        for r in rows:
            red = [0] * half
            for k, c in enumerate(r):
                red[k % half] += c if k < half else -c
            reduced.append(red)
        rows = reduced
    return rank(rows)


def moduli_dimension(t: DynkinType) -> int:
    """Complex dimension of the space of h-gons of type ``t`` up to translation."""
    h = t.h
    rels = type_relations(t)
    rows = [r for rs in rels.values() for r in rs]
    dim = h - rank(rows)
    if t.family == "D":
        dim += 1  # the puncture offset
    return dim


@dataclass(frozen=True)
class Chart:
    """Free edge indices and the rational map to all edges."""

    free: tuple[int, ...]
    matrix: np.ndarray  # (h, len(free)) float, exact rationals
    puncture: bool = False


@lru_cache(maxsize=None)
def chart(t: DynkinType) -> Chart:
    """Free-coordinate chart: ``z = matrix @ params[:len(free)]``."""
    h = t.h
    fam, n = t.family, t.rank
    free = {
        "A": range(1, n + 1),
        "B": range(1, n + 1),
        "C": range(1, n + 1),
        "D": range(1, n),
        "E": range(1, n + 1),
        "F": range(1, 5),
        "G": range(1, 3),
    }[fam]
    free = tuple(free)
    rows = [r for rs in type_relations(t).values() for r in rs]
    sol = solve_dependent(rows, free)
    mat = np.array([[float(x) for x in sol[c]] for c in range(h)])
    return Chart(free, mat, puncture=(fam == "D"))


def validity_residuals(g: HGon) -> dict[str, float]:
    """Absolute residual of each relation family (and puncture constraints)."""
    t = g.type
    if g.h != t.h:
        raise InvalidHGon(f"{t} needs {t.h} vertices, got {g.h}")
    z = g.edges
    res = {}
    for name, rows in type_relations(t).items():
        if name == "closure":
            continue  # automatic for a vertex list
        res[name] = float(np.abs(np.array(rows, dtype=float) @ z).max())
    res["nonzero_edges"] = float(max(0.0, g.tol * g.scale - np.abs(z).min()))
    needs = t.family in "DBG"
    if needs and g.punctures is None:
        raise InvalidHGon(f"{t} polygons carry two punctures")
    if not needs and g.punctures is not None:
        raise InvalidHGon(f"{t} polygons carry no punctures")
    if needs:
        bp, bm = g.punctures
        c = g.center
        if t.family == "D":
            res["puncture_midpoint"] = abs(bp + bm - 2 * c)
        else:
            res["puncture_center"] = max(abs(bp - c), abs(bm - c))
    return res


@dataclass
class StabilityReport:
    type: DynkinType
    residuals: dict = field(default_factory=dict)
    is_valid_hgon: bool = False
    is_positively_convex: bool = False
    convex_witness: tuple | None = None
    level: int | None = None
    containment: dict = field(default_factory=dict)
    marginal: bool = False
    folded_criterion: bool = False
    is_stable: bool = False
    core_triangle_margin: float | None = None

    def lines(self) -> list[str]:
        out = [f"type {self.type}", f"valid {self.is_valid_hgon}"]
        for k, v in self.residuals.items():
            out.append(f"  residual {k} {v:.3e}")
        out.append(f"positively_convex {self.is_positively_convex}")
        if self.convex_witness is not None:
            e, v, m = self.convex_witness
            out.append(f"  witness edge {e} vertex {v} margin {m:.3e}")
        if self.level is not None:
            out.append(f"containment level {self.level}")
            for k, (ok, m) in self.containment.items():
                out.append(f"  {k} {ok} margin {m:.3e}")
        if self.core_triangle_margin is not None:
            out.append(f"core triangle margin {self.core_triangle_margin:.3e} (diagnostic)")
        if self.folded_criterion:
            out.append("folded criterion")
        if self.marginal:
            out.append("marginal")
        out.append(f"stable {self.is_stable}")
        return out


def validate(g: HGon) -> StabilityReport:
    res = validity_residuals(g)
    lim = g.tol * g.scale
    return StabilityReport(g.type, residuals=res, is_valid_hgon=all(v <= lim for v in res.values()))


# -- convexity and diagonal-gons --------------------------------------------

def positive_convexity(vertices, tol: float = DEFAULT_TOL):
    """``(ok, witness)``; witness is ``(edge j, vertex k, margin)`` of the worst violation.

    Edge ``j`` runs from ``V_{j-1}`` to ``V_j``; every other vertex must lie
    strictly on its left.
    """
    v = np.asarray(vertices, dtype=complex)
    h = len(v)
    if h < 2:
        raise ValueError("need at least two vertices")
    scale = float(np.abs(v[:, None] - v[None, :]).max())
    if h == 2:
        # a 2-gon has no vertex off its edges; it only needs to be non-degenerate
        ok = scale > tol
        return ok, (None if ok else (0, 1, 0.0)), scale * scale
    eps = tol * scale * scale
    e = v - np.roll(v, 1)                      # e[j] = V_j - V_{j-1}
    d = v[None, :] - np.roll(v, 1)[:, None]    # d[j, k] = V_k - V_{j-1}
    cr = e.real[:, None] * d.imag - e.imag[:, None] * d.real
    idx = np.arange(h)
    cr[idx, idx] = np.inf
    cr[idx, (idx - 1) % h] = np.inf
    j, k = np.unravel_index(np.argmin(cr), cr.shape)
    worst = (int(j), int(k), float(cr[j, k]))
    ok = worst[2] > eps
    return ok, (None if ok else worst), worst[2]


def is_positively_convex(vertices, tol: float = DEFAULT_TOL):
    ok, witness, _ = positive_convexity(vertices, tol)
    return ok, witness


def diagonal_margin(g: HGon, s: int, p: complex) -> float:
    """Smallest signed cross product of ``p`` against the length-``s`` diagonals."""
    h = g.h
    if not 1 <= s <= h // 2:
        raise ValueError(f"diagonal length must be in [1, {h // 2}]")
    v = g.vertices
    a = v
    b = np.roll(v, -s)
    d = b - a
    q = p - a
    return float((d.real * q.imag - d.imag * q.real).min())


def in_level_diagonal_gon(g: HGon, s: int, p: complex) -> bool:
    return diagonal_margin(g, s, p) > g.tol * g.scale ** 2


# -- cores -------------------------------------------------------------------

# W_k = V_{k+a} + sign * z_{k+b}; every walk must agree.
_W_WALKS = {
    6: [(0, 4, 1), (-1, 8, -1), (-1, -4, -1)],
    7: [(0, 5, 1), (0, 14, -1)],
    8: [(0, 6, 1), (1, 11, 1), (0, 21, -1), (1, 26, -1)],
}
# U_k = W_{k+a} + sign * z_{k+b}
_U_WALKS = {
    7: [(1, 7, 1), (-1, 12, -1)],
    8: [(1, 13, 1), (-1, 19, -1)],
}


@dataclass
class CoreSet:
    W: np.ndarray
    U: np.ndarray | None
    ice: tuple[int, ...]
    fire: tuple[int, ...]
    core_edges: np.ndarray  # w_j, j in Z_h
    residuals: dict

    @property
    def ice_vertices(self) -> np.ndarray:
        return self.W[list(self.ice)]

    @property
    def fire_vertices(self) -> np.ndarray:
        return self.W[list(self.fire)]


def exceptional_rank(t: DynkinType) -> int | None:
    """6/7/8 for E6/E7/E8 and F4 (read as E6); None otherwise."""
    if t.family == "E":
        return t.rank
    if t.family == "F":
        return 6
    return None


def build_cores(g: HGon) -> CoreSet:
    n = exceptional_rank(g.type)
    if n is None:
        raise ValueError(f"cores exist for E6, E7, E8, F4 only; got {g.type}")
    h = g.h
    ks = range(h)
    W = np.array([g.V(k) + g.z(k + n - 2) for k in ks])
    res = {}
    walk = max(abs(g.V(k + a) + s * g.z(k + b) - W[k]) for a, b, s in _W_WALKS[n] for k in ks)
    U = None
    if n in _U_WALKS:
        (a0, b0, s0), *rest = _U_WALKS[n]
        U = np.array([W[(k + a0) % h] + s0 * g.z(k + b0) for k in ks])
        walk = max(walk, max(abs(W[(k + a) % h] + s * g.z(k + b) - U[k])
                             for a, b, s in rest for k in ks))
    res["walks"] = float(walk)
    w = np.array([g.z(j - 2) + g.z(j + n - 4) for j in ks])  # w_{j} = z_{j-2} + z_{j+n-4}
    res["core_edges"] = float(max(abs(W[(j + 1) % h] - W[(j - 1) % h] - w[j]) for j in ks))
    if n == 6:
        res["e6_identity"] = float(max(abs(w[j] + g.z(j + 6)) for j in ks))
    else:
        res["core_symmetry"] = float(max(abs(w[(j + h // 2) % h] + w[j]) for j in ks))
    evens = tuple(range(0, h, 2))
    odds = tuple(range(1, h, 2))
    ice, fire = (evens, odds) if n == 6 else (odds, evens)
    return CoreSet(W, U, ice, fire, w, res)


# -- stability ---------------------------------------------------------------

def stability_level(t: DynkinType) -> int | None:
    """Diagonal-gon level that punctures or cores must sit in; None for A and C."""
    fam, n = t.family, t.rank
    if fam == "D":
        return n - 2
    if fam == "B":
        return n - 1
    if fam == "G":
        return 2
    if fam == "E":
        return n - 3
    if fam == "F":
        return 3
    return None


def _contained_points(g: HGon) -> dict[str, complex]:
    t = g.type
    if t.family in "DBG":
        bp, bm = g.punctures
        return {"B+": bp, "B-": bm}
    if exceptional_rank(t):
        W = build_cores(g).W
        return {f"W{k}": complex(W[k]) for k in range(g.h)}
    return {}


def is_stable(g: HGon) -> StabilityReport:
    rep = validate(g)
    if not rep.is_valid_hgon:
        raise InvalidHGon("; ".join(f"{k}={v:.3e}" for k, v in rep.residuals.items()))
    ok, witness, margin = positive_convexity(g.vertices, g.tol)
    rep.is_positively_convex = ok
    rep.convex_witness = witness
    eps = g.tol * g.scale ** 2
    marginal = abs(margin) <= eps
    level = stability_level(g.type)
    rep.level = level
    rep.folded_criterion = not g.type.simply_laced and g.type.family in "BG"
    if level is not None:
        for name, p in _contained_points(g).items():
            m = diagonal_margin(g, level, p)
            rep.containment[name] = (m > eps, m)
            marginal |= abs(m) <= eps
    if exceptional_rank(g.type):
        rep.core_triangle_margin = core_triangle_margin(g)
    rep.marginal = bool(marginal)
    rep.is_stable = bool(ok and all(v for v, _ in rep.containment.values()))
    return rep


def core_triangle_margin(g: HGon) -> float:
    """Smallest ``cross(W_{j+2} - W_j, W_{j+2} - V_{j-1})`` over ``j``.

    Positive exactly when every triangle ``V_{j-1} W_j W_{j+2}`` is
    counterclockwise.  Diagnostic only: it is not part of the stability
    predicate, but for E7 and E8 it detects the non-total polygons that the
    core containment test alone lets through.
    """
    c = build_cores(g)
    h = g.h
    W = lambda k: complex(c.W[k % h])
    return float(min(cross(W(j + 2) - W(j), W(j + 2) - g.V(j - 1)) for j in range(h)))


def ice_fire_boundary_check(g: HGon) -> bool:
    """E6/F4: convex, ice core inside the fire boundary and fire core inside the ice boundary.

    The ice boundary is cut out by the length-3 diagonals ``V_{j-1}V_{j+2}``
    of the narrow hexagons ``H_j`` with ``j`` even; the fire boundary uses
    ``j`` odd.
    """
    if exceptional_rank(g.type) != 6:
        raise ValueError("ice/fire boundaries are defined for E6 and F4")
    ok, _, _ = positive_convexity(g.vertices, g.tol)
    if not ok:
        return False
    cores = build_cores(g)
    eps = g.tol * g.scale ** 2
    h = g.h

    def inside(points, parity):
        for p in points:
            for j in range(parity, h, 2):
                a, b = g.V(j - 1), g.V(j + 2)
                if cross(b - a, p - a) <= eps:
                    return False
        return True

    # ice core W_even against fire diagonals (j odd), fire core against ice (j even)
    return inside(cores.ice_vertices, 1) and inside(cores.fire_vertices, 0)


# -- construction ------------------------------------------------------------

def _assemble(t, z, puncture_offset=None, tol=DEFAULT_TOL, far_end_choice=None) -> HGon:
    z = np.asarray(z, dtype=complex)
    v = np.concatenate([[0], np.cumsum(z[1:])])
    c = v.mean()
    v = v - c
    punct = None
    if t.family == "D":
        bp = v[0] + puncture_offset
        punct = (bp, -bp)
    elif t.family in "BG":
        punct = (0j, 0j)
    return HGon(t, v, punct, tol, far_end_choice)


def from_free_coordinates(t: DynkinType, params, far_end_choice=None, tol=DEFAULT_TOL) -> HGon:
    """Build the h-gon whose chart coordinates are ``params``.

    The chart uses ``z_1..z_k`` for the free edges (``k = n`` except for D,
    where ``k = n-1`` and the last parameter is the offset ``V_0B_+``).
    The polygon is translated so that its vertex centroid is the origin.
    """
    params = np.asarray(params, dtype=complex).reshape(-1)
    if not np.all(np.isfinite(params)):
        raise ValueError("parameters must be finite")
    ch = chart(t)
    k = len(ch.free)
    expected = k + (1 if ch.puncture else 0)
    if len(params) != expected:
        raise ValueError(f"{t} takes {expected} free coordinates, got {len(params)}")
    z = ch.matrix @ params[:k]
    scale = np.abs(z).max() if len(z) else 0.0
    if scale == 0 or np.abs(z).min() <= tol * scale:
        raise DegenerateHGon("a solved edge vanishes")
    off = params[k] if ch.puncture else None
    return _assemble(t, z, off, tol, far_end_choice)


def free_coordinates(g: HGon) -> np.ndarray:
    ch = chart(g.type)
    out = [g.z(j) for j in ch.free]
    if ch.puncture:
        out.append(g.punctures[0] - g.V(0))
    return np.array(out)


def regular(t: DynkinType, radius: float = 1.0, far_end_choice=None) -> HGon:
    """Regular h-gon with circumradius ``radius``; ``z_1`` points along the positive real axis."""
    h = t.h
    phase = np.exp(-1j * (np.pi / 2 + np.pi / h))
    v = radius * np.exp(2j * np.pi * np.arange(h) / h) * phase
    z = v - np.roll(v, 1)
    # punctures at the center: offset V_0 B_+ = -V_0
    return _assemble(t, z, -complex(v[0]), far_end_choice=far_end_choice)


def sample_near_regular(t: DynkinType, magnitude: float, seed, far_end_choice=None,
                        max_tries: int = 100) -> HGon:
    """Perturb the chart coordinates of the regular gon and rebuild.

    Each coordinate moves by a uniform random point of the disk of radius
    ``magnitude * edge_length``; the puncture offset of type D moves the same
    way.  Deterministic for a fixed seed.
    """
    if magnitude < 0:
        raise ValueError("magnitude must be non-negative")
    if magnitude == 0:
        return regular(t, far_end_choice=far_end_choice)
    base = free_coordinates(regular(t))
    edge = abs(base[0])
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        r = magnitude * edge * np.sqrt(rng.random(len(base)))
        th = 2 * np.pi * rng.random(len(base))
        try:
            return from_free_coordinates(t, base + r * np.exp(1j * th), far_end_choice)
        except DegenerateHGon:
            continue
    raise DegenerateHGon(f"no non-degenerate sample after {max_tries} tries")


def is_choice_valid(t: DynkinType, choice) -> bool:
    if choice is None:
        return True
    return t.simply_laced and choice in far_end_choices(t)


def source_punctures(g: HGon):
    """Punctures of the source-type polygon (B/G2 fold onto D with punctures at the center)."""
    return g.to_source().punctures


__all__ = [
    "HGon", "InvalidHGon", "DegenerateHGon", "StabilityReport", "CoreSet",
    "validate", "relation_rank", "moduli_dimension", "build_cores", "is_stable",
    "is_positively_convex", "positive_convexity", "in_level_diagonal_gon",
    "diagonal_margin", "ice_fire_boundary_check", "core_triangle_margin", "from_free_coordinates",
    "free_coordinates", "regular", "sample_near_regular", "type_relations", "chart",
]
