"""Central charges and the polygon/charge correspondence.

``charge_from_hgon`` assigns a planar vector to every indecomposable using
the geometric model of each type; ``farend_polygon`` goes back by taking
partial sums along the far-end tau-orbit.

A :class:`CentralCharge` stores its values on the projective basis of the
fixed orientation.  It may also carry a per-label table (the vectors read
off a polygon), which is what ``verify_mesh`` tests for additivity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .arquiver import ArQuiver, build
from .dynkin import DynkinType, far_end_choices, folding_data, source_type
from .exact import integer_inverse
from .hgon import DEFAULT_TOL, HGon, InvalidHGon, build_cores, validate


@dataclass
class CentralCharge:
    """A group homomorphism ``K -> C`` on a simply-laced root lattice.

    ``type`` is the simply-laced type the charge lives on; ``folded_from``
    records the non-simply-laced type when the charge came from a folded
    polygon.  ``table[i-1, j]`` (optional) is the value assigned to
    ``P^j_i``.
    """

    type: DynkinType
    values: np.ndarray
    table: np.ndarray | None = None
    folded_from: DynkinType | None = None
    gauge: str = "centroid"
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=complex).reshape(-1)
        if len(self.values) != self.type.rank:
            raise ValueError(f"{self.type} charge needs {self.type.rank} values")
        if self.table is not None:
            self.table = np.asarray(self.table, dtype=complex)

    def coefficients(self, q: ArQuiver, dim) -> np.ndarray:
        """Coordinates of a class (given by its dimension vector) in the projective basis."""
        return _cinv(q) @ np.asarray(dim, dtype=np.int64)

    def evaluate(self, q: ArQuiver, dim) -> complex:
        return complex(self.values @ self.coefficients(q, dim))

    def linear_table(self, q: ArQuiver) -> np.ndarray:
        """``Z(P^j_i)`` by linearity, shape ``(n, h)``."""
        coeff = np.einsum("ab,ijb->ija", _cinv(q), q.dims)
        return coeff @ self.values

    def label_values(self, q: ArQuiver) -> np.ndarray:
        return self.table if self.table is not None else self.linear_table(q)

    def __call__(self, q: ArQuiver, label) -> complex:
        i, j = q.norm(label)
        return complex(self.label_values(q)[i - 1, j])

    def rotated(self, a: complex) -> "CentralCharge":
        """The charge ``a * Z`` (the C-action restricted to its rotation-scaling part)."""
        return CentralCharge(self.type, a * self.values,
                             None if self.table is None else a * self.table,
                             self.folded_from, self.gauge, dict(self.meta))


def _cinv(q: ArQuiver) -> np.ndarray:
    if not hasattr(q, "_cinv"):
        q._cinv = np.array(integer_inverse(q.cartan_paths.tolist()), dtype=np.int64)
    return q._cinv


def quiver_for(t: DynkinType, far_end_choice=None) -> ArQuiver:
    """AR quiver of the simply-laced type underlying ``t``."""
    if folding_data(t) is not None:
        far_end_choice = None
    return build(source_type(t), far_end_choice)


# -- polygon -> charge --------------------------------------------------------

def _canonical_table(g: HGon) -> np.ndarray:
    """Charge table for the default far-end orbit of a simply-laced polygon.

    Rows are canonical orbit roles: for D_n row ``m-1`` is the fork vertex
    ``m = n-1`` and row ``n-1`` is ``n``; for D4 these are remapped by the caller.
    """
    t = g.type
    n, h = t.rank, t.h
    V = g.V
    tab = np.zeros((n, h), dtype=complex)
    if t.family == "A":
        for i in range(1, n + 1):
            for j in range(h):
                tab[i - 1, j] = V(j + i) - V(j)
    elif t.family == "D":
        m = n - 1
        bp, bm = g.punctures
        B = (bp, bm)  # rho(even) = +, rho(odd) = -
        for j in range(h):
            for i in range(1, m):
                tab[i - 1, j] = V(j + i) - V(j)
            tab[m - 1, j] = B[j % 2] - V(j)
            tab[n - 1, j] = B[(j + 1) % 2] - V(j)
    else:
        W = build_cores(g).W
        Wk = lambda k: complex(W[k % h])
        for j in range(h):
            tab[0, j] = Wk(j + 2) - Wk(j)
            tab[1, j] = Wk(j + 2) - V(j - 1)
            tab[2, j] = Wk(j + 1) - V(j - 1)
            for i in range(4, n + 1):
                tab[i - 1, j] = V(j + 1 + n - i) - V(j)
    return tab


def far_end_map(q: ArQuiver) -> tuple[dict, dict]:
    """Diagram permutation and offsets sending the default far-end orbit to ``q``'s.

    The default far-end objects ``P^j_f`` map to ``P^j_c`` for the chosen
    far end ``c``; the rest of the AR quiver follows (possibly with a tau-twist
    on other orbits).  Identity for the default choice.
    """
    o = q.orientation
    t = o.type
    f = build(t).orientation.far_end
    c = o.far_end
    n = t.rank
    if c == f:
        perm = {i: i for i in range(1, n + 1)}
    elif t.family == "A":
        perm = {i: n + 1 - i for i in range(1, n + 1)}
    elif t.family == "E":
        perm = {1: 6, 6: 1, 2: 5, 5: 2, 3: 3, 4: 4}
    else:  # D4: the default roles (far, fork) = (1, (3, 4)) go to (c, fork)
        perm = {1: c, 2: 2, 3: o.fork[0], 4: o.fork[1]}
    return perm, q.twisted_automorphism(perm, f)


def _mapped_table(q: ArQuiver, tab1: np.ndarray) -> np.ndarray:
    perm, off = far_end_map(q)
    tab = np.zeros_like(tab1)
    for i in range(1, q.n + 1):
        for j in range(q.h):
            a, b = q.apply_automorphism((i, j), perm, off)
            tab[a - 1, b] = tab1[i - 1, j]
    return tab


def charge_from_hgon(g: HGon, q: ArQuiver | None = None) -> CentralCharge:
    """Central charge of a valid polygon via the geometric model."""
    rep = validate(g)
    if not rep.is_valid_hgon:
        raise InvalidHGon("; ".join(f"{k}={v:.3e}" for k, v in rep.residuals.items()))
    folded = folding_data(g.type)
    src = g.to_source()
    choice = None if folded else g.far_end_choice
    if q is None:
        q = build(src.type, choice)
    o = q.orientation
    if o.type != src.type:
        raise ValueError(f"quiver type {o.type} does not match polygon type {src.type}")
    t = src.type
    tab = _mapped_table(q, _canonical_table(src))
    gauge = "puncture-midpoint" if t.family == "D" else "centroid"
    return CentralCharge(t, tab[:, 0].copy(), tab, folded.target if folded else None, gauge,
                         {"far_end": o.far_end})


def verify_mesh(Z: CentralCharge, q: ArQuiver) -> float:
    """Largest ``|Z(start) + Z(end) - sum Z(middles)|`` over all meshes."""
    tab = Z.label_values(q)
    worst = 0.0
    for m in q.meshes:
        r = tab[m.start[0] - 1, m.start[1]] + tab[m.end[0] - 1, m.end[1]]
        r -= sum(tab[i - 1, j] for i, j in m.middles)
        worst = max(worst, abs(r))
    return float(worst)


def linearity_residual(Z: CentralCharge, q: ArQuiver) -> float:
    """Distance between the stored table and the linear extension of the basis values."""
    if Z.table is None:
        return 0.0
    return float(np.abs(Z.table - Z.linear_table(q)).max())


# -- charge -> polygon --------------------------------------------------------

def farend_polygon(Z: CentralCharge, q: ArQuiver | None = None, choice=None,
                   tol: float = DEFAULT_TOL) -> HGon:
    """The polygon traced by ``Z`` on the far-end tau-orbit.

    Edges are ``z_k = Z(P^{k-1}_f)``.  Type D is anchored by
    ``V_j = -(Z(P^j_f) + ... + Z(P^{j+m-1}_f)) / 2`` with punctures
    ``B_+- = +-(Z(P_m) - Z(P_n)) / 2``; other types put the vertex centroid
    at the origin.  Folded charges return a polygon of the folded type.
    """
    t = Z.type
    if q is None:
        q = build(t, choice if choice is not None else Z.meta.get("far_end"))
    elif choice is not None and q.orientation.far_end != choice:
        q = build(t, choice)
    o = q.orientation
    h = t.h
    tab = Z.label_values(q)
    f = tab[o.far_end - 1]
    z = np.array([f[(k - 1) % h] for k in range(h)])
    punct = None
    if t.family == "D":
        m = t.rank - 1
        v = np.array([-sum(f[(j + s) % h] for s in range(m)) / 2 for j in range(h)])
        perm, off = far_end_map(q)
        n = t.rank
        (a, ja), (b, jb) = (q.apply_automorphism((k, 0), perm, off) for k in (n - 1, n))
        bp = (tab[a - 1, ja] - tab[b - 1, jb]) / 2
        punct = (bp, -bp)
    else:
        v = np.concatenate([[0], np.cumsum(z[1:])])
        v = v - v.mean()
    fe = o.far_end if o.far_end != far_end_choices(t)[0] else None
    if Z.folded_from is not None:
        target = Z.folded_from
        if target.family in "BG":
            c = complex(v.mean())
            punct = (c, c)
        else:
            punct = None
        return HGon(target, v, punct, tol, None)
    return HGon(t, v, punct, tol, fe)


def all_orbit_polygons(Z: CentralCharge, q: ArQuiver) -> list[np.ndarray]:
    """Vertices of the polygon traced by each tau-orbit (centroid at the origin)."""
    tab = Z.label_values(q)
    out = []
    for row in tab:
        v = np.concatenate([[0], np.cumsum(row[:-1])])
        out.append(v - v.mean())
    return out


def orbit_closure_residual(Z: CentralCharge, q: ArQuiver) -> float:
    return float(np.abs(Z.label_values(q).sum(axis=1)).max())


def iota_action(t: DynkinType, q: ArQuiver) -> tuple[dict, dict]:
    """The folding automorphism of a non-simply-laced type acting on AR labels.

    The fixed orientation need not be iota-invariant, so iota acts as
    ``P^j_i -> P^{j+d_i}_{iota(i)}`` with offsets normalized to vanish on a
    fixed vertex.
    """
    fd = folding_data(t)
    if fd is None:
        raise ValueError(f"{t} is simply-laced")
    root = next(v for v, w in fd.iota.items() if v == w)
    return fd.iota, q.twisted_automorphism(fd.iota, root)


def symmetrized(Z: CentralCharge, q: ArQuiver, t: DynkinType) -> CentralCharge:
    """Average of ``Z`` over the iota-orbit of every label (per-label table)."""
    perm, off = iota_action(t, q)
    tab = Z.label_values(q)
    order = max(len(o) for o in folding_data(t).orbits)
    acc = np.zeros_like(tab)
    for i in range(1, q.n + 1):
        for j in range(q.h):
            lab = (i, j)
            vals = []
            for _ in range(order):
                vals.append(tab[lab[0] - 1, lab[1]])
                lab = q.apply_automorphism(lab, perm, off)
            acc[i - 1, j] = np.mean(vals)
    return CentralCharge(Z.type, acc[:, 0].copy(), acc, Z.folded_from, Z.gauge, dict(Z.meta))


def write_charge(Z: CentralCharge) -> dict:
    return {
        "type": str(Z.folded_from or Z.type),
        "values": [[float(x.real), float(x.imag)] for x in Z.values],
        "gauge": Z.gauge,
    }


def read_charge(doc: dict) -> CentralCharge:
    t = DynkinType.parse(doc["type"])
    fd = folding_data(t)
    vals = [complex(a, b) for a, b in doc["values"]]
    return CentralCharge(source_type(t), vals, None, fd.target if fd else None,
                         doc.get("gauge", "centroid"))


__all__ = [
    "CentralCharge", "charge_from_hgon", "verify_mesh", "linearity_residual",
    "farend_polygon", "all_orbit_polygons", "orbit_closure_residual", "quiver_for",
    "symmetrized", "iota_action", "far_end_map", "write_charge", "read_charge",
]
