"""Slicings, totality, the global dimension and the Gepner point.

Phases live on the fundamental domain ``0 <= j < h`` of each tau-orbit and
extend by ``phi(P^{j+h}_i) = phi(P^j_i) + 2``.  The far-end orbit is unwrapped
first; every other orbit is unwrapped in a window of length 2 anchored at a
neighbouring orbit, walking the Dynkin diagram outward from the far end.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linear_sum_assignment

from .arquiver import ArQuiver
from .charge import CentralCharge, charge_from_hgon, farend_polygon, quiver_for
from .dynkin import DynkinType, source_type
from .hgon import DEFAULT_TOL, HGon, regular
from .rootsys import build_root_system, coxeter_action


class DegenerateCharge(ValueError):
    """Some indecomposable has zero central charge."""


@dataclass
class PhaseAssignment:
    """Phases ``phi[i-1, j]`` of ``P^j_i`` together with the charge table."""

    type: DynkinType
    phases: np.ndarray
    charges: np.ndarray
    charge: CentralCharge
    tol: float = DEFAULT_TOL

    @property
    def h(self) -> int:
        return self.phases.shape[1]

    def phase(self, label) -> float:
        """Phase of a ZQ label ``(i, j)`` with ``j`` any integer."""
        i, j = label
        k, r = divmod(j, self.h)
        return float(self.phases[i - 1, r] + 2 * k)

    def alignment_residual(self) -> float:
        """``max |Z(x) - |Z(x)| exp(i pi phi(x))|`` relative to the largest charge."""
        z = self.charges
        rec = np.abs(z) * np.exp(1j * np.pi * self.phases)
        return float(np.abs(rec - z).max() / np.abs(z).max())


@dataclass
class TotalityReport:
    violations: list = field(default_factory=list)
    gldim: float | None = None
    is_total: bool = False

    def lines(self) -> list[str]:
        out = [f"total {self.is_total}"]
        if self.gldim is not None:
            label = "gldim" if self.is_total else "formula-gldim"
            out.append(f"{label} {self.gldim:.12f}")
        for kind, x, y, px, py in self.violations:
            out.append(f"violation {kind} P^{x[1]}_{x[0]} -> P^{y[1]}_{y[0]} "
                       f"phases {px:.9f} {py:.9f} margin {py - px - (1 if kind == 'shift' else 0):.3e}")
        return out


def _unwrap(theta: float, anchor: float) -> float:
    """The representative of ``theta`` (mod 2) in ``[anchor, anchor + 2)``."""
    return anchor + (theta - anchor) % 2.0


def _prepare(obj, q):
    if isinstance(obj, HGon):
        Z = charge_from_hgon(obj, q)
        tol = obj.tol
        if q is None:
            q = quiver_for(obj.type, obj.far_end_choice)
    else:
        Z, tol = obj, DEFAULT_TOL
        if q is None:
            q = quiver_for(Z.type)
    return Z, q, tol


def build_slicing(obj, q: ArQuiver | None = None) -> PhaseAssignment:
    """Phase assignment generated by a polygon (or a charge).

    The far-end projective gets ``arg Z / pi`` in ``[0, 2)``, the rest of the
    far-end orbit is unwrapped into the window starting there, and each orbit
    ``c`` reached from ``p`` along a diagram edge is unwrapped object by object:
    ``P^j_c`` in the window anchored at ``P^j_p`` when the arrow is ``c -> p``
    and at ``P^{j-1}_p`` when it is ``p -> c`` (its AR predecessor).
    """
    Z, q, tol = _prepare(obj, q)
    tab = Z.label_values(q)
    mod = np.abs(tab)
    if mod.min() <= tol * max(mod.max(), 1e-300):
        raise DegenerateCharge("an indecomposable has (numerically) zero central charge")
    theta = np.mod(np.angle(tab) / np.pi, 2.0)
    n, h = tab.shape
    phi = np.full((n, h), np.nan)
    o = q.orientation
    f = o.far_end
    phi[f - 1, 0] = theta[f - 1, 0]
    for j in range(1, h):
        phi[f - 1, j] = _unwrap(theta[f - 1, j], phi[f - 1, 0])

    def ext(i, j):
        k, r = divmod(j, h)
        return phi[i - 1, r] + 2 * k

    seen = {f}
    queue = deque([f])
    while queue:
        p = queue.popleft()
        for a, b in o.arrows:
            if p not in (a, b):
                continue
            c = b if a == p else a
            if c in seen:
                continue
            shift = 0 if (c, p) in o.arrows else -1
            for j in range(h):
                phi[c - 1, j] = _unwrap(theta[c - 1, j], ext(p, j + shift))
            seen.add(c)
            queue.append(c)
    return PhaseAssignment(q.type, phi, tab, Z, tol)


def check_total(p: PhaseAssignment, q: ArQuiver) -> TotalityReport:
    """Check phase monotonicity along every AR arrow and compatibility with [1].

    Each arrow ``x -> y`` needs ``phi(y) - phi(x) > tol``.  The slicing must
    also satisfy ``phi(x[1]) = phi(x) + 1``; a mismatch is reported as a
    ``shift`` violation.
    """
    h = q.h
    viol = []
    for a, b in q.orientation.arrows:
        for j in range(h):
            for x, y in (((b, j), (a, j)), ((a, j), (b, j + 1))):
                px, py = p.phase(x), p.phase(y)
                if py - px <= p.tol:
                    viol.append(("arrow", x, (y[0], y[1] % h), px, py))
    for i in range(1, q.n + 1):
        for j in range(h):
            y = q.shift_lift((i, j))
            px, py = p.phase((i, j)), p.phase(y)
            if abs(py - px - 1) > 1e-6:
                viol.append(("shift", (i, j), q.norm(y), px, py))
    rep = TotalityReport(viol, None, not viol)
    rep.gldim = gldim(p, q)
    return rep


def gldim_arrow(p: PhaseAssignment, q: ArQuiver) -> float:
    """``max_E phi(tau(E[1])) - phi(E)`` over indecomposables ``E``."""
    best = -np.inf
    for i in range(1, q.n + 1):
        for j in range(q.h):
            i2, j2 = q.shift_lift((i, j))
            best = max(best, p.phase((i2, j2 - 1)) - p.phase((i, j)))
    return float(best)


def gldim_angle(charges: np.ndarray) -> float:
    """Largest interior angle of the orbit polygons, divided by pi.

    Orbit ``i`` has edges ``Z(P^0_i), ..., Z(P^{h-1}_i)``; the interior angle
    between consecutive edges is ``pi`` minus the turning angle.
    """
    z = np.asarray(charges)
    turn = np.angle(np.roll(z, -1, axis=1) / z)
    turn[turn <= -np.pi + 1e-12] = np.pi  # a half-turn counts as +pi (2-gons)
    return float(((np.pi - turn) / np.pi).max())


def gldim(p: PhaseAssignment, q: ArQuiver) -> float:
    return gldim_arrow(p, q)


def tost_pipeline(g: HGon):
    """Charge, phases and totality report of a polygon."""
    q = quiver_for(g.type, g.far_end_choice)
    Z = charge_from_hgon(g, q)
    p = build_slicing(Z, q)
    p.tol = g.tol
    return Z, p, check_total(p, q)


# -- Gepner point ------------------------------------------------------------

def gepner(t: DynkinType, far_end_choice=None):
    """Regular h-gon of circumradius 1, its charge and phases.

    Raises AssertionError if ``Z(taubar M) = exp(2 pi i / h) Z(M)`` or
    ``gldim = 1 - 2/h`` fails within tolerance.
    """
    g = regular(t, far_end_choice=far_end_choice)
    q = quiver_for(t, far_end_choice)
    Z = charge_from_hgon(g, q)
    p = build_slicing(Z, q)
    tab = Z.label_values(q)
    rot = np.exp(2j * np.pi / t.h)
    err = np.abs(np.roll(tab, -1, axis=1) - rot * tab).max()
    if err > 1e-9:
        raise AssertionError(f"Gepner charge is not tau-equivariant (error {err:.3e})")
    gd = gldim(p, q)
    if abs(gd - (1 - 2 / t.h)) > 1e-9:
        raise AssertionError(f"Gepner gldim {gd} differs from 1 - 2/h")
    return g, Z, p


def coxeter_alignment(t: DynkinType) -> tuple[float, np.ndarray]:
    """Coxeter-plane projections of the roots, aligned with the Gepner charges.

    The projections are aligned by one rotation-scaling that sends a root to
    the far-end projective charge (every root on the same circle and both
    orientations of the plane are tried); the remaining points are matched by
    an optimal assignment.  Returns the largest matched distance and the
    aligned projections.  Folded types use their simply-laced source.
    """
    src = source_type(t)
    _, Z, _ = gepner(src)
    q = quiver_for(src)
    tab = Z.label_values(q)
    zs = tab.reshape(-1)
    roots = build_root_system(src).as_array()
    proj = coxeter_action(src).project_many(roots)
    target = complex(tab[q.orientation.far_end - 1, 0])
    rz = abs(target) / np.abs(zs).max()
    best, best_pts = np.inf, None
    for cand in (proj, np.conj(proj)):
        rp = np.abs(cand) / np.abs(cand).max()
        for k in np.flatnonzero(np.abs(rp - rz) < 1e-6):
            mapped = (target / cand[k]) * cand
            cost = np.abs(zs[:, None] - mapped[None, :])
            r, c = linear_sum_assignment(cost)
            d = float(cost[r, c].max())
            if d < best:
                best, best_pts = d, mapped
    return best, best_pts


def gepner_vs_coxeter(t: DynkinType) -> float:
    """Largest distance between Gepner charges and aligned Coxeter-plane projections."""
    if not t.simply_laced:
        raise ValueError("the Coxeter-plane comparison needs a simply-laced type")
    return coxeter_alignment(t)[0]


def roundtrip_zh(g: HGon) -> float:
    """Distance between ``g`` and the far-end polygon of its charge, after translation."""
    q = quiver_for(g.type, g.far_end_choice)
    back = farend_polygon(charge_from_hgon(g, q), q)
    shift = g.center - back.center
    d = float(np.abs(back.vertices + shift - g.vertices).max())
    if g.punctures is not None:
        d = max(d, max(abs(a + shift - b) for a, b in zip(back.punctures, g.punctures)))
    return d


__all__ = [
    "PhaseAssignment", "TotalityReport", "DegenerateCharge", "build_slicing", "check_total",
    "gldim", "gldim_arrow", "gldim_angle", "tost_pipeline", "gepner", "gepner_vs_coxeter", "coxeter_alignment",
    "roundtrip_zh",
]
