"""Root systems, Coxeter transformations and Coxeter-plane projections.

Roots are integer vectors in the simple-root basis.  The only floating-point
step is the eigenvector that defines the Coxeter plane.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.linalg

from .dynkin import DynkinType, Orientation, source_type, standard_orientation
from .exact import integer_inverse


def cartan_matrix(t: DynkinType) -> np.ndarray:
    """Symmetrized Cartan matrix (2 on the diagonal, -1 on edges)."""
    o = standard_orientation(source_type(t))
    n = o.n
    a = 2 * np.eye(n, dtype=np.int64)
    for x, y in o.arrows:
        a[x - 1, y - 1] = a[y - 1, x - 1] = -1
    return a


def simple_reflection(cartan: np.ndarray, i: int) -> np.ndarray:
    """Matrix of the reflection in the ``i``-th simple root (0-based)."""
    n = cartan.shape[0]
    s = np.eye(n, dtype=np.int64)
    s[i, :] -= cartan[i, :]
    return s


@dataclass(frozen=True)
class RootSystem:
    type: DynkinType
    cartan: np.ndarray
    roots: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.cartan.shape[0]

    @property
    def h(self) -> int:
        return self.type.h

    def as_array(self) -> np.ndarray:
        return np.array(self.roots, dtype=np.int64)

    def positive(self) -> list[tuple[int, ...]]:
        return [r for r in self.roots if sum(r) > 0]

    def form(self, a, b) -> int:
        return int(np.asarray(a) @ self.cartan @ np.asarray(b))


def reflection_closure(cartan: np.ndarray, seeds) -> set[tuple[int, ...]]:
    """Saturate ``seeds`` under all simple reflections."""
    refl = [simple_reflection(cartan, i) for i in range(cartan.shape[0])]
    found = {tuple(int(x) for x in s) for s in seeds}
    frontier = list(found)
    while frontier:
        nxt = []
        for v in frontier:
            arr = np.array(v, dtype=np.int64)
            for s in refl:
                w = tuple(int(x) for x in s @ arr)
                if w not in found:
                    found.add(w)
                    nxt.append(w)
        frontier = nxt
    return found


@lru_cache(maxsize=None)
def build_root_system(t: DynkinType) -> RootSystem:
    """Root system of ``t``; folded types use their simply-laced source."""
    src = source_type(t)
    a = cartan_matrix(src)
    n = a.shape[0]
    simple = [tuple(int(i == k) for k in range(n)) for i in range(n)]
    roots = reflection_closure(a, simple)
    ordered = tuple(sorted(roots, key=lambda r: (-sum(r), tuple(-x for x in r))))
    return RootSystem(src, a, ordered)


def path_matrix(o: Orientation) -> np.ndarray:
    """``C[k, i]`` = number of paths from vertex ``i+1`` to ``k+1``.

    Column ``i`` is the dimension vector of the projective ``P_{i+1}``.
    """
    n = o.n
    adj = np.zeros((n, n), dtype=np.int64)
    for a, b in o.arrows:
        adj[b - 1, a - 1] += 1
    c = np.eye(n, dtype=np.int64)
    power = np.eye(n, dtype=np.int64)
    for _ in range(n):
        power = adj @ power
        c += power
    return c


def coxeter_transformation(o: Orientation, basis: str = "projective") -> np.ndarray:
    """Action of tau on the Grothendieck group.

    In the projective basis this is ``-C^{-1} C^T`` (``tau P_i = I_i[-1]``);
    with ``basis="dim"`` it is expressed on dimension vectors instead.
    """
    c = path_matrix(o)
    cinv = np.array(integer_inverse(c.tolist()), dtype=np.int64)
    if basis == "projective":
        return -cinv @ c.T
    if basis == "dim":
        return -c.T @ cinv
    raise ValueError(f"unknown basis {basis!r}")


def coxeter_element(t: DynkinType, order=None) -> np.ndarray:
    """Product ``s_1 s_2 ... s_n`` of simple reflections (ascending by default)."""
    a = cartan_matrix(t)
    n = a.shape[0]
    order = range(n) if order is None else [i - 1 for i in order]
    w = np.eye(n, dtype=np.int64)
    for i in order:
        w = w @ simple_reflection(a, i)
    return w


def matrix_order(m: np.ndarray, bound: int = 200) -> int:
    p = m.copy()
    eye = np.eye(m.shape[0], dtype=m.dtype)
    for k in range(1, bound + 1):
        if np.array_equal(p, eye):
            return k
        p = p @ m
    raise ValueError("matrix order exceeds bound")


def char_poly(m: np.ndarray) -> tuple[int, ...]:
    """Integer characteristic polynomial coefficients (leading first)."""
    return tuple(int(round(c)) for c in np.poly(np.asarray(m, dtype=float)))


@dataclass(frozen=True)
class CoxeterAction:
    """Coxeter element ``w``, Coxeter transformation ``phi`` and the plane projector."""

    type: DynkinType
    w: np.ndarray
    phi: np.ndarray
    u_re: np.ndarray
    u_im: np.ndarray

    @property
    def h(self) -> int:
        return self.type.h

    def project(self, v) -> complex:
        v = np.asarray(v, dtype=float)
        return complex(self.u_re @ v, self.u_im @ v)

    def project_many(self, vs) -> np.ndarray:
        vs = np.asarray(vs, dtype=float)
        return vs @ self.u_re + 1j * (vs @ self.u_im)


def plane_functional(w: np.ndarray, cartan: np.ndarray, h: int, gauge_index: int) -> np.ndarray:
    """Complex covector ``u`` with ``u @ (w v) = exp(2 pi i / h) * (u @ v)``.

    Built from the right eigenvector ``x`` of ``w`` (normalized so that
    ``x[gauge_index]`` is real positive) via the invariant form:
    ``u = cartan @ conj(x)``.
    """
    zeta = np.exp(2j * np.pi / h)
    vals, vecs = scipy.linalg.eig(w.astype(float))
    dist = np.abs(vals - zeta)
    k = int(np.argmin(dist))
    if dist[k] > 1e-8 or np.sum(dist < 1e-6) != 1:
        raise ValueError("exp(2 pi i / h) must be a simple eigenvalue of the Coxeter element")
    x = vecs[:, k]
    g = x[gauge_index]
    if abs(g) < 1e-12:
        g = x[np.argmax(abs(x))]
    x = x * (abs(g) / g)
    x = x / np.linalg.norm(x)
    return cartan @ np.conj(x)


@lru_cache(maxsize=None)
def coxeter_action(t: DynkinType) -> CoxeterAction:
    src = source_type(t)
    o = standard_orientation(src)
    w = coxeter_element(src)
    u = plane_functional(w, cartan_matrix(src), src.h, o.far_end - 1)
    return CoxeterAction(src, w, coxeter_transformation(o), u.real.copy(), u.imag.copy())


def coxeter_plane_projection(c: CoxeterAction, alpha) -> complex:
    return c.project(alpha)
