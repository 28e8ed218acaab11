"""The AR quiver of the root category ``D^b(Q)/[2]``.

Indecomposables are labelled ``(i, j)`` for ``P^j_i = taubar^j P_i`` with
``i`` a vertex of ``Q`` and ``j`` taken modulo the Coxeter number ``h``.

Arrows follow the orientation: a quiver arrow ``a -> b`` gives AR arrows
``P^j_b -> P^j_a`` and ``P^j_a -> P^{j+1}_b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .dynkin import DynkinType, Orientation, standard_orientation
from .exact import integer_inverse
from .rootsys import coxeter_transformation, path_matrix


@dataclass(frozen=True, order=True)
class IndLabel:
    orbit: int
    power: int

    def __str__(self):
        return f"P^{self.power}_{self.orbit}"


@dataclass(frozen=True)
class Mesh:
    """``[start] + [end] = sum([middles])`` with ``end = taubar(start)``."""

    start: tuple[int, int]
    end: tuple[int, int]
    middles: tuple[tuple[int, int], ...]


class ArQuiver:
    """AR quiver of the root category for a fixed orientation.

    Labels are stored as ``(i, j)`` tuples with ``1 <= i <= n`` and
    ``0 <= j < h``; ``dims[i-1, j]`` is the Gabriel dimension vector.
    """

    def __init__(self, o: Orientation):
        self.orientation = o
        self.type = o.type
        self.n = o.n
        self.h = o.type.h
        n, h = self.n, self.h

        self.cartan_paths = path_matrix(o)
        self.phi_dim = coxeter_transformation(o, basis="dim")
        self.taubar_dim = np.array(integer_inverse(self.phi_dim.tolist()), dtype=np.int64)

        dims = np.zeros((n, h, n), dtype=np.int64)
        for i in range(n):
            v = self.cartan_paths[:, i].copy()
            for j in range(h):
                dims[i, j] = v
                v = self.taubar_dim @ v
        self.dims = dims
        self._index = {tuple(int(x) for x in dims[i, j]): (i + 1, j)
                       for i in range(n) for j in range(h)}
        if len(self._index) != n * h:
            raise AssertionError("Gabriel map is not injective")

        arrows = []
        for a, b in o.arrows:
            for j in range(h):
                arrows.append(((b, j), (a, j)))
                arrows.append(((a, j), (b, (j + 1) % h)))
        self.arrows = sorted(arrows)

        meshes = []
        for i in range(1, n + 1):
            for j in range(h):
                mids = []
                for a, b in o.arrows:
                    if b == i:
                        mids.append((a, j))
                    elif a == i:
                        mids.append((b, (j + 1) % h))
                meshes.append(Mesh((i, j), (i, (j + 1) % h), tuple(sorted(mids))))
        self.meshes = meshes

        self._shift = {}
        self.shift_offset = {}
        for i in range(1, n + 1):
            for j in range(h):
                target = self._index[tuple(int(-x) for x in dims[i - 1, j])]
                self._shift[(i, j)] = target
                if j == 0:
                    self.shift_offset[i] = (target[0], target[1] if target[1] else h)

    # -- lookups -----------------------------------------------------------

    def labels(self):
        return [(i, j) for i in range(1, self.n + 1) for j in range(self.h)]

    def norm(self, label) -> tuple[int, int]:
        i, j = label
        return (i, j % self.h)

    def dim_vector(self, label) -> np.ndarray:
        i, j = self.norm(label)
        return self.dims[i - 1, j]

    def label_of(self, root) -> tuple[int, int]:
        return self._index[tuple(int(x) for x in root)]

    def shift(self, label) -> tuple[int, int]:
        return self._shift[self.norm(label)]

    def shift_lift(self, label) -> tuple[int, int]:
        """``x[1]`` as a ZQ label ``(i', j + s)`` with ``1 <= s < h``.

        Phases satisfy ``phi(P^{j+s}_{i'}) = phi(P^j_i) + 1`` exactly when
        extended by ``phi(P^{j+h}) = phi(P^j) + 2``.
        """
        i, j = label
        i2, s = self.shift_offset[i]
        return (i2, j + s)

    def tau(self, label):
        i, j = label
        return (i, (j - 1) % self.h)

    def taubar(self, label):
        i, j = label
        return (i, (j + 1) % self.h)

    def orbit_class_sum(self, i: int) -> np.ndarray:
        return self.dims[i - 1].sum(axis=0)

    def mesh_relations(self):
        """Each mesh as ``(coefficient, label)`` pairs summing to zero on classes."""
        out = []
        for m in self.meshes:
            terms = [(1, m.start), (1, m.end)] + [(-1, x) for x in m.middles]
            out.append(terms)
        return out

    def mesh_residuals(self) -> np.ndarray:
        res = []
        for terms in self.mesh_relations():
            v = sum(c * self.dim_vector(x) for c, x in terms)
            res.append(int(np.abs(v).max()))
        return np.array(res)

    def out_arrows(self, label):
        return [y for x, y in self.arrows if x == label]

    def dump(self) -> str:
        """Text adjacency list: orbit, power, dim vector, successors."""
        lines = []
        for lab in self.labels():
            dv = " ".join(str(int(x)) for x in self.dim_vector(lab))
            succ = " ".join(f"{i}:{j}" for i, j in self.out_arrows(lab))
            lines.append(f"{lab[0]} {lab[1]} [{dv}] -> {succ}")
        return "\n".join(lines)

    # -- automorphisms -------------------------------------------------------

    def twisted_automorphism(self, perm: dict, root: int) -> dict:
        """Offsets ``d`` making ``P^j_i -> P^{j+d_i}_{perm(i)}`` an AR-quiver automorphism.

        ``perm`` must be a diagram automorphism; ``d_root = 0`` fixes the
        remaining freedom (composition with powers of tau).  Raises
        ValueError if no such offsets exist.
        """
        arrows = set(self.orientation.arrows)
        d = {root: 0}
        frontier = [root]
        while frontier:
            v = frontier.pop()
            for a, b in self.orientation.arrows:
                if v not in (a, b):
                    continue
                pa, pb = perm[a], perm[b]
                if (pa, pb) in arrows:
                    rel = 0  # d_a = d_b
                elif (pb, pa) in arrows:
                    rel = 1  # d_a = d_b + 1
                else:
                    raise ValueError("permutation is not a diagram automorphism")
                if a == v and b not in d:
                    d[b] = d[a] - rel
                    frontier.append(b)
                elif b == v and a not in d:
                    d[a] = d[b] + rel
                    frontier.append(a)
        mapped = {((perm[x[0]], (x[1] + d[x[0]]) % self.h), (perm[y[0]], (y[1] + d[y[0]]) % self.h))
                  for x, y in self.arrows}
        if mapped != set(self.arrows):
            raise ValueError("offsets do not give an automorphism")
        return {i: d[i] % self.h for i in d}

    def apply_automorphism(self, label, perm: dict, offsets: dict):
        i, j = label
        return (perm[i], (j + offsets[i]) % self.h)

    # -- named objects for E_n ---------------------------------------------

    def named(self, name: str, j: int):
        """``C_j``, ``M_j`` and ``B_j`` on the mid/near/far-end orbits (E types)."""
        o = self.orientation
        orbit = {"C": o.mid_end, "M": o.near_end, "B": o.far_end}[name]
        return (orbit, (j - 1) % self.h)


@lru_cache(maxsize=None)
def build(t: DynkinType, far_end_choice: int | None = None) -> ArQuiver:
    return ArQuiver(standard_orientation(t, far_end_choice))
