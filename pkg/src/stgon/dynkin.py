"""Dynkin type metadata.

Ranks, Coxeter numbers, the fixed quiver orientations used throughout the
package, the distinguished (far/mid/near-end) vertices, and the folding data
that realizes B, C, F and G as automorphism-invariant parts of A, D, E.

Vertices are labelled ``1..n``.  An arrow ``(a, b)`` means ``a -> b``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

FAMILIES = "ABCDEFG"
SIMPLY_LACED = "ADE"


class DynkinTypeError(ValueError):
    """Raised for an inadmissible (family, rank) pair or a bad type tag."""


@dataclass(frozen=True, order=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        if fam not in FAMILIES:
            raise DynkinTypeError(f"unknown Dynkin family {fam!r}")
        if not isinstance(n, int) or n < 1:
            raise DynkinTypeError(f"rank must be a positive integer, got {n!r}")
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[fam]
        if not ok:
            raise DynkinTypeError(f"{fam}{n} is not a Dynkin type")

    @classmethod
    def parse(cls, tag: str) -> "DynkinType":
        """Parse a tag such as ``"E8"`` or ``"d5"``."""
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", str(tag))
        if not m:
            raise DynkinTypeError(f"cannot parse Dynkin type tag {tag!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def n(self) -> int:
        return self.rank

    @property
    def h(self) -> int:
        return coxeter_number(self)

    @property
    def simply_laced(self) -> bool:
        return self.family in SIMPLY_LACED

    @property
    def symmetric(self) -> bool:
        """Whether the model polygon is centrally symmetric."""
        if self.family == "E":
            return self.rank != 6
        return self.family in "BCDFG"

    @property
    def branches(self) -> tuple[int, int, int] | None:
        """Branch lengths ``(p, q, r)`` of ``T_{p,q,r}``; None if not simply-laced."""
        n = self.rank
        if self.family == "A":
            # T_{1,q,r} with q + r = n + 1; the far-end branch carries vertex 1.
            return (1, 1, n) if n >= 1 else None
        if self.family == "D":
            return (2, 2, n - 2)
        if self.family == "E":
            return (2, 3, n - 3)
        return None


def coxeter_number(t: DynkinType) -> int:
    n = t.rank
    return {
        "A": n + 1,
        "B": 2 * n,
        "C": 2 * n,
        "D": 2 * (n - 1),
        "E": {6: 12, 7: 18, 8: 30}.get(n, 0),
        "F": 12,
        "G": 6,
    }[t.family]


@dataclass(frozen=True)
class Orientation:
    """A fixed orientation of a simply-laced Dynkin diagram.

    ``far_end`` is the vertex whose tau-orbit defines the far-end polygon;
    ``fork`` lists the two remaining leaves ``(m, n)`` for type D in the
    order used by the puncture formulas.
    """

    type: DynkinType
    arrows: tuple[tuple[int, int], ...]
    far_end: int
    mid_end: int | None = None
    near_end: int | None = None
    far_end_choice: int | None = None
    fork: tuple[int, int] | None = None

    @property
    def n(self) -> int:
        return self.type.rank

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edges(self) -> list[frozenset]:
        return [frozenset(a) for a in self.arrows]

    def neighbours(self, v: int) -> list[int]:
        out = []
        for a, b in self.arrows:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return sorted(out)

    def degree(self, v: int) -> int:
        return len(self.neighbours(v))

    def leaves(self) -> list[int]:
        return [v for v in self.vertices if self.degree(v) == 1]


def far_end_choices(t: DynkinType) -> tuple[int, ...]:
    """Admissible far-end vertices, default first."""
    if t.family == "A":
        return (1,) if t.rank == 1 else (1, t.rank)
    if t.family == "D":
        return (1, 3, 4) if t.rank == 4 else (1,)
    if t.family == "E":
        return (6, 1) if t.rank == 6 else (t.rank,)
    raise DynkinTypeError(f"{t} is not simply-laced; use folding_data(t).source")


def standard_orientation(t: DynkinType, far_end_choice: int | None = None) -> Orientation:
    """The orientation fixed for each simply-laced type.

    A_n: ``i+1 -> i``.  D_n: ``i+1 -> i`` along the spine and both fork
    leaves pointing at ``n-2``.  E_n: ``2 -> 1``, ``4 -> 2``, ``4 -> 3`` and
    ``4 -> 5 -> ... -> n``.

    ``far_end_choice`` only changes the recorded far-end vertex (and, for
    D4, which two leaves play the role of the fork).
    """
    if not t.simply_laced:
        raise DynkinTypeError(f"{t} is not simply-laced; use folding_data(t).source")
    n = t.rank
    choices = far_end_choices(t)
    choice = choices[0] if far_end_choice is None else int(far_end_choice)
    if choice not in choices:
        raise DynkinTypeError(f"far-end choice {choice} not available for {t}; pick from {choices}")

    if t.family == "A":
        arrows = tuple((i + 1, i) for i in range(1, n))
        mid = n if n > 1 else None
        if choice != 1:
            mid = 1
        return Orientation(t, arrows, far_end=choice, mid_end=mid, far_end_choice=choice)

    if t.family == "D":
        spine = [(i + 1, i) for i in range(1, n - 2)]
        arrows = tuple(spine + [(n - 1, n - 2), (n, n - 2)])
        if n == 4:
            others = tuple(v for v in (1, 3, 4) if v != choice)
            return Orientation(t, arrows, far_end=choice, mid_end=others[0], near_end=others[1],
                               far_end_choice=choice, fork=others)
        return Orientation(t, arrows, far_end=1, mid_end=n - 1, near_end=n,
                           far_end_choice=1, fork=(n - 1, n))

    # E_n
    arrows = [(2, 1), (4, 2), (4, 3)] + [(i, i + 1) for i in range(4, n)]
    mid = 1 if choice == n else n
    return Orientation(t, tuple(arrows), far_end=choice, mid_end=mid, near_end=3,
                       far_end_choice=choice)


@dataclass(frozen=True)
class FoldingData:
    """A non-simply-laced type as the invariant part of ``source`` under ``iota``.

    ``orbits[k]`` is the tuple of source vertices folded into vertex ``k+1``
    of the target; ``weights[k]`` is its size.
    """

    target: DynkinType
    source: DynkinType
    iota: dict = field(hash=False, compare=False)
    orbits: tuple[tuple[int, ...], ...] = ()

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(len(o) for o in self.orbits)


def folding_data(t: DynkinType) -> FoldingData | None:
    """Folding data for B/C/F/G; None for simply-laced types.

    B2 = C2 is read through the C table (source A3).
    """
    n = t.rank
    if t.simply_laced:
        return None
    if t.family == "B" and n >= 3:
        src = DynkinType("D", n + 1)
        iota = {v: v for v in range(1, n + 2)}
        iota[n], iota[n + 1] = n + 1, n
        orbits = tuple((v,) for v in range(1, n)) + ((n, n + 1),)
        return FoldingData(t, src, iota, orbits)
    if t.family in "BC":
        src = DynkinType("A", 2 * n - 1)
        iota = {v: 2 * n - v for v in range(1, 2 * n)}
        orbits = tuple((k, 2 * n - k) for k in range(1, n)) + ((n,),)
        return FoldingData(t, src, iota, orbits)
    if t.family == "F":
        src = DynkinType("E", 6)
        iota = {1: 6, 6: 1, 2: 5, 5: 2, 3: 3, 4: 4}
        orbits = ((3,), (4,), (2, 5), (1, 6))
        return FoldingData(t, src, iota, orbits)
    # G2
    src = DynkinType("D", 4)
    iota = {1: 3, 3: 4, 4: 1, 2: 2}
    orbits = ((2,), (1, 3, 4))
    return FoldingData(t, src, iota, orbits)


def source_type(t: DynkinType) -> DynkinType:
    """``t`` itself when simply-laced, otherwise its folding source."""
    fd = folding_data(t)
    return t if fd is None else fd.source


def info(t: DynkinType) -> dict:
    """Summary used by ``stgon info``."""
    out = {
        "type": str(t),
        "rank": t.rank,
        "coxeter_number": t.h,
        "symmetric": t.symmetric,
    }
    fd = folding_data(t)
    if fd is None:
        o = standard_orientation(t)
        out.update(branches=t.branches, far_end=o.far_end, mid_end=o.mid_end,
                   near_end=o.near_end, far_end_choices=far_end_choices(t))
    else:
        o = standard_orientation(fd.source)
        out.update(folded_from=str(fd.source), weights=fd.weights,
                   far_end=o.far_end, mid_end=o.mid_end, near_end=o.near_end)
    return out
