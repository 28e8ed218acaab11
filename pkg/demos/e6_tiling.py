"""The regular E6 dodecagon with its ice and fire cores, tiled across the plane.

The two cores are hexagons built from sums of edge pairs.  In the
regular dodecagon they are concentric regular hexagons, and translating the
dodecagon by two edge-sum vectors gives an edge-sharing tiling.

    python3 demos/e6_tiling.py [out.svg] [repetitions]
"""

import sys

import numpy as np

from stgon.dynkin import DynkinType
from stgon.hgon import build_cores, regular
from stgon.svg import RenderSpec, render, tiling_vectors


def main(out="e6_tiling.svg", reps=2):
    g = regular(DynkinType.parse("E6"))
    cores = build_cores(g)
    print(f"ice core radius {np.abs(cores.ice_vertices).mean():.6f}, "
          f"fire core radius {np.abs(cores.fire_vertices).mean():.6f}")
    a, b = tiling_vectors(g)
    print(f"lattice vectors {a:.4f}, {b:.4f}; |a| = {abs(a):.4f}")
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(render(g, RenderSpec(tiling=int(reps), layers=("edges", "cores"))))
    print(f"wrote {out}")


if __name__ == "__main__":
    main(*sys.argv[1:])
