"""One D4 charge read through its three far ends.

The three leaves of D4 are interchangeable, so a single total stability
condition gives three hexagons, one for each leaf taken as the far end.
Each hexagon is stable and each gives back the same charge.

    python3 demos/d4_three_choices.py [out.svg]
"""

import sys

import numpy as np

from stgon.charge import charge_from_hgon, farend_polygon, quiver_for
from stgon.dynkin import DynkinType
from stgon.hgon import is_stable, sample_near_regular
from stgon.svg import RenderSpec, render_panels
from stgon.tost import roundtrip_zh


def main(out="d4_panels.svg"):
    t = DynkinType.parse("D4")
    g = sample_near_regular(t, 0.15, [7])
    Z = charge_from_hgon(g)
    polys = []
    for c in (1, 3, 4):
        q = quiver_for(t, c)
        p = farend_polygon(Z, q)
        back = charge_from_hgon(p, q).label_values(q)
        err = np.abs(back - Z.label_values(q)).max()
        print(f"far end {c}: stable {is_stable(p).is_stable}, "
              f"punctures {p.punctures[0]:.4f}, charge recovered to {err:.1e}, "
              f"round trip {roundtrip_zh(p):.1e}")
        polys.append(p)
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(render_panels(polys, RenderSpec(layers=("edges", "diagonals", "punctures"))))
    print(f"wrote {out}")


if __name__ == "__main__":
    main(*sys.argv[1:])
