"""Regular polygons, their charges and the Coxeter-plane projection of the roots.

For each simply-laced type the regular h-gon is the most symmetric stable
polygon.  Its charges coincide with the projections of the roots onto the
Coxeter plane once one point is aligned.  This script prints the match
distance and the global dimension and writes one SVG overlay per type.

    python3 demos/gepner_overlay.py [output-dir]
"""

import sys
from pathlib import Path

from stgon.dynkin import DynkinType
from stgon.svg import RenderSpec, render
from stgon.tost import coxeter_alignment, gepner


def main(out="gepner_svgs"):
    out = Path(out)
    out.mkdir(exist_ok=True)
    for tag in ["A4", "D5", "E6", "E7", "E8"]:
        t = DynkinType.parse(tag)
        g, Z, p = gepner(t)
        dist, dots = coxeter_alignment(t)
        path = out / f"gepner_{tag}.svg"
        path.write_text(render(g, RenderSpec(), dots=dots))
        print(f"{tag}: h={t.h} roots={len(dots)} match distance {dist:.1e} "
              f"gldim {1 - 2 / t.h:.4f} -> {path}")


if __name__ == "__main__":
    main(*sys.argv[1:])
