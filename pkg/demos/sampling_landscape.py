"""How often perturbed polygons stay stable, and where totality and stability part ways.

Polygons are sampled around the regular one at growing perturbation sizes.
For each sample the geometric test (convexity plus containment of punctures
or cores) is compared with the algebraic one (phases increase along every
AR arrow).  The E7 and E8 rows show the samples where the geometric test
passes but totality fails; the core triangle margin column shows that those
samples all have a negative margin.

    python3 demos/sampling_landscape.py [samples-per-magnitude]
"""

import sys

import numpy as np

from stgon.dynkin import DynkinType
from stgon.hgon import core_triangle_margin, is_stable, sample_near_regular
from stgon.tost import tost_pipeline


def main(n=100):
    n = int(n)
    print(f"{'type':5} {'mag':>5} {'stable':>7} {'total':>6} {'disagree':>8} {'min gldim':>10}")
    for tag in ["A5", "D6", "E6", "E7", "E8"]:
        t = DynkinType.parse(tag)
        for mag in (0.05, 0.2, 0.4):
            stable = total = disagree = 0
            gd, odd = [], []
            for s in range(n):
                g = sample_near_regular(t, mag, [s])
                a = is_stable(g).is_stable
                _, _, rep = tost_pipeline(g)
                stable += a
                total += rep.is_total
                disagree += a != rep.is_total
                if rep.is_total:
                    gd.append(rep.gldim)
                if a != rep.is_total and t.family == "E":
                    odd.append(core_triangle_margin(g))
            low = f"{min(gd):.4f}" if gd else "-"
            print(f"{tag:5} {mag:5.2f} {stable:7d} {total:6d} {disagree:8d} {low:>10}")
            if odd:
                print(f"      core triangle margins of the disagreeing samples: "
                      f"max {np.max(odd):.2e}")


if __name__ == "__main__":
    main(*sys.argv[1:])
