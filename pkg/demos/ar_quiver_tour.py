"""A tour of the polygon model and its Auslander-Reiten quiver.

The category with 3 simples at weight 2 lives on a 10-gon.  This script
lists its 15 indecomposable objects, draws the AR quiver as DOT, and
shows the mesh relation between arrows and the translate.
"""

from negcluster import build_ar_quiver, enumerate_indecomposables, make_category
from negcluster.render import export_dot_ar_quiver

params = make_category(rank=3, weight=2)
print(f"polygon size N = {params.polygon_size}")

objects = enumerate_indecomposables(params)
print(f"{len(objects)} indecomposable objects (admissible diagonals):")
print("  " + " ".join(f"{d.lo}{d.hi}" for d in objects))

quiver = build_ar_quiver(params)
print(f"\nAR quiver: {len(quiver.vertices)} vertices, {len(quiver.arrows)} arrows")
for source, target in quiver.arrows:
    print(f"  {source.lo}{source.hi} -> {target.lo}{target.hi}")

print("\nmesh relation: for every arrow a -> b there is an arrow tau(b) -> a")
a, b = quiver.arrows[0]
tb = quiver.translate[b]
print(f"  example: {a.lo}{a.hi} -> {b.lo}{b.hi} pairs with "
      f"{tb.lo}{tb.hi} -> {a.lo}{a.hi}: {(tb, a) in set(quiver.arrows)}")

with open("ar_quiver_e3_w2.gv", "w") as handle:
    handle.write(export_dot_ar_quiver(quiver))
print("\nwrote ar_quiver_e3_w2.gv (render with: dot -Tpng -O ar_quiver_e3_w2.gv)")
