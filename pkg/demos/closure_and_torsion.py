"""From a simple minded system to its abelian subcategory.

Starting from the system {35, 16, 79} on the 10-gon, compute its
extension closure (an abelian category whose simples are the three
diagonals), inspect composition series, split it along a torsion pair,
and render the picture as SVG.
"""

from negcluster import (
    Diagonal,
    extension_closure,
    gabriel_quiver,
    make_category,
    make_sms,
    torsion_pair,
)
from negcluster.render import export_svg_closure

D = Diagonal
params = make_category(rank=3, weight=2)
system = make_sms([D(3, 5), D(1, 6), D(7, 9)], params)
print("system:", " ".join(f"{d.lo}{d.hi}" for d in system.simples))

closure = extension_closure(system)
print("\nextension closure members:")
for member in closure.members:
    factors = closure.factors[member]
    series = " + ".join(f"{f.lo}{f.hi}" for f in sorted(factors.elements()))
    record = closure.records.get(member)
    built = (
        f"  (extension of {record[1].lo}{record[1].hi} by {record[0].lo}{record[0].hi})"
        if record
        else ""
    )
    print(f"  {member.lo}{member.hi}: length {closure.depth(member)}, factors {series}{built}")

print("\nGabriel quiver arrow counts (rows/columns follow the sorted simples):")
for row in gabriel_quiver(system):
    print("  ", row)

pair = torsion_pair(closure, [D(3, 5)])
fmt = lambda ds: "{" + ", ".join(f"{d.lo}{d.hi}" for d in sorted(ds)) + "}"
print(f"\ntorsion pair at 35: T = {fmt(pair.torsion)}, F = {fmt(pair.free)}")
for member, ses in pair.mixed.items():
    print(
        f"  mixed {member.lo}{member.hi} with sequence "
        f"{ses[0].lo}{ses[0].hi} -> {member.lo}{member.hi} -> {ses[1].lo}{ses[1].hi}"
    )

with open("closure_e3_w2.svg", "w") as handle:
    handle.write(export_svg_closure(closure))
print("\nwrote closure_e3_w2.svg (solid = simples, dashed = other members)")
