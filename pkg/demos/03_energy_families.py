"""
Energy families from paired branches
====================================

A (p + 1)-dimensional module needs Phi to vanish at the bottom and
just above the top of the ladder.  Pairing two roots of Phi and
demanding they sit exactly p + 1 steps apart pins the energy as a
closed-form function of p: each ordered pair of branches yields one
family.  Two pairs differ by a constant instead, so they only close
at isolated p (the pinned pairs below).
"""

from cubicalg import spectrum

sf = spectrum.q5_structure_function()
branches, families, pinned = spectrum.energy_families(sf.phi)

print("found %d families:" % len(families))
for fam in families:
    roots = ", ".join(r.format() for r in sorted(
        fam.roots, key=lambda r: r.format()))
    print()
    print("  E(p) =", fam.energy.format())
    print("  lowest weight u =", fam.lowest.format())
    print("  Phi roots in x: {%s}" % roots)

print()
print("pinned pairs (close only at one p):")
for pair in pinned:
    print("  %s and %s at p = %d" % (
        branches[pair.start].root.format(),
        branches[pair.end].root.format(),
        pair.p,
    ))

# one family carries the root p + 2; reference values print p - 2
# there, which fails the truncation identity the derivation enforces
