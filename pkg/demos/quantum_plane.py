"""The quantum plane, end to end.

Starting from A = k[x] and the automorphism sending x to p*x, the skew
extension A[z; sigma] is the quantum plane with relation z*x = p*x*z.  This
script builds the minimal free resolutions, prints the Ext-algebra of the
extension with its Yoneda products, and certifies the twisted tensor
factorization E(B) = E(k[z]) #_R E(A), including the closed-form twist.

Run:  python demos/quantum_plane.py [p]
"""

import sys
from fractions import Fraction

from extalg import (
    GradedAlgebra,
    build_cone_resolution,
    format_presentation,
    minimal_resolution,
    morphism_from_images,
    parse_presentation,
    skew_extension,
    verify_ext_factorization,
    ExtAlgebra,
)

p = Fraction(sys.argv[1]) if len(sys.argv) > 1 else Fraction(2)

pres = parse_presentation("field Q\ngens x:1\n")
A = GradedAlgebra(pres, 3)
sigma = morphism_from_images(A, A, {0: {(0,): p}}, automorphism=True)

print("base algebra: k[x];  twist: x -> %s*x" % p)
print("skew extension presentation:")
print(format_presentation(skew_extension(A, sigma, 1, "z")))

cone = build_cone_resolution(A, sigma, 1, 3, 3)
B = cone.algebra
print("cone resolution of the trivial module over B:")
for n in sorted(cone.complex.gens, reverse=True):
    if cone.complex.gens[n] or n == 0:
        print("  position %2d: generator degrees %s  labels %s"
              % (n, cone.complex.gens[n], cone.labels.get(n, [])))

EB = ExtAlgebra(B, cone.complex, 3, 3)
print("Ext dimension table of B:", EB.dimension_table())

v = EB.basis_class(1, 1, 0)  # dual to the z-part generator
u = EB.basis_class(1, 1, 1)  # dual to the x-part generator
print("Yoneda products (g*f = g after f):")
print("  u*u =", EB.multiply(u, u).vector)
print("  v*v =", EB.multiply(v, v).vector)
print("  u*v =", EB.multiply(u, v).vector, " (this is tau(u) = %s*u on the z-part)" % p)
print("  v*u =", EB.multiply(v, u).vector, " (this is (-1)^1 u on the z-part)")
print("so u*v + %s * v*u = 0: the table of k<u,v>/(u^2, v^2, vu + %s*uv)." % (p, p))

report = verify_ext_factorization(pres, {0: {(0,): p}}, 1, 3, 3)
print("\nfactorization certification:")
for c in report.checks:
    print("  %s %-12s %s" % ("PASS" if c.passed else "FAIL", c.key, c.details))
print("twist on the (u, xi) pair:",
      report.objects["R"].twist[((1, 1, 0), (1, 1, 0))],
      " (coefficient -p)")
