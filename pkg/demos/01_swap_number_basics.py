"""
Swap numbers and certificates
=============================

A swap set of a graph is a dominating set D that can hand its role to a
second, disjoint dominating set D' in a single synchronized move: every
vertex of D slides along an edge to a distinct vertex of D'.  The swap
number is the smallest size of such a D, or infinity when no pair exists.
"""

from swapsets import (
    cycle_graph,
    dd_m_exact,
    path_graph,
    star_graph,
    subdivided_doubled_triangle,
    verify_certificate,
)

# The path on four vertices: ends can be covered from either neighbor, so
# {0, 2} can slide to {1, 3} and both sets dominate.
p4 = path_graph(4)
result = dd_m_exact(p4)
print("P4 swap number:", result.k)
print("  D  =", sorted(result.certificate.d))
print("  D' =", sorted(result.certificate.d_prime))
print("  matching:", result.certificate.matching)

# The claw K_{1,3} has no swap pair at all.  Its three leaves can only be
# dominated from the center, and a single center cannot sit in two
# disjoint dominating sets.
claw = star_graph(3)
print("\nK_{1,3} swap number:", dd_m_exact(claw).to_json_dict()["ddm"])

# Cycles alternate cleanly; every other vertex works.
for n in (4, 5, 6, 8):
    print(f"C{n} swap number:", dd_m_exact(cycle_graph(n)).k)

# A certificate is checkable independently of how it was found.
cert = dd_m_exact(cycle_graph(6)).certificate
print("\nC6 certificate verifies:", verify_certificate(cycle_graph(6), cert))

# A 9-vertex example: take a triangle, double every edge, then subdivide
# every edge.  Its independence number is 6, yet three tokens suffice.
nine = subdivided_doubled_triangle()
result = dd_m_exact(nine)
print("\nsubdivided doubled triangle: swap number", result.k)
print("  D  =", sorted(result.certificate.d))
print("  D' =", sorted(result.certificate.d_prime))
