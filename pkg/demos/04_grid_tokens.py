"""
Grids: tokens on a diagonal lattice
===================================

The infinite grid is dominated perfectly, each vertex exactly once, by the
diagonal congruence 2y = x + 2t (mod 5).  Placing tokens on that pattern
and sliding them all one column sideways turns a finite grid into a swap
certificate at density about one fifth, boundary effects aside.
"""

from swapsets import (
    gamma_grid_dp,
    grid_density_report,
    grid_swap_construct,
    p3_strip_swap,
    perfect_dom_member,
    verify_certificate,
)

# The five shifted diagonal patterns, drawn on a small window.
for t in range(2):
    print(f"pattern t={t}:")
    for y in range(4, -1, -1):
        print("  " + "".join("#" if perfect_dom_member(x, y, t) else "."
                             for x in range(15)))

# A 12 x 10 grid: black tokens slide right, white tokens slide left.
g, cert, board = grid_swap_construct(12, 10)
print("\n12 x 10 grid, certificate size", cert.size())
print(board.render())
print("verifies:", verify_certificate(g, cert))

# Size scales like mn/5 plus boundary padding; the guaranteed ceiling is
# (n+2)(m+3)/5.
print("\n  m  n   size  mn/5  ceiling")
for m, n in ((8, 8), (16, 12), (25, 20), (30, 30)):
    _, cert, _ = grid_swap_construct(m, n)
    print(f" {m:3} {n:2} {cert.size():5}  {m * n / 5:5.1f}  "
          f"{(n + 2) * (m + 3) // 5:5}")

# Narrow strips are the tight case: on 3 x (4k+1) strips the swap number
# exceeds the domination number by exactly one.
print()
for k in (3, 5, 10):
    cols = 4 * k + 1
    _, cert = p3_strip_swap(k)
    gamma = gamma_grid_dp(3, cols)
    print(f"3 x {cols}: domination {gamma}, swap certificate {cert.size()}")

# The density report collects the same numbers as a table.
print("\n" + grid_density_report(10).to_tsv())
