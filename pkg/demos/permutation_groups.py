"""Rotations of a cube, acting on its six faces."""

from cas_workbench import Group
from cas_workbench.permgroup import enumerate_group, format_elements

# faces 1..4 around the middle, 5 on top, 6 at the bottom
G = Group.from_cycles("(5,6)", "(1,2,3,4)", "(2,5,4,6)")
print(G)
print("order:", G.order())

# orbit times stabilizer, point by point
for p in range(1, 7):
    stab = G.stabilizer(p)
    print(f"point {p}: orbit {sorted(G.orbit(p))}, |stab| = {stab.order()}")

elements = enumerate_group(G)
print(len(elements), "elements, e.g.", format_elements(sorted(elements)[:5]))

# the symmetric group on the 4 vertices of a tetrahedron
S4 = Group.from_cycles("(1,2)", "(1,2,3,4)")
print("tetrahedron:", S4.order())
