"""Certified boxes around the four intersection points of two ellipses."""

from fractions import Fraction

from cas_workbench import Ideal, Ring
from cas_workbench.interval import eval_on_box
from cas_workbench.solve import format_boxes, isolate_roots, refine_box, solve_system, triangular_form

R = Ring(("y", "x"))
y, x = R.gens()
ellipses = [2 * x**2 - x * y + 2 * y**2 - 2, 2 * x**2 - 3 * x * y + 3 * y**2 - 2]
I = Ideal(R, ellipses)

# lex basis is triangular: one polynomial in x, one linear in y
system = triangular_form(I)
print("eliminant:", system.eliminant)
for iv in isolate_roots(system.eliminant, Fraction(1, 16)):
    print("  root of eliminant in", iv)

boxes = solve_system(I, Fraction(1, 1024))
print()
print(format_boxes(boxes, R.names))

# every box is certified: both ellipses can vanish there
for box in boxes:
    assert all(eval_on_box(p, box).contains_zero() for p in ellipses)

# shrink one box further on demand
fine = refine_box(I, boxes[0], Fraction(1, 10**6))
print()
print("refined first box:", [str(iv) for iv in fine])
