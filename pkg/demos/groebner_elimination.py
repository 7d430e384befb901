"""Two ellipses in the plane, eliminated down to one variable."""

from cas_workbench import Ideal, Ring, format_poly, groebner
from cas_workbench.groebner import eliminate
from cas_workbench.poly import integer_normalize

R = Ring(("y", "x"))  # lex with y > x, so y gets eliminated first
y, x = R.gens()

f = 2 * x**2 - x * y + 2 * y**2 - 2
g = 2 * x**2 - 3 * x * y + 3 * y**2 - 2
print("f =", f)
print("g =", g)

basis = groebner(Ideal(R, [f, g]))
print()
print(basis.format())

# the elements free of y generate the elimination ideal
(eliminant,) = eliminate(basis, ["x"])
print()
print("eliminant:", format_poly(integer_normalize(eliminant)))

# both input polynomials reduce to 0 modulo the basis
I = Ideal(R, [f, g])
print("f in I:", f in I, " g in I:", g in I, " x in I:", x in I)
