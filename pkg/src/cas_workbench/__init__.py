"""A small computer-algebra workbench.

Exact polynomial arithmetic over the rationals, lex Groebner bases and
elimination, certified real solving in boxes, and permutation groups, all
reachable from a Singular/GAP-flavoured session language.
"""

from .errors import WorkbenchError
from .groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    eliminate,
    format_basis,
    groebner,
    ideal_contains,
    normal_form,
    reduce_basis,
    spoly,
)
from .interval import Box, Interval, eval_on_box, interval_arith
from .permgroup import Group, Permutation, compose, enumerate_group, group_order, inverse, orbit, parse_cycles, stabilizer_gens
from .poly import (
    Polynomial,
    Ring,
    Term,
    add_poly,
    compare_monomials,
    derivative,
    evaluate,
    format_poly,
    integer_normalize,
    lead_term,
    monomial_divides,
    monomial_lcm,
    monomial_quotient,
    mul_poly,
    squarefree_part,
    univariate_gcd,
)
from .solve import count_roots, isolate_roots, refine_box, solve_system, sturm_chain

__version__ = "0.1.0"
