"""
Graded dimensions three ways
============================

"""
from graphhopf.enumeration import (
    dimension_table,
    dimensions_from_irreducibles,
    inclusion_exclusion_count,
    irreducibles_from_dimensions,
)

# enumeration, exact series, irreducibles and unlabeled classes
for row in dimension_table(3):
    print(row)

# the series and inclusion-exclusion go further cheaply
dims = [inclusion_exclusion_count(n) for n in range(7)]
print(dims)

# generators of the free dual, and back again
irr = irreducibles_from_dimensions(dims)
print(irr)
print([dimensions_from_irreducibles(irr, n) for n in range(7)] == dims)
