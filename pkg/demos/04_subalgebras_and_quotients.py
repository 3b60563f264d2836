"""
Sub-Hopf algebras and quotients by forbidden patterns
=====================================================

"""
from graphhopf import M, product_M
from graphhopf.io import element_text, tensor_text
from graphhopf.structures import PRESETS, in_ideal, quotient_basis, quotient_coproduct, quotient_product

simple = PRESETS["simple"]
loop = M([[1]])

# in the full algebra the square of a loop has a double loop
print(element_text(product_M(loop, loop)))
# modulo multi-edges it is gone
print(element_text(quotient_product(loop, loop, simple)))

# which degree-2 graphs survive
for g in quotient_basis(2, simple)[:5]:
    print(g, in_ideal(g, simple))
print(len(quotient_basis(2, simple)), "simple graphs of degree 2")

# coproduct in the quotient
print(tensor_text(quotient_coproduct(M([[0, 1, 0], [0, 0, 0], [0, 1, 0]]), simple)))
