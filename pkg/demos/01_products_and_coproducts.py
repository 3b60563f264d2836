"""
Products, coproducts and the antipode on labeled graphs
========================================================

"""
from graphhopf import M, antipode_M, coproduct_M, product_M
from graphhopf.io import element_text, tensor_text
from graphhopf.realization import expand, oracle_structure_constants

# a loop on one vertex, and an arc 1 -> 2
loop = M([[1]])
arc = M([[0, 1], [0, 0]])

# the product superposes the two graphs in every order-preserving way
print("M_loop * M_loop")
print(element_text(product_M(loop, loop)))
print("M_loop * M_arc")
print(element_text(product_M(loop, arc)))

# the same constants come out of the polynomial realization
# (the loop in three variables is x11 + x22 + x33)
print(expand([*loop.terms][0], 3))
print(oracle_structure_constants([*loop.terms][0], [*arc.terms][0]) == product_M(loop, arc).terms)

# the coproduct cuts the vertex line wherever no edge crosses
print(tensor_text(coproduct_M(M([[1, 0], [0, 1]]))))

# antipode, by the graded recursion
print(element_text(antipode_M(M([[1, 0], [0, 1]]))))
