"""
The dual algebra: concatenation and irreducible factors
=======================================================

"""
from graphhopf import S, coproduct_S, pairing, product_M, product_S, M
from graphhopf.graphs import LabeledGraph, factor_irreducible, format_graph
from graphhopf.io import element_text, tensor_text

loop = LabeledGraph.from_matrix([[1]])
arc = LabeledGraph.from_matrix([[0, 1], [0, 0]])

# S^G * S^H is the concatenated graph
print(element_text(product_S(S(loop), S(arc))))

# its coproduct reads off the product constants of the M basis
print(tensor_text(coproduct_S(S([[0, 1], [1, 0]]))))

# pairing check: <S^G, M_H M_K> equals the coefficient of M_G
g = LabeledGraph.from_matrix([[1, 0], [0, 1]])
print(pairing(S(g), product_M(M(loop), M(loop))))

# every graph factors uniquely into irreducible pieces
h = LabeledGraph.from_matrix([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 2]])
print(format_graph(h), "=", " . ".join(format_graph(f) for f in factor_irreducible(h)))
