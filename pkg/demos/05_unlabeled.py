"""
Orbit sums: the unlabeled graph algebra
=======================================

"""
from graphhopf import MM
from graphhopf.graphs import LabeledGraph
from graphhopf.io import element_text, tensor_text
from graphhopf.unlabeled import mm_coproduct, mm_expand, mm_product, unlabeled_basis

arc = LabeledGraph.from_matrix([[0, 1], [0, 0]])

# the class of an arc is the sum of its two labelings
print(element_text(mm_expand(MM(arc))))

# products and coproducts stay inside the span of orbit sums
print(element_text(mm_product(MM(arc), MM(arc))))
print(tensor_text(mm_coproduct(MM(LabeledGraph.from_matrix([[1, 1], [0, 0]])))))

print([len(unlabeled_basis(n)) for n in range(4)])
