"""
Maps from Sym and to QSym
=========================

"""
from graphhopf import M, product_M
from graphhopf.graphs import LabeledGraph
from graphhopf.io import element_text
from graphhopf.sym import qsym_coproduct, qsym_specialize, qsym_specialize_tensor, sym_morphism
from graphhopf import coproduct_M


def show(terms):
    return {k: int(c) for k, c in terms.items()}


# complete functions S^I go to loops, arcs or two-vertex multigraphs
for which in ("loop", "arc12", "arc21", "gamma_pq"):
    print(which, element_text(sym_morphism(which, [2, 1])).strip().replace("\n", " | "))

# x_ij = x_i x_j sends M_G to a monomial quasi-symmetric function
arc = LabeledGraph.from_matrix([[0, 1], [0, 0]])
print(show(qsym_specialize(product_M(M([[1]]), M(arc)))))

# but it does not respect coproducts: the arc has no cut between its ends
print(show(qsym_specialize_tensor(coproduct_M(M(arc)))))
print(show(qsym_coproduct(qsym_specialize(M(arc)))))
