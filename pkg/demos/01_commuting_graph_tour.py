# coding: utf-8

# # A first look at commuting graphs
#
# The commuting graph of a non-abelian group G has the non-central elements as
# vertices, with an edge between x and y whenever xy = yx. We start with the
# dihedral group of order 8.

# In[1]:

import numpy as np

from commute_spectra import commuting_graph, construct, parse_spec

G = construct(parse_spec("D(8)"))
print(G.name, "order", G.order)
print("center:", [G.labels[i] for i in G.center])


# Every element is stored as an index; the identity is always 0. With a
# Cayley table available, multiplication is a lookup.

# In[2]:

print(G.table.shape)
print(G.table[:4, :4])


# In[3]:

gamma = commuting_graph(G)
print(gamma.dump())


# The adjacency matrix is stored bit-packed and expanded on demand.

# In[4]:

A = gamma.adjacency
print(A.astype(int))
print("edges:", gamma.edge_count, "=", A.sum() // 2)


# Eigenvalues straight from numpy. Six vertices pair off into three disjoint
# edges, so +1 and -1 each appear three times.

# In[5]:

print(np.round(np.linalg.eigvalsh(A.astype(float)), 12))


# Larger groups: the alternating group A5 appears as PSL(2,4).

# In[6]:

A5 = construct(parse_spec("PSL2(4)"))
g5 = commuting_graph(A5)
print(A5.order, "elements,", len(g5.vertices), "vertices,", g5.edge_count, "edges")
