# coding: utf-8

# # When is the commuting graph a union of cliques?
#
# If every non-central centralizer is abelian (an AC-group) the commuting graph
# falls apart into complete graphs, one per distinct centralizer. Symmetric
# groups of degree 4 and up are the standard counterexamples.

# In[1]:

from commute_spectra import (
    centralizer_partition,
    clique_decomposition,
    commuting_graph,
    construct,
    is_ac_group,
    parse_spec,
)

for text in ["D(10)", "Q(12)", "G16(SG16_3)", "GL2(3)", "S(4)", "S(5)"]:
    G = construct(parse_spec(text))
    dec = clique_decomposition(commuting_graph(G))
    print(f"{text:12} AC={is_ac_group(G)!s:5} cliques={dec.is_clique_union!s:5} components={dec.component_sizes[:8]}")


# For an AC-group the component sizes are |C| - |Z| for each distinct
# centralizer C.

# In[2]:

G = construct(parse_spec("GL2(3)"))
part = centralizer_partition(G)
print("|Z| =", len(part.center), " distinct centralizers:", part.n)
print(sorted((s - len(part.center) for s in part.sizes), reverse=True))
print(clique_decomposition(commuting_graph(G)).component_sizes)


# The sum of centralizer orders over non-central elements only depends on
# |G|, the class number and the center.

# In[3]:

from commute_spectra import noncentral_centralizer_sum

for text in ["S(3)", "S(4)", "S(5)", "PSL2(8)", "AP(1,3)"]:
    G = construct(parse_spec(text))
    print(text, noncentral_centralizer_sum(G))
