# coding: utf-8

# # Exact spectra, energy and checking closed forms
#
# A disjoint union of complete graphs K_a has eigenvalues a-1 (once per
# clique) and -1 (a-1 times per clique), so the spectrum is exact integer
# arithmetic. The energy is the sum of absolute eigenvalues.

# In[1]:

from commute_spectra import commuting_graph, construct, energy, graph_spectrum, numeric_spectrum, parse_spec

G = construct(parse_spec("PSL2(4)"))
spec = graph_spectrum(commuting_graph(G))
print(spec.render(), " energy", energy(spec))


# The dense eigensolver agrees once eigenvalues are clustered and snapped to
# integers.

# In[2]:

num = numeric_spectrum(commuting_graph(G))
print(num.render(), " max snap error %.1e" % num.snap_error)


# Closed forms for whole families are predictions; verification compares each
# one to the graph itself.

# In[3]:

from commute_spectra import verify_group

for text in ["D(14)", "M(5,3)", "QD(32)", "Q(12)", "Sz2", "PQ(3,7)"]:
    rep = verify_group(text)
    for row in rep.rows:
        print(f"{text:8} {row.source:28} {row.classification:14} printed={row.energy_paper} oracle={rep.energy}")


# Dicyclic and Sz(2) rows come out as PAPER_SLIP: the predicted spectrum is
# right but the printed energy is not the energy of that spectrum. The pq row
# fails outright; its printed -1 multiplicity is one too large.

# In[4]:

rep = verify_group("PQ(3,7)")
(row,) = [r for r in rep.rows if r.source == "family:pq"]
print("predicted", row.predicted_spectrum.render(), "sum of multiplicities", row.predicted_spectrum.size)
print("oracle   ", rep.spectrum.render(), "vertices", rep.vertices)
