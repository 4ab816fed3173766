"""
The d=5 example from start to finish
====================================

Fixed point v = (1,2,3,4,5), Schubert variety indexed by w = (3,4,5,9,10).
The ten chart coordinates are named a..j.
"""

from orthocone import IsotropicIndex, SimplicialComplex, generators, ring_for
from orthocone.algebra import buchberger, initial_ideal, initial_term, make_order

v = IsotropicIndex.of((1, 2, 3, 4, 5))
w = IsotropicIndex.of((3, 4, 5, 9, 10))
ring = ring_for(v, aliases=True)

# The ideal is cut out by one quadratic Pfaffian for each tau >= v with tau not <= w.
gens = generators(v, w, ring)
hlex = make_order("hlex", ring)
for f in gens:
    print("generator", f.format(hlex))

# Their initial terms alone do not generate the initial ideal.
print("leading terms:", [ring.format_monomial(initial_term(hlex, f)[1]) for f in gens])

G = buchberger(gens, hlex)
print(f"reduced Groebner basis has {len(G)} elements")
for g in G:
    print("  ", g.format(hlex))

# A cubic element appears; its leading monomial is square-free, like all the others.
ideal = initial_ideal(G, hlex)
print("initial ideal:", ideal, "square-free:", ideal.is_squarefree())

# The other two term orders land on the same monomial ideal.
for kind in ("rlex", "diagproj"):
    other = initial_ideal(buchberger(gens, make_order(kind, ring)), make_order(kind, ring))
    print(kind, "agrees:", other == ideal)

# Read the initial ideal as a Stanley-Reisner complex on the ten variables.
K = SimplicialComplex.from_initial_ideal(ideal)
print("f-vector:", K.f_vector())
for facet in K.ordered_facets():
    print("facet", "".join(ring.names[ring.index(x)] for x in facet))
