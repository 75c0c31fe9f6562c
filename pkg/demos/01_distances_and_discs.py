"""
Distances and discs under neighbourhood sequences
=================================================

A neighbourhood sequence alternates between 4-neighbour steps (value 1) and
8-neighbour steps (value 2). Mixing the two produces octagonal discs.
"""

from nsdisc import NeighbourhoodSequence, generate_disc, ns_distance, ns_distance_bfs
from nsdisc.raster_io import render_ascii

# The two classical metrics are the constant sequences.
city_block = NeighbourhoodSequence.constant(1)
chessboard = NeighbourhoodSequence.constant(2)
print("city block  (0,0)->(3,2):", ns_distance((0, 0), (3, 2), city_block))
print("chessboard  (0,0)->(3,2):", ns_distance((0, 0), (3, 2), chessboard))

# Alternating 1,2,1,2,... gives the octagonal distance. The closed form is
# checked against breadth-first search.
octagonal = NeighbourhoodSequence.periodic(1, 2)
print("octagonal   (0,0)->(4,3):", ns_distance((0, 0), (4, 3), octagonal),
      "bfs:", ns_distance_bfs((0, 0), (4, 3), octagonal))

# Two radius-4 discs: the labels are distances from the centre.
for values in [(1, 1, 2, 1), (2, 2, 2, 1)]:
    disc = generate_disc((0, 0), 4, NeighbourhoodSequence.periodic(*values))
    print(f"\nB = {values}, {len(disc)} points")
    print(render_ascii(disc))

# Only the multiset of the first k values matters for the disc's shape.
a = generate_disc((0, 0), 3, NeighbourhoodSequence.constant(1, (2, 1, 1)))
b = generate_disc((0, 0), 3, NeighbourhoodSequence.constant(1, (1, 1, 2)))
print("same support after permuting:", a.points == b.points)
