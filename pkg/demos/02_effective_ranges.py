"""
Choosing a partition
====================

Each tripartition of the modes certifies decompositions up to a different
rank. The heuristic maximises the middle block, then shrinks the largest.
"""

from tensorcert.reshape import effective_range, heuristic_partition, tripartitions

shapes = [(17, 13, 13, 2), (17, 8, 3, 2), (15, 15, 11, 10), (15, 13, 9, 4), (12, 10, 7, 7)]

for dims in shapes:
    best = heuristic_partition(dims)
    cells = []
    for p in tripartitions(dims):
        mark = "*" if p == best else " "
        cells.append(f"{effective_range(dims, p):3d}{mark}")
    print(f"{str(dims):18}", " ".join(cells), "  heuristic:", best)

# A format that is far from balanced: one mode dominates the rest.
dims = (40, 3, 3, 2)
best = heuristic_partition(dims)
print(f"{dims}: heuristic {best}, range {effective_range(dims, best)}")
