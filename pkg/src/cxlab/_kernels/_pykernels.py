"""Pure-Python bitmask kernels.

Vertex and set families are encoded as Python ints used as bitsets, so these
work for any number of vertices.  The compiled twin in ``_ckernels.pyx`` is
restricted to 64-bit masks and exposes the same functions.
"""


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def maximal_cliques(adjacency):
    """Maximal cliques of a graph given as neighbour masks (Bron-Kerbosch, Tomita pivot).

    Returns clique masks; an isolated vertex is a singleton clique.
    """
    n = len(adjacency)
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(r)
            return
        best, pivot = -1, 0
        for u in _bits(p | x):
            c = (p & adjacency[u]).bit_count()
            if c > best:
                best, pivot = c, u
        for v in _bits(p & ~adjacency[pivot]):
            bit = 1 << v
            expand(r | bit, p & adjacency[v], x & adjacency[v])
            p &= ~bit
            x |= bit

    expand(0, (1 << n) - 1, 0)
    return out


def nerve_maximal_families(sets, cap):
    """Grow families of sets with non-empty common intersection.

    Families are extended one set at a time in increasing index order and a
    branch is dropped as soon as its intersection is empty.  Returns
    ``(maximal_family_masks, visited)`` where ``visited`` counts every
    non-empty family reached.  Raises ``OverflowError`` once more than
    ``cap`` families have been visited.
    """
    m = len(sets)
    maximal = []
    visited = 0
    stack = [(1 << i, sets[i], i) for i in range(m - 1, -1, -1)]
    while stack:
        family, inter, last = stack.pop()
        visited += 1
        if visited > cap:
            raise OverflowError(visited)
        extendable = False
        for j in range(m):
            if not (family >> j) & 1 and inter & sets[j]:
                extendable = True
                break
        if not extendable:
            maximal.append(family)
        for j in range(m - 1, last, -1):
            joint = inter & sets[j]
            if joint:
                stack.append((family | (1 << j), joint, j))
    return maximal, visited
