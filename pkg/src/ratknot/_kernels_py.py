"""Pure-Python state-sum kernel; same contract as the compiled ``_kernels``."""


def state_histogram(n_arcs, corners):
    """Count Kauffman states by (number of A-smoothings, number of loops).

    ``corners`` is a flat list of arc ids, four per crossing in counterclockwise
    order starting on the under-strand.  The A-smoothing joins corners 0-1 and
    2-3, the B-smoothing joins 0-3 and 1-2.  Returns ``hist`` with
    ``hist[a][loops]`` states.
    """
    nc = len(corners) // 4
    hist = [[0] * (n_arcs + 1) for _ in range(nc + 1)]
    for state in range(1 << nc):
        parent = list(range(n_arcs))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        loops = n_arcs
        n_a = 0
        for k in range(nc):
            a, b, c, d = corners[4 * k:4 * k + 4]
            if state >> k & 1:
                n_a += 1
                pairs = ((a, b), (c, d))
            else:
                pairs = ((a, d), (b, c))
            for x, y in pairs:
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[rx] = ry
                    loops -= 1
        hist[n_a][loops] += 1
    return hist
