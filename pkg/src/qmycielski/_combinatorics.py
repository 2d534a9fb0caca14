"""Exact classical colouring and clique search on small graphs (bitset based).

Graphs are given as a vertex count and an edge list on ``0..n-1``.  All
searches use fixed tie-breaking, so results are reproducible.
"""


def neighbour_masks(n, edges):
    nb = [0] * n
    for u, v in edges:
        nb[u] |= 1 << v
        nb[v] |= 1 << u
    return nb


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def dsatur_greedy(n, nb):
    """Greedy DSATUR colouring; returns a list of colours (0-based)."""
    color = [-1] * n
    sat = [0] * n
    deg = [bin(m).count("1") for m in nb]
    for _ in range(n):
        v = max(
            (u for u in range(n) if color[u] < 0),
            key=lambda u: (bin(sat[u]).count("1"), deg[u], -u),
        )
        c = 0
        while sat[v] >> c & 1:
            c += 1
        color[v] = c
        for w in _bits(nb[v]):
            sat[w] |= 1 << c
    return color


def k_coloring(n, nb, k, start=None):
    """A proper colouring with at most ``k`` colours, or ``None``.

    DSATUR branching with forward checking; colours are introduced in
    first-use order, which removes colour permutation symmetry.
    """
    if n == 0:
        return []
    if k <= 0:
        return None
    color = [-1] * n
    # cnt[v][c]: number of coloured neighbours of v with colour c
    cnt = [[0] * k for _ in range(n)]
    sat = [0] * n
    full = (1 << k) - 1
    deg = [bin(m).count("1") for m in nb]

    def pick():
        best, key = -1, None
        for u in range(n):
            if color[u] < 0:
                kk = (bin(sat[u]).count("1"), deg[u])
                if key is None or kk > key:
                    best, key = u, kk
        return best

    def assign(v, c):
        color[v] = c
        ok = True
        for w in _bits(nb[v]):
            cnt[w][c] += 1
            if cnt[w][c] == 1:
                sat[w] |= 1 << c
                if color[w] < 0 and sat[w] == full:
                    ok = False
        return ok

    def unassign(v, c):
        color[v] = -1
        for w in _bits(nb[v]):
            cnt[w][c] -= 1
            if cnt[w][c] == 0:
                sat[w] &= ~(1 << c)

    def rec(done, used):
        if done == n:
            return True
        v = pick()
        limit = min(k, used + 1)
        for c in range(limit):
            if sat[v] >> c & 1:
                continue
            if assign(v, c) and rec(done + 1, max(used, c + 1)):
                return True
            unassign(v, c)
        return False

    used = 0
    done = 0
    # pre-colour a clique: fixes symmetry without loss of generality
    for i, v in enumerate(start or ()):
        if i >= k:
            return None
        assign(v, i)
        used = i + 1
        done += 1
    if rec(done, used):
        return list(color)
    return None


def max_clique(n, nb):
    """Maximum clique via branch and bound with a greedy colouring bound."""
    best = []

    def colour_order(cand):
        # greedy sequential colouring; returns vertices and their colour bounds
        order, bounds = [], []
        uncol = cand
        c = 0
        while uncol:
            c += 1
            q = uncol
            while q:
                v = (q & -q).bit_length() - 1
                q &= ~(1 << v)
                q &= ~nb[v]
                uncol &= ~(1 << v)
                order.append(v)
                bounds.append(c)
        return order, bounds

    def expand(clique, cand):
        nonlocal best
        order, bounds = colour_order(cand)
        for i in range(len(order) - 1, -1, -1):
            if len(clique) + bounds[i] <= len(best):
                return
            v = order[i]
            new = cand & nb[v]
            clique.append(v)
            if new:
                expand(clique, new)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    if n:
        expand([], (1 << n) - 1)
    return sorted(best)


def chromatic_number(n, edges):
    """Exact chromatic number and a witnessing colouring."""
    if n == 0:
        return 0, []
    nb = neighbour_masks(n, edges)
    upper = dsatur_greedy(n, nb)
    ub = max(upper) + 1
    clique = max_clique(n, nb)
    for k in range(max(len(clique), 1), ub):
        col = k_coloring(n, nb, k, start=clique)
        if col is not None:
            return k, col
    return ub, upper


def is_proper(nb, color):
    return all(color[u] != color[v] for u in range(len(nb)) for v in _bits(nb[u]))
