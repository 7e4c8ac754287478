"""Pure-Python hot loops. ``_ckernels.pyx`` mirrors these function for function."""

from itertools import permutations


def alternation(a, b, cap=-1):
    """Greedy length of the longest alternation a1 < b1 < a2 < ... over A\\B, B\\A.

    ``a`` and ``b`` are strictly increasing index sequences. Scanning stops
    once ``cap`` is reached (``cap < 0`` means no cap).
    """
    i = j = 0
    la, lb = len(a), len(b)
    want_a = True
    count = 0
    while i < la or j < lb:
        if j >= lb or (i < la and a[i] < b[j]):
            if want_a:
                count += 1
                want_a = False
            i += 1
        elif i >= la or b[j] < a[i]:
            if not want_a:
                count += 1
                want_a = True
            j += 1
        else:
            i += 1
            j += 1
            continue
        if count == cap:
            break
    return count


def first_violation(edges, twice_l):
    """First ordered pair ``(ia, ib)`` with alternation >= twice_l, else None."""
    need_a = (twice_l + 1) // 2
    need_b = twice_l // 2
    m = len(edges)
    for ia in range(m):
        a = edges[ia]
        if len(a) < need_a:
            continue
        for ib in range(m):
            if ib == ia:
                continue
            b = edges[ib]
            if len(b) < need_b:
                continue
            if alternation(a, b, twice_l) >= twice_l:
                return ia, ib
    return None


def lex_least_coloring(n, c, edges):
    """Lexicographically least proper c-coloring (edges of size >= 2), or None."""
    by_last = [[] for _ in range(n)]
    for e in edges:
        by_last[e[-1]].append(e)
    colors = [-1] * n
    v = 0
    while 0 <= v < n:
        colors[v] += 1
        if colors[v] >= c:
            colors[v] = -1
            v -= 1
            continue
        cv = colors[v]
        ok = True
        for e in by_last[v]:
            for u in e:
                if colors[u] != cv:
                    break
            else:
                ok = False
                break
        if ok:
            v += 1
    if v < 0:
        return None
    return colors


def first_free_order(n, edges, twice_l):
    """First permutation (lexicographic) under which no (AB)^l pattern exists."""
    for perm in permutations(range(n)):
        pos = [0] * n
        for k, v in enumerate(perm):
            pos[v] = k
        relabeled = [sorted(pos[v] for v in e) for e in edges]
        if first_violation(relabeled, twice_l) is None:
            return list(perm)
    return None


def sign_changes(x1, y1, x2, y2):
    """Proper crossings of two integer polylines with horizontal tails; -1 on overlap.

    Sorted grid walk: at every breakpoint of either curve, the sign of
    ``c1 - c2`` is found by cross-multiplication against the other curve's
    segment, so no division is needed.
    """
    n1, n2 = len(x1), len(x2)
    if not n1 and not n2:
        return -1 if y1[0] == y2[0] else 0
    i = j = 0
    prev = 0
    zero = False
    count = 0
    first = True
    while i < n1 or j < n2:
        if j >= n2 or (i < n1 and x1[i] < x2[j]):
            s = _side(x1[i], y1[i], x2, y2, j, n2)
            i += 1
        elif i >= n1 or x2[j] < x1[i]:
            s = -_side(x2[j], y2[j], x1, y1, i, n1)
            j += 1
        else:
            d = y1[i] - y2[j]
            s = (d > 0) - (d < 0)
            i += 1
            j += 1
        if s == 0:
            if zero or first:
                return -1
            zero = True
            continue
        if not first and s != prev:
            count += 1
        prev = s
        zero = False
        first = False
    return -1 if zero else count


def _side(x, y, xs, ys, k, n):
    """Sign of y minus the other curve's height at x; xs[k] is its first breakpoint right of x."""
    if k == 0:
        d = y - ys[0]
    elif k == n:
        d = y - ys[n - 1]
    else:
        x0, y0, x1, y1 = xs[k - 1], ys[k - 1], xs[k], ys[k]
        d = (y - y0) * (x1 - x0) - (y1 - y0) * (x - x0)
    return (d > 0) - (d < 0)


def eliminate_levels(levels, n):
    """Lens elimination on plateau heights (all distinct per plateau, points at height 0).

    Plateau sets are bitmasks: ``above[i][j]`` has bit ``s`` when curve ``i``
    is higher than curve ``j`` on plateau ``s``, so window ``s`` holds a
    crossing iff bits ``s - 1`` and ``s`` differ; ``neg[i]`` marks plateaus
    whose point lies above curve ``i``.
    """
    m = len(levels)
    full = (1 << (n + 1)) - 1
    inner = full - 1  # plateaus 1..n carry points
    neg = [sum(1 << s for s in range(n + 1) if row[s] < 0) for row in levels]
    above = [
        [sum(1 << s for s in range(n + 1) if levels[i][s] > levels[j][s]) for j in range(m)] for i in range(m)
    ]
    settled = set()
    while True:
        found = None
        for i in range(m):
            for j in range(i + 1, m):
                if (i, j) in settled:
                    continue
                a = above[i][j]
                cuts = (a ^ (a << 1)) & inner
                if cuts:
                    split = (neg[i] ^ neg[j]) & inner
                    lo = 0
                    while True:
                        hi = (cuts & -cuts).bit_length() - 1 if cuts else n + 1
                        if not split & ((1 << hi) - (1 << lo)):
                            found = i, j, lo, hi
                            break
                        if not cuts:
                            break
                        cuts &= cuts - 1
                        lo = hi
                    if found:
                        break
                settled.add((i, j))
            if found:
                break
        if found is None:
            return
        i, j, lo, hi = found
        ri, rj = levels[i], levels[j]
        ri[lo:hi], rj[lo:hi] = rj[lo:hi], ri[lo:hi]
        r = (1 << hi) - (1 << lo)
        keep = full ^ r
        ni, nj = neg[i], neg[j]
        neg[i], neg[j] = (ni & keep) | (nj & r), (nj & keep) | (ni & r)
        for c in range(m):
            if c == i or c == j:
                continue
            aic, ajc = above[i][c], above[j][c]
            above[i][c] = (aic & keep) | (ajc & r)
            above[j][c] = (ajc & keep) | (aic & r)
            above[c][i] = full ^ above[i][c]
            above[c][j] = full ^ above[j][c]
        above[i][j] ^= r
        above[j][i] ^= r
        settled = {key for key in settled if i not in key and j not in key}
