"""Pure-Python implementations of the hot kernels.

These are the reference versions: they work on arbitrary-precision ints and
are always available.  ``_ckernels`` implements the same contracts in Cython.
"""


def _balanced_divmod(v, p):
    """Quotient q with |v - q*p| <= |p|/2."""
    q, r = divmod(v, p)
    if r and 2 * abs(r) > abs(p):
        q += 1
        r -= p
    return q, r


def diagonalize(matrix, ncols, want_left=False, want_right=False):
    """Unimodular diagonalisation of an integer matrix.

    Returns ``(pivots, left, right)`` where ``pivots`` is a list of
    ``(row, col, value)`` with ``value > 0`` and ``left * matrix * right`` has
    exactly these nonzero entries.  ``left``/``right`` are dense row-major
    lists (or None when not requested).  The divisibility chain is *not*
    enforced here.
    """
    m = len(matrix)
    n = ncols
    rows = [{j: v for j, v in enumerate(r) if v} for r in matrix]
    cols = [set() for _ in range(n)]
    for i, r in enumerate(rows):
        for j in r:
            cols[j].add(i)
    left = [{i: 1} for i in range(m)] if want_left else None
    # right[j] holds column j of the right transform as {row: value}
    right = [{j: 1} for j in range(n)] if want_right else None

    def row_addmul(dst, src, c):
        rd = rows[dst]
        for j, v in rows[src].items():
            nv = rd.get(j, 0) + c * v
            if nv:
                if j not in rd:
                    cols[j].add(dst)
                rd[j] = nv
            else:
                del rd[j]
                cols[j].discard(dst)
        if left is not None:
            ld = left[dst]
            for j, v in left[src].items():
                nv = ld.get(j, 0) + c * v
                if nv:
                    ld[j] = nv
                else:
                    del ld[j]

    def col_addmul(dst, src, c):
        for i in list(cols[src]):
            ri = rows[i]
            nv = ri.get(dst, 0) + c * ri[src]
            if nv:
                if dst not in ri:
                    cols[dst].add(i)
                ri[dst] = nv
            else:
                del ri[dst]
                cols[dst].discard(i)
        if right is not None:
            rd = right[dst]
            for k, v in right[src].items():
                nv = rd.get(k, 0) + c * v
                if nv:
                    rd[k] = nv
                else:
                    del rd[k]

    done_rows = set()
    pivots = []
    active = [i for i in range(m) if rows[i]]
    while True:
        active = [i for i in active if rows[i] and i not in done_rows]
        if not active:
            break
        best = None
        for i in active:
            ri = rows[i]
            rl = len(ri) - 1
            for j, v in ri.items():
                key = (abs(v), rl * (len(cols[j]) - 1))
                if best is None or key < best[0]:
                    best = (key, i, j)
                    if key == (1, 0):
                        break
            if best[0] == (1, 0):
                break
        _, i, j = best
        while True:
            p = rows[i][j]
            moved = None
            for k in list(cols[j]):
                if k == i:
                    continue
                q, r = _balanced_divmod(rows[k][j], p)
                if q:
                    row_addmul(k, i, -q)
                if r and (moved is None or abs(r) < moved[0]):
                    moved = (abs(r), k)
            if moved is not None:
                i = moved[1]
                continue
            for l in list(rows[i]):
                if l == j:
                    continue
                q, r = _balanced_divmod(rows[i][l], p)
                if q:
                    col_addmul(l, j, -q)
                if r and (moved is None or abs(r) < moved[0]):
                    moved = (abs(r), l)
            if moved is not None:
                j = moved[1]
                continue
            break
        p = rows[i][j]
        if p < 0:
            rows[i][j] = -p
            if left is not None:
                left[i] = {k: -v for k, v in left[i].items()}
            p = -p
        pivots.append((i, j, p))
        done_rows.add(i)

    if left is not None:
        dense = []
        for d in left:
            row = [0] * m
            for k, v in d.items():
                row[k] = v
            dense.append(row)
        left = dense
    if right is not None:
        dense = [[0] * n for _ in range(n)]
        for j, d in enumerate(right):
            for k, v in d.items():
                dense[k][j] = v
        right = dense
    return pivots, left, right


def search_endomorphisms(mul, gens, tree, candidates, bijective=True):
    """All endomorphisms of the group with table ``mul`` extending a choice
    of generator images drawn from ``candidates``.

    ``tree`` lists ``(element, parent, gen_pos)`` in BFS order (identity
    excluded) with ``element == mul[parent][gens[gen_pos]]``.  Returns a
    list of full image tuples.
    """
    n = len(mul)
    k = len(gens)
    out = []
    if k == 0:
        return [tuple(range(n))] if n == 1 else []
    if any(not c for c in candidates):
        return out
    idx = [0] * k
    img = [0] * n
    gen_cols = [[row[g] for row in mul] for g in gens]
    while True:
        chosen = [candidates[a][idx[a]] for a in range(k)]
        img[0] = 0
        for e, par, a in tree:
            img[e] = mul[img[par]][chosen[a]]
        ok = True
        for a in range(k):
            col = gen_cols[a]
            ca = chosen[a]
            for x in range(n):
                if img[col[x]] != mul[img[x]][ca]:
                    ok = False
                    break
            if not ok:
                break
        if ok and bijective and len(set(img)) != n:
            ok = False
        if ok:
            out.append(tuple(img))
        a = k - 1
        while a >= 0:
            idx[a] += 1
            if idx[a] < len(candidates[a]):
                break
            idx[a] = 0
            a -= 1
        if a < 0:
            break
    return out
