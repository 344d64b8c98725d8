"""Pure-Python edit distance kernels.

These are the hot inner loops of the whole package: quadratic string edit
distance, the banded bounded-threshold variant, the cubic interval DP for
Dyck edit distance, and Zhang-Shasha for forests.  A compiled twin lives in
``_kernels_cy.pyx``; :mod:`bracketdyn.kernels` picks whichever is available.

Symbol encoding shared with the compiled twin: a parenthesis with type id t
is ``t * 2`` when opening and ``t * 2 + 1`` when closing (type ids may be
negative, so the parity carries the direction: ``code & 1`` after shifting).
To keep that well-defined for negative ids we encode as
``(t << 1) | (0 if open else 1)`` using Python's floor semantics.
"""

BACKEND_NAME = "python"

_BIG = 1 << 30


def encode_paren(symbols):
    """Map ParenSymbol-likes to the shared integer code."""
    return [(s.type_id << 1) | (0 if s.is_open else 1) for s in symbols]


def ed(a, b, allow_sub):
    """Edit distance between integer sequences.

    With ``allow_sub`` false this is the deletion-only distance (deletions
    on either side, no substitutions), i.e. |a| + |b| - 2 lcs(a, b).
    """
    n, m = len(a), len(b)
    if n == 0:
        return m
    if m == 0:
        return n
    prev = list(range(m + 1))
    cur = [0] * (m + 1)
    for i in range(1, n + 1):
        cur[0] = i
        ai = a[i - 1]
        for j in range(1, m + 1):
            best = prev[j] + 1
            t = cur[j - 1] + 1
            if t < best:
                best = t
            if ai == b[j - 1]:
                t = prev[j - 1]
                if t < best:
                    best = t
            elif allow_sub:
                t = prev[j - 1] + 1
                if t < best:
                    best = t
            cur[j] = best
        prev, cur = cur, prev
    return prev[m]


def banded_ed(a, b, k, allow_sub):
    """min(ed(a, b), k + 1) by the k-differences diagonal method."""
    n, m = len(a), len(b)
    if abs(n - m) > k:
        return k + 1
    # frontier[d] = furthest row reached on diagonal (i - j) == d - (k + 1)
    # with the current number of errors.
    width = 2 * k + 3
    frontier = [-1] * width
    # 0 errors: extend along the main diagonal.
    i = 0
    while i < n and i < m and a[i] == b[i]:
        i += 1
    frontier[k + 1] = i
    if i >= n and i >= m:
        return 0
    for e in range(1, k + 1):
        nxt = [-1] * width
        for d in range(max(1, k + 1 - e), min(2 * k + 1, k + 1 + e) + 1):
            dd = d - (k + 1)
            best = frontier[d] + 1 if allow_sub and frontier[d] >= 0 else -1
            if frontier[d - 1] >= 0 and frontier[d - 1] + 1 > best:
                best = frontier[d - 1] + 1  # delete a[i]: row advances
            if frontier[d + 1] >= 0 and frontier[d + 1] > best:
                best = frontier[d + 1]  # delete b[j]: row unchanged
            if best < 0:
                continue
            i = best
            if i > n:
                i = n
            if i - dd > m:
                i = m + dd
            j = i - dd
            if j < 0:
                continue
            while i < n and j < m and a[i] == b[j]:
                i += 1
                j += 1
            nxt[d] = i
            if i >= n and j >= m:
                return e
        frontier = nxt
    return k + 1


def _pair_cost(ci, cj, allow_sub):
    oi = not (ci & 1)
    oj = not (cj & 1)
    if oi and not oj:
        return 0 if (ci >> 1) == (cj >> 1) else (1 if allow_sub else _BIG)
    if not allow_sub:
        return _BIG
    if oi == oj:
        return 1
    return 2  # closer before opener: both must be rewritten


def ded(codes, allow_sub):
    """Dyck edit distance of an encoded parenthesis string.

    Interval DP over substrings: delete an end, pair the two ends (cost 0
    for a type match, 1 when one substitution fixes the pair, 2 for a
    closer-opener pair), or split.  Deletion-only mode permits only exact
    pairings.
    """
    n = len(codes)
    if n == 0:
        return 0
    dp = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1 - 1):
        dp[i][i + 1] = 1
    for length in range(2, n + 1):
        for i in range(n - length + 1):
            j = i + length
            best = dp[i + 1][j] + 1
            t = dp[i][j - 1] + 1
            if t < best:
                best = t
            pc = _pair_cost(codes[i], codes[j - 1], allow_sub)
            if pc < _BIG:
                t = dp[i + 1][j - 1] + pc
                if t < best:
                    best = t
            row = dp[i]
            for mid in range(i + 1, j):
                t = row[mid] + dp[mid][j]
                if t < best:
                    best = t
            dp[i][j] = best
    return dp[0][n]


def ted(lml1, labels1, keyroots1, lml2, labels2, keyroots2, allow_sub):
    """Zhang-Shasha tree edit distance over postorder-encoded forests.

    ``lml*`` holds 1-based leftmost-leaf indices per postorder node,
    ``labels*`` integer labels, ``keyroots*`` the sorted keyroot indices.
    Deletion-only mode forbids relabeling.
    """
    n1, n2 = len(labels1), len(labels2)
    if n1 == 0:
        return n2
    if n2 == 0:
        return n1
    sub_cost = 1 if allow_sub else _BIG
    td = [[0] * (n2 + 1) for _ in range(n1 + 1)]
    fd = [[0] * (n2 + 2) for _ in range(n1 + 2)]
    for x in keyroots1:
        lx = lml1[x - 1]
        for y in keyroots2:
            ly = lml2[y - 1]
            fd[lx - 1][ly - 1] = 0
            for di in range(lx, x + 1):
                fd[di][ly - 1] = fd[di - 1][ly - 1] + 1
            for dj in range(ly, y + 1):
                fd[lx - 1][dj] = fd[lx - 1][dj - 1] + 1
            for di in range(lx, x + 1):
                ldi = lml1[di - 1]
                row = fd[di]
                prow = fd[di - 1]
                for dj in range(ly, y + 1):
                    if ldi == lx and lml2[dj - 1] == ly:
                        c = 0 if labels1[di - 1] == labels2[dj - 1] else sub_cost
                        best = prow[dj] + 1
                        t = row[dj - 1] + 1
                        if t < best:
                            best = t
                        t = prow[dj - 1] + c
                        if t < best:
                            best = t
                        row[dj] = best
                        td[di][dj] = best
                    else:
                        best = prow[dj] + 1
                        t = row[dj - 1] + 1
                        if t < best:
                            best = t
                        t = fd[ldi - 1][lml2[dj - 1] - 1] + td[di][dj]
                        if t < best:
                            best = t
                        row[dj] = best
    return td[n1][n2]
