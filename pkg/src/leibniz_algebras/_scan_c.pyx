# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subspace scan over GF(p); contract identical to `_scan_py`.

Walks every d-dimensional RREF basis of GF(p)^n in the canonical order
(pivot sets lexicographically, then free entries row-major, last position
fastest) and tests abelian / subalgebra / ideal predicates against a
structure-constant table held in C arrays.  Dimensions are capped at 16,
far above anything enumerable in practice.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memset

BACKEND = "c"

MODE_ABELIAN = 1
MODE_SUBALGEBRA = 2
MODE_IDEAL = 4

cdef enum:
    MAXN = 16


cdef long _inv_mod(long a, long p):
    cdef long r0 = p, r1 = a % p, s0 = 0, s1 = 1, q, t
    while r1:
        q = r0 / r1
        t = r0 - q * r1; r0 = r1; r1 = t
        t = s0 - q * s1; s0 = s1; s1 = t
    return s0 % p if s0 % p >= 0 else s0 % p + p


def rref_mod(flat, int rows, int cols, int p):
    """RREF of a rows x cols matrix over GF(p), flattened in and out."""
    cdef long m[MAXN * MAXN]
    cdef int i, j, r, c, pr
    cdef long inv, f
    if rows > MAXN or cols > MAXN:
        raise ValueError("matrix too large for the compiled kernel")
    for i in range(rows):
        for j in range(cols):
            m[i * cols + j] = flat[i * cols + j] % p
    r = 0
    for c in range(cols):
        pr = -1
        for i in range(r, rows):
            if m[i * cols + c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(cols):
                f = m[r * cols + j]; m[r * cols + j] = m[pr * cols + j]; m[pr * cols + j] = f
        inv = _inv_mod(m[r * cols + c], p)
        for j in range(cols):
            m[r * cols + j] = (m[r * cols + j] * inv) % p
        for i in range(rows):
            if i != r and m[i * cols + c]:
                f = m[i * cols + c]
                for j in range(cols):
                    m[i * cols + j] = (m[i * cols + j] - f * m[r * cols + j]) % p
                    if m[i * cols + j] < 0:
                        m[i * cols + j] += p
        r += 1
        if r == rows:
            break
    out = tuple(m[i] for i in range(rows * cols))
    return out, r


cdef bint _in_span(long *w, long *rows, int *piv, int d, int n, long p):
    # reduce w against the RREF rows in place; w is clobbered
    cdef int r, c
    cdef long coef
    for r in range(d):
        coef = w[piv[r]]
        if coef:
            for c in range(n):
                w[c] = (w[c] - coef * rows[r * n + c]) % p
                if w[c] < 0:
                    w[c] += p
    for c in range(n):
        if w[c]:
            return 0
    return 1


def scan_subspaces(table, int n, int p, int d, int mode, long long limit, long long collect):
    cdef long c[MAXN * MAXN * MAXN]
    cdef long rows[MAXN * MAXN]
    cdef long w1[MAXN]
    cdef long w2[MAXN]
    cdef int piv[MAXN]
    cdef int fr[MAXN * MAXN]
    cdef int fc[MAXN * MAXN]
    cdef long fv[MAXN * MAXN]
    cdef int nfree, i, j, k, r, s, t, pos
    cdef long long scanned = 0
    cdef bint truncated = 0, ok, more, want_ab, want_sub, want_id, in_piv
    cdef long ui, acc

    if n > MAXN or d > MAXN:
        raise ValueError("dimension too large for the compiled kernel")
    if d < 0 or d > n:
        return 0, False, []
    for i in range(n * n * n):
        c[i] = table[i] % p

    want_ab = (mode & MODE_ABELIAN) != 0
    want_sub = (mode & MODE_SUBALGEBRA) != 0 and not want_ab
    want_id = (mode & MODE_IDEAL) != 0

    matches = []

    # initial pivot combination 0..d-1
    for i in range(d):
        piv[i] = i

    while True:
        # free positions for this pivot set, row-major
        nfree = 0
        for r in range(d):
            for t in range(piv[r] + 1, n):
                in_piv = 0
                for s in range(d):
                    if piv[s] == t:
                        in_piv = 1
                        break
                if not in_piv:
                    fr[nfree] = r
                    fc[nfree] = t
                    nfree += 1
        for i in range(nfree):
            fv[i] = 0

        while True:  # odometer over free values
            if limit >= 0 and scanned >= limit:
                truncated = 1
                return scanned, bool(truncated), matches
            scanned += 1

            memset(rows, 0, d * n * sizeof(long))
            for r in range(d):
                rows[r * n + piv[r]] = 1
            for i in range(nfree):
                rows[fr[i] * n + fc[i]] = fv[i]

            ok = 1
            if want_ab:
                for r in range(d):
                    if not ok:
                        break
                    for s in range(d):
                        # bracket(rows[r], rows[s]) must vanish
                        for k in range(n):
                            w1[k] = 0
                        for i in range(n):
                            ui = rows[r * n + i]
                            if ui == 0:
                                continue
                            for j in range(n):
                                if rows[s * n + j] == 0:
                                    continue
                                acc = (ui * rows[s * n + j]) % p
                                for k in range(n):
                                    if c[(i * n + j) * n + k]:
                                        w1[k] = (w1[k] + acc * c[(i * n + j) * n + k]) % p
                        for k in range(n):
                            if w1[k]:
                                ok = 0
                                break
                        if not ok:
                            break
            if ok and want_sub:
                for r in range(d):
                    if not ok:
                        break
                    for s in range(d):
                        for k in range(n):
                            w1[k] = 0
                        for i in range(n):
                            ui = rows[r * n + i]
                            if ui == 0:
                                continue
                            for j in range(n):
                                if rows[s * n + j] == 0:
                                    continue
                                acc = (ui * rows[s * n + j]) % p
                                for k in range(n):
                                    if c[(i * n + j) * n + k]:
                                        w1[k] = (w1[k] + acc * c[(i * n + j) * n + k]) % p
                        if not _in_span(w1, rows, piv, d, n, p):
                            ok = 0
                            break
            if ok and want_id:
                for r in range(d):
                    if not ok:
                        break
                    for j in range(n):
                        for k in range(n):
                            w1[k] = 0
                            w2[k] = 0
                        for i in range(n):
                            ui = rows[r * n + i]
                            if ui == 0:
                                continue
                            for k in range(n):
                                if c[(i * n + j) * n + k]:
                                    w1[k] = (w1[k] + ui * c[(i * n + j) * n + k]) % p
                                if c[(j * n + i) * n + k]:
                                    w2[k] = (w2[k] + ui * c[(j * n + i) * n + k]) % p
                        if not _in_span(w1, rows, piv, d, n, p):
                            ok = 0
                            break
                        if not _in_span(w2, rows, piv, d, n, p):
                            ok = 0
                            break

            if ok:
                matches.append(tuple(rows[i] for i in range(d * n)))
                if collect >= 0 and len(matches) >= collect:
                    return scanned, bool(truncated), matches

            # advance the odometer (last position fastest)
            more = 0
            for pos in range(nfree - 1, -1, -1):
                if fv[pos] + 1 < p:
                    fv[pos] += 1
                    for t in range(pos + 1, nfree):
                        fv[t] = 0
                    more = 1
                    break
            if not more:
                break

        # next pivot combination (lexicographic successor)
        more = 0
        for i in range(d - 1, -1, -1):
            if piv[i] != i + n - d:
                piv[i] += 1
                for j in range(i + 1, d):
                    piv[j] = piv[j - 1] + 1
                more = 1
                break
        if not more:
            break

    return scanned, bool(truncated), matches
