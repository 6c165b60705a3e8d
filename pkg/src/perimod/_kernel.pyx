# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of :mod:`perimod._kernel_py` (same functions, same semantics).

Coefficients stay Python integers so arbitrary precision is preserved;
the gain comes from typed loop indices and list access.
"""

IMPLEMENTATION = "cython"


cpdef list poly_submul(list p, list q, object c, Py_ssize_t k):
    cdef Py_ssize_t i, lq, need
    cdef list out
    cdef object v
    lq = len(q)
    if lq == 0 or not c:
        return p
    need = lq + k
    out = list(p)
    if len(out) < need:
        out.extend([0] * (need - len(out)))
    for i in range(lq):
        v = q[i]
        if v:
            out[i + k] = out[i + k] - c * v
    while out and not out[len(out) - 1]:
        out.pop()
    return out


cpdef list vec_submul(list f, list g, object c, Py_ssize_t k):
    cdef Py_ssize_t i, m
    cdef list out
    m = len(f)
    out = [None] * m
    for i in range(m):
        out[i] = poly_submul(<list>f[i], <list>g[i], c, k)
    return out


cpdef list vec_scale(list f, object c):
    return [[c * v for v in p] for p in f]


cpdef list vec_shift(list f, Py_ssize_t k):
    return [([0] * k + p) if p else [] for p in f]


cpdef object vec_lead(list f, Py_ssize_t n):
    cdef Py_ssize_t pos
    cdef list p
    for pos in range(n):
        p = <list>f[pos]
        if p:
            return pos, len(p) - 1, p[len(p) - 1]
    return None


cpdef list top_reduce(list f, Py_ssize_t n, dict by_pos):
    cdef Py_ssize_t pos, deg, gdeg
    cdef object lc, glc, g, lead, cands
    cdef bint hit
    while True:
        lead = vec_lead(f, n)
        if lead is None:
            return f
        pos, deg, lc = lead
        cands = by_pos.get(pos)
        if not cands:
            return f
        hit = False
        for gdeg, glc, g in cands:
            if gdeg <= deg and lc % glc == 0:
                f = vec_submul(f, <list>g, lc // glc, deg - gdeg)
                hit = True
                break
        if not hit:
            return f


cpdef list full_reduce(list f, Py_ssize_t n, dict by_pos):
    cdef Py_ssize_t pos, deg, gdeg
    cdef list p, cands
    cdef object c, glc, g, exact, best
    for pos in range(n):
        cands = by_pos.get(pos)
        if not cands:
            continue
        deg = len(<list>f[pos]) - 1
        while deg >= 0:
            p = <list>f[pos]
            c = p[deg] if deg < len(p) else 0
            if c:
                exact = None
                best = None
                for gdeg, glc, g in cands:
                    if gdeg > deg:
                        continue
                    if c % glc == 0:
                        exact = (gdeg, glc, g)
                        break
                    if best is None or glc < best[1]:
                        best = (gdeg, glc, g)
                if exact is not None:
                    gdeg, glc, g = exact
                    f = vec_submul(f, <list>g, c // glc, deg - gdeg)
                elif best is not None:
                    gdeg, glc, g = best
                    f = vec_submul(f, <list>g, c // glc, deg - gdeg)
            deg -= 1
    return f


cpdef Py_ssize_t max_degree(list f):
    cdef Py_ssize_t best = -1
    cdef list p
    for p in f:
        if len(p) - 1 > best:
            best = len(p) - 1
    return best
