"""Pure-Python kernels for dense vectors over Z[t].

A vector is a list of polynomials; a polynomial is a list of ints,
lowest degree first, with no trailing zeros (``[]`` is zero).  Only the
first ``n`` positions take part in leading-term computations; any
positions past ``n`` ride along (used for cofactor bookkeeping).

Leading terms follow position-over-term order with position 0 the
largest: the lead of a vector is the highest-degree term of its first
nonzero entry among positions ``< n``.

:mod:`perimod._kernel` is a compiled twin of this module with the same
functions and semantics.
"""

IMPLEMENTATION = "python"


def poly_submul(p, q, c, k):
    """Return ``p - c * t**k * q``."""
    if not q or not c:
        return p
    need = len(q) + k
    out = list(p)
    if len(out) < need:
        out.extend([0] * (need - len(out)))
    for i, v in enumerate(q):
        if v:
            out[i + k] -= c * v
    while out and not out[-1]:
        out.pop()
    return out


def vec_submul(f, g, c, k):
    """Return ``f - c * t**k * g`` position-wise."""
    return [poly_submul(p, q, c, k) for p, q in zip(f, g)]


def vec_scale(f, c):
    return [[c * v for v in p] for p in f]


def vec_shift(f, k):
    return [([0] * k + p) if p else [] for p in f]


def vec_lead(f, n):
    """``(position, degree, coefficient)`` of the leading term, or ``None``."""
    for pos in range(n):
        p = f[pos]
        if p:
            return pos, len(p) - 1, p[-1]
    return None


def top_reduce(f, n, by_pos):
    """Strong top-reduction of ``f`` by a basis.

    ``by_pos`` maps a lead position to a list of ``(degree, coefficient,
    vector)`` triples.  Returns the reduced vector; its module part (first
    ``n`` positions) is zero iff ``f`` reduced to zero.
    """
    while True:
        lead = vec_lead(f, n)
        if lead is None:
            return f
        pos, deg, lc = lead
        for gdeg, glc, g in by_pos.get(pos, ()):
            if gdeg <= deg and lc % glc == 0:
                f = vec_submul(f, g, lc // glc, deg - gdeg)
                break
        else:
            return f


def full_reduce(f, n, by_pos):
    """Reduce every term of the module part, top-down in term order.

    A term divisible by a basis lead is cancelled; otherwise its
    coefficient is replaced by the remainder modulo the smallest
    applicable lead coefficient.  With a strong basis the result is zero
    iff ``f`` lies in the module.
    """
    for pos in range(n):
        cands = by_pos.get(pos)
        if not cands:
            continue
        deg = len(f[pos]) - 1
        while deg >= 0:
            p = f[pos]
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
                    f = vec_submul(f, g, c // glc, deg - gdeg)
                elif best is not None:
                    gdeg, glc, g = best
                    f = vec_submul(f, g, c // glc, deg - gdeg)
            deg -= 1
    return f


def max_degree(f):
    return max((len(p) - 1 for p in f if p), default=-1)
