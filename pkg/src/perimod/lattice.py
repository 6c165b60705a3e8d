"""Exact linear algebra over Euclidean domains.

Two rings are provided: :data:`ZZ` (the integers, used for lattice
membership after evaluating at ``t = -1`` and for integral Alexander
numberings) and :data:`QL` (rational Laurent polynomials, a principal
ideal domain used for the annihilator generation check).  Matrices are
lists of rows.  ``solve_mod2`` handles the Z/2 systems with bitmasks.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence

from .laurent import ONE, ZERO, LaurentPoly


class IntegerRing:
    zero = 0
    one = 1

    @staticmethod
    def norm(a: int) -> int:
        return abs(a)

    @staticmethod
    def divmod(a: int, b: int) -> tuple[int, int]:
        q, r = divmod(a, b)
        # python's r shares the sign of b; step once toward the symmetric range
        if 2 * abs(r) > abs(b):
            q += 1
            r -= b
        return q, r

    @staticmethod
    def unit_part(a: int) -> int:
        """Unit ``u`` with ``a / u`` canonical (positive)."""
        return -1 if a < 0 else 1

    @staticmethod
    def is_unit(a: int) -> bool:
        return a in (1, -1)

    @staticmethod
    def inverse_unit(u: int) -> int:
        return u

    def __repr__(self) -> str:
        return "ZZ"


class RationalLaurentRing:
    """Q[t, 1/t]; the Euclidean norm is the exponent span."""

    zero = ZERO
    one = ONE

    @staticmethod
    def norm(a: LaurentPoly) -> int:
        return a.span

    @staticmethod
    def divmod(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        return a.divmod_field(b)

    @staticmethod
    def unit_part(a: LaurentPoly) -> LaurentPoly:
        return LaurentPoly.monomial(a.leading_coefficient, a.low)

    @staticmethod
    def is_unit(a: LaurentPoly) -> bool:
        return a.is_monomial()

    @staticmethod
    def inverse_unit(u: LaurentPoly) -> LaurentPoly:
        (e, c), = u.terms.items()
        return LaurentPoly.monomial(Fraction(1) / c, -e)

    def __repr__(self) -> str:
        return "QL"


ZZ = IntegerRing()
QL = RationalLaurentRing()


def _identity(n: int, ring) -> list[list[Any]]:
    return [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]


def _axpy(dst: list, src: Sequence, q) -> None:
    for k, v in enumerate(src):
        if v:
            dst[k] = dst[k] - q * v


def hermite_form(rows: Sequence[Sequence[Any]], ring=ZZ, ncols: int | None = None):
    """Row echelon (Hermite) form ``H = U @ rows``.

    Returns ``(H, U, pivots)`` where ``H`` holds only the nonzero rows,
    ``U`` the matching rows of the unimodular transform and ``pivots`` the
    pivot column of each row.  Pivots are unit-normalized and entries
    above each pivot are reduced.
    """
    A, U, pivots = _echelon(rows, ring, ncols)
    r = len(pivots)
    return A[:r], U[:r], pivots


def left_kernel(rows: Sequence[Sequence[Any]], ring=ZZ, ncols: int | None = None):
    """A basis of ``{c : sum(c[i] * rows[i]) == 0}``."""
    _, U, pivots = _echelon(rows, ring, ncols)
    return U[len(pivots):]


def _echelon(rows, ring, ncols):
    A = [list(r) for r in rows]
    m = len(A)
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    U = _identity(m, ring)
    pivots: list[int] = []
    r = 0
    for col in range(n):
        if r >= m:
            break
        while True:
            live = [i for i in range(r, m) if A[i][col]]
            if not live:
                break
            best = min(live, key=lambda i: ring.norm(A[i][col]))
            A[r], A[best] = A[best], A[r]
            U[r], U[best] = U[best], U[r]
            clean = True
            for i in range(r + 1, m):
                if A[i][col]:
                    q, rem = ring.divmod(A[i][col], A[r][col])
                    _axpy(A[i], A[r], q)
                    _axpy(U[i], U[r], q)
                    if rem:
                        clean = False
            if clean:
                break
        if not A[r][col]:
            continue
        u = ring.inverse_unit(ring.unit_part(A[r][col]))
        A[r] = [u * v for v in A[r]]
        U[r] = [u * v for v in U[r]]
        for i in range(r):
            if A[i][col]:
                q, _ = ring.divmod(A[i][col], A[r][col])
                _axpy(A[i], A[r], q)
                _axpy(U[i], U[r], q)
        pivots.append(col)
        r += 1
    return A, U, pivots


def solve_row_span(rows: Sequence[Sequence[Any]], v: Sequence[Any], ring=ZZ):
    """Coefficients ``c`` with ``sum(c[i] * rows[i]) == v``, or ``None``."""
    n = len(v)
    H, U, pivots = hermite_form(rows, ring, ncols=n)
    w = list(v)
    coef = [ring.zero] * len(rows)
    k = 0
    for col in range(n):
        if k < len(pivots) and pivots[k] == col:
            if w[col]:
                q, rem = ring.divmod(w[col], H[k][col])
                if rem:
                    return None
                _axpy(w, H[k], q)
                for j, u in enumerate(U[k]):
                    if u:
                        coef[j] = coef[j] + q * u
            k += 1
        elif w[col]:
            return None
    return coef


def in_row_span(rows, v, ring=ZZ) -> bool:
    return solve_row_span(rows, v, ring) is not None


def transpose(A: Sequence[Sequence[Any]], ncols: int | None = None) -> list[list[Any]]:
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def solve_linear(A, b, ring=ZZ):
    """A solution ``x`` of ``A @ x == b`` over ``ring`` or ``None``."""
    ncols = len(A[0]) if A else 0
    return solve_row_span(transpose(A, ncols), b, ring)


def smith_form(A: Sequence[Sequence[Any]], ring=QL):
    """Diagonalize ``A`` by unimodular row and column operations.

    Returns ``(diag, V)`` with ``U @ A @ V`` diagonal for some unimodular
    ``U`` (not returned); ``diag`` has ``min(m, n)`` entries, each dividing
    the next, trailing zeros for rank deficiency.
    """
    M = [list(r) for r in A]
    m = len(M)
    n = len(M[0]) if M else 0
    V = _identity(n, ring)

    def col_swap(a, b):
        for row in M:
            row[a], row[b] = row[b], row[a]
        for row in V:
            row[a], row[b] = row[b], row[a]

    def col_axpy(dst, src, q):
        for row in M:
            if row[src]:
                row[dst] = row[dst] - q * row[src]
        for row in V:
            if row[src]:
                row[dst] = row[dst] - q * row[src]

    for k in range(min(m, n)):
        entries = [(ring.norm(M[i][j]), i, j) for i in range(k, m) for j in range(k, n) if M[i][j]]
        if not entries:
            break
        _, i0, j0 = min(entries)
        M[k], M[i0] = M[i0], M[k]
        if j0 != k:
            col_swap(k, j0)
        while True:
            changed = False
            for i in range(k + 1, m):
                if M[i][k]:
                    q, rem = ring.divmod(M[i][k], M[k][k])
                    _axpy(M[i], M[k], q)
                    if rem:
                        M[k], M[i] = M[i], M[k]
                        changed = True
            for j in range(k + 1, n):
                if M[k][j]:
                    q, rem = ring.divmod(M[k][j], M[k][k])
                    col_axpy(j, k, q)
                    if rem:
                        col_swap(k, j)
                        changed = True
            if changed:
                continue
            bad = next(
                (i for i in range(k + 1, m) for j in range(k + 1, n)
                 if M[i][j] and ring.divmod(M[i][j], M[k][k])[1]),
                None,
            )
            if bad is None:
                break
            _axpy(M[k], M[bad], -ring.one)
        u = ring.inverse_unit(ring.unit_part(M[k][k]))
        M[k] = [u * v for v in M[k]]
    diag = [M[i][i] for i in range(min(m, n))]
    return diag, V


def solve_mod2(A: Sequence[Sequence[int]], b: Sequence[int]):
    """Solve ``A @ x == b`` over Z/2; returns a 0/1 list or ``None``."""
    ncols = len(A[0]) if A else 0
    rows = []
    for r, rhs in zip(A, b):
        mask = 0
        for j, v in enumerate(r):
            if v & 1:
                mask |= 1 << j
        rows.append((mask, rhs & 1))
    pivots = []
    for col in range(ncols):
        bit = 1 << col
        idx = next((i for i in range(len(pivots), len(rows)) if rows[i][0] & bit), None)
        if idx is None:
            continue
        p = len(pivots)
        rows[p], rows[idx] = rows[idx], rows[p]
        pm, pr = rows[p]
        for i in range(len(rows)):
            if i != p and rows[i][0] & bit:
                rows[i] = (rows[i][0] ^ pm, rows[i][1] ^ pr)
        pivots.append(col)
    for mask, rhs in rows[len(pivots):]:
        if mask == 0 and rhs:
            return None
    x = [0] * ncols
    for p, col in enumerate(pivots):
        x[col] = rows[p][1]
    return x
