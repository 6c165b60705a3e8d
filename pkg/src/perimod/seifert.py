"""Seifert-matrix cross-checks.

The infinite cyclic cover of a link complement has first homology
presented by ``tV - V^T`` for any Seifert matrix ``V``; its determinant is
the Alexander polynomial.  Seifert matrices are read from the corpus, not
derived from diagrams.  :func:`seifert_circles` gives the genus bound of
Seifert's algorithm on a classical diagram.
"""

from __future__ import annotations

from typing import Sequence

from . import alexmod
from .alexmod import ModuleElement, RelationBasis
from .diagram import LinkDiagram
from .errors import InputError, NonClassicalInput
from .laurent import ONE, LaurentPoly, t

Matrix = Sequence[Sequence[int]]


def _check_square(V: Matrix) -> list[list[int]]:
    rows = [list(map(int, r)) for r in V]
    if any(len(r) != len(rows) for r in rows):
        raise InputError(f"Seifert matrix must be square, got {len(rows)} rows of lengths "
                         f"{sorted({len(r) for r in rows})}")
    return rows


def cover_matrix(V: Matrix) -> list[list[LaurentPoly]]:
    """Entries of ``tV - V^T``."""
    rows = _check_square(V)
    n = len(rows)
    return [[rows[i][j] * t - LaurentPoly.constant(rows[j][i]) for j in range(n)] for i in range(n)]


def cover_presentation(V: Matrix) -> RelationBasis:
    M = cover_matrix(V)
    rows = [ModuleElement(dict(enumerate(r))) for r in M]
    return alexmod.relation_basis(rows, len(M))


def alexander_from_seifert(V: Matrix) -> LaurentPoly:
    """``det(tV - V^T)``, unit-normalized like :func:`alexmod.alexander_polynomial`."""
    M = cover_matrix(V)
    if not M:
        return ONE
    det = alexmod._det(M)
    return det.normalized() if det else det


def seifert_form_determinant(V: Matrix) -> int:
    """``det(V - V^T)``, i.e. ``det(tV - V^T)`` at ``t = 1``."""
    M = cover_matrix(V)
    return alexmod._det(M).evaluate(1) if M else 1


def seifert_circles(d: LinkDiagram) -> tuple[int, int]:
    """Circle count ``s`` of the oriented smoothing and the genus bound ``(c - s + 2 - mu) / 2``."""
    if not d.is_classical():
        raise NonClassicalInput("Seifert circles need a classical (planar) diagram")
    partner: dict[tuple[int, int], tuple[int, int]] = {}
    for c in d.crossings.values():
        partner[c.over] = c.under
        partner[c.under] = c.over
    seen: set[tuple[int, int]] = set()
    circles = 0
    for ci, comp in enumerate(d.components):
        if not comp:
            circles += 1
            continue
        for pos in range(len(comp)):
            if (ci, pos) in seen:
                continue
            circles += 1
            edge = (ci, pos)
            # an edge is named by the token it leaves; at the next crossing
            # the smoothing turns onto the other strand's outgoing edge
            while edge not in seen:
                seen.add(edge)
                comp_id, p = edge
                head = (comp_id, (p + 1) % len(d.components[comp_id]))
                edge = partner[head]
    c = d.crossing_count
    return circles, (c - circles + 2 - d.mu) // 2


__all__ = [
    "cover_matrix", "cover_presentation", "alexander_from_seifert",
    "seifert_form_determinant", "seifert_circles",
]
