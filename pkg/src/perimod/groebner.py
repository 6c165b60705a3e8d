"""Strong Gröbner bases of submodules of Z[t]^n.

Vectors are dense (see :mod:`perimod._kernel_py`).  Terms are ordered
position-over-term with position 0 largest.  A strong basis ``G`` has the
property that the leading term of every nonzero module element is
divisible (same position, lower degree, coefficient divides) by the
leading term of some ``g`` in ``G``, so membership is decided by
reduction alone.

Because ``t`` is a unit in Z[t, 1/t], membership questions coming from
Laurent modules are asked in the saturation ``N : t^inf``, which
:func:`saturate` computes by iterated colon modules.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field

from . import kernel
from .errors import ResourceLimit
from .lattice import ZZ, left_kernel

DEFAULT_MAX_ROWS = 10_000
DEFAULT_MAX_DEGREE = 64


@dataclass(frozen=True)
class Limits:
    max_rows: int = DEFAULT_MAX_ROWS
    max_degree: int = DEFAULT_MAX_DEGREE


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def unit_vector(size: int, i: int) -> list[list[int]]:
    return [[1] if j == i else [] for j in range(size)]


@dataclass
class StrongBasis:
    """A completed strong basis.

    ``elements`` are extended vectors: the first ``rank`` positions are
    the module part; when built with cofactors, the remaining positions
    express each element as a Z[t]-combination of the input generators.
    """

    rank: int
    elements: list[list[list[int]]]
    ngens: int
    tracked: bool
    _by_pos: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index()

    def _index(self):
        by_pos: dict[int, list] = {}
        for g in self.elements:
            pos, deg, lc = kernel.vec_lead(g, self.rank)
            by_pos.setdefault(pos, []).append((deg, lc, g))
        for lst in by_pos.values():
            lst.sort(key=lambda e: (e[0], abs(e[1])))
        self._by_pos = by_pos

    def module_part(self, g) -> list[list[int]]:
        return g[: self.rank]

    def generators(self) -> list[list[list[int]]]:
        return [self.module_part(g) for g in self.elements]

    def reduce(self, v: list[list[int]]) -> list[list[int]]:
        """Normal form of a module vector (module part of the remainder)."""
        ext = list(v) + ([[] for _ in range(self.ngens)] if self.tracked else [])
        return kernel.full_reduce(ext, self.rank, self._by_pos)[: self.rank]

    def contains(self, v: list[list[int]]) -> bool:
        return not any(self.reduce(v))

    def express(self, v: list[list[int]]):
        """Cofactors ``c`` over the input generators with ``v == sum c_j gen_j``.

        Returns ``None`` when ``v`` is not in the module.  Requires a
        basis built with ``cofactors=True``.
        """
        if not self.tracked:
            raise ValueError("basis was built without cofactor tracking")
        ext = list(v) + [[] for _ in range(self.ngens)]
        red = kernel.full_reduce(ext, self.rank, self._by_pos)
        if any(red[: self.rank]):
            return None
        return [[-c for c in p] for p in red[self.rank:]]

    def __len__(self) -> int:
        return len(self.elements)


def strong_basis(gens, rank: int, *, cofactors: bool = False, limits: Limits = Limits()) -> StrongBasis:
    """Complete ``gens`` (module vectors of length ``rank``) to a strong basis."""
    ngens = len(gens)
    work: list = []
    for j, g in enumerate(gens):
        if len(g) != rank:
            raise ValueError(f"generator {j} has length {len(g)}, expected {rank}")
        ext = [list(p) for p in g]
        if cofactors:
            ext += unit_vector(ngens, j)
        work.append(ext)
    work.reverse()

    basis: dict[int, list] = {}
    leads: dict[int, tuple[int, int, int]] = {}
    by_pos: dict[int, list] = {}
    pairs: list = []
    ids = itertools.count()
    tick = itertools.count()

    def rebuild_pos(pos):
        lst = [(leads[i][1], leads[i][2], basis[i]) for i in basis if leads[i][0] == pos]
        lst.sort(key=lambda e: (e[0], abs(e[1])))
        if lst:
            by_pos[pos] = lst
        else:
            by_pos.pop(pos, None)

    def insert(h):
        h = kernel.full_reduce(h, rank, by_pos)
        lead = kernel.vec_lead(h, rank)
        if lead is None:
            return
        if lead[2] < 0:
            h = kernel.vec_scale(h, -1)
            lead = (lead[0], lead[1], -lead[2])
        pos, deg, lc = lead
        top = kernel.max_degree(h[:rank])
        if top > limits.max_degree:
            raise ResourceLimit(f"basis degree {top} exceeds cap {limits.max_degree}")
        for i in [i for i in basis if leads[i][0] == pos]:
            _, gdeg, glc = leads[i]
            if deg <= gdeg and glc % lc == 0:
                work.append(basis.pop(i))
                leads.pop(i)
        hid = next(ids)
        for i in basis:
            if leads[i][0] == pos:
                heapq.heappush(pairs, (max(deg, leads[i][1]), next(tick), i, hid))
        basis[hid] = h
        leads[hid] = lead
        if len(basis) > limits.max_rows:
            raise ResourceLimit(f"basis size exceeds cap {limits.max_rows}")
        rebuild_pos(pos)

    while work or pairs:
        if work:
            insert(work.pop())
            continue
        _, _, i, j = heapq.heappop(pairs)
        if i not in basis or j not in basis:
            continue
        (_, d1, a1), (_, d2, a2) = leads[i], leads[j]
        g1, g2 = basis[i], basis[j]
        D = max(d1, d2)
        g, u, v = _egcd(a1, a2)
        l = a1 // g * a2
        s = kernel.vec_submul(
            kernel.vec_shift(kernel.vec_scale(g1, l // a1), D - d1), g2, l // a2, D - d2
        )
        work.append(s)
        if a1 % a2 and a2 % a1:
            gp = kernel.vec_submul(
                kernel.vec_shift(kernel.vec_scale(g1, u), D - d1), g2, -v, D - d2
            )
            work.append(gp)

    elements = _interreduce([basis[i] for i in sorted(basis)], rank)
    return StrongBasis(rank=rank, elements=elements, ngens=ngens, tracked=cofactors)


def _interreduce(elements, rank: int):
    """Reduce every tail against the other elements; leads are untouched."""
    out = list(elements)
    for idx in range(len(out)):
        g = out[idx]
        pos, deg, lc = kernel.vec_lead(g, rank)
        by_pos: dict[int, list] = {}
        for j, h in enumerate(out):
            if j != idx:
                hp, hd, hc = kernel.vec_lead(h, rank)
                by_pos.setdefault(hp, []).append((hd, hc, h))
        for lst in by_pos.values():
            lst.sort(key=lambda e: (e[0], abs(e[1])))
        tail = list(g)
        tail[pos] = g[pos][:-1]
        while tail[pos] and not tail[pos][-1]:
            tail[pos].pop()
        tail = kernel.full_reduce(tail, rank, by_pos)
        p = list(tail[pos]) + [0] * (deg + 1 - len(tail[pos]))
        p[deg] = lc
        tail[pos] = p
        out[idx] = tail
    return out


def _constant_syzygies(gens, rank: int):
    """Integer relations among the constant terms of ``gens``."""
    const = [[p[0] if p else 0 for p in g] for g in gens]
    return left_kernel(const, ZZ, ncols=rank)


def colon_t(gens, rank: int):
    """Vectors ``q`` generating ``N : t`` together with ``N = span(gens)``.

    If ``a_j`` are Z[t] coefficients then ``sum a_j g_j`` lies in ``tF``
    exactly when the constant terms ``a_j(0)`` form an integer relation
    among the constant terms of the ``g_j``.  Hence
    ``N : t = N + span{ (sum s_j g_j) / t : s integer syzygy }``.
    """
    out = []
    for s in _constant_syzygies(gens, rank):
        acc = [[] for _ in range(rank)]
        for c, g in zip(s, gens):
            if c:
                acc = kernel.vec_submul(acc, g, -c, 0)
        if any(p and p[0] for p in acc):
            raise AssertionError("syzygy combination has a nonzero constant term")
        q = [p[1:] for p in acc]
        if any(q):
            out.append(q)
    return out


def saturate(gens, rank: int, *, limits: Limits = Limits()) -> tuple[StrongBasis, int]:
    """Strong basis of ``N : t^inf`` and the least ``k`` with ``N : t^k`` saturated."""
    sb = strong_basis([list(g) for g in gens], rank, limits=limits)
    k = 0
    while True:
        gens = sb.generators()
        new = [q for q in colon_t(gens, rank) if not sb.contains(q)]
        if not new:
            return sb, k
        sb = strong_basis(gens + new, rank, limits=limits)
        k += 1
