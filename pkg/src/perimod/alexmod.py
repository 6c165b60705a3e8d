"""The reduced Alexander module of a diagram and exact membership tests in it.

Generators are the arcs ``m_0 .. m_{n-1}``; every classical crossing
contributes one relation.  For a positive crossing with over-arc ``b``,
incoming under-arc ``a`` and outgoing under-arc ``c`` the relation is
``t*c + (1-t)*b - a``; for a negative crossing it is ``t*a + (1-t)*b - c``.
This pairing is the one compatible with the longitude words of
:mod:`perimod.peripheral` (positive under-passages read ``b^{+1}``).

Zero tests over Z[t, 1/t] clear t-denominators and work in Z[t]: an
element is zero iff it lies in the saturation ``N : t^inf`` of the
relation module ``N``, decided with strong Gröbner bases
(:mod:`perimod.groebner`).  Positive answers carry a certificate: Laurent
coefficients expressing the element as a combination of relation rows.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Sequence

from . import groebner, lattice
from .diagram import LinkDiagram
from .errors import DegenerateDiagram
from .groebner import Limits
from .laurent import ONE, ZERO, LaurentPoly, poly_gcd, t

INTEGER_LAURENT = "integer-laurent"
INTEGER_AT_MINUS_ONE = "integer"
RATIONAL_LAURENT = "rational-laurent"


class ModuleElement:
    """Finitely supported map ``generator index -> LaurentPoly``."""

    __slots__ = ("_coords",)

    def __init__(self, coords: Mapping[int, LaurentPoly | int] | None = None):
        acc: dict[int, LaurentPoly] = {}
        for k, v in (coords or {}).items():
            v = LaurentPoly.coerce(v)
            if v:
                acc[int(k)] = v
        self._coords = dict(sorted(acc.items()))

    @classmethod
    def generator(cls, i: int) -> ModuleElement:
        return cls({i: ONE})

    @classmethod
    def from_dense(cls, polys: Sequence[LaurentPoly]) -> ModuleElement:
        return cls(dict(enumerate(polys)))

    @property
    def coords(self) -> dict[int, LaurentPoly]:
        return dict(self._coords)

    def __getitem__(self, i: int) -> LaurentPoly:
        return self._coords.get(i, ZERO)

    def support(self) -> list[int]:
        return list(self._coords)

    def __bool__(self) -> bool:
        return bool(self._coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self._coords == other._coords

    def __hash__(self) -> int:
        return hash(tuple(self._coords.items()))

    def __add__(self, other: ModuleElement) -> ModuleElement:
        acc = dict(self._coords)
        for k, v in other._coords.items():
            acc[k] = acc.get(k, ZERO) + v
        return ModuleElement(acc)

    def __neg__(self) -> ModuleElement:
        return ModuleElement({k: -v for k, v in self._coords.items()})

    def __sub__(self, other: ModuleElement) -> ModuleElement:
        return self + (-other)

    def __rmul__(self, scalar) -> ModuleElement:
        s = LaurentPoly.coerce(scalar)
        return ModuleElement({k: s * v for k, v in self._coords.items()})

    def to_dense(self, n: int) -> list[LaurentPoly]:
        return [self[i] for i in range(n)]

    def coordinate_sum(self) -> LaurentPoly:
        total = ZERO
        for v in self._coords.values():
            total = total + v
        return total

    def in_reduced_invariant(self) -> bool:
        """Coefficients augment to zero: the element is ``sum l_j m_j`` with ``sum l_j(1) = 0``."""
        return sum(v.augment() for v in self._coords.values()) == 0

    def low(self) -> int:
        return min((v.low for v in self._coords.values()), default=0)

    def format(self, names: Sequence[str] | None = None) -> str:
        if not self._coords:
            return "0"
        parts = []
        for k, v in self._coords.items():
            name = names[k] if names else f"m{k + 1}"
            if v == ONE:
                term = name
            elif v == -ONE:
                term = f"-{name}"
            elif v.is_monomial():
                term = f"{v}*{name}"
            else:
                term = f"({v})*{name}"
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"ModuleElement({self.format()!r})"

    def to_json(self) -> dict[str, str]:
        return {f"m{k + 1}": str(v) for k, v in self._coords.items()}


def _dense_int(x: ModuleElement, n: int, shift: int) -> list[list[int]]:
    """Coefficient lists of ``t**shift * x``; requires nonnegative exponents."""
    out = []
    for i in range(n):
        p = x[i].shift(shift)
        if p and p.low < 0:
            raise ValueError("negative exponent after normalization")
        dense = [0] * (p.high + 1) if p else []
        for e, c in p.terms.items():
            dense[e] = c
        out.append(dense)
    return out


@dataclass(frozen=True)
class Certificate:
    """``element == sum(coefficients[j] * rows[j])`` over Z[t, 1/t]."""

    coefficients: tuple[LaurentPoly, ...]
    shift: int

    def combination(self, rows: Sequence[ModuleElement]) -> ModuleElement:
        total = ModuleElement()
        for c, r in zip(self.coefficients, rows):
            if c:
                total = total + c * r
        return total

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coefficients]


@dataclass(frozen=True)
class RelationBasis:
    """Relation rows of a presented module plus its completed Z[t] bases."""

    ngens: int
    rows: tuple[ModuleElement, ...]
    ring: str = INTEGER_LAURENT
    limits: Limits = Limits()
    crossing_ids: tuple[int, ...] = ()
    _tracked: groebner.StrongBasis | None = field(default=None, repr=False, compare=False)
    _saturated: groebner.StrongBasis | None = field(default=None, repr=False, compare=False)
    _sat_index: int = field(default=0, repr=False, compare=False)

    @property
    def completed(self) -> bool:
        return self._saturated is not None

    def row_shifts(self) -> list[int]:
        return [-r.low() for r in self.rows]

    def dense_rows(self) -> list[list[list[int]]]:
        return [_dense_int(r, self.ngens, s) for r, s in zip(self.rows, self.row_shifts())]

    @property
    def basis(self) -> list[ModuleElement]:
        """Completed basis rows (generators of the saturated module)."""
        if not self.completed:
            return []
        return [
            ModuleElement({i: LaurentPoly.from_dense(p) for i, p in enumerate(g) if p})
            for g in self._saturated.generators()
        ]

    @property
    def saturation_index(self) -> int:
        return self._sat_index

    def matrix(self) -> list[list[LaurentPoly]]:
        return [r.to_dense(self.ngens) for r in self.rows]


def presentation(d: LinkDiagram, limits: Limits = Limits()) -> RelationBasis:
    n = len(d.arcs)
    rows = []
    for cid, c in d.crossings.items():
        a, b, cc = d.incoming_arc(cid), d.over_arc(cid), d.outgoing_arc(cid)
        if c.sign > 0:
            terms = [(cc, t), (b, ONE - t), (a, -ONE)]
        else:
            terms = [(a, t), (b, ONE - t), (cc, -ONE)]
        acc: dict[int, LaurentPoly] = {}
        for k, v in terms:
            acc[k] = acc.get(k, ZERO) + v
        rows.append(ModuleElement(acc))
    return RelationBasis(n, tuple(rows), INTEGER_LAURENT, limits, tuple(d.crossings))


def relation_basis(rows: Iterable[ModuleElement], ngens: int, limits: Limits = Limits()) -> RelationBasis:
    return RelationBasis(ngens, tuple(rows), INTEGER_LAURENT, limits)


def complete_basis(rb: RelationBasis, limits: Limits | None = None) -> RelationBasis:
    """Strong Gröbner completion (with certificates) and t-saturation of the rows."""
    if rb.completed and limits is None:
        return rb
    lim = limits or rb.limits
    dense = rb.dense_rows()
    tracked = groebner.strong_basis(dense, rb.ngens, cofactors=True, limits=lim)
    saturated, k = groebner.saturate(dense, rb.ngens, limits=lim)
    return replace(rb, limits=lim, _tracked=tracked, _saturated=saturated, _sat_index=k)


def _completed(rb: RelationBasis) -> RelationBasis:
    return rb if rb.completed else complete_basis(rb)


def membership_certificate(x: ModuleElement, rb: RelationBasis) -> Certificate | None:
    """Relation coefficients exhibiting ``x == 0`` in the module, or ``None``."""
    rb = _completed(rb)
    if not x:
        return Certificate(tuple(ZERO for _ in rb.rows), 0)
    sx = -x.low()
    xd = _dense_int(x, rb.ngens, sx)
    if not rb._saturated.contains(xd):
        return None
    shifts = rb.row_shifts()
    for k in range(rb._sat_index + 1):
        cof = rb._tracked.express([([0] * k + p) if p else [] for p in xd])
        if cof is None:
            continue
        coeffs = tuple(
            LaurentPoly.from_dense(c).shift(-sx - k + shifts[j]) for j, c in enumerate(cof)
        )
        cert = Certificate(coeffs, k)
        if cert.combination(rb.rows) != x:
            raise AssertionError("membership certificate failed verification")
        return cert
    raise AssertionError("saturated membership without a certificate within the saturation index")


def is_zero(x: ModuleElement, rb: RelationBasis) -> bool:
    """Whether ``x`` vanishes in the presented module over Z[t, 1/t]."""
    rb = _completed(rb)
    if not x:
        return True
    xd = _dense_int(x, rb.ngens, -x.low())
    return rb._saturated.contains(xd)


def annihilated_by_t_minus_1(x: ModuleElement, rb: RelationBasis) -> bool:
    return is_zero((t - 1) * x, rb)


def reduce_mod_t_plus_1(rb: RelationBasis, x: ModuleElement) -> tuple[list[list[int]], list[int]]:
    """Relation rows and ``x`` evaluated at ``t = -1`` (Z[t,1/t]/(t+1) is Z)."""
    rows = [[p.eval_at_minus_one() for p in r.to_dense(rb.ngens)] for r in rb.rows]
    vec = [p.eval_at_minus_one() for p in x.to_dense(rb.ngens)]
    return rows, vec


def zero_mod_t_plus_1(x: ModuleElement, rb: RelationBasis):
    """Integer relation coefficients exhibiting ``x`` in ``(t+1) M``, or ``None``."""
    rows, vec = reduce_mod_t_plus_1(rb, x)
    if not any(vec):
        return [0] * len(rows)
    if not rows:
        return None
    return lattice.solve_row_span(rows, vec, lattice.ZZ)


def _det(M: list[list[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free (Bareiss) determinant over Z[t, 1/t]."""
    A = [list(r) for r in M]
    n = len(A)
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not A[k][k]:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return ZERO
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]).divide_exact(prev)
            A[i][k] = ZERO
        prev = A[k][k]
    return A[n - 1][n - 1] if sign > 0 else -A[n - 1][n - 1]


def alexander_polynomial(d: LinkDiagram) -> LaurentPoly:
    """gcd of the maximal minors after deleting the last generator column.

    Unit-normalized: lowest exponent 0 and positive top coefficient.
    """
    if not d.crossings:
        raise DegenerateDiagram("no crossings: the presentation matrix is empty")
    rb = presentation(d)
    n = rb.ngens
    M = [row[: n - 1] for row in rb.matrix()]
    size = n - 1
    g = ZERO
    for subset in itertools.combinations(range(len(M)), size):
        minor = _det([M[i] for i in subset])
        if minor:
            g = poly_gcd(g, minor) if g else minor.primitive().normalized()
            if g == ONE:
                break
    return g


def annihilator_generated_by(xs: Sequence[ModuleElement], rb: RelationBasis) -> bool:
    """Over Q[t, 1/t]: do ``xs`` generate the submodule killed by ``t - 1``?

    Uses a Smith form ``U A V = D`` of the relation matrix.  In the
    coordinates ``y = x V`` the module is a sum of cyclic pieces
    ``Q[t,1/t]/(d_j)``, whose ``(t-1)``-torsion is generated by
    ``d_j / gcd(d_j, t-1)``.
    """
    n = rb.ngens
    A = rb.matrix()
    if A:
        diag, V = lattice.smith_form(A, lattice.QL)
    else:
        diag, V = [], [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    d = [diag[j] if j < len(diag) else ZERO for j in range(n)]

    def coords(x: ModuleElement) -> list[LaurentPoly]:
        xv = x.to_dense(n)
        return [sum((xv[i] * V[i][j] for i in range(n) if xv[i]), ZERO) for j in range(n)]

    tm1 = t - 1
    ys = [coords(x) for x in xs]
    for y in ys:
        for j in range(n):
            if not y[j]:
                continue
            if not d[j]:
                return False
            if lattice.QL.divmod(tm1 * y[j], d[j])[1]:
                return False
    kernel = []
    for j in range(n):
        if not d[j] or d[j].is_monomial():
            continue
        g = poly_gcd(d[j], tm1)
        if g == ONE:
            continue
        gen = [ZERO] * n
        gen[j] = d[j].divmod_field(g)[0]
        kernel.append(gen)
    span_rows = ys + [
        [d[j] if i == j else ZERO for i in range(n)] for j in range(n) if d[j]
    ]
    for gen in kernel:
        if lattice.solve_row_span(span_rows, gen, lattice.QL) is None:
            return False
    return True
