"""Exact Laurent polynomials in one variable ``t``.

Values are immutable and sparse: a mapping from integer exponent to a
nonzero coefficient.  Coefficients are Python integers (arbitrary
precision); :class:`fractions.Fraction` coefficients are also accepted so
the same type can serve as the rational Laurent ring used by the
principal-ideal-domain routines in :mod:`perimod.lattice`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from .errors import NotDivisible

Coeff = Union[int, Fraction]

__all__ = [
    "LaurentPoly",
    "t",
    "ONE",
    "ZERO",
    "add",
    "mul",
    "augment",
    "eval_at_minus_one",
    "divide_exact",
    "poly_gcd",
]


def _clean(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """An element of Z[t, 1/t] (or Q[t, 1/t] with Fraction coefficients)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Coeff] | Iterable[tuple[int, Coeff]] | None = None):
        acc: dict[int, Coeff] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for e, c in items:
                acc[int(e)] = acc.get(int(e), 0) + c
        self._terms = {e: _clean(c) for e, c in sorted(acc.items()) if c != 0}
        self._hash = None

    # -- construction -------------------------------------------------
    @classmethod
    def constant(cls, c: Coeff) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, c: Coeff, k: int) -> LaurentPoly:
        return cls({k: c})

    @classmethod
    def from_dense(cls, coeffs: Iterable[Coeff], low: int = 0) -> LaurentPoly:
        return cls({low + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def coerce(cls, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.constant(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> Mapping[int, Coeff]:
        return MappingProxyType(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def low(self) -> int:
        """Smallest exponent; 0 for the zero polynomial."""
        return next(iter(self._terms), 0)

    @property
    def high(self) -> int:
        """Largest exponent; 0 for the zero polynomial."""
        return next(reversed(self._terms), 0)

    @property
    def span(self) -> int:
        return self.high - self.low

    def coefficient(self, k: int) -> Coeff:
        return self._terms.get(k, 0)

    @property
    def leading_coefficient(self) -> Coeff:
        return self._terms[self.high] if self._terms else 0

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def to_dense(self) -> list[Coeff]:
        """Coefficients from ``low`` to ``high`` inclusive."""
        if not self._terms:
            return []
        lo = self.low
        out = [0] * (self.high - lo + 1)
        for e, c in self._terms.items():
            out[e - lo] = c
        return out

    # -- arithmetic ---------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other) -> LaurentPoly:
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other) -> LaurentPoly:
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        acc: dict[int, Coeff] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_monomial():
                raise NotDivisible(f"{self} is not a unit")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise NotDivisible(f"{self} is not a unit")
            return LaurentPoly({e * n: c ** (-n)})
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``t**k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def scale(self, c: Coeff) -> LaurentPoly:
        return LaurentPoly({e: c * v for e, v in self._terms.items()})

    def evaluate(self, x):
        """Exact value at ``x``; negative powers use Fraction arithmetic."""
        total = 0
        for e, c in self._terms.items():
            total += c * (x ** e if e >= 0 else Fraction(x) ** e)
        return _clean(total) if isinstance(total, Fraction) else total

    def augment(self) -> Coeff:
        return sum(self._terms.values())

    def eval_at_minus_one(self) -> Coeff:
        return sum(c if e % 2 == 0 else -c for e, c in self._terms.items())

    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = gcd(g, int(c))
        return g

    def normalized(self) -> LaurentPoly:
        """Unit-normalized representative: lowest exponent 0, positive top coefficient."""
        if not self._terms:
            return self
        p = self.shift(-self.low)
        return -p if p.leading_coefficient < 0 else p

    def primitive(self) -> LaurentPoly:
        """Clear denominators and integer content, keeping the sign."""
        if not self._terms:
            return self
        den = 1
        for c in self._terms.values():
            if isinstance(c, Fraction):
                den = den * c.denominator // gcd(den, c.denominator)
        p = self.scale(den)
        g = p.content()
        return LaurentPoly({e: int(c) // g for e, c in p._terms.items()})

    def divide_exact(self, d: LaurentPoly | int) -> LaurentPoly:
        """Return ``q`` with ``q * d == self`` or raise :class:`NotDivisible`."""
        d = LaurentPoly.coerce(d)
        if not d:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self:
            return ZERO
        num = self.to_dense()
        den = d.to_dense()
        q, r = _dense_divmod(num, den, exact=True)
        if q is None or any(r):
            raise NotDivisible(f"{d} does not divide {self}")
        return LaurentPoly.from_dense(q, self.low - d.low)

    def divmod_field(self, d: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        """Euclidean division in Q[t, 1/t]; the remainder has span < ``d.span``."""
        if not d:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self:
            return ZERO, ZERO
        q, r = _dense_divmod(self.to_dense(), d.to_dense(), exact=False)
        return (
            LaurentPoly.from_dense(q, self.low - d.low),
            LaurentPoly.from_dense(r, self.low),
        )

    # -- text ---------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms.items():
            neg = c < 0
            a = -c if neg else c
            if e == 0:
                body = f"({a})" if isinstance(a, Fraction) else str(a)
            else:
                mono = "t" if e == 1 else f"t^{e}"
                if a == 1:
                    body = mono
                elif isinstance(a, Fraction):
                    body = f"({a})*{mono}"
                else:
                    body = f"{a}{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    _TERM = re.compile(
        r"""\s*(?P<sign>[+-])?\s*
            (?:\((?P<frac>-?\d+/\d+)\)|(?P<int>\d+))?\s*\*?\s*
            (?P<t>t(?:\s*\^\s*\(?\s*(?P<exp>[+-]?\d+)\s*\)?)?)?\s*""",
        re.VERBOSE,
    )

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of ``str``; also accepts unicode minus and ``*``."""
        s = text.replace("−", "-").strip()
        if not s:
            raise ValueError("empty polynomial text")
        pos = 0
        acc: dict[int, Coeff] = {}
        first = True
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if m is None or m.end() == pos:
                raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
            if not first and m.group("sign") is None:
                raise ValueError(f"missing operator before {s[pos:]!r}")
            if m.group("frac") is None and m.group("int") is None and m.group("t") is None:
                raise ValueError(f"dangling sign in {text!r}")
            if m.group("frac") is not None:
                c: Coeff = Fraction(m.group("frac"))
            elif m.group("int") is not None:
                c = int(m.group("int"))
            else:
                c = 1
            if m.group("sign") == "-":
                c = -c
            e = 0
            if m.group("t") is not None:
                e = int(m.group("exp")) if m.group("exp") is not None else 1
            acc[e] = acc.get(e, 0) + c
            pos = m.end()
            first = False
        return cls(acc)


def _dense_divmod(num: list, den: list, exact: bool):
    """Long division of dense coefficient lists (low degree first).

    With ``exact`` set, returns ``(None, num)`` as soon as an integer
    quotient coefficient fails to exist.
    """
    num = list(num)
    lead = den[-1]
    dn = len(den) - 1
    if len(num) - 1 < dn:
        return [], num
    q = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c == 0:
            continue
        if exact:
            if isinstance(c, Fraction) or isinstance(lead, Fraction):
                f = Fraction(c) / lead
                if f.denominator != 1:
                    return None, num
                f = f.numerator
            else:
                f, rem = divmod(c, lead)
                if rem:
                    return None, num
        else:
            f = _clean(Fraction(c) / lead)
        q[k - dn] = f
        for j, dc in enumerate(den):
            num[k - dn + j] -= f * dc
    return q, num[:dn]


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
t = LaurentPoly.monomial(1, 1)


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def augment(p: LaurentPoly) -> Coeff:
    """Value at t = 1."""
    return p.augment()


def eval_at_minus_one(p: LaurentPoly) -> Coeff:
    return p.eval_at_minus_one()


def divide_exact(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    return p.divide_exact(d)


def poly_gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor over Q[t, 1/t], returned as a unit-normalized
    primitive integer polynomial (``0`` only when both inputs vanish)."""
    a = p.shift(-p.low) if p else ZERO
    b = q.shift(-q.low) if q else ZERO
    while b:
        _, r = a.divmod_field(b)
        a, b = b, (r.shift(-r.low) if r else ZERO)
    return a.primitive().normalized()
