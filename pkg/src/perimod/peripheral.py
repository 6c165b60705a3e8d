"""Meridians, longitudes and the identities they satisfy in the reduced module.

The meridians of component ``i`` are its arcs.  Its longitude word is
read by walking the component from its base arc: every under-passage
contributes the over-arc raised to the crossing sign, and the word is
closed off with copies of the base meridian so its total exponent is 0.
The longitude class is the image of that word under the crossed
homomorphism ``d(uv) = d(u) + t^{exp(u)} d(v)``.

Linking numbers: ``l_{k/i}`` is the signed count of crossings where
``K_i`` passes *under* ``K_k``.  With this convention the formula for
the augmented longitude vector holds on every diagram; the over-strand
reading fails already on the virtual Hopf link (see
``tests/test_peripheral.py::test_linking_convention_disambiguation``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from . import alexmod
from .alexmod import Certificate, ModuleElement, RelationBasis
from .diagram import LinkDiagram, linking_over
from .errors import NotInInvariant
from .groebner import Limits
from .laurent import LaurentPoly

UNDER_CONVENTION = "under"
OVER_CONVENTION = "over"
DEFAULT_CONVENTION = UNDER_CONVENTION


@dataclass(frozen=True)
class LongitudeWord:
    component: int
    letters: tuple[tuple[int, int], ...]   # (arc id, exponent +-1)

    @property
    def total_exponent(self) -> int:
        return sum(e for _, e in self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"m{a + 1}" + ("" if e > 0 else "^-1") for a, e in self.letters)


def longitude_word(d: LinkDiagram, i: int, base: int | None = None) -> LongitudeWord:
    """Longitude word of component ``i`` based at arc ``base`` (default: its first arc)."""
    comp = d.components[i]
    if not comp:
        return LongitudeWord(i, ())
    arc = d.arcs[d.first_arc(i) if base is None else base]
    if arc.component != i:
        raise ValueError(f"arc m{arc.id + 1} does not belong to K{i + 1}")
    n = len(comp)
    start = 0 if arc.start is None else (arc.start + 1) % n
    letters = []
    for step in range(n):
        tok = comp[(start + step) % n]
        if tok.role == "U":
            letters.append((d.over_arc(tok.crossing), tok.sign))
    e = sum(s for _, s in letters)
    letters.extend([(arc.id, -1 if e > 0 else 1)] * abs(e))
    return LongitudeWord(i, tuple(letters))


def crossed_hom(w: LongitudeWord) -> ModuleElement:
    acc: dict[int, LaurentPoly] = {}
    exp = 0
    for a, s in w.letters:
        if s > 0:
            term = LaurentPoly.monomial(1, exp)
            exp += 1
        else:
            term = LaurentPoly.monomial(-1, exp - 1)
            exp -= 1
        acc[a] = acc.get(a, LaurentPoly()) + term
    return ModuleElement(acc)


def longitude(d: LinkDiagram, i: int, base: int | None = None) -> ModuleElement:
    return crossed_hom(longitude_word(d, i, base))


def longitudes(d: LinkDiagram) -> list[ModuleElement]:
    return [longitude(d, i) for i in range(d.mu)]


def sum_of_longitudes(d: LinkDiagram) -> ModuleElement:
    total = ModuleElement()
    for chi in longitudes(d):
        total = total + chi
    return total


@dataclass(frozen=True)
class PeripheralStructure:
    meridians: tuple[tuple[int, ...], ...]
    words: tuple[LongitudeWord, ...]
    longitudes: tuple[ModuleElement, ...]


def peripheral_structure(d: LinkDiagram) -> PeripheralStructure:
    return PeripheralStructure(
        meridians=tuple(tuple(a.id for a in d.arcs_of(i)) for i in range(d.mu)),
        words=tuple(longitude_word(d, i) for i in range(d.mu)),
        longitudes=tuple(longitudes(d)),
    )


# -- Lemma vector ---------------------------------------------------------

def ell(d: LinkDiagram, k: int, i: int, convention: str = DEFAULT_CONVENTION) -> int:
    """``l_{k/i}(K_i, K_k)`` under the chosen strand convention."""
    if convention == UNDER_CONVENTION:
        return linking_over(d, k, i)
    if convention == OVER_CONVENTION:
        return linking_over(d, i, k)
    raise ValueError(f"unknown convention {convention!r}")


def augmented_vector(d: LinkDiagram, x: ModuleElement) -> list[int]:
    """Per-component sums of augmented coefficients (before zeroing the first entry)."""
    v = [0] * d.mu
    for a, c in x.coords.items():
        v[d.component_of_arc(a)] += c.augment()
    return v


def lemma_vector(d: LinkDiagram, x: ModuleElement) -> list[int]:
    if not x.in_reduced_invariant():
        raise NotInInvariant(f"{x} is not in the reduced Alexander invariant")
    v = augmented_vector(d, x)
    v[0] = 0
    return v


def lemma_prediction(d: LinkDiagram, i: int, convention: str = DEFAULT_CONVENTION) -> list[int]:
    out = []
    for j in range(d.mu):
        if j == 0:
            out.append(0)
        elif j != i:
            out.append(ell(d, j, i, convention))
        else:
            out.append(-sum(ell(d, k, i, convention) for k in range(d.mu) if k != i))
    return out


@dataclass
class LemmaReport:
    convention: str
    entries: list[dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e["ok"] for e in self.entries)

    def to_json(self) -> dict[str, Any]:
        return {"convention": self.convention, "passed": self.passed, "entries": self.entries}


def verify_lemma(d: LinkDiagram, convention: str = DEFAULT_CONVENTION) -> LemmaReport:
    report = LemmaReport(convention)
    for i in range(d.mu):
        computed = lemma_vector(d, longitude(d, i))
        expected = lemma_prediction(d, i, convention)
        for j in range(d.mu):
            report.entries.append({
                "i": i + 1, "j": j + 1,
                "expected": expected[j], "computed": computed[j],
                "ok": expected[j] == computed[j],
            })
    return report


# -- identity report ------------------------------------------------------

@dataclass
class IdentityCheck:
    name: str
    applicable: bool
    holds: bool
    detail: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.holds or not self.applicable

    def to_json(self) -> dict[str, Any]:
        return {"name": self.name, "applicable": self.applicable, "holds": self.holds,
                "ok": self.ok, **self.detail}


@dataclass
class IdentityReport:
    classical: bool
    almost_classical: bool
    checkerboard_colorable: bool
    longitudes: list[ModuleElement]
    checks: list[IdentityCheck]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def check(self, name: str) -> IdentityCheck:
        return next(c for c in self.checks if c.name == name)

    def to_json(self) -> dict[str, Any]:
        return {
            "classical": self.classical,
            "almost_classical": self.almost_classical,
            "checkerboard_colorable": self.checkerboard_colorable,
            "longitudes": [str(x) for x in self.longitudes],
            "nonzero_longitudes": self.check("annihilated_by_t_minus_1").detail["nonzero_longitudes"],
            "checks": [c.to_json() for c in self.checks],
            "ok": self.ok,
        }


def _cert_json(cert: Certificate | None):
    return None if cert is None else cert.to_json()


def verify_paper_identities(d: LinkDiagram, limits: Limits = Limits(),
                            rb: RelationBasis | None = None) -> IdentityReport:
    rb = alexmod.complete_basis(rb or alexmod.presentation(d, limits))
    chis = longitudes(d)
    total = sum_of_longitudes(d)
    classical = d.is_classical()
    almost = d.is_almost_classical()
    colorable = d.is_checkerboard_colorable()

    cert = alexmod.membership_certificate(total, rb)
    sum_check = IdentityCheck(
        "sum_of_longitudes_zero", applicable=almost, holds=cert is not None,
        detail={"sum": str(total), "certificate": _cert_json(cert)},
    )

    lattice_cert = alexmod.zero_mod_t_plus_1(total, rb)
    quotient_check = IdentityCheck(
        "sum_zero_mod_t_plus_1", applicable=colorable, holds=lattice_cert is not None,
        detail={"sum_at_minus_one": alexmod.reduce_mod_t_plus_1(rb, total)[1],
                "certificate": lattice_cert},
    )

    nonzero = [i + 1 for i, chi in enumerate(chis) if not alexmod.is_zero(chi, rb)]
    failing = [i + 1 for i, chi in enumerate(chis) if not alexmod.annihilated_by_t_minus_1(chi, rb)]
    ann_check = IdentityCheck(
        "annihilated_by_t_minus_1", applicable=True, holds=not failing,
        detail={"failing_components": failing, "nonzero_longitudes": nonzero},
    )

    lemma = verify_lemma(d)
    lemma_check = IdentityCheck(
        "lemma_vector", applicable=True, holds=lemma.passed,
        detail={"convention": lemma.convention,
                "mismatches": [e for e in lemma.entries if not e["ok"]]},
    )
    return IdentityReport(classical, almost, colorable, chis,
                          [sum_check, quotient_check, ann_check, lemma_check])


def knot_longitude_is_zero(d: LinkDiagram, rb: RelationBasis | None = None) -> bool:
    rb = alexmod.complete_basis(rb or alexmod.presentation(d))
    return alexmod.is_zero(longitude(d, 0), rb)


__all__ = [
    "LongitudeWord", "PeripheralStructure", "IdentityCheck", "IdentityReport", "LemmaReport",
    "longitude_word", "crossed_hom", "longitude", "longitudes", "sum_of_longitudes",
    "peripheral_structure", "ell", "lemma_vector", "lemma_prediction", "verify_lemma",
    "verify_paper_identities", "augmented_vector", "knot_longitude_is_zero",
]
