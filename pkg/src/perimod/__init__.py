"""Reduced Alexander modules, meridians and longitudes of classical and virtual links."""

from __future__ import annotations

__version__ = "0.1.0"

from .alexmod import (
    Certificate,
    ModuleElement,
    RelationBasis,
    alexander_polynomial,
    annihilated_by_t_minus_1,
    annihilator_generated_by,
    complete_basis,
    is_zero,
    membership_certificate,
    presentation,
    relation_basis,
    zero_mod_t_plus_1,
)
from .diagram import LinkDiagram, braid_closure, parse_gauss, parse_pd, random_diagram
from .errors import (
    DegenerateDiagram,
    InputError,
    NonClassicalInput,
    NotDivisible,
    NotInInvariant,
    PerimodError,
    ResourceLimit,
)
from .groebner import Limits
from .kernel import IMPLEMENTATION as KERNEL
from .laurent import LaurentPoly
from .peripheral import (
    lemma_vector,
    longitude,
    longitude_word,
    longitudes,
    sum_of_longitudes,
    verify_lemma,
    verify_paper_identities,
)
from .seifert import alexander_from_seifert, cover_presentation, seifert_circles

__all__ = [
    "__version__", "KERNEL",
    "LaurentPoly", "LinkDiagram", "ModuleElement", "RelationBasis", "Certificate", "Limits",
    "parse_gauss", "parse_pd", "braid_closure", "random_diagram",
    "presentation", "relation_basis", "complete_basis", "is_zero", "membership_certificate",
    "annihilated_by_t_minus_1", "zero_mod_t_plus_1", "alexander_polynomial", "annihilator_generated_by",
    "longitude_word", "longitude", "longitudes", "sum_of_longitudes", "lemma_vector",
    "verify_lemma", "verify_paper_identities",
    "cover_presentation", "alexander_from_seifert", "seifert_circles",
    "PerimodError", "InputError", "ResourceLimit", "NotInInvariant", "NotDivisible",
    "NonClassicalInput", "DegenerateDiagram",
]
