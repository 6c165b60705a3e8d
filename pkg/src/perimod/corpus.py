"""JSONL link corpora.

One record per line::

    {"name": str, "gauss"?: str, "pd"?: str, "seifert_matrix"?: [[int]],
     "expect"?: {"classical": bool, "sum_zero": bool, "colorable": bool,
                 "almost_classical": bool}}

Exactly one of ``gauss`` / ``pd`` must be present.  The bundled corpora
live in ``perimod/data``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Iterable, Iterator

from .diagram import LinkDiagram, parse_gauss, parse_pd
from .errors import InputError

BUNDLED = ("classical", "virtual")
EXPECT_KEYS = ("classical", "sum_zero", "colorable", "almost_classical")


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    gauss: str | None = None
    pd: str | None = None
    seifert_matrix: tuple[tuple[int, ...], ...] | None = None
    expect: dict[str, bool] = field(default_factory=dict, compare=False)

    def diagram(self) -> LinkDiagram:
        if self.gauss is not None:
            return parse_gauss(self.gauss)
        return parse_pd(self.pd)

    @classmethod
    def from_record(cls, rec: Any, where: str = "record") -> CorpusEntry:
        if not isinstance(rec, dict):
            raise InputError(f"{where}: expected a JSON object")
        name = rec.get("name")
        if not isinstance(name, str) or not name:
            raise InputError(f"{where}: missing 'name'")
        gauss, pd = rec.get("gauss"), rec.get("pd")
        if (gauss is None) == (pd is None):
            raise InputError(f"{where} ({name}): give exactly one of 'gauss' or 'pd'")
        for key, val in (("gauss", gauss), ("pd", pd)):
            if val is not None and not isinstance(val, str):
                raise InputError(f"{where} ({name}): '{key}' must be a string")
        V = rec.get("seifert_matrix")
        if V is not None:
            if not isinstance(V, list) or not all(
                isinstance(r, list) and all(isinstance(x, int) for x in r) for r in V
            ):
                raise InputError(f"{where} ({name}): 'seifert_matrix' must be a list of integer lists")
            V = tuple(tuple(r) for r in V)
        expect = rec.get("expect") or {}
        if not isinstance(expect, dict) or any(
            k not in EXPECT_KEYS or not isinstance(v, bool) for k, v in expect.items()
        ):
            raise InputError(f"{where} ({name}): 'expect' takes boolean {', '.join(EXPECT_KEYS)}")
        return cls(name, gauss, pd, V, dict(expect))

    def to_record(self) -> dict[str, Any]:
        rec: dict[str, Any] = {"name": self.name}
        if self.gauss is not None:
            rec["gauss"] = self.gauss
        if self.pd is not None:
            rec["pd"] = self.pd
        if self.seifert_matrix is not None:
            rec["seifert_matrix"] = [list(r) for r in self.seifert_matrix]
        if self.expect:
            rec["expect"] = dict(self.expect)
        return rec

    @property
    def is_knot(self) -> bool:
        return self.diagram().mu == 1


def parse_lines(lines: Iterable[str], source: str = "<corpus>") -> Iterator[CorpusEntry]:
    for no, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as e:
            raise InputError(f"{source}:{no}: invalid JSON ({e.msg})") from None
        yield CorpusEntry.from_record(rec, f"{source}:{no}")


def load(path: str | Path) -> list[CorpusEntry]:
    path = Path(path)
    with path.open(encoding="utf-8") as fh:
        return list(parse_lines(fh, str(path)))


def bundled_path(name: str) -> Path:
    if name not in BUNDLED:
        raise KeyError(name)
    return Path(str(resources.files("perimod") / "data" / f"{name}.jsonl"))


def load_bundled(name: str | None = None) -> list[CorpusEntry]:
    names = BUNDLED if name is None else (name,)
    out: list[CorpusEntry] = []
    for n in names:
        out.extend(load(bundled_path(n)))
    return out


def by_name(entries: Iterable[CorpusEntry]) -> dict[str, CorpusEntry]:
    return {e.name: e for e in entries}
