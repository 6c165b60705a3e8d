"""Command-line front end.

Usage::

    perimod parse       [INPUT] [--format gauss|pd|json]
    perimod invariants  [INPUT]
    perimod longitudes  [INPUT]
    perimod verify      [INPUT]
    perimod lemma       [INPUT]
    perimod corpus      [INPUT ...]

``INPUT`` is a path or ``-`` (stdin, the default).  With ``--format json``
(picked automatically for ``.json``/``.jsonl`` paths) the input is a
corpus: one JSON record per line, see :mod:`perimod.corpus`.  ``corpus``
without an input runs the bundled corpora.

Exit codes: 0 every applicable identity holds, 1 a verification failed,
2 input error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Any, Callable, Sequence

from . import __version__, alexmod, corpus, peripheral, seifert
from .corpus import CorpusEntry
from .diagram import LinkDiagram, linking_over
from .errors import InputError, PerimodError, ResourceLimit
from .groebner import DEFAULT_MAX_DEGREE, DEFAULT_MAX_ROWS, Limits

SCHEMA = "perimod.report/1"
EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3
COMMANDS = ("parse", "invariants", "longitudes", "verify", "lemma", "corpus")


# -- input ----------------------------------------------------------------

def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {source}: {e.strerror}") from None
    except UnicodeDecodeError:
        raise InputError(f"{source} is not UTF-8 text") from None


def _guess_format(source: str, text: str) -> str:
    if source.endswith((".json", ".jsonl")):
        return "json"
    head = text.lstrip()
    if head.startswith("{"):
        return "json"
    if head.startswith(("PD", "X[")):
        return "pd"
    return "gauss"


def load_entries(source: str, fmt: str | None) -> list[CorpusEntry]:
    text = _read(source)
    fmt = fmt or _guess_format(source, text)
    name = "stdin" if source == "-" else Path(source).stem
    if fmt == "json":
        return list(corpus.parse_lines(text.splitlines(), source))
    if fmt == "pd":
        return [CorpusEntry(name, pd=text.strip())]
    return [CorpusEntry(name, gauss=text)]


# -- per-diagram reports --------------------------------------------------

def _crossing_json(d: LinkDiagram) -> list[dict[str, Any]]:
    return [
        {"id": c.id, "sign": c.sign, "over": f"K{c.over[0] + 1}", "under": f"K{c.under[0] + 1}",
         "over_arc": f"m{d.over_arc(c.id) + 1}", "in_arc": f"m{d.incoming_arc(c.id) + 1}",
         "out_arc": f"m{d.outgoing_arc(c.id) + 1}"}
        for c in d.crossings.values()
    ]


def report_parse(d: LinkDiagram, entry: CorpusEntry, limits: Limits) -> tuple[dict, bool]:
    return {
        "gauss": d.to_gauss(),
        "components": d.mu,
        "crossing_count": d.crossing_count,
        "crossings": _crossing_json(d),
        "arcs": [{"id": f"m{a.id + 1}", "component": f"K{a.component + 1}"} for a in d.arcs],
    }, True


def _linking(d: LinkDiagram) -> list[list[int]]:
    """Entry ``[i][k]``: signed crossings where ``K_i`` passes over ``K_k``."""
    return [[linking_over(d, i, k) if i != k else 0 for k in range(d.mu)] for i in range(d.mu)]


def report_invariants(d: LinkDiagram, entry: CorpusEntry, limits: Limits) -> tuple[dict, bool]:
    classical = d.is_classical()
    out: dict[str, Any] = {
        "components": d.mu,
        "crossing_count": d.crossing_count,
        "arc_count": len(d.arcs),
        "classical": classical,
        "almost_classical": d.is_almost_classical(),
        "checkerboard_colorable": d.is_checkerboard_colorable(),
        "surface_genus": d.faces.genus if d.crossings else 0,
        "linking_over": _linking(d),
        "alexander_polynomial": str(alexmod.alexander_polynomial(d)) if d.crossings else None,
    }
    if classical:
        s, g = seifert.seifert_circles(d)
        out["seifert_circles"] = s
        out["seifert_genus_bound"] = g
    ok = True
    if entry.seifert_matrix is not None and d.crossings:
        V = entry.seifert_matrix
        from_v = seifert.alexander_from_seifert(V)
        out["alexander_from_seifert"] = str(from_v)
        out["seifert_agrees"] = from_v == alexmod.alexander_polynomial(d)
        ok = out["seifert_agrees"]
    return out, ok


def report_longitudes(d: LinkDiagram, entry: CorpusEntry, limits: Limits) -> tuple[dict, bool]:
    rb = alexmod.complete_basis(alexmod.presentation(d, limits))
    words = [peripheral.longitude_word(d, i) for i in range(d.mu)]
    chis = [peripheral.crossed_hom(w) for w in words]
    total = peripheral.sum_of_longitudes(d)
    return {
        "longitudes": [
            {"component": f"K{i + 1}", "word": str(w), "class": str(x), "is_zero": alexmod.is_zero(x, rb)}
            for i, (w, x) in enumerate(zip(words, chis))
        ],
        "sum": str(total),
        "sum_is_zero": alexmod.is_zero(total, rb),
    }, True


def report_verify(d: LinkDiagram, entry: CorpusEntry, limits: Limits) -> tuple[dict, bool]:
    rep = peripheral.verify_paper_identities(d, limits)
    return rep.to_json(), rep.ok


def report_lemma(d: LinkDiagram, entry: CorpusEntry, limits: Limits) -> tuple[dict, bool]:
    rep = peripheral.verify_lemma(d)
    return rep.to_json(), rep.passed


def report_corpus(d: LinkDiagram, entry: CorpusEntry, limits: Limits) -> tuple[dict, bool]:
    rep = peripheral.verify_paper_identities(d, limits)
    got = {
        "classical": rep.classical,
        "sum_zero": rep.check("sum_of_longitudes_zero").holds,
        "colorable": rep.checkerboard_colorable,
        "almost_classical": rep.almost_classical,
    }
    mismatches = sorted(k for k, v in entry.expect.items() if got[k] != v)
    out = rep.to_json()
    out["observed"] = got
    out["expectation_mismatches"] = mismatches
    ok = rep.ok and not mismatches
    if entry.seifert_matrix is not None:
        inv, s_ok = report_invariants(d, entry, limits)
        out["seifert_agrees"] = inv.get("seifert_agrees")
        ok = ok and s_ok
    return out, ok


REPORTS: dict[str, Callable[[LinkDiagram, CorpusEntry, Limits], tuple[dict, bool]]] = {
    "parse": report_parse,
    "invariants": report_invariants,
    "longitudes": report_longitudes,
    "verify": report_verify,
    "lemma": report_lemma,
    "corpus": report_corpus,
}


# -- text rendering -------------------------------------------------------

def _render_text(command: str, results: list[dict]) -> str:
    lines = []
    for res in results:
        head = f"{res['name']}: {'ok' if res['ok'] else 'FAIL'}"
        if "error" in res:
            lines.append(f"{res['name']}: ERROR {res['error']['type']}: {res['error']['message']}")
            continue
        lines.append(head)
        body = res["report"]
        if command == "longitudes":
            for item in body["longitudes"]:
                z = "zero" if item["is_zero"] else "nonzero"
                lines.append(f"  chi_{item['component'][1:]} = {item['class']}  ({z}; word {item['word']})")
            lines.append(f"  sum = {body['sum']}  ({'zero' if body['sum_is_zero'] else 'nonzero'})")
        elif command in ("verify", "corpus"):
            for c in body["checks"]:
                state = "n/a" if not c["applicable"] else ("holds" if c["holds"] else "FAILS")
                lines.append(f"  {c['name']}: {state}")
            if body.get("expectation_mismatches"):
                lines.append(f"  expectation mismatches: {', '.join(body['expectation_mismatches'])}")
        elif command == "lemma":
            for e in body["entries"]:
                mark = "" if e["ok"] else "  <-- mismatch"
                lines.append(f"  i={e['i']} j={e['j']}: expected {e['expected']}, computed {e['computed']}{mark}")
        else:
            for k, v in body.items():
                if k in ("crossings", "arcs"):
                    v = len(v)
                lines.append(f"  {k}: {v}")
    return "\n".join(lines)


# -- driver ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="perimod", description="Reduced Alexander modules and longitudes of links.")
    p.add_argument("--version", action="version", version=f"perimod {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        if name == "corpus":
            sp.add_argument("inputs", nargs="*", help="corpus files (default: bundled corpora)")
        else:
            sp.add_argument("input", nargs="?", default="-", help="path or '-' for stdin")
        sp.add_argument("--format", choices=("gauss", "pd", "json"), default=None)
        sp.add_argument("--out", choices=("text", "json"), default="text")
        sp.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
        sp.add_argument("--max-rows", type=int, default=DEFAULT_MAX_ROWS)
    return p


def _limits(args) -> Limits:
    degree = args.max_degree
    env = os.environ.get("PERIMOD_MAX_DEGREE")
    if env:
        try:
            degree = int(env)
        except ValueError:
            raise InputError(f"PERIMOD_MAX_DEGREE must be an integer, got {env!r}") from None
    if degree < 0 or args.max_rows < 1:
        raise InputError("limits must be positive")
    return Limits(max_rows=args.max_rows, max_degree=degree)


def _error(exc: BaseException) -> dict[str, str]:
    return {"type": type(exc).__name__, "message": str(exc)}


def _exit_for(exc: BaseException) -> int:
    return EXIT_LIMIT if isinstance(exc, ResourceLimit) else EXIT_INPUT


def _emit(payload: dict, out: str, command: str) -> None:
    if out == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    else:
        text = _render_text(command, payload["results"])
        if text:
            sys.stdout.write(text + "\n")


def run(argv: Sequence[str] | None = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        # certificates of larger diagrams can carry very long integers
        sys.set_int_max_str_digits(0)
    args = build_parser().parse_args(argv)
    command = args.command
    payload: dict[str, Any] = {"schema": SCHEMA, "command": command, "results": []}
    try:
        limits = _limits(args)
        if command == "corpus":
            paths = args.inputs or [str(corpus.bundled_path(n)) for n in corpus.BUNDLED]
            entries = [e for path in paths for e in load_entries(path, args.format or "json")]
        else:
            entries = load_entries(args.input, args.format)
    except PerimodError as e:
        payload["error"] = _error(e)
        _emit(payload, args.out, command)
        print(f"perimod: error: {e}", file=sys.stderr)
        return _exit_for(e)

    code = EXIT_OK
    for entry in entries:
        res: dict[str, Any] = {"name": entry.name}
        try:
            d = entry.diagram()
            report, ok = REPORTS[command](d, entry, limits)
            res["ok"] = ok
            res["report"] = report
            if not ok:
                code = max(code, EXIT_FAIL)
        except PerimodError as e:
            res["ok"] = False
            res["error"] = _error(e)
            print(f"perimod: {entry.name}: {type(e).__name__}: {e}", file=sys.stderr)
            code = max(code, _exit_for(e))
        payload["results"].append(res)
    _emit(payload, args.out, command)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
