"""Link diagrams given by signed Gauss codes (classical or virtual) or PD codes.

Component and arc indices are 0-based in the API; reports print them
1-based (``K1``, ``m1``).  Virtual crossings are never recorded.

Gauss text format, one component per line::

    code      := line ( NEWLINE line )*
    line      := token ( SEP token )* | "-"        # "-" = crossingless component
    token     := ("O" | "U") crossing-id sign
    sign      := "+" | "-"
    SEP       := whitespace | ","

Blank lines and text after ``#`` are ignored.

PD format: ``X[a,b,c,d]`` tuples separated by commas or whitespace,
optionally wrapped in ``PD[...]``.  Labels are edge numbers; ``a`` is the
incoming under-edge and the labels run counterclockwise.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Sequence

from . import lattice
from .errors import (
    CrossingParity,
    InconsistentEdges,
    MalformedToken,
    NoCrossings,
    OrientationFailure,
    SameComponent,
    SignMismatch,
)

OVER, UNDER = "O", "U"


class Token(NamedTuple):
    crossing: int
    role: str
    sign: int

    def __str__(self) -> str:
        return f"{self.role}{self.crossing}{'+' if self.sign > 0 else '-'}"


class Crossing(NamedTuple):
    id: int
    sign: int
    over: tuple[int, int]   # (component, position)
    under: tuple[int, int]


class Arc(NamedTuple):
    """An arc runs from the exit of one under-passage to the next under-passage.

    ``start`` / ``end`` are token positions of those under-passages
    (``None`` for a component without under-passages); ``overs`` lists the
    positions of over-passages carried by the arc.
    """

    id: int
    component: int
    start: int | None
    end: int | None
    overs: tuple[int, ...]


class Edge(NamedTuple):
    """Segment of a component between consecutive classical crossings."""

    id: int
    component: int
    tail: int   # token position the edge leaves
    head: int   # token position the edge enters


@dataclass(frozen=True)
class FaceComplex:
    """Faces of the abstract (Carter) surface of a diagram.

    ``faces`` are boundary cycles of darts; a dart is ``(edge id, +1)``
    when traversed along the link orientation and ``(edge id, -1)``
    against it.  ``left[e]`` / ``right[e]`` are face indices.
    """

    vertices: int
    edges: tuple[Edge, ...]
    faces: tuple[tuple[tuple[int, int], ...], ...]
    left: tuple[int, ...]
    right: tuple[int, ...]
    pieces: int

    @property
    def euler_characteristic(self) -> int:
        return self.vertices - len(self.edges) + len(self.faces)

    @property
    def genus(self) -> int:
        """Total genus of the closed surface (sum over connected pieces)."""
        return (2 * self.pieces - self.euler_characteristic) // 2


# Counterclockwise slot order at a crossing.  Slots: UI/UO under in/out,
# OI/OO over in/out.
_ROTATION = {
    +1: ("UI", "OO", "UO", "OI"),
    -1: ("UI", "OI", "UO", "OO"),
}


@dataclass(frozen=True)
class LinkDiagram:
    components: tuple[tuple[Token, ...], ...]

    def __post_init__(self):
        if not self.components:
            raise InconsistentEdges("a diagram needs at least one component")
        seen: dict[int, dict[str, tuple[int, int, int]]] = {}
        for ci, comp in enumerate(self.components):
            for pos, tok in enumerate(comp):
                roles = seen.setdefault(tok.crossing, {})
                if tok.role in roles:
                    raise CrossingParity(
                        f"crossing {tok.crossing} appears twice as {tok.role} "
                        f"(K{ci + 1} position {pos + 1})"
                    )
                roles[tok.role] = (ci, pos, tok.sign)
        for cid, roles in seen.items():
            if set(roles) != {OVER, UNDER}:
                missing = ({OVER, UNDER} - set(roles)).pop()
                raise CrossingParity(f"crossing {cid} has no {missing} passage")
            if roles[OVER][2] != roles[UNDER][2]:
                raise SignMismatch(f"crossing {cid} has different signs at its two passages")

    # -- basic data ---------------------------------------------------
    @property
    def mu(self) -> int:
        return len(self.components)

    @cached_property
    def crossings(self) -> dict[int, Crossing]:
        over, under, sign = {}, {}, {}
        for ci, comp in enumerate(self.components):
            for pos, tok in enumerate(comp):
                (over if tok.role == OVER else under)[tok.crossing] = (ci, pos)
                sign[tok.crossing] = tok.sign
        return {c: Crossing(c, sign[c], over[c], under[c]) for c in sorted(sign)}

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def to_gauss(self) -> str:
        return "\n".join(" ".join(map(str, comp)) if comp else "-" for comp in self.components)

    def relabel(self, mapping: dict[int, int]) -> LinkDiagram:
        return LinkDiagram(tuple(
            tuple(Token(mapping[t.crossing], t.role, t.sign) for t in comp)
            for comp in self.components
        ))

    def mirror(self) -> LinkDiagram:
        """Swap over and under at every crossing (signs flip)."""
        swap = {OVER: UNDER, UNDER: OVER}
        return LinkDiagram(tuple(
            tuple(Token(t.crossing, swap[t.role], -t.sign) for t in comp)
            for comp in self.components
        ))

    # -- arcs ---------------------------------------------------------
    @cached_property
    def _arc_data(self):
        arcs: list[Arc] = []
        at: dict[tuple[int, int], int] = {}
        incoming: dict[tuple[int, int], int] = {}
        first: list[int] = []
        for ci, comp in enumerate(self.components):
            unders = [p for p, tok in enumerate(comp) if tok.role == UNDER]
            base = len(arcs)
            first.append(base)
            if not unders:
                arcs.append(Arc(base, ci, None, None, tuple(range(len(comp)))))
                for p in range(len(comp)):
                    at[(ci, p)] = base
                continue
            k = len(unders)
            n = len(comp)
            for j, u in enumerate(unders):
                nxt = unders[(j + 1) % k]
                span = []
                p = (u + 1) % n
                while p != nxt:
                    span.append(p)
                    p = (p + 1) % n
                arcs.append(Arc(base + j, ci, u, nxt, tuple(span)))
                for p in span:
                    at[(ci, p)] = base + j
                incoming[(ci, nxt)] = base + j
        return arcs, at, incoming, first

    @property
    def arcs(self) -> list[Arc]:
        return self._arc_data[0]

    def arcs_of(self, component: int) -> list[Arc]:
        return [a for a in self.arcs if a.component == component]

    def component_of_arc(self, arc: int) -> int:
        return self.arcs[arc].component

    def first_arc(self, component: int) -> int:
        return self._arc_data[3][component]

    def over_arc(self, crossing: int) -> int:
        return self._arc_data[1][self.crossings[crossing].over]

    def incoming_arc(self, crossing: int) -> int:
        """Arc entering the under-passage of ``crossing``."""
        return self._arc_data[2][self.crossings[crossing].under]

    def outgoing_arc(self, crossing: int) -> int:
        ci, pos = self.crossings[crossing].under
        return next(a.id for a in self.arcs_of(ci) if a.start == pos)

    # -- edges / faces --------------------------------------------------
    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        out = []
        for ci, comp in enumerate(self.components):
            n = len(comp)
            for p in range(n):
                out.append(Edge(len(out), ci, p, (p + 1) % n))
        return tuple(out)

    @cached_property
    def faces(self) -> FaceComplex:
        if not self.crossings:
            raise NoCrossings("diagram has no classical crossings")
        # slot -> dart starting there
        dart_at: dict[tuple[int, str], tuple[int, int]] = {}
        slot_of: dict[tuple[int, int], tuple[int, str]] = {}
        for e in self.edges:
            comp = self.components[e.component]
            t_tok, h_tok = comp[e.tail], comp[e.head]
            tail_slot = (t_tok.crossing, t_tok.role + "O")
            head_slot = (h_tok.crossing, h_tok.role + "I")
            dart_at[tail_slot] = (e.id, +1)
            dart_at[head_slot] = (e.id, -1)
            slot_of[(e.id, +1)] = tail_slot
            slot_of[(e.id, -1)] = head_slot

        def step(dart):
            eid, d = dart
            x, s = slot_of[(eid, -d)]          # arrival slot
            rot = _ROTATION[self.crossings[x].sign]
            return dart_at[(x, rot[(rot.index(s) + 1) % 4])]

        face_of: dict[tuple[int, int], int] = {}
        faces = []
        for e in self.edges:
            for d in (+1, -1):
                if (e.id, d) in face_of:
                    continue
                cycle = []
                dart = (e.id, d)
                while dart not in face_of:
                    face_of[dart] = len(faces)
                    cycle.append(dart)
                    dart = step(dart)
                faces.append(tuple(cycle))
        right = tuple(face_of[(e.id, +1)] for e in self.edges)
        left = tuple(face_of[(e.id, -1)] for e in self.edges)
        return FaceComplex(
            vertices=len(self.crossings),
            edges=self.edges,
            faces=tuple(faces),
            left=left,
            right=right,
            pieces=self._graph_pieces(),
        )

    def _graph_pieces(self) -> int:
        parent = {c: c for c in self.crossings}

        def find(c):
            while parent[c] != c:
                parent[c] = parent[parent[c]]
                c = parent[c]
            return c

        for comp in self.components:
            for a, b in zip(comp, comp[1:]):
                parent[find(a.crossing)] = find(b.crossing)
        return len({find(c) for c in parent})

    def _numbering_system(self):
        fc = self.faces
        A = []
        for e in fc.edges:
            row = [0] * len(fc.faces)
            row[fc.left[e.id]] += 1
            row[fc.right[e.id]] -= 1
            A.append(row)
        return A, [1] * len(A)

    def alexander_numbering(self):
        """Integer face labels with left - right = 1 across every edge, or ``None``."""
        if not self.crossings:
            return []
        A, b = self._numbering_system()
        return lattice.solve_linear(A, b, lattice.ZZ)

    def is_almost_classical(self) -> bool:
        return self.alexander_numbering() is not None

    def is_checkerboard_colorable(self) -> bool:
        if not self.crossings:
            return True
        A, b = self._numbering_system()
        return lattice.solve_mod2(A, b) is not None

    def is_classical(self) -> bool:
        """Genus-zero Carter surface on every connected piece (planar Gauss code)."""
        if not self.crossings:
            return True
        return self.faces.genus == 0


# -- free functions mirroring the public operations --------------------

def arcs(d: LinkDiagram) -> list[Arc]:
    return d.arcs


def faces(d: LinkDiagram) -> FaceComplex:
    return d.faces


def is_checkerboard_colorable(d: LinkDiagram) -> bool:
    return d.is_checkerboard_colorable()


def is_almost_classical(d: LinkDiagram) -> bool:
    return d.is_almost_classical()


def linking_over(d: LinkDiagram, i: int, k: int) -> int:
    """Sum of signs of crossings where component ``i`` passes over component ``k``."""
    if i == k:
        raise SameComponent(f"components must differ (got {i} twice)")
    return sum(c.sign for c in d.crossings.values() if c.over[0] == i and c.under[0] == k)


def linking_under(d: LinkDiagram, i: int, k: int) -> int:
    """Sum of signs of crossings where component ``i`` passes under component ``k``."""
    return linking_over(d, k, i)


def linking_classical(d: LinkDiagram, i: int, k: int):
    """Average of the two one-sided counts; an integer for classical diagrams."""
    total = linking_over(d, i, k) + linking_over(d, k, i)
    return total // 2 if total % 2 == 0 else Fraction(total, 2)


# -- parsing ------------------------------------------------------------

_TOKEN = re.compile(r"^([OUou])(\d+)([+\-−])$")


def parse_gauss(text: str | Sequence[str]) -> LinkDiagram:
    """Parse the Gauss text format (or a list of component strings)."""
    if isinstance(text, str):
        lines = text.splitlines()
        skip_blank = True
    else:
        lines = list(text)
        skip_blank = False
    comps = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            if skip_blank:
                continue
            comps.append(())
            continue
        if line in ("-", "()"):
            comps.append(())
            continue
        toks = []
        for col, word in enumerate(re.split(r"[\s,]+", line), 1):
            if not word:
                continue
            m = _TOKEN.match(word)
            if m is None:
                raise MalformedToken(f"line {lineno}, token {col}: cannot parse {word!r}")
            role, cid, s = m.groups()
            toks.append(Token(int(cid), role.upper(), +1 if s == "+" else -1))
        comps.append(tuple(toks))
    if not comps:
        raise MalformedToken("no components in Gauss code")
    return LinkDiagram(tuple(comps))


_PD_ITEM = re.compile(r"X\s*\[\s*([^\]]*)\]")


def parse_pd(text: str) -> LinkDiagram:
    """Convert a planar PD code into a :class:`LinkDiagram`.

    Components are ordered by smallest edge label and traversed starting
    from it; crossings are numbered 1.. in PD order.  Under-strands fix the
    orientation of their component; a component that is never under uses
    increasing edge labels.
    """
    body = text.strip()
    if body.startswith("PD"):
        body = body[2:].strip().removeprefix("[").removesuffix("]")
    items = _PD_ITEM.findall(body)
    leftover = _PD_ITEM.sub("", body).replace(",", " ").strip()
    if leftover:
        raise InconsistentEdges(f"unrecognized PD text: {leftover[:40]!r}")
    if not items:
        raise InconsistentEdges("PD code has no crossings")
    X = []
    for k, item in enumerate(items, 1):
        try:
            labels = [int(v) for v in item.split(",")]
        except ValueError as exc:
            raise InconsistentEdges(f"crossing {k}: non-integer label in X[{item}]") from exc
        if len(labels) != 4:
            raise InconsistentEdges(f"crossing {k}: expected 4 labels, got {len(labels)}")
        X.append(labels)
    occ: dict[int, list[tuple[int, int]]] = {}
    for x, labels in enumerate(X):
        for s, lab in enumerate(labels):
            occ.setdefault(lab, []).append((x, s))
    bad = sorted(lab for lab, o in occ.items() if len(o) != 2)
    if bad:
        raise InconsistentEdges(f"labels appearing other than twice: {bad[:10]}")

    def walk(start_label, head):
        """Traverse a component; yields (label, (crossing, entry slot))."""
        out = []
        label, h = start_label, head
        while True:
            out.append((label, h))
            x, s = h
            exit_slot = (x, (s + 2) % 4)
            label = X[x][exit_slot[1]]
            a, b = occ[label]
            h = b if a == exit_slot else a
            if label == start_label and h == head:
                return out
            if len(out) > 4 * len(X):
                raise InconsistentEdges("strand traversal does not close up")

    seen: set[int] = set()
    walks = []
    for lab in sorted(occ):
        if lab in seen:
            continue
        fwd = walk(lab, occ[lab][1])
        unders = {s for _, (_, s) in fwd if s in (0, 2)}
        if unders == {0}:
            path = fwd
        elif unders == {2}:
            path = walk(lab, occ[lab][0])
        elif unders:
            raise OrientationFailure(f"under-strands on the component of edge {lab} disagree")
        else:
            seq = [l for l, _ in fwd]
            inc = sum(b == a + 1 for a, b in zip(seq, seq[1:] + seq[:1]))
            dec = sum(b == a - 1 for a, b in zip(seq, seq[1:] + seq[:1]))
            path = walk(lab, occ[lab][0]) if dec > inc else fwd
        seen.update(l for l, _ in path)
        walks.append(path)

    sign = {}
    for path in walks:
        for _, (x, s) in path:
            if s == 3:
                sign[x] = +1
            elif s == 1:
                sign[x] = -1
    comps = []
    for path in walks:
        comps.append(tuple(
            Token(x + 1, UNDER if s in (0, 2) else OVER, sign[x]) for _, (x, s) in path
        ))
    return LinkDiagram(tuple(comps))


def random_diagram(rng: random.Random, max_crossings: int = 6, max_components: int = 3,
                   min_components: int = 1, min_crossings: int = 0) -> LinkDiagram:
    """A random (generally virtual) Gauss code."""
    mu = rng.randint(min_components, max_components)
    n = rng.randint(min_crossings, max_crossings)
    comps: list[list[Token]] = [[] for _ in range(mu)]
    for c in range(1, n + 1):
        s = rng.choice((1, -1))
        for role in (OVER, UNDER):
            comps[rng.randrange(mu)].append(Token(c, role, s))
    for comp in comps:
        rng.shuffle(comp)
    return LinkDiagram(tuple(tuple(c) for c in comps))


def braid_closure(word: Sequence[int], strands: int | None = None) -> LinkDiagram:
    """Closure of a braid word; ``k`` is sigma_k (left strand over), ``-k`` its inverse.

    Strands run upward, so sigma_k crossings are positive.
    """
    n = strands if strands is not None else max((abs(g) for g in word), default=0) + 1
    for g in word:
        if g == 0 or abs(g) >= n:
            raise ValueError(f"generator {g} invalid on {n} strands")
    visited: set[int] = set()
    comps = []
    for start in range(1, n + 1):
        if start in visited:
            continue
        toks: list[Token] = []
        pos = start
        while True:
            visited.add(pos)
            for level, g in enumerate(word, 1):
                i = abs(g)
                if pos not in (i, i + 1):
                    continue
                left = pos == i
                over = left if g > 0 else not left
                toks.append(Token(level, OVER if over else UNDER, 1 if g > 0 else -1))
                pos = i + 1 if left else i
            if pos == start:
                break
        comps.append(tuple(toks))
    return LinkDiagram(tuple(comps))
