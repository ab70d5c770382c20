"""Bound quivers with quadratic monomial relations.

A presentation is a finite acyclic quiver together with a set of length-2
relations.  Paths compose left to right: ``a b`` means "first a, then b".
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property


class PresentationError(ValueError):
    """Raised for malformed or invalid presentation documents."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str
    target: str


@dataclass(frozen=True)
class Path:
    """A path in the quiver; ``arrows`` empty means the trivial path at ``source``."""

    source: str
    target: str
    arrows: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def label(self) -> str:
        return " ".join(self.arrows) if self.arrows else f"e_{self.source}"

    def __str__(self) -> str:
        return self.label()


def compose(p: Path, q: Path) -> Path | None:
    """Concatenate ``p`` then ``q``; ``None`` when target(p) != source(q)."""
    if p.target != q.source:
        return None
    return Path(p.source, q.target, p.arrows + q.arrows)


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    @cached_property
    def arrow(self) -> dict[str, Arrow]:
        return {a.id: a for a in self.arrows}

    @cached_property
    def outgoing(self) -> dict[str, tuple[Arrow, ...]]:
        out: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            out[a.source].append(a)
        return {v: tuple(lst) for v, lst in out.items()}

    @cached_property
    def incoming(self) -> dict[str, tuple[Arrow, ...]]:
        inc: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            inc[a.target].append(a)
        return {v: tuple(lst) for v, lst in inc.items()}

    @cached_property
    def topological_order(self) -> tuple[str, ...] | None:
        """Kahn's algorithm, ties broken by declaration order; None if cyclic."""
        position = {v: i for i, v in enumerate(self.vertices)}
        indeg = {v: len(self.incoming[v]) for v in self.vertices}
        ready = sorted((v for v in self.vertices if indeg[v] == 0), key=position.__getitem__)
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for a in self.outgoing[v]:
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    ready.append(a.target)
                    ready.sort(key=position.__getitem__)
        if len(order) != len(self.vertices):
            return None
        return tuple(order)

    def trivial(self, v: str) -> Path:
        return Path(v, v)

    def arrow_path(self, a: str) -> Path:
        arr = self.arrow[a]
        return Path(arr.source, arr.target, (a,))

    def path(self, arrows) -> Path | None:
        """Path for a non-empty arrow sequence, or None if not composable."""
        arrows = tuple(arrows)
        first = self.arrow[arrows[0]]
        here = first.target
        for a in arrows[1:]:
            arr = self.arrow[a]
            if arr.source != here:
                return None
            here = arr.target
        return Path(first.source, here, arrows)


@dataclass(frozen=True)
class Presentation:
    """``A = kQ/I`` with I generated by the given arrow pairs.

    ``characteristic`` is 0 for the rationals or a prime p for F_p.
    """

    quiver: Quiver
    relations: tuple[tuple[str, str], ...]
    characteristic: int = 0
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        validate(self)

    @cached_property
    def relation_set(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.relations)

    @cached_property
    def killed_after(self) -> dict[str, tuple[str, ...]]:
        """arrow -> arrows b (declaration order) with (arrow, b) a relation."""
        return {
            a.id: tuple(b.id for b in self.quiver.outgoing[a.target] if (a.id, b.id) in self.relation_set)
            for a in self.quiver.arrows
        }

    @cached_property
    def allowed_after(self) -> dict[str, tuple[str, ...]]:
        """arrow -> arrows b with a b a nonzero path."""
        return {
            a.id: tuple(b.id for b in self.quiver.outgoing[a.target] if (a.id, b.id) not in self.relation_set)
            for a in self.quiver.arrows
        }

    def is_zero_path(self, p: Path) -> bool:
        return any(pair in self.relation_set for pair in zip(p.arrows, p.arrows[1:]))

    @property
    def field_name(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    def with_characteristic(self, characteristic: int) -> Presentation:
        return Presentation(self.quiver, self.relations, characteristic, self.name)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def validate(p: Presentation) -> None:
    q = p.quiver
    if len(set(q.vertices)) != len(q.vertices):
        dup = next(v for v in q.vertices if q.vertices.count(v) > 1)
        raise PresentationError(f"duplicate vertex id {dup!r}")
    ids = [a.id for a in q.arrows]
    if len(set(ids)) != len(ids):
        dup = next(a for a in ids if ids.count(a) > 1)
        raise PresentationError(f"duplicate arrow id {dup!r}")
    vs = set(q.vertices)
    for a in q.arrows:
        for end in (a.source, a.target):
            if end not in vs:
                raise PresentationError(f"arrow {a.id!r} references unknown vertex {end!r}")
    if len(set(p.relations)) != len(p.relations):
        raise PresentationError("duplicate relation")
    for a, b in p.relations:
        for x in (a, b):
            if x not in q.arrow:
                raise PresentationError(f"relation references unknown arrow {x!r}")
        if q.arrow[a].target != q.arrow[b].source:
            raise PresentationError(f"relation {a} {b} is not composable: target({a}) != source({b})")
    if q.topological_order is None:
        raise PresentationError("quiver has an oriented cycle")
    if p.characteristic and not _is_prime(p.characteristic):
        raise PresentationError(f"field characteristic {p.characteristic} is not prime")


_TOKEN = re.compile(r"\S+")


def _parse_field(token: str, line: int, col: int) -> int:
    if token == "Q":
        return 0
    m = re.fullmatch(r"F(\d+)", token)
    if not m or not _is_prime(int(m.group(1))):
        raise PresentationError(f"bad field {token!r} (expected Q or F<prime>)", line, col)
    return int(m.group(1))


def parse_presentation(text: str, name: str | None = None) -> Presentation:
    """Parse the line-oriented presentation format.

    Recognised lines (``#`` starts a comment)::

        vertices: 1 2 3
        arrow: a 1 2
        relation: a b
        field: Q | F<p>
    """
    vertices: list[str] = []
    arrows: list[Arrow] = []
    relations: list[tuple[str, str]] = []
    characteristic = 0
    seen_vertices: set[str] = set()
    seen_arrows: dict[str, Arrow] = {}
    seen_relations: set[tuple[str, str]] = set()
    pending_relations = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if ":" not in line:
            col = len(line) - len(line.lstrip()) + 1
            raise PresentationError("expected '<keyword>: ...'", lineno, col)
        key, rest = line.split(":", 1)
        key_col = len(key) - len(key.lstrip()) + 1
        key = key.strip()
        offset = len(line) - len(rest)
        tokens = [(m.group(), offset + m.start() + 1) for m in _TOKEN.finditer(rest)]
        if key == "vertices":
            for tok, col in tokens:
                if tok in seen_vertices:
                    raise PresentationError(f"duplicate vertex id {tok!r}", lineno, col)
                seen_vertices.add(tok)
                vertices.append(tok)
        elif key == "arrow":
            if len(tokens) != 3:
                raise PresentationError("arrow needs exactly: <id> <source> <target>", lineno, offset + 1)
            (aid, c0), (src, c1), (tgt, c2) = tokens
            if aid in seen_arrows:
                raise PresentationError(f"duplicate arrow id {aid!r}", lineno, c0)
            for v, c in ((src, c1), (tgt, c2)):
                if v not in seen_vertices:
                    raise PresentationError(f"unknown vertex {v!r}", lineno, c)
            arr = Arrow(aid, src, tgt)
            seen_arrows[aid] = arr
            arrows.append(arr)
        elif key == "relation":
            if len(tokens) != 2:
                raise PresentationError("relation needs exactly two arrow ids", lineno, offset + 1)
            pending_relations.append((lineno, tokens))
        elif key == "field":
            if len(tokens) != 1:
                raise PresentationError("field needs one value", lineno, offset + 1)
            characteristic = _parse_field(tokens[0][0], lineno, tokens[0][1])
        else:
            raise PresentationError(f"unknown keyword {key!r}", lineno, key_col)

    # relations may precede the arrows they mention
    for lineno, ((a, ca), (b, cb)) in pending_relations:
        for x, c in ((a, ca), (b, cb)):
            if x not in seen_arrows:
                raise PresentationError(f"unknown arrow {x!r}", lineno, c)
        if seen_arrows[a].target != seen_arrows[b].source:
            raise PresentationError(
                f"relation {a} {b} is not composable: target({a}) != source({b})", lineno, cb
            )
        if (a, b) in seen_relations:
            raise PresentationError(f"duplicate relation {a} {b}", lineno, ca)
        seen_relations.add((a, b))
        relations.append((a, b))

    return Presentation(Quiver(tuple(vertices), tuple(arrows)), tuple(relations), characteristic, name)


def emit_presentation(p: Presentation) -> str:
    """Canonical text form; ``parse_presentation`` inverts it exactly."""
    lines = ["vertices: " + " ".join(p.quiver.vertices)]
    lines += [f"arrow: {a.id} {a.source} {a.target}" for a in p.quiver.arrows]
    lines += [f"relation: {a} {b}" for a, b in p.relations]
    if p.characteristic:
        lines.append(f"field: F{p.characteristic}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ClassReport:
    triangular: bool
    s2: bool
    s3: bool
    g1: bool
    string: bool
    gentle: bool
    witnesses: dict = field(default_factory=dict, compare=False)

    def as_dict(self) -> dict:
        flags = {k: getattr(self, k) for k in ("triangular", "s2", "s3", "g1", "string", "gentle")}
        return {"flags": flags, "witnesses": {k: list(v) for k, v in self.witnesses.items()}}


def _at_most_one(p: Presentation, arrow: str, in_relation: bool):
    """Witness tuple if some arrow has two successors or two predecessors of the given kind."""
    q = p.quiver
    a = q.arrow[arrow]
    after = [b.id for b in q.outgoing[a.target] if ((arrow, b.id) in p.relation_set) == in_relation]
    if len(after) > 1:
        return (arrow, "after", after[0], after[1])
    before = [c.id for c in q.incoming[a.source] if ((c.id, arrow) in p.relation_set) == in_relation]
    if len(before) > 1:
        return (arrow, "before", before[0], before[1])
    return None


def classify(p: Presentation) -> ClassReport:
    q = p.quiver
    witnesses = {}
    for v in q.vertices:
        if len(q.outgoing[v]) > 2:
            witnesses["s2"] = (v, "out", *(a.id for a in q.outgoing[v]))
            break
        if len(q.incoming[v]) > 2:
            witnesses["s2"] = (v, "in", *(a.id for a in q.incoming[v]))
            break
    for a in q.arrows:
        w = _at_most_one(p, a.id, in_relation=False)
        if w:
            witnesses["s3"] = w
            break
    for a in q.arrows:
        w = _at_most_one(p, a.id, in_relation=True)
        if w:
            witnesses["g1"] = w
            break
    s2 = "s2" not in witnesses
    s3 = "s3" not in witnesses
    g1 = "g1" not in witnesses
    string = s2 and s3
    gentle = string and g1
    if not string:
        witnesses["string"] = witnesses.get("s2") or witnesses["s3"]
    if not gentle:
        witnesses["gentle"] = witnesses["string"] if not string else witnesses["g1"]
    return ClassReport(True, s2, s3, g1, string, gentle, witnesses)
