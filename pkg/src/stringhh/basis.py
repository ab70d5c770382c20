"""Path basis of A = kQ/I, chain sets Gamma_n, and multiplication modulo I."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .presentation import Path, Presentation

# An algebra element is a dict {Path: nonzero scalar}; the empty dict is zero.


@dataclass(frozen=True)
class PathBasis:
    paths: tuple[Path, ...]

    @property
    def index(self) -> dict[Path, int]:
        return {p: i for i, p in enumerate(self.paths)}

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def __contains__(self, p) -> bool:
        return p in self.index


def _arrow_rank(p: Presentation) -> dict[str, int]:
    return {a.id: i for i, a in enumerate(p.quiver.arrows)}


def _path_key(p: Presentation):
    vpos = {v: i for i, v in enumerate(p.quiver.topological_order)}
    apos = _arrow_rank(p)
    return lambda path: (len(path), vpos[path.source], tuple(apos[a] for a in path.arrows))


@lru_cache(maxsize=256)
def nonzero_paths(p: Presentation) -> PathBasis:
    """All paths avoiding every relation: trivial paths, then by length."""
    q = p.quiver
    layer = [q.arrow_path(a.id) for a in q.arrows]
    found = [q.trivial(v) for v in q.topological_order] + layer
    while layer:
        nxt = []
        for path in layer:
            for b in p.allowed_after[path.arrows[-1]]:
                nxt.append(Path(path.source, q.arrow[b].target, path.arrows + (b,)))
        found += nxt
        layer = nxt
    return PathBasis(tuple(sorted(found, key=_path_key(p))))


def multiply(p: Presentation, x: Path, y: Path) -> Path | None:
    """Product of two basis paths in A; None is the zero element."""
    if x.target != y.source:
        return None
    if x.arrows and y.arrows and (x.arrows[-1], y.arrows[0]) in p.relation_set:
        return None
    return Path(x.source, y.target, x.arrows + y.arrows)


def mul_elements(p: Presentation, x: dict, y: dict) -> dict:
    out: dict = {}
    for px, cx in x.items():
        for py, cy in y.items():
            r = multiply(p, px, py)
            if r is not None:
                out[r] = out.get(r, 0) + cx * cy
    return {k: v for k, v in out.items() if v}


def add_into(acc: dict, x: dict, scale=1) -> None:
    for k, v in x.items():
        s = acc.get(k, 0) + scale * v
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)


@lru_cache(maxsize=1024)
def chains(p: Presentation, n: int) -> tuple[Path, ...]:
    """Gamma_n: length-n arrow sequences whose consecutive pairs all lie in I."""
    q = p.quiver
    if n < 0:
        return ()
    if n == 0:
        return tuple(q.trivial(v) for v in q.topological_order)
    if n == 1:
        return tuple(q.arrow_path(a.id) for a in q.arrows)
    out = []
    for c in chains(p, n - 1):
        for b in p.killed_after[c.arrows[-1]]:
            out.append(Path(c.source, q.arrow[b].target, c.arrows + (b,)))
    return tuple(out)


def max_chain_length(p: Presentation) -> int:
    n = 0
    while chains(p, n + 1):
        n += 1
    return n


def sub_chain(p: Presentation, c: Path, i: int, j: int) -> Path:
    """Arrows i..j-1 of ``c`` as a path; the trivial path at the right vertex when i == j."""
    if i == j:
        if i == 0:
            return p.quiver.trivial(c.source)
        return p.quiver.trivial(p.quiver.arrow[c.arrows[i - 1]].target)
    q = p.quiver
    return Path(q.arrow[c.arrows[i]].source, q.arrow[c.arrows[j - 1]].target, c.arrows[i:j])
