"""Seeded random presentations of a requested class."""
from __future__ import annotations

import hashlib
import itertools
import random
from dataclasses import dataclass, replace

from .presentation import Arrow, ClassReport, Presentation, Quiver, classify

CLASSES = ("quadratic", "quadratic-s3", "string", "gentle")
MAX_ATTEMPTS = 10_000


class GenerationExhausted(RuntimeError):
    def __init__(self, spec: RandomSpec, attempts: int):
        self.spec = spec
        super().__init__(f"no {spec.target} presentation found in {attempts} attempts for {spec}")


@dataclass(frozen=True)
class RandomSpec:
    target: str
    vertices: int
    arrows: int
    density: float
    seed: int

    def __post_init__(self):
        if self.target not in CLASSES:
            raise ValueError(f"unknown class {self.target!r}; expected one of {CLASSES}")
        if self.vertices < 1:
            raise ValueError("vertex count must be >= 1")
        if self.arrows < 0:
            raise ValueError("arrow count must be >= 0")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError("density must lie in [0, 1]")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def child(self, index: int) -> RandomSpec:
        """Spec for the index-th member of a fuzz run."""
        digest = hashlib.sha256(f"{self.seed}:{index}".encode()).digest()
        return replace(self, seed=int.from_bytes(digest[:8], "big"))

    def cli_args(self) -> str:
        return (
            f"--class {self.target} --vertices {self.vertices} --arrows {self.arrows} "
            f"--density {self.density} --seed {self.seed}"
        )


def satisfies(report: ClassReport, target: str) -> bool:
    return {
        "quadratic": True,
        "quadratic-s3": report.s3,
        "string": report.string,
        "gentle": report.gentle,
    }[target]


def _is_matching(pairs) -> bool:
    left = [a for a, _ in pairs]
    right = [b for _, b in pairs]
    return len(set(left)) == len(left) and len(set(right)) == len(right)


def _place_arrows(spec: RandomSpec, rng: random.Random, names: list[str]) -> list[Arrow] | None:
    rank = {v: r for r, v in enumerate(rng.sample(names, len(names)))}
    capped = spec.target in ("string", "gentle")
    outdeg = dict.fromkeys(names, 0)
    indeg = dict.fromkeys(names, 0)
    arrows = []
    for k in range(spec.arrows):
        cands = [
            (u, v)
            for u in names
            for v in names
            if rank[u] < rank[v] and not (capped and (outdeg[u] >= 2 or indeg[v] >= 2))
        ]
        if not cands:
            return None
        u, v = rng.choice(cands)
        outdeg[u] += 1
        indeg[v] += 1
        arrows.append(Arrow(f"x{k + 1}", u, v))
    return arrows


def _local_relations(spec: RandomSpec, rng: random.Random, pairs: list[tuple[str, str]]) -> list[tuple[str, str]]:
    d = spec.density
    if spec.target in ("string", "gentle"):
        # at most 2 x 2 pairs per vertex: sample exactly among admissible subsets
        options = []
        for mask in itertools.product((False, True), repeat=len(pairs)):
            rel = [pr for pr, m in zip(pairs, mask) if m]
            non = [pr for pr, m in zip(pairs, mask) if not m]
            if not _is_matching(non):
                continue
            if spec.target == "gentle" and not _is_matching(rel):
                continue
            options.append((rel, d ** len(rel) * (1 - d) ** len(non)))
        total = sum(w for _, w in options)
        if total == 0:
            return [] if not options else options[0][0]
        pick = rng.random() * total
        for rel, w in options:
            pick -= w
            if pick < 0:
                return rel
        return options[-1][0]
    rel = [pr for pr in pairs if rng.random() < d]
    if spec.target == "quadratic-s3":
        non = [pr for pr in pairs if pr not in rel]
        rng.shuffle(non)
        used_a, used_b = set(), set()
        for a, b in non:
            if a in used_a or b in used_b:
                rel.append((a, b))
            else:
                used_a.add(a)
                used_b.add(b)
    return rel


def _attempt(spec: RandomSpec, rng: random.Random) -> Presentation | None:
    names = [str(i) for i in range(1, spec.vertices + 1)]
    arrows = _place_arrows(spec, rng, names)
    if arrows is None:
        return None
    quiver = Quiver(tuple(names), tuple(arrows))
    order = {a.id: i for i, a in enumerate(arrows)}
    relations = []
    for v in names:
        pairs = [(a.id, b.id) for a in quiver.incoming[v] for b in quiver.outgoing[v]]
        if pairs:
            relations += _local_relations(spec, rng, pairs)
    relations.sort(key=lambda r: (order[r[0]], order[r[1]]))
    return Presentation(quiver, tuple(relations))


def random_presentation(spec: RandomSpec, max_attempts: int = MAX_ATTEMPTS) -> Presentation:
    """Deterministic in the seed; the result always satisfies the requested class."""
    rng = random.Random(spec.seed)
    for _ in range(max_attempts):
        p = _attempt(spec, rng)
        if p is not None and satisfies(classify(p), spec.target):
            return p
    raise GenerationExhausted(spec, max_attempts)
