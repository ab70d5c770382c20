"""The minimal Hochschild cochain complex of a quadratic monomial algebra.

Degree-n cochains are E-E-bimodule maps k Gamma_n -> A, written in the basis
of pairs (chain, parallel nonzero path).  The differential is

    (d f)(a_1 ... a_{n+1}) = a_1 f(a_2 ... a_{n+1}) + (-1)^{n+1} f(a_1 ... a_n) a_{n+1}.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .basis import chains, max_chain_length, multiply, nonzero_paths, sub_chain
from .linalg import Field, Matrix
from .presentation import Path, Presentation

MINUS, ZERO, PLUS = "minus", "zero", "plus"


@dataclass(frozen=True)
class CochainBasisElement:
    chain: Path
    value: Path
    tri_type: str

    @property
    def key(self) -> tuple[Path, Path]:
        return (self.chain, self.value)

    def label(self) -> str:
        return f"({self.chain.label()} | {self.value.label()})"


def tri_type(chain: Path, value: Path) -> str:
    if not chain.arrows:
        return ZERO
    if value.arrows[0] == chain.arrows[0]:
        return MINUS
    if value.arrows[-1] == chain.arrows[-1]:
        return PLUS
    return ZERO


class Cochain:
    """Sparse cochain: ``terms`` maps (chain, value path) to a nonzero scalar."""

    __slots__ = ("cx", "degree", "terms", "_by_chain")

    def __init__(self, cx: CochainComplex, degree: int, terms: dict | None = None):
        self.cx = cx
        self.degree = degree
        fld = cx.field
        self.terms = {k: fld(v) for k, v in (terms or {}).items() if v}
        self._by_chain = None

    @property
    def by_chain(self) -> dict[Path, dict[Path, object]]:
        if self._by_chain is None:
            grouped: dict = {}
            for (c, v), a in self.terms.items():
                grouped.setdefault(c, {})[v] = a
            self._by_chain = grouped
        return self._by_chain

    def __call__(self, chain: Path) -> dict:
        """Value at a chain, as an algebra element {path: coefficient}."""
        return self.by_chain.get(chain, {})

    def _combine(self, other: Cochain, sign) -> Cochain:
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + sign * v
        return Cochain(self.cx, self.degree, out)

    def __add__(self, other: Cochain) -> Cochain:
        return self._combine(other, 1)

    def __sub__(self, other: Cochain) -> Cochain:
        return self._combine(other, -1)

    def __neg__(self) -> Cochain:
        return Cochain(self.cx, self.degree, {k: -v for k, v in self.terms.items()})

    def __rmul__(self, scalar) -> Cochain:
        return Cochain(self.cx, self.degree, {k: scalar * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def vector(self) -> list:
        idx = self.cx.index(self.degree)
        v = [self.cx.field.zero] * len(idx)
        for k, a in self.terms.items():
            v[idx[k]] = a
        return v

    def support(self) -> list[tuple[str, str, object]]:
        order = self.cx.index(self.degree)
        return [(c.label(), p.label(), a) for (c, p), a in sorted(self.terms.items(), key=lambda t: order[t[0]])]

    def __repr__(self) -> str:
        body = " + ".join(f"{a}*({c} | {p})" for c, p, a in self.support()) or "0"
        return f"Cochain[{self.degree}]({body})"


class CochainComplex:
    """Bases, differentials and cochain constructors for one presentation."""

    def __init__(self, p: Presentation):
        self.presentation = p
        self.field = Field(p.characteristic)
        self._bases: dict[int, tuple[CochainBasisElement, ...]] = {}
        self._index: dict[int, dict] = {}
        self._deltas: dict[int, Matrix] = {}

    @cached_property
    def top_degree(self) -> int:
        return max_chain_length(self.presentation)

    @cached_property
    def parallel(self) -> dict[tuple[str, str], tuple[Path, ...]]:
        out: dict = {}
        for path in nonzero_paths(self.presentation):
            out.setdefault((path.source, path.target), []).append(path)
        return {k: tuple(v) for k, v in out.items()}

    @cached_property
    def killed_before(self) -> dict[str, tuple[str, ...]]:
        p = self.presentation
        return {
            a.id: tuple(c.id for c in p.quiver.incoming[a.source] if (c.id, a.id) in p.relation_set)
            for a in p.quiver.arrows
        }

    def chains(self, n: int) -> tuple[Path, ...]:
        return chains(self.presentation, n)

    def basis(self, n: int) -> tuple[CochainBasisElement, ...]:
        if n not in self._bases:
            out = []
            for c in self.chains(n):
                for v in self.parallel.get((c.source, c.target), ()):
                    out.append(CochainBasisElement(c, v, tri_type(c, v)))
            self._bases[n] = tuple(out)
        return self._bases[n]

    def index(self, n: int) -> dict[tuple[Path, Path], int]:
        if n not in self._index:
            self._index[n] = {b.key: i for i, b in enumerate(self.basis(n))}
        return self._index[n]

    def dim(self, n: int) -> int:
        return len(self.basis(n))

    # constructors

    def zero(self, n: int) -> Cochain:
        return Cochain(self, n)

    def cochain(self, n: int, terms: dict) -> Cochain:
        idx = self.index(n)
        for k in terms:
            if k not in idx:
                raise KeyError(f"{k[0].label()} | {k[1].label()} is not a degree-{n} basis pair")
        return Cochain(self, n, terms)

    def basis_cochain(self, n: int, j: int) -> Cochain:
        return Cochain(self, n, {self.basis(n)[j].key: 1})

    def from_vector(self, n: int, vec) -> Cochain:
        b = self.basis(n)
        if len(vec) != len(b):
            raise ValueError("vector length does not match basis")
        return Cochain(self, n, {b[j].key: x for j, x in enumerate(vec) if x})

    def from_values(self, n: int, values: dict) -> Cochain:
        """Cochain from {chain: algebra element}; every path must be parallel to its chain."""
        terms = {}
        for c, elem in values.items():
            for v, a in elem.items():
                if a:
                    terms[(c, v)] = terms.get((c, v), 0) + a
        return self.cochain(n, terms)

    def unit(self) -> Cochain:
        """The identity of A as a degree-0 cochain."""
        return Cochain(self, 0, {(c, c): 1 for c in self.chains(0)})

    def path(self, *arrows: str) -> Path:
        return self.presentation.quiver.path(arrows)

    def pair(self, chain, value) -> tuple[Path, Path]:
        """Basis key from arrow-id strings, e.g. pair("a2 a3", "b"); a vertex id for degree 0."""
        q = self.presentation.quiver

        def as_path(spec):
            if isinstance(spec, Path):
                return spec
            if spec in q.arrow and " " not in spec:
                return q.arrow_path(spec)
            toks = spec.split()
            if len(toks) == 1 and spec in q.vertices:
                return q.trivial(spec)
            return q.path(toks)

        return (as_path(chain), as_path(value))

    # the differential

    def extend_left(self, c: Path) -> tuple[str, ...]:
        """Arrows a with a*c a chain of length len(c)+1."""
        if not c.arrows:
            return tuple(a.id for a in self.presentation.quiver.incoming[c.source])
        return self.killed_before[c.arrows[0]]

    def extend_right(self, c: Path) -> tuple[str, ...]:
        if not c.arrows:
            return tuple(a.id for a in self.presentation.quiver.outgoing[c.source])
        return self.presentation.killed_after[c.arrows[-1]]

    def delta(self, f: Cochain) -> Cochain:
        p = self.presentation
        q = p.quiver
        n = f.degree
        sign = -1 if n % 2 == 0 else 1  # (-1)^(n+1)
        out: dict = {}
        for c, elem in f.by_chain.items():
            for a in self.extend_left(c):
                apath = q.arrow_path(a)
                big = Path(apath.source, c.target, (a,) + c.arrows)
                for v, coef in elem.items():
                    r = multiply(p, apath, v)
                    if r is not None:
                        out[(big, r)] = out.get((big, r), 0) + coef
            for a in self.extend_right(c):
                apath = q.arrow_path(a)
                big = Path(c.source, apath.target, c.arrows + (a,))
                for v, coef in elem.items():
                    r = multiply(p, v, apath)
                    if r is not None:
                        out[(big, r)] = out.get((big, r), 0) + sign * coef
        return Cochain(self, n + 1, out)

    def delta_matrix(self, n: int) -> Matrix:
        """Matrix of d^n: columns indexed by B^n, rows by B^{n+1}."""
        if n not in self._deltas:
            rows = self.index(n + 1)
            ent = {}
            for j in range(self.dim(n)):
                for k, v in self.delta(self.basis_cochain(n, j)).terms.items():
                    ent[(rows[k], j)] = v
            self._deltas[n] = Matrix(self.dim(n + 1), self.dim(n), ent, self.field)
        return self._deltas[n]

    def is_cocycle(self, f: Cochain) -> bool:
        return self.delta(f).is_zero()

    def sub(self, c: Path, i: int, j: int) -> Path:
        return sub_chain(self.presentation, c, i, j)


@lru_cache(maxsize=128)
def cochain_complex(p: Presentation) -> CochainComplex:
    return CochainComplex(p)


def cochain_basis(p: Presentation, n: int) -> tuple[CochainBasisElement, ...]:
    return cochain_complex(p).basis(n)


def delta_matrix(p: Presentation, n: int) -> Matrix:
    return cochain_complex(p).delta_matrix(n)


# Normalisation maps.  They are defined for chains of length >= 2, where the
# first and last arrows of a chain differ; a degree-1 pair (a, a) both starts
# and ends with its chain, so degree-1 cochains are left untouched.


def _require(elem: CochainBasisElement, kind: str):
    if elem.tri_type != kind:
        raise ValueError(f"{elem.label()} has type {elem.tri_type}, expected {kind}")
    if len(elem.chain) < 2:
        raise ValueError("shift maps need chains of length >= 2")


def shift_plus(cx: CochainComplex, elem: CochainBasisElement) -> Cochain:
    """f = (a_1...a_n, a_1 p)  ->  sum over a_{n+1} of (-1)^{n+1} (a_2...a_{n+1}, p a_{n+1})."""
    _require(elem, MINUS)
    p = cx.presentation
    q = p.quiver
    n = len(elem.chain)
    c, v = elem.chain, elem.value
    tail = Path(q.arrow[v.arrows[0]].target, v.target, v.arrows[1:])
    sign = 1 if (n + 1) % 2 == 0 else -1
    terms = {}
    for b in p.killed_after[c.arrows[-1]]:
        shifted = Path(q.arrow[c.arrows[1]].source, q.arrow[b].target, c.arrows[1:] + (b,))
        r = multiply(p, tail, q.arrow_path(b))
        if r is not None:
            terms[(shifted, r)] = sign
    return Cochain(cx, n, terms)


def shift_minus(cx: CochainComplex, elem: CochainBasisElement) -> Cochain:
    """g = (a_1...a_n, q a_n)  ->  sum over a_0 of (-1)^{n+1} (a_0...a_{n-1}, a_0 q)."""
    _require(elem, PLUS)
    p = cx.presentation
    qv = p.quiver
    n = len(elem.chain)
    c, v = elem.chain, elem.value
    head = Path(v.source, qv.arrow[v.arrows[-1]].source, v.arrows[:-1])
    sign = 1 if (n + 1) % 2 == 0 else -1
    terms = {}
    for a0 in cx.killed_before[c.arrows[0]]:
        shifted = Path(qv.arrow[a0].source, qv.arrow[c.arrows[-2]].target, (a0,) + c.arrows[:-1])
        r = multiply(p, qv.arrow_path(a0), head)
        if r is not None:
            terms[(shifted, r)] = sign
    return Cochain(cx, n, terms)


def shift_witness(cx: CochainComplex, elem: CochainBasisElement) -> Cochain:
    """The degree n-1 cochain h with elem - d h equal to its shift."""
    p = cx.presentation
    q = p.quiver
    c, v = elem.chain, elem.value
    n = len(c)
    if elem.tri_type == MINUS:
        tail = Path(q.arrow[v.arrows[0]].target, v.target, v.arrows[1:])
        return Cochain(cx, n - 1, {(cx.sub(c, 1, n), tail): 1})
    if elem.tri_type == PLUS:
        head = Path(v.source, q.arrow[v.arrows[-1]].source, v.arrows[:-1])
        return Cochain(cx, n - 1, {(cx.sub(c, 0, n - 1), head): 1 if n % 2 == 0 else -1})
    raise ValueError("only minus/plus elements have a shift witness")


def normalize(phi: Cochain, direction: str) -> Cochain:
    """phi_leq = f_+ + h + g  or  phi_geq = f + h + g_-  (extended linearly)."""
    if direction not in ("leq", "geq"):
        raise ValueError("direction must be 'leq' or 'geq'")
    if phi.degree < 1:
        raise ValueError("normalize needs degree >= 1")
    cx = phi.cx
    if phi.degree == 1:
        return phi
    moving = MINUS if direction == "leq" else PLUS
    shift = shift_plus if direction == "leq" else shift_minus
    idx = cx.index(phi.degree)
    basis = cx.basis(phi.degree)
    out = cx.zero(phi.degree)
    keep = {}
    for k, a in phi.terms.items():
        elem = basis[idx[k]]
        if elem.tri_type == moving:
            out = out + a * shift(cx, elem)
        else:
            keep[k] = a
    return out + Cochain(cx, phi.degree, keep)
