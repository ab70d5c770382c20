"""Cup product, circle products and bracket on minimal cochains.

Two versions of the insertion product are provided:

``literal``
    An inserted term contributes only when its path is a single arrow b and
    substituting b back into the chain gives an element of Gamma_n.

``peeled``
    The product transported from the reduced bar complex through the
    comparison maps.  For an outer cochain of degree n >= 2 the first slot
    may absorb a path q'b (contributing q' * f(b ...)) and the last slot a
    path bq' (contributing f(... b) * q').  For an outer cochain of degree 1
    the comparison map is the Leibniz expansion
    f(b_1 ... b_k) = sum_j b_1..b_{j-1} f(b_j) b_{j+1}..b_k.

Interior slots never peel, and both versions agree whenever every inserted
path is an arrow.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .basis import add_into, mul_elements
from .cohomology import Cohomology, CohomologyClass
from .complex import Cochain
from .linalg import json_scalar
from .presentation import Path

LITERAL, PEELED = "literal", "peeled"
VARIANTS = (LITERAL, PEELED)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def cup(f: Cochain, g: Cochain) -> Cochain:
    """(f u g)(a_1..a_{n+m}) = f(a_1..a_n) * g(a_{n+1}..a_{n+m})."""
    cx = f.cx
    p = cx.presentation
    n, m = f.degree, g.degree
    values = {}
    if f.is_zero() or g.is_zero():
        return cx.zero(n + m)
    for c in cx.chains(n + m):
        left = f(cx.sub(c, 0, n))
        if not left:
            continue
        right = g(cx.sub(c, n, n + m))
        if not right:
            continue
        prod = mul_elements(p, left, right)
        if prod:
            values[c] = prod
    return cx.from_values(n + m, values)


def _path_elem(p: Path) -> dict:
    return {p: 1}


def circ_at(f: Cochain, g: Cochain, i: int, variant: str = LITERAL) -> Cochain:
    """Insert g into slot i (1-based) of f; result has degree n + m - 1."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    cx = f.cx
    p = cx.presentation
    quiver = p.quiver
    n, m = f.degree, g.degree
    if not 1 <= i <= n:
        raise ValueError(f"slot {i} out of range 1..{n}")
    deg = n + m - 1
    if m == 0 or f.is_zero() or g.is_zero():
        # a degree-0 cochain takes values in E, outside the radical the outer cochain is defined on
        return cx.zero(deg)
    values: dict = {}
    for c in cx.chains(deg):
        inner = g(cx.sub(c, i - 1, i - 1 + m))
        if not inner:
            continue
        before = c.arrows[: i - 1]
        after = c.arrows[i - 1 + m :]
        acc: dict = {}
        for q, coef in inner.items():
            if len(q) == 1:
                sub = quiver.path(before + q.arrows + after)
                if sub is not None:
                    add_into(acc, f(sub), coef)
                continue
            if variant == LITERAL:
                continue
            k = len(q)
            if n == 1:
                for j in range(k):
                    mid = f(cx.sub(q, j, j + 1))
                    if mid:
                        term = mul_elements(p, mul_elements(p, _path_elem(cx.sub(q, 0, j)), mid), _path_elem(cx.sub(q, j + 1, k)))
                        add_into(acc, term, coef)
            elif i == 1:
                sub = quiver.path(q.arrows[-1:] + after)
                if sub is not None and f(sub):
                    add_into(acc, mul_elements(p, _path_elem(cx.sub(q, 0, k - 1)), f(sub)), coef)
            elif i == n:
                sub = quiver.path(before + q.arrows[:1])
                if sub is not None and f(sub):
                    add_into(acc, mul_elements(p, f(sub), _path_elem(cx.sub(q, 1, k))), coef)
        if acc:
            values[c] = acc
    return cx.from_values(deg, values)


def circ(f: Cochain, g: Cochain, variant: str = LITERAL) -> Cochain:
    """f o g = sum_i (-1)^{(i-1)(m-1)} f o_i g; zero when deg f = 0."""
    cx = f.cx
    n, m = f.degree, g.degree
    out = cx.zero(n + m - 1)
    for i in range(1, n + 1):
        out = out + _sign((i - 1) * (m - 1)) * circ_at(f, g, i, variant)
    return out


def bracket(f: Cochain, g: Cochain, variant: str = LITERAL) -> Cochain:
    """[f, g] = f o g - (-1)^{(n-1)(m-1)} g o f."""
    n, m = f.degree, g.degree
    if n + m - 1 < 0:
        return f.cx.zero(-1)
    return circ(f, g, variant) - _sign((n - 1) * (m - 1)) * circ(g, f, variant)


def induced_cup(H: Cohomology, a: CohomologyClass, b: CohomologyClass) -> CohomologyClass:
    return H.class_of(cup(a.representative, b.representative))


def induced_bracket(H: Cohomology, a: CohomologyClass, b: CohomologyClass, variant: str = LITERAL) -> CohomologyClass:
    return H.class_of(bracket(a.representative, b.representative, variant))


def first_arrow_indicator(f_elem_chain: Path, cx) -> Cochain:
    """The degree-1 cochain sending the first arrow a of a chain to a and everything else to 0."""
    a = f_elem_chain.arrows[0]
    ap = cx.presentation.quiver.arrow_path(a)
    return cx.cochain(1, {(ap, ap): 1})


@dataclass
class ProductTable:
    kind: str  # "cup" | "bracket"
    variant: str | None
    labels: list[tuple[int, int]]  # (degree, index within degree)
    entries: dict = field(default_factory=dict)  # (label_i, label_j) -> CohomologyClass

    @property
    def trivial(self) -> bool:
        return all(c.is_zero for c in self.entries.values())

    @property
    def trivial_above_one(self) -> bool:
        return all(c.is_zero for (a, b), c in self.entries.items() if a[0] > 1 and b[0] > 1)

    def nonzero_degree_pairs(self) -> list[tuple[int, int]]:
        return sorted({(a[0], b[0]) for (a, b), c in self.entries.items() if not c.is_zero})

    def as_dict(self) -> dict:
        rows = []
        for (a, b), c in self.entries.items():
            rows.append(
                {
                    "left": f"{a[0]}.{a[1]}",
                    "right": f"{b[0]}.{b[1]}",
                    "degree": c.degree,
                    "value": 0 if c.is_zero else [json_scalar(x) for x in c.coordinates],
                }
            )
        out = {"kind": self.kind, "entries": rows, "trivial": self.trivial}
        if self.kind == "bracket":
            out["variant"] = self.variant
            out["trivial_deg_gt_1"] = self.trivial_above_one
        return out


def _positive_classes(H: Cohomology):
    return [((n, j), cls) for n in range(1, H.top_degree + 1) for j, cls in enumerate(H.basis(n))]


def ring_table(H: Cohomology) -> ProductTable:
    classes = _positive_classes(H)
    table = ProductTable("cup", None, [lab for lab, _ in classes])
    for la, a in classes:
        for lb, b in classes:
            table.entries[(la, lb)] = induced_cup(H, a, b)
    return table


def lie_table(H: Cohomology, variant: str = LITERAL) -> ProductTable:
    classes = _positive_classes(H)
    table = ProductTable("bracket", variant, [lab for lab, _ in classes])
    for la, a in classes:
        for lb, b in classes:
            table.entries[(la, lb)] = induced_bracket(H, a, b, variant)
    return table
