"""Executable checks of the structural identities and product properties.

Each check returns an :class:`Outcome`; whether a failing outcome is a hard
failure or a report-only finding is decided by the property's hypothesis in
:mod:`stringhh.harness`.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .basis import mul_elements
from .cohomology import Cohomology, cohomology
from .complex import MINUS, PLUS, Cochain, normalize, shift_minus, shift_plus, shift_witness
from .gerstenhaber import LITERAL, PEELED, bracket, circ, circ_at, cup, first_arrow_indicator, induced_bracket, induced_cup
from .linalg import Matrix, json_scalar, kernel_basis, rank
from .presentation import Presentation


@dataclass
class Outcome:
    ok: bool
    witness: dict | None = None
    notes: list[str] = field(default_factory=list)


def support(c: Cochain) -> list:
    return [[ch, pa, json_scalar(a)] for ch, pa, a in c.support()]


def _cls_payload(H: Cohomology, n: int, j: int) -> dict:
    return {"degree": n, "index": j, "support": support(H.basis(n)[j].representative)}


def check_complex_valid(p: Presentation) -> Outcome:
    H = cohomology(p)
    cx = H.cx
    for n in range(cx.top_degree + 1):
        comp = cx.delta_matrix(n + 1) @ cx.delta_matrix(n)
        if not comp.is_zero():
            return Outcome(False, {"degree": n, "nonzero_entries": comp.triplets()[:10]})
        for b in cx.basis(n):
            kinds = []
            if n and b.value.arrows[0] == b.chain.arrows[0]:
                kinds.append(MINUS)
            if n and b.value.arrows[-1] == b.chain.arrows[-1] and MINUS not in kinds:
                kinds.append(PLUS)
            expected = kinds[0] if kinds else "zero"
            if b.tri_type != expected or p.is_zero_path(b.value) or b.value.source != b.chain.source:
                return Outcome(False, {"degree": n, "element": b.label(), "tri_type": b.tri_type})
    return Outcome(True)


def check_normalization(p: Presentation) -> Outcome:
    H = cohomology(p)
    cx = H.cx
    top = cx.top_degree
    for n in range(2, top + 1):
        for b in cx.basis(n):
            if b.tri_type not in (MINUS, PLUS):
                continue
            f = cx.cochain(n, {b.key: 1})
            shifted = shift_plus(cx, b) if b.tri_type == MINUS else shift_minus(cx, b)
            lhs = f - cx.delta(shift_witness(cx, b))
            if lhs != shifted:
                return Outcome(False, {"check": "shift-identity", "element": b.label(), "f-dh": support(lhs), "shift": support(shifted)})
            if not H.is_coboundary(f - shifted):
                return Outcome(False, {"check": "shift-coboundary", "element": b.label()})
        for j, b in enumerate(cx.basis(n)):
            phi = cx.basis_cochain(n, j)
            leq, geq = normalize(phi, "leq"), normalize(phi, "geq")
            types = {x.key: x.tri_type for x in cx.basis(n)}
            if any(types[k] == MINUS for k in leq.terms) or any(types[k] == PLUS for k in geq.terms):
                return Outcome(False, {"check": "support", "element": b.label(), "leq": support(leq), "geq": support(geq)})
            for other in (leq, geq):
                if not H.is_coboundary(phi - other):
                    return Outcome(False, {"check": "normalized-coboundary", "element": b.label()})
    q = p.quiver
    for n in range(1, top + 1):
        for vec in kernel_basis(cx.delta_matrix(n)):
            phi = cx.from_vector(n, vec)
            leq, geq = normalize(phi, "leq"), normalize(phi, "geq")
            for c in cx.chains(n):
                for a in cx.extend_right(c):
                    if mul_elements(p, leq(c), {q.arrow_path(a): 1}):
                        return Outcome(False, {"check": "annihilation-right", "cocycle": support(phi), "chain": c.label(), "arrow": a})
                for a in cx.extend_left(c):
                    if mul_elements(p, {q.arrow_path(a): 1}, geq(c)):
                        return Outcome(False, {"check": "annihilation-left", "cocycle": support(phi), "chain": c.label(), "arrow": a})
    return Outcome(True)


def _positive_pairs(H: Cohomology, min_degree: int = 1):
    top = H.top_degree
    for n in range(min_degree, top + 1):
        for m in range(min_degree, top + 1):
            for i, a in enumerate(H.basis(n)):
                for j, b in enumerate(H.basis(m)):
                    yield n, i, a, m, j, b


def check_cup_trivial(p: Presentation) -> Outcome:
    H = cohomology(p)
    found = []
    for n, i, a, m, j, b in _positive_pairs(H):
        if n + m > H.top_degree:
            continue
        cls = induced_cup(H, a, b)
        if not cls.is_zero:
            found.append({"left": _cls_payload(H, n, i), "right": _cls_payload(H, m, j), "product": support(cls.representative)})
    if found:
        return Outcome(False, found[0], [f"{len(found)} nonzero cup products of positive-degree classes"])
    return Outcome(True)


def check_bracket_gentle_cochain(p: Presentation) -> Outcome:
    cx = cohomology(p).cx
    top = cx.top_degree
    disagreements = 0
    for n in range(2, top + 1):
        for m in range(2, top + 2 - n):
            for jf in range(cx.dim(n)):
                f = cx.basis_cochain(n, jf)
                for jg in range(cx.dim(m)):
                    g = cx.basis_cochain(m, jg)
                    for i in range(1, n + 1):
                        lit = circ_at(f, g, i, LITERAL)
                        if not lit.is_zero():
                            return Outcome(False, {"f": support(f), "g": support(g), "slot": i, "value": support(lit)})
                        if not circ_at(f, g, i, PEELED).is_zero():
                            disagreements += 1
    notes = [f"peeled circle products nonzero at cochain level in {disagreements} cases"] if disagreements else []
    return Outcome(True, None, notes)


def check_bracket_gentle(p: Presentation) -> Outcome:
    H = cohomology(p)
    for n, i, a, m, j, b in _positive_pairs(H, min_degree=2):
        if n + m - 1 > H.top_degree:
            continue
        for variant in (LITERAL, PEELED):
            cls = induced_bracket(H, a, b, variant)
            if not cls.is_zero:
                return Outcome(False, {"variant": variant, "left": _cls_payload(H, n, i), "right": _cls_payload(H, m, j), "bracket": support(cls.representative)})
    return Outcome(True)


def _spans(H: Cohomology, vectors: list, n: int) -> bool:
    d = H.dim(n)
    if d == 0:
        return True
    if not vectors:
        return False
    return rank(Matrix.from_dense(vectors, H.field, cols=d)) == d


def check_hh1_bracket(p: Presentation) -> Outcome:
    H = cohomology(p)
    cx = H.cx
    notes = []
    coboundary_g = 0
    for n in range(2, cx.top_degree + 1):
        for j, b in enumerate(cx.basis(n)):
            f = cx.basis_cochain(n, j)
            g = first_arrow_indicator(b.chain, cx)
            bad = None
            if not cx.is_cocycle(g):
                bad = "indicator is not a cocycle"
            elif circ(f, g) != f:
                bad = "f o g != f"
            elif not circ(g, f).is_zero():
                bad = "g o f != 0"
            elif bracket(f, g) != f:
                bad = "[f, g] != f"
            if bad:
                return Outcome(False, {"check": bad, "f": support(f), "g": support(g)})
            if H.is_coboundary(g):
                coboundary_g += 1
    if coboundary_g:
        notes.append(f"first-arrow indicator is a coboundary for {coboundary_g} basis cochains")
    for n in range(2, cx.top_degree + 1):
        for variant in (PEELED, LITERAL):
            vecs = [induced_bracket(H, a, b, variant).coordinates for a in H.basis(n) for b in H.basis(1)]
            if _spans(H, vecs, n):
                continue
            if variant == PEELED:
                return Outcome(False, {"check": "span", "degree": n, "variant": variant})
            notes.append(f"literal brackets [HH^{n}, HH^1] do not span HH^{n}")
    return Outcome(True, None, notes)


def check_descent(p: Presentation) -> Outcome:
    H = cohomology(p)
    cx = H.cx
    top = cx.top_degree
    reps = {n: [c.representative for c in H.basis(n)] for n in range(top + 1)}
    cobs = {n: H.image_basis(n) for n in range(1, top + 1)}

    def fail(kind, **payload):
        return Outcome(False, {"check": kind, **{k: support(v) for k, v in payload.items()}})

    # Leibniz rule, sign (-1)^deg f
    for n in range(top + 1):
        for m in range(top + 1 - n):
            for jf in range(cx.dim(n)):
                f = cx.basis_cochain(n, jf)
                df = cx.delta(f)
                for jg in range(cx.dim(m)):
                    g = cx.basis_cochain(m, jg)
                    lhs = cx.delta(cup(f, g))
                    rhs = cup(df, g) + (1 if n % 2 == 0 else -1) * cup(f, cx.delta(g))
                    if lhs != rhs:
                        return fail("leibniz", f=f, g=g)
    literal_failures = 0
    for n in range(top + 1):
        for m in range(top + 1):
            for z in reps[n]:
                for z2 in reps[m]:
                    if n + m <= top and not cx.is_cocycle(cup(z, z2)):
                        return fail("cup-cocycle", left=z, right=z2)
                    if 1 <= n + m - 1 <= top:
                        if not cx.is_cocycle(bracket(z, z2, PEELED)):
                            return fail("bracket-cocycle", left=z, right=z2)
                        if not cx.is_cocycle(bracket(z, z2, LITERAL)):
                            literal_failures += 1
                for b in cobs.get(m, ()):
                    if n + m <= top:
                        for x, y in ((z, b), (b, z)):
                            if not H.is_coboundary(cup(x, y)):
                                return fail("cup-coboundary", left=x, right=y)
                    if n + m - 1 <= top and n + m - 1 >= 1:
                        for x, y in ((z, b), (b, z)):
                            if not H.is_coboundary(bracket(x, y, PEELED)):
                                return fail("bracket-coboundary", left=x, right=y)
                            if not H.is_coboundary(bracket(x, y, LITERAL)):
                                literal_failures += 1
    notes = [f"literal bracket fails descent in {literal_failures} cases"] if literal_failures else []
    return Outcome(True, None, notes)


def check_bracket_surjective(p: Presentation) -> Outcome:
    """Does [HH^n, HH^m] span HH^{n+m-1} for every n, m >= 1?"""
    H = cohomology(p)
    top = H.top_degree
    missing = []
    for n in range(1, top + 1):
        for m in range(n, top + 1):
            k = n + m - 1
            if k > top or H.dim(k) == 0:
                continue
            vecs = [induced_bracket(H, a, b).coordinates for a in H.basis(n) for b in H.basis(m)]
            if not _spans(H, vecs, k):
                missing.append([n, m])
    if missing:
        return Outcome(False, {"pairs": missing}, [f"[HH^{n}, HH^{m}] does not span HH^{n + m - 1}" for n, m in missing])
    return Outcome(True)


def check_field_robust(p: Presentation) -> Outcome:
    base = cohomology(p.with_characteristic(0)).dims()
    diffs = []
    for prime in (3, 5, 7):
        d = cohomology(p.with_characteristic(prime)).dims()
        if d != base:
            diffs.append({"field": f"F{prime}", "dims": d, "rational_dims": base})
    if diffs:
        return Outcome(False, diffs[0], [f"dimensions over {x['field']} differ from Q" for x in diffs])
    return Outcome(True)
