"""Hochschild cohomology groups from the minimal cochain complex."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .complex import Cochain, CochainComplex, cochain_complex
from .linalg import Matrix, json_scalar, kernel_basis, rref, solve_membership
from .presentation import Presentation


class NotACocycle(ValueError):
    def __init__(self, coboundary: Cochain):
        self.coboundary = coboundary
        super().__init__(f"not a cocycle; its differential is {coboundary!r}")


@dataclass
class CohomologyClass:
    degree: int
    representative: Cochain
    coordinates: list
    # coefficients over the image basis with rep - sum(coords * generators) = sum(witness * image)
    witness: list = field(default_factory=list, repr=False)

    @property
    def is_zero(self) -> bool:
        return not any(self.coordinates)


@dataclass
class _Degree:
    image: list  # independent coboundary vectors spanning im d^{n-1}
    generators: list  # cocycle vectors completing image to ker d^n
    solver: Matrix  # columns: image then generators


class Cohomology:
    """Per-presentation cohomology data with deterministic class bases."""

    def __init__(self, cx: CochainComplex):
        self.cx = cx
        self.field = cx.field
        self._deg: dict[int, _Degree] = {}

    @property
    def top_degree(self) -> int:
        return self.cx.top_degree

    def _data(self, n: int) -> _Degree:
        if n in self._deg:
            return self._deg[n]
        cx = self.cx
        dim = cx.dim(n)
        if n == 0:
            image = []
        else:
            d_prev = cx.delta_matrix(n - 1)
            image = _independent_columns(d_prev)
        kernel = kernel_basis(cx.delta_matrix(n))
        m = len(image)
        gens = [kernel[j - m] for j in _pivot_columns(image + kernel, dim, self.field) if j >= m]
        current = Matrix.from_columns(image + gens, dim, self.field)
        data = _Degree(image, gens, current)
        self._deg[n] = data
        return data

    def dim(self, n: int) -> int:
        if n < 0:
            return 0
        return len(self._data(n).generators)

    def basis(self, n: int) -> list[CohomologyClass]:
        data = self._data(n)
        out = []
        k = len(data.generators)
        for i, v in enumerate(data.generators):
            coords = [self.field.zero] * k
            coords[i] = self.field.one
            out.append(CohomologyClass(n, self.cx.from_vector(n, v), coords, [self.field.zero] * len(data.image)))
        return out

    def image_basis(self, n: int) -> list[Cochain]:
        return [self.cx.from_vector(n, v) for v in self._data(n).image]

    def class_of(self, c: Cochain) -> CohomologyClass:
        d = self.cx.delta(c)
        if not d.is_zero():
            raise NotACocycle(d)
        data = self._data(c.degree)
        x = solve_membership(data.solver, c.vector())
        if x is None:  # impossible for a cocycle; kernel = image + generators
            raise AssertionError("cocycle outside image + generators")
        m = len(data.image)
        return CohomologyClass(c.degree, c, x[m:], x[:m])

    def is_coboundary(self, c: Cochain) -> bool:
        if c.degree == 0:
            return c.is_zero()
        return solve_membership(self.cx.delta_matrix(c.degree - 1), c.vector()) is not None

    def coboundary_witness(self, c: Cochain) -> Cochain | None:
        """Some h with d h = c, or None."""
        if c.degree == 0:
            return self.cx.zero(-1) if c.is_zero() else None
        x = solve_membership(self.cx.delta_matrix(c.degree - 1), c.vector())
        return None if x is None else self.cx.from_vector(c.degree - 1, x)

    def dims(self, max_degree: int | None = None) -> list[int]:
        top = self.top_degree if max_degree is None else max_degree
        return [self.dim(n) for n in range(top + 1)]

    def euler(self) -> int:
        return sum((-1) ** n * self.cx.dim(n) for n in range(self.top_degree + 1))

    def summary(self, max_degree: int | None = None) -> HHSummary:
        top = self.top_degree if max_degree is None else max_degree
        return HHSummary(self.dims(top), {n: self.basis(n) for n in range(top + 1)}, self.euler())


def _pivot_columns(columns, nrows, fld) -> list[int]:
    """Indices of the greedily independent columns (left to right)."""
    if not columns:
        return []
    m = Matrix.from_columns(columns, nrows, fld)
    if m.is_zero():
        return []
    return rref(m)[1]


def _independent_columns(m: Matrix) -> list[list]:
    cols = [[m.field.zero] * m.rows for _ in range(m.cols)]
    for (i, j), v in m.entries.items():
        cols[j][i] = v
    return [cols[j] for j in _pivot_columns(cols, m.rows, m.field)]


@dataclass
class HHSummary:
    dims: list[int]
    bases: dict[int, list[CohomologyClass]]
    euler: int

    def as_dict(self) -> dict:
        gens = [
            {"degree": n, "support": [[c, p, json_scalar(a)] for c, p, a in cls.representative.support()]}
            for n in sorted(self.bases)
            for cls in self.bases[n]
        ]
        return {"format": 1, "dims": self.dims, "generators": gens, "euler": self.euler}


@lru_cache(maxsize=128)
def cohomology(p: Presentation) -> Cohomology:
    return Cohomology(cochain_complex(p))


def hh_dim(p: Presentation, n: int) -> int:
    return cohomology(p).dim(n)


def hh_basis(p: Presentation, n: int) -> list[CohomologyClass]:
    return cohomology(p).basis(n)


def class_of(p: Presentation, c: Cochain) -> CohomologyClass:
    return cohomology(p).class_of(c)
