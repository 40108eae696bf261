"""Exact graded linear algebra.

Vectors are dicts from basis index to a nonzero scalar. Linear maps keep one
such dict per domain basis vector (the matrix columns) and can always be
expanded to dense row-major matrices. Tensor bases are indexed i-major:
the pair (i, j) of V (x) W sits at i * dim W + j.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import AmbientMismatch, DimensionMismatch, FieldMismatch, GroupMismatch, NotGraded
from .groups import Bicharacter, FgAbGroup, GroupElement
from .scalars import FieldSpec, Scalar

Vec = dict


# sparse vector helpers


def axpy(acc: Vec, c: Scalar, x: Vec) -> Vec:
    """acc += c * x in place, dropping zeros."""
    if c == 0:
        return acc
    for k, v in x.items():
        s = acc.get(k)
        s = c * v if s is None else s + c * v
        if s == 0:
            acc.pop(k, None)
        else:
            acc[k] = s
    return acc


def vscale(c: Scalar, x: Vec) -> Vec:
    if c == 0:
        return {}
    return {k: c * v for k, v in x.items()}


def vadd(x: Vec, y: Vec) -> Vec:
    return axpy(dict(x), 1, y)


def vsub(x: Vec, y: Vec) -> Vec:
    return axpy(dict(x), -1, y)


def vsum(terms: Iterable[tuple[Scalar, Vec]]) -> Vec:
    acc: Vec = {}
    for c, x in terms:
        axpy(acc, c, x)
    return acc


def tensor_vec(x: Vec, y: Vec, dim_y: int) -> Vec:
    out = {}
    for i, a in x.items():
        for j, b in y.items():
            out[i * dim_y + j] = a * b
    return out


def dense(x: Vec, dim: int, zero) -> list:
    return [x.get(i, zero) for i in range(dim)]


def from_dense(values: Sequence) -> Vec:
    return {i: v for i, v in enumerate(values) if v != 0}


# spaces


@dataclass(frozen=True)
class GradedVectorSpace:
    field: FieldSpec
    group: FgAbGroup
    degrees: tuple[GroupElement, ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        degrees = tuple(self.group.canonicalize(d) for d in self.degrees)
        names = tuple(self.names) or tuple(f"e{i}" for i in range(len(degrees)))
        if len(names) != len(degrees):
            raise DimensionMismatch("one name per basis vector is required")
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "names", names)

    @property
    def dim(self) -> int:
        return len(self.degrees)

    def basis_vector(self, i: int) -> Vec:
        return {i: self.field.one}

    def components(self, x: Vec) -> dict[GroupElement, Vec]:
        out: dict = {}
        for i, c in x.items():
            out.setdefault(self.degrees[i], {})[i] = c
        return out

    def is_homogeneous(self, x: Vec) -> bool:
        return len({self.degrees[i] for i in x}) <= 1

    def same_shape(self, other: GradedVectorSpace) -> bool:
        return self.field == other.field and self.group == other.group and self.degrees == other.degrees

    def with_degrees(self, group: FgAbGroup, degrees) -> GradedVectorSpace:
        return GradedVectorSpace(self.field, group, tuple(degrees), self.names)

    def to_json(self):
        return {"basis": [{"name": n, "degree": list(d)} for n, d in zip(self.names, self.degrees)]}

    @classmethod
    def from_json(cls, data, field: FieldSpec, group: FgAbGroup) -> GradedVectorSpace:
        basis = data["basis"]
        return cls(field, group, tuple(tuple(b["degree"]) for b in basis), tuple(b["name"] for b in basis))


def unit_space(field: FieldSpec, group: FgAbGroup) -> GradedVectorSpace:
    return GradedVectorSpace(field, group, (group.zero(),), ("1",))


def _check_compatible(V: GradedVectorSpace, W: GradedVectorSpace) -> None:
    if V.field != W.field:
        raise FieldMismatch(f"{V.field.label()} vs {W.field.label()}")
    if V.group != W.group:
        raise GroupMismatch(f"{V.group.label()} vs {W.group.label()}")


def tensor_space(V: GradedVectorSpace, W: GradedVectorSpace) -> GradedVectorSpace:
    _check_compatible(V, W)
    add = V.group.add
    degrees = tuple(add(a, b) for a in V.degrees for b in W.degrees)
    names = tuple(f"{a}⊗{b}" for a in V.names for b in W.names)
    return GradedVectorSpace(V.field, V.group, degrees, names)


# maps


class GradedLinearMap:
    """A linear map given by the images of the domain basis vectors.

    With check=True a nonzero entry joining basis vectors of different
    degrees raises NotGraded. Candidate structures that are still to be
    verified are built with check=False.
    """

    __slots__ = ("domain", "codomain", "cols")

    def __init__(self, domain: GradedVectorSpace, codomain: GradedVectorSpace, cols, check: bool = True):
        cols = tuple(dict(c) for c in cols)
        if len(cols) != domain.dim:
            raise DimensionMismatch(f"{len(cols)} columns for a domain of dimension {domain.dim}")
        for c in cols:
            for i, v in list(c.items()):
                if not 0 <= i < codomain.dim:
                    raise DimensionMismatch(f"row index {i} outside codomain of dimension {codomain.dim}")
                if v == 0:
                    del c[i]
        self.domain = domain
        self.codomain = codomain
        self.cols = cols
        if check:
            bad = self.degree_violations()
            if bad:
                raise NotGraded(f"map does not preserve degrees at entry {bad[0]}")

    @classmethod
    def from_matrix(cls, domain, codomain, rows, check: bool = True) -> GradedLinearMap:
        if len(rows) != codomain.dim or any(len(r) != domain.dim for r in rows):
            raise DimensionMismatch("matrix shape does not match the spaces")
        cols = [{i: rows[i][j] for i in range(codomain.dim) if rows[i][j] != 0} for j in range(domain.dim)]
        return cls(domain, codomain, cols, check)

    @classmethod
    def identity(cls, V: GradedVectorSpace) -> GradedLinearMap:
        return cls(V, V, [{i: V.field.one} for i in range(V.dim)])

    @classmethod
    def zero(cls, V: GradedVectorSpace, W: GradedVectorSpace) -> GradedLinearMap:
        return cls(V, W, [{} for _ in range(V.dim)])

    def degree_violations(self) -> list[tuple[int, int]]:
        out = []
        for j, c in enumerate(self.cols):
            dj = self.domain.degrees[j]
            for i in c:
                if self.codomain.degrees[i] != dj:
                    out.append((i, j))
        return out

    def matrix(self) -> list[list[Scalar]]:
        zero = self.codomain.field.zero
        rows = [[zero] * self.domain.dim for _ in range(self.codomain.dim)]
        for j, c in enumerate(self.cols):
            for i, v in c.items():
                rows[i][j] = v
        return rows

    def __call__(self, x: Vec) -> Vec:
        acc: Vec = {}
        for j, c in x.items():
            axpy(acc, c, self.cols[j])
        return acc

    def compose(self, inner: GradedLinearMap) -> GradedLinearMap:
        """self o inner."""
        if inner.codomain.dim != self.domain.dim:
            raise DimensionMismatch("composition of incompatible maps")
        return GradedLinearMap(inner.domain, self.codomain, [self(c) for c in inner.cols], check=False)

    def __add__(self, other: GradedLinearMap) -> GradedLinearMap:
        self._same_shape(other)
        return GradedLinearMap(self.domain, self.codomain, [vadd(a, b) for a, b in zip(self.cols, other.cols)], check=False)

    def __sub__(self, other: GradedLinearMap) -> GradedLinearMap:
        self._same_shape(other)
        return GradedLinearMap(self.domain, self.codomain, [vsub(a, b) for a, b in zip(self.cols, other.cols)], check=False)

    def scaled(self, c: Scalar) -> GradedLinearMap:
        return GradedLinearMap(self.domain, self.codomain, [vscale(c, a) for a in self.cols], check=False)

    def _same_shape(self, other):
        if self.domain.dim != other.domain.dim or self.codomain.dim != other.codomain.dim:
            raise DimensionMismatch("maps have different shapes")

    def first_difference(self, other: GradedLinearMap):
        """(column, residual) for the first column where the maps differ, else None."""
        self._same_shape(other)
        for j, (a, b) in enumerate(zip(self.cols, other.cols)):
            if a != b:
                return j, vsub(a, b)
        return None

    def __eq__(self, other):
        if not isinstance(other, GradedLinearMap):
            return NotImplemented
        return (
            self.domain.dim == other.domain.dim
            and self.codomain.dim == other.codomain.dim
            and self.cols == other.cols
        )

    __hash__ = None

    def is_zero(self) -> bool:
        return all(not c for c in self.cols)

    def rank(self) -> int:
        return map_image(self).dim

    def __repr__(self):
        return f"GradedLinearMap({self.domain.dim} -> {self.codomain.dim})"


def tensor_maps(f: GradedLinearMap, g: GradedLinearMap) -> GradedLinearMap:
    """Kronecker product f (x) g with the i-major pair ordering."""
    dom = tensor_space(f.domain, g.domain)
    cod = tensor_space(f.codomain, g.codomain)
    n = g.codomain.dim
    cols = [tensor_vec(a, b, n) for a in f.cols for b in g.cols]
    return GradedLinearMap(dom, cod, cols, check=False)


def braiding_map(phi: Bicharacter, V: GradedVectorSpace, W: GradedVectorSpace) -> GradedLinearMap:
    """c(v_i (x) w_j) = phi(|v_i|, |w_j|) w_j (x) v_i."""
    _check_compatible(V, W)
    if phi.group != V.group:
        raise GroupMismatch("bicharacter lives on a different group")
    cols = []
    for i in range(V.dim):
        for j in range(W.dim):
            cols.append({j * V.dim + i: phi(V.degrees[i], W.degrees[j])})
    return GradedLinearMap(tensor_space(V, W), tensor_space(W, V), cols)


# elimination


def _reduce_semi(v: Vec, pivots: dict, tag: Vec | None = None):
    """Reduce v against semi-echelon pivots; returns the leading index left or None."""
    while v:
        p = min(v)
        hit = pivots.get(p)
        if hit is None:
            return p
        c = v[p]
        axpy(v, -c, hit[0])
        if tag is not None:
            axpy(tag, -c, hit[1])
    return None


def kernel_and_image(images: Sequence[Vec], field: FieldSpec) -> tuple[list[Vec], list[Vec]]:
    """Kernel vectors (over the domain) and an image basis for column images."""
    pivots: dict = {}
    kernel = []
    for j, img in enumerate(images):
        v = dict(img)
        tag = {j: field.one}
        p = _reduce_semi(v, pivots, tag)
        if p is None:
            kernel.append(tag)
        else:
            inv = 1 / v[p]
            pivots[p] = (vscale(inv, v), vscale(inv, tag))
    return kernel, [v for v, _ in pivots.values()]


def rref(vectors: Iterable[Vec]) -> list[Vec]:
    """Canonical reduced row echelon rows, pivot = first nonzero column."""
    rows: dict = {}
    for x in vectors:
        v = dict(x)
        for p in [p for p in v if p in rows]:
            c = v.get(p)
            if c:
                axpy(v, -c, rows[p])
        if not v:
            continue
        p = min(v)
        v = vscale(1 / v[p], v)
        for r in rows.values():
            c = r.get(p)
            if c:
                axpy(r, -c, v)
        rows[p] = v
    return [rows[p] for p in sorted(rows)]


# subspaces


class GradedSubspace:
    """A graded subspace held as canonical RREF rows, each row homogeneous."""

    __slots__ = ("ambient", "rows", "_pivots")

    def __init__(self, ambient: GradedVectorSpace, rows: Sequence[Vec]):
        rows = tuple(dict(r) for r in rows)
        if rref(rows) != list(rows):
            raise ValueError("rows are not in canonical reduced row echelon form")
        for r in rows:
            if not ambient.is_homogeneous(r):
                raise NotGraded("subspace row mixes degrees")
        self.ambient = ambient
        self.rows = rows
        self._pivots = {min(r): k for k, r in enumerate(rows)}

    @classmethod
    def _trusted(cls, ambient, rows) -> GradedSubspace:
        self = object.__new__(cls)
        self.ambient = ambient
        self.rows = tuple(rows)
        self._pivots = {min(r): k for k, r in enumerate(self.rows)}
        return self

    @classmethod
    def span(cls, ambient: GradedVectorSpace, vectors: Iterable[Vec]) -> GradedSubspace:
        """Smallest graded subspace containing the vectors."""
        parts = []
        for v in vectors:
            parts.extend(ambient.components(v).values())
        return cls._trusted(ambient, rref(parts))

    @classmethod
    def from_vectors(cls, ambient: GradedVectorSpace, vectors: Iterable[Vec]) -> GradedSubspace:
        """Span of the vectors, which must already be a graded subspace."""
        vectors = list(vectors)
        plain = rref(vectors)
        graded = cls.span(ambient, vectors)
        if len(plain) != graded.dim:
            raise NotGraded("the spanned subspace is not graded")
        return graded

    @classmethod
    def zero(cls, ambient: GradedVectorSpace) -> GradedSubspace:
        return cls._trusted(ambient, [])

    @classmethod
    def whole(cls, ambient: GradedVectorSpace) -> GradedSubspace:
        return cls._trusted(ambient, [{i: ambient.field.one} for i in range(ambient.dim)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(min(r) for r in self.rows)

    def reduce(self, x: Vec) -> Vec:
        """Residual of x after elimination against the rows."""
        v = dict(x)
        for p in [p for p in v if p in self._pivots]:
            c = v.get(p)
            if c:
                axpy(v, -c, self.rows[self._pivots[p]])
        return v

    def contains(self, x: Vec) -> bool:
        return not self.reduce(x)

    member = contains

    def coords(self, x: Vec) -> dict[int, Scalar]:
        """Coordinates of a member vector in the row basis."""
        out = {}
        for p, k in self._pivots.items():
            c = x.get(p)
            if c:
                out[k] = c
        return out

    def issubset(self, other: GradedSubspace) -> bool:
        _same_ambient(self, other)
        return all(other.contains(r) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, GradedSubspace):
            return NotImplemented
        return self.ambient.dim == other.ambient.dim and self.rows == other.rows

    __hash__ = None

    def matrix(self) -> list[list[Scalar]]:
        zero = self.ambient.field.zero
        return [dense(r, self.ambient.dim, zero) for r in self.rows]

    def inclusion(self) -> GradedLinearMap:
        """Map from the span of the rows (in row order) into the ambient space."""
        return GradedLinearMap(self.basis_space(), self.ambient, self.rows)

    def basis_space(self) -> GradedVectorSpace:
        A = self.ambient
        degrees = tuple(A.degrees[min(r)] for r in self.rows)
        names = tuple(_vector_name(A, r) for r in self.rows)
        return GradedVectorSpace(A.field, A.group, degrees, names)

    def __repr__(self):
        return f"GradedSubspace(dim {self.dim} in {self.ambient.dim})"


def _vector_name(V: GradedVectorSpace, x: Vec) -> str:
    parts = []
    for i in sorted(x):
        c = x[i]
        name = V.names[i]
        if c == 1:
            parts.append(f"+{name}")
        elif c == -1:
            parts.append(f"-{name}")
        else:
            s = V.field.format(c)
            parts.append(f"{'' if s.startswith('-') else '+'}{s}{name}")
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


def _same_ambient(A: GradedSubspace, B: GradedSubspace) -> None:
    if A.ambient != B.ambient:
        raise AmbientMismatch("subspaces live in different spaces")


def subspace_sum(A: GradedSubspace, B: GradedSubspace) -> GradedSubspace:
    _same_ambient(A, B)
    return GradedSubspace._trusted(A.ambient, rref(A.rows + B.rows))


def subspace_intersect(A: GradedSubspace, B: GradedSubspace) -> GradedSubspace:
    """A meet B from the kernel of (a, b) -> a - b on the stacked row bases."""
    _same_ambient(A, B)
    field = A.ambient.field
    images = list(A.rows) + [vscale(-field.one, r) for r in B.rows]
    kernel, _ = kernel_and_image(images, field)
    vectors = [vsum((c, A.rows[k]) for k, c in t.items() if k < A.dim) for t in kernel]
    return GradedSubspace.span(A.ambient, vectors)


def subspace_lattice(op: str, A: GradedSubspace, B):
    if op == "sum":
        return subspace_sum(A, B)
    if op == "intersect":
        return subspace_intersect(A, B)
    if op == "contains":
        return B.issubset(A)
    if op == "member":
        return A.contains(B)
    raise ValueError(f"unknown op {op!r}")


def map_kernel(f: GradedLinearMap) -> GradedSubspace:
    kernel, _ = kernel_and_image(f.cols, f.domain.field)
    return GradedSubspace.span(f.domain, kernel)


def map_image(f: GradedLinearMap) -> GradedSubspace:
    return GradedSubspace.span(f.codomain, [c for c in f.cols if c])


def image_of(f: GradedLinearMap, U: GradedSubspace) -> GradedSubspace:
    return GradedSubspace.span(f.codomain, [f(r) for r in U.rows])


# quotients


@dataclass(frozen=True, eq=False)
class QuotientPresentation:
    ambient: GradedVectorSpace
    kernel: GradedSubspace
    rep_indices: tuple[int, ...]
    quotient: GradedVectorSpace
    projection: GradedLinearMap
    section: GradedLinearMap


def quotient_space(V: GradedVectorSpace, U) -> QuotientPresentation:
    """V / U with the non-pivot basis vectors as coset representatives.

    U is a GradedSubspace or a list of spanning vectors; a list whose span is
    not graded raises NotGraded.
    """
    if not isinstance(U, GradedSubspace):
        U = GradedSubspace.from_vectors(V, U)
    if U.ambient != V:
        raise AmbientMismatch("subspace lives in a different space")
    pivots = set(U.pivots)
    reps = tuple(i for i in range(V.dim) if i not in pivots)
    position = {i: k for k, i in enumerate(reps)}
    Q = GradedVectorSpace(V.field, V.group, tuple(V.degrees[i] for i in reps), tuple(V.names[i] for i in reps))
    cols = []
    for j in range(V.dim):
        if j in position:
            cols.append({position[j]: V.field.one})
        else:
            row = U.rows[U._pivots[j]]
            cols.append({position[k]: -c for k, c in row.items() if k != j})
    projection = GradedLinearMap(V, Q, cols)
    section = GradedLinearMap(Q, V, [{i: V.field.one} for i in reps])
    return QuotientPresentation(V, U, reps, Q, projection, section)


def preimage_solver(f: GradedLinearMap):
    """Function returning some x with f(x) = y, or None when y is not in the image."""
    field = f.domain.field
    pivots: dict = {}
    for j, img in enumerate(f.cols):
        v = dict(img)
        tag = {j: field.one}
        p = _reduce_semi(v, pivots, tag)
        if p is not None:
            inv = 1 / v[p]
            pivots[p] = (vscale(inv, v), vscale(inv, tag))

    def solve(y: Vec):
        v = dict(y)
        x: Vec = {}
        while v:
            p = min(v)
            hit = pivots.get(p)
            if hit is None:
                return None
            c = v[p]
            axpy(v, -c, hit[0])
            axpy(x, c, hit[1])
        return x

    return solve
