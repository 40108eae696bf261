"""Finitely generated abelian groups, bicharacters and the super-grading data.

A group Z^r x Z/n_1 x ... x Z/n_k has elements stored as integer tuples with
the torsion coordinates reduced. A bicharacter is stored by its values on
pairs of generators.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import (
    DivisionByZero,
    GroupMismatch,
    InvalidCommutationFactor,
    LengthMismatch,
)
from .scalars import FieldSpec, Scalar, multiplicative_order, nth_roots_of_unity_exist, power

GroupElement = tuple[int, ...]


@dataclass(frozen=True)
class FgAbGroup:
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(n) for n in self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        if any(n < 2 for n in self.torsion):
            raise ValueError("torsion moduli must be at least 2")

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def moduli(self) -> tuple[int, ...]:
        """Order of each generator, 0 standing for infinite order."""
        return (0,) * self.free_rank + self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def zero(self) -> GroupElement:
        return (0,) * self.ngens

    def generator(self, i: int) -> GroupElement:
        return self.canonicalize(tuple(int(j == i) for j in range(self.ngens)))

    def canonicalize(self, coords: Iterable[int]) -> GroupElement:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.ngens:
            raise LengthMismatch(f"expected {self.ngens} coordinates, got {len(coords)}")
        return tuple(c % n if n else c for c, n in zip(coords, self.moduli))

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        if len(a) != self.ngens or len(b) != self.ngens:
            raise LengthMismatch("coordinate length does not match the group")
        return self.canonicalize(x + y for x, y in zip(a, b))

    def neg(self, a: GroupElement) -> GroupElement:
        return self.canonicalize(-x for x in a)

    def sub(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return self.add(a, self.neg(b))

    def scale(self, k: int, a: GroupElement) -> GroupElement:
        return self.canonicalize(k * x for x in a)

    def contains(self, a) -> bool:
        return len(a) == self.ngens and tuple(a) == self.canonicalize(a)

    def box(self, radius: int = 2) -> list[GroupElement]:
        """All torsion values crossed with free coordinates in [-radius, radius]."""
        ranges = [range(-radius, radius + 1) if n == 0 else range(n) for n in self.moduli]
        return [tuple(c) for c in itertools.product(*ranges)]

    def elements(self) -> list[GroupElement]:
        if not self.is_finite:
            raise ValueError("infinite group")
        return self.box(0)

    def to_json(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data) -> FgAbGroup:
        return cls(int(data.get("free_rank", 0)), tuple(data.get("torsion", ())))

    def label(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z{n}" for n in self.torsion]
        return "x".join(parts) or "0"


def element_op(op: str, group: FgAbGroup, a: GroupElement, b: GroupElement | None = None) -> GroupElement:
    if op == "add":
        return group.add(a, b)
    if op == "neg":
        return group.neg(a)
    if op == "canonicalize":
        return group.canonicalize(a)
    raise ValueError(f"unknown op {op!r}")


@dataclass(frozen=True)
class Bicharacter:
    """phi(g, h) = prod gen_values[i][j] ** (g_i * h_j)."""

    group: FgAbGroup
    field: FieldSpec
    gen_values: tuple[tuple[Scalar, ...], ...]
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        n = self.group.ngens
        rows = tuple(tuple(self.field(x) for x in row) for row in self.gen_values)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise LengthMismatch(f"bicharacter needs a {n}x{n} matrix")
        if any(x == 0 for r in rows for x in r):
            raise DivisionByZero("bicharacter values must be nonzero")
        object.__setattr__(self, "gen_values", rows)

    @classmethod
    def from_function(cls, group: FgAbGroup, field: FieldSpec, f: Callable[[int, int], object]) -> Bicharacter:
        n = group.ngens
        return cls(group, field, tuple(tuple(f(i, j) for j in range(n)) for i in range(n)))

    @classmethod
    def trivial(cls, group: FgAbGroup, field: FieldSpec) -> Bicharacter:
        return cls.from_function(group, field, lambda i, j: 1)

    @classmethod
    def eta(cls, field: FieldSpec) -> Bicharacter:
        """(x, y) -> (-1)^(xy) on Z/2."""
        return cls(FgAbGroup(0, (2,)), field, ((-1,),))

    def __call__(self, g: GroupElement, h: GroupElement) -> Scalar:
        key = (g, h)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if not (self.group.contains(g) and self.group.contains(h)):
            raise GroupMismatch(f"{g} or {h} is not a canonical element of {self.group.label()}")
        value = self.field.one
        for i, gi in enumerate(g):
            if gi == 0:
                continue
            for j, hj in enumerate(h):
                if hj:
                    value = value * power(self.gen_values[i][j], gi * hj)
        self._cache[key] = value
        return value

    def matrix_json(self) -> list[list[str]]:
        return [[self.field.format(x) for x in row] for row in self.gen_values]

    @classmethod
    def from_json(cls, group: FgAbGroup, field: FieldSpec, rows) -> Bicharacter:
        return cls(group, field, tuple(tuple(field.parse(x) for x in row) for row in rows))


def bichar_eval(phi: Bicharacter, g: GroupElement, h: GroupElement) -> Scalar:
    return phi(g, h)


@dataclass
class ValidationReport:
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def validate_commutation_factor(phi: Bicharacter) -> ValidationReport:
    report = ValidationReport()
    n = phi.group.ngens
    moduli = phi.group.moduli
    vals = phi.gen_values
    for i in range(n):
        for j in range(n):
            x = vals[i][j]
            for k in (i, j):
                if moduli[k] and power(x, moduli[k]) != 1:
                    report.failures.append(
                        f"torsion compatibility: phi(g{i},g{j})^{moduli[k]} = "
                        f"{phi.field.format(power(x, moduli[k]))} != 1"
                    )
            if i <= j and vals[i][j] * vals[j][i] != 1:
                report.failures.append(f"skew-symmetry: phi(g{i},g{j}) phi(g{j},g{i}) != 1")
            order = multiplicative_order(x)
            if moduli[i] or moduli[j]:
                if order is None or not nth_roots_of_unity_exist(phi.field, order):
                    report.failures.append(
                        f"value availability: phi(g{i},g{j}) is not a root of unity in {phi.field.label()}"
                    )
    return report


def require_commutation_factor(phi: Bicharacter) -> None:
    report = validate_commutation_factor(phi)
    if not report.ok:
        raise InvalidCommutationFactor("; ".join(report.failures))


def u_bar(phi: Bicharacter, g: GroupElement) -> int:
    s = phi(g, g)
    if s == 1:
        return 0
    if s == -1:
        return 1
    raise InvalidCommutationFactor(f"phi(g,g) = {s} is not +-1 for g = {g}")


def kappa_eval(phi: Bicharacter, g: GroupElement, h: GroupElement) -> Scalar:
    if u_bar(phi, g) and u_bar(phi, h):
        return -phi.field.one
    return phi.field.one


def build_gamma(phi: Bicharacter) -> Bicharacter:
    """Upper-triangular bicharacter gamma with phi(g,h) = eta(u g, u h) gamma(g,h) / gamma(h,g)."""
    require_commutation_factor(phi)
    group = phi.group
    gens = [group.generator(i) for i in range(group.ngens)]

    def entry(i, j):
        if i < j:
            return phi(gens[i], gens[j]) * kappa_eval(phi, gens[i], gens[j])
        return 1

    return Bicharacter.from_function(group, phi.field, entry)


def cocycle_failures(gamma: Bicharacter) -> list[tuple]:
    """Generator triples violating gamma(g+h,k) gamma(g,h) = gamma(g,h+k) gamma(h,k)."""
    group = gamma.group
    gens = [group.generator(i) for i in range(group.ngens)]
    bad = []
    if gamma(group.zero(), group.zero()) != 1:
        bad.append(("identity",))
    for g, h, k in itertools.product(gens, repeat=3):
        lhs = gamma(group.add(g, h), k) * gamma(g, h)
        rhs = gamma(g, group.add(h, k)) * gamma(h, k)
        if lhs != rhs:
            bad.append((g, h, k))
    return bad


def commutator_failures(phi: Bicharacter, gamma: Bicharacter, elements: Iterable[GroupElement]) -> list[tuple]:
    """Pairs violating phi(g,h) = eta(u g, u h) gamma(g,h) / gamma(h,g)."""
    elements = list(elements)
    bad = []
    for g in elements:
        for h in elements:
            sign = -1 if u_bar(phi, g) and u_bar(phi, h) else 1
            if phi(g, h) != sign * gamma(g, h) / gamma(h, g):
                bad.append((g, h))
    return bad
