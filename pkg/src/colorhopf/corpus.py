"""Deterministic example algebras, morphisms, subalgebra inventories and
mutation operators for negative tests."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import GradingIncompatible, NotOddDegree
from .groups import Bicharacter, FgAbGroup, GroupElement
from .hopf import ColorHopfAlgebra, HopfMorphism, tensor_hopf
from .linalg import GradedLinearMap, GradedVectorSpace, Vec, axpy
from .scalars import FieldSpec


@dataclass(frozen=True)
class FiniteGroupTable:
    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]

    def __post_init__(self):
        n = len(self.table)
        if len(self.names) != n or any(len(r) != n for r in self.table):
            raise ValueError("table must be square with one name per element")
        t = self.table
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if t[t[a][b]][c] != t[a][t[b][c]]:
                        raise ValueError(f"table is not associative at {a},{b},{c}")
        e = self.identity
        for a in range(n):
            if e is None or t[e][a] != a or t[a][e] != a:
                raise ValueError("table has no two-sided identity")
            if not any(t[a][b] == e and t[b][a] == e for b in range(n)):
                raise ValueError(f"element {a} has no inverse")

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int | None:
        n = self.order
        for e in range(n):
            if all(self.table[e][a] == a == self.table[a][e] for a in range(n)):
                return e
        return None

    @property
    def inverse(self) -> tuple[int, ...]:
        e = self.identity
        return tuple(next(b for b in range(self.order) if self.table[a][b] == e) for a in range(self.order))

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(self.order))

    @classmethod
    def cyclic(cls, n: int, symbol: str = "g") -> FiniteGroupTable:
        names = ["1", symbol] + [f"{symbol}^{k}" for k in range(2, n)]
        return cls(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), tuple(names[:n]))

    @classmethod
    def symmetric3(cls) -> FiniteGroupTable:
        # permutations of {1,2,3}; products compose right to left
        perms = [(1, 2, 3), (2, 1, 3), (3, 2, 1), (1, 3, 2), (2, 3, 1), (3, 1, 2)]
        names = ("e", "(12)", "(13)", "(23)", "(123)", "(132)")
        index = {p: k for k, p in enumerate(perms)}

        def compose(s, t):
            return tuple(s[t[x] - 1] for x in range(3))

        return cls(tuple(tuple(index[compose(s, t)] for t in perms) for s in perms), names)


def group_algebra(table: FiniteGroupTable, phi: Bicharacter, grading: Sequence[GroupElement] | None = None, name: str = "") -> ColorHopfAlgebra:
    G = phi.group
    n = table.order
    grading = [G.zero()] * n if grading is None else [G.canonicalize(d) for d in grading]
    if len(grading) != n:
        raise GradingIncompatible("one degree per group element is required")
    for a in range(n):
        for b in range(n):
            if grading[table.table[a][b]] != G.add(grading[a], grading[b]):
                raise GradingIncompatible("grading is not a group homomorphism", (a, b))
            if phi(grading[a], grading[b]) != 1:
                raise GradingIncompatible(f"phi({grading[a]}, {grading[b]}) != 1", (a, b))
    for a in range(n):
        # Delta(x) = x (x) x sits in degree 2|x|, so only |x| = 0 is degree-preserving
        if grading[a] != G.zero():
            raise GradingIncompatible(f"group-like {table.names[a]} has nonzero degree {grading[a]}", (a, a))
    one = phi.field.one
    space = GradedVectorSpace(phi.field, G, tuple(grading), table.names)
    e = table.identity
    inv = table.inverse
    return ColorHopfAlgebra.from_tensors(
        space,
        phi,
        {(a, b): {table.table[a][b]: one} for a in range(n) for b in range(n)},
        {e: one},
        {a: {(a, a): one} for a in range(n)},
        {a: one for a in range(n)},
        [{inv[a]: one} for a in range(n)],
        name=name,
    )


def exterior_hopf(phi: Bicharacter, degrees: Sequence[GroupElement], names: Sequence[str] | None = None, name: str = "") -> ColorHopfAlgebra:
    """Exterior algebra on primitive generators of odd degree.

    Monomials are subsets of generators ordered by size then lexicographically.
    """
    G = phi.group
    degrees = [G.canonicalize(d) for d in degrees]
    for k, d in enumerate(degrees):
        if phi(d, d) != -1:
            raise NotOddDegree(f"phi({d},{d}) != -1", k)
    r = len(degrees)
    names = list(names) if names else [f"v{k + 1}" for k in range(r)]
    subsets = [c for size in range(r + 1) for c in itertools.combinations(range(r), size)]
    index = {s: k for k, s in enumerate(subsets)}
    one = phi.field.one

    def subset_degree(s):
        d = G.zero()
        for k in s:
            d = G.add(d, degrees[k])
        return d

    space = GradedVectorSpace(
        phi.field,
        G,
        tuple(subset_degree(s) for s in subsets),
        tuple("*".join(names[k] for k in s) or "1" for s in subsets),
    )
    mult = {}
    for S in subsets:
        for T in subsets:
            if set(S) & set(T):
                continue
            sign = one
            for s in S:
                for t in T:
                    if t < s:
                        sign = sign * phi(degrees[s], degrees[t])
            mult[(index[S], index[T])] = {index[tuple(sorted(S + T))]: sign}

    # comultiplication is the braided product of the primitive coproducts
    draft = ColorHopfAlgebra.from_tensors(space, phi, mult, {0: one}, {}, {0: one}, [{} for _ in subsets])
    n = len(subsets)
    comult = {}
    antipode = []
    for S in subsets:
        X: Vec = {0: one}
        for s in S:
            v = index[(s,)]
            X = draft.tensor_mul(X, {v * n: one, v: one})
        comult[index[S]] = {divmod(k, n): c for k, c in X.items()}
        if not S:
            antipode.append({0: one})
        else:
            # S(x v) = phi(|x|, |v|) S(v) S(x) with S(v) = -v
            head = index[S[:-1]]
            v = index[(S[-1],)]
            coeff = -phi(space.degrees[head], degrees[S[-1]])
            antipode.append({k: coeff * c for k, c in draft.mul({v: one}, antipode[head]).items()})
    return ColorHopfAlgebra.from_tensors(space, phi, mult, {0: one}, comult, {0: one}, antipode, name=name)


# mutations


MUTATION_TARGETS = {
    "flip_antipode_sign": "antipode_left",
    "drop_compat_scalar": "compatibility",
    "break_degree": "compatibility",
}


def mutate(H: ColorHopfAlgebra, kind: str) -> ColorHopfAlgebra:
    """Copy of H with one documented tensor entry changed.

    flip_antipode_sign negates the leading entry of S on the first basis
    vector outside the unit. drop_compat_scalar replaces the first comultiplication
    coefficient that is neither 0 nor 1 by 1. break_degree moves the first
    basis vector outside the unit to the first odd generator degree.
    """
    space, anti, comult = H.space, H.antipode, H.comult
    n = H.dim
    if kind == "flip_antipode_sign":
        j = next(j for j in range(n) if j not in H.unit and anti.cols[j])
        cols = [dict(c) for c in anti.cols]
        i = min(cols[j])
        cols[j][i] = -cols[j][i]
        anti = GradedLinearMap(space, space, cols, check=False)
    elif kind == "drop_compat_scalar":
        cols = [dict(c) for c in comult.cols]
        hit = next(((j, i) for j in range(n) for i in sorted(cols[j]) if cols[j][i] != 1), None)
        if hit is None:
            raise ValueError(f"{H.name} has no comultiplication coefficient to drop")
        j, i = hit
        cols[j][i] = H.field.one
        comult = GradedLinearMap(comult.domain, comult.codomain, cols, check=False)
    elif kind == "break_degree":
        G = H.group
        odd = next((g for g in G.box(1) if H.phi(G.canonicalize(g), G.canonicalize(g)) == -1), None)
        if odd is None:
            raise ValueError("the grading group has no odd degree")
        j = next(j for j in range(n) if j not in H.unit)
        degrees = list(space.degrees)
        degrees[j] = G.canonicalize(odd)
        space = space.with_degrees(G, degrees)
        return _respace(H, space, f"{H.name}~{kind}")
    else:
        raise ValueError(f"unknown mutation {kind!r}")
    return ColorHopfAlgebra(space, H.phi, H.mult, H.unit, comult, H.counit, anti, name=f"{H.name}~{kind}")


def _respace(H: ColorHopfAlgebra, space: GradedVectorSpace, name: str) -> ColorHopfAlgebra:
    from .linalg import tensor_space, unit_space

    T = tensor_space(space, space)
    k = unit_space(space.field, space.group)
    return ColorHopfAlgebra(
        space,
        H.phi,
        GradedLinearMap(T, space, H.mult.cols, check=False),
        H.unit,
        GradedLinearMap(space, T, H.comult.cols, check=False),
        GradedLinearMap(space, k, H.counit.cols, check=False),
        GradedLinearMap(space, space, H.antipode.cols, check=False),
        name=name,
    )


# the shipped corpus


Q = FieldSpec.rationals()


def eta(field: FieldSpec = Q) -> Bicharacter:
    return Bicharacter.eta(field)


def phi_z4(field: FieldSpec = Q) -> Bicharacter:
    """(a, b) -> (-1)^(ab) on Z/4."""
    return Bicharacter(FgAbGroup(0, (4,)), field, ((-1,),))


def phi_klein(field: FieldSpec = Q) -> Bicharacter:
    """((a,b),(c,d)) -> (-1)^(ad-bc) on Z/2 x Z/2."""
    return Bicharacter(FgAbGroup(0, (2, 2)), field, ((1, -1), (-1, 1)))


def phi_two_odd(field: FieldSpec = Q) -> Bicharacter:
    """((a,b),(c,d)) -> (-1)^(ac+bd) on Z/2 x Z/2: both generators odd, commuting with each other."""
    return Bicharacter(FgAbGroup(0, (2, 2)), field, ((-1, 1), (1, -1)))


@dataclass(frozen=True)
class Context:
    """A field, grading group and commutation factor shared by several algebras."""

    name: str
    phi_builder: Callable[[FieldSpec], Bicharacter]
    field: FieldSpec = Q

    @property
    def phi(self) -> Bicharacter:
        return self.phi_builder(self.field)


CONTEXTS = {
    "super": Context("super", eta),
    "z4": Context("z4", phi_z4),
    "two_odd": Context("two_odd", phi_two_odd),
    "super_f5": Context("super_f5", eta, FieldSpec.prime(5)),
}


def _algebras(ctx: Context) -> dict[str, ColorHopfAlgebra]:
    phi = ctx.phi
    cyc2 = FiniteGroupTable.cyclic(2, "t")
    cyc4 = FiniteGroupTable.cyclic(4, "g")
    if ctx.name == "super":
        return {
            "k_z2": group_algebra(cyc2, phi, name="k_z2"),
            "k_z4": group_algebra(cyc4, phi, name="k_z4"),
            "k_s3": group_algebra(FiniteGroupTable.symmetric3(), phi, name="k_s3"),
            "lambda_v": exterior_hopf(phi, [(1,)], ["v"], name="lambda_v"),
            "lambda_vw": exterior_hopf(phi, [(1,), (1,)], ["v", "w"], name="lambda_vw"),
        }
    if ctx.name == "z4":
        return {
            "k_z4_c4": group_algebra(cyc4, phi, name="k_z4_c4"),
            "k_z2_c4": group_algebra(cyc2, phi, name="k_z2_c4"),
            "lambda_v_z4": exterior_hopf(phi, [(1,)], ["v"], name="lambda_v_z4"),
            "lambda_v3_z4": exterior_hopf(phi, [(1,), (3,)], ["v", "w"], name="lambda_v3_z4"),
        }
    if ctx.name == "two_odd":
        a = exterior_hopf(phi, [(1, 0)], ["v"], name="lambda_e1")
        b = exterior_hopf(phi, [(0, 1)], ["w"], name="lambda_e2")
        ab = tensor_hopf(a, b)
        ab.name = "lambda_e1_e2"
        return {
            "lambda_e1": a,
            "lambda_e2": b,
            "lambda_e1_e2": ab,
            "k_z2_v4": group_algebra(cyc2, phi, name="k_z2_v4"),
        }
    if ctx.name == "super_f5":
        return {
            "k_z4_f5": group_algebra(cyc4, phi, name="k_z4_f5"),
            "lambda_vw_f5": exterior_hopf(phi, [(1,), (1,)], ["v", "w"], name="lambda_vw_f5"),
        }
    raise KeyError(ctx.name)


def corpus_algebras(context: str | None = None) -> dict[str, ColorHopfAlgebra]:
    names = [context] if context else list(CONTEXTS)
    out = {}
    for c in names:
        out.update(_algebras(CONTEXTS[c]))
    return out


def context_of(name: str) -> str:
    for c in CONTEXTS:
        if name in _ALGEBRA_NAMES[c]:
            return c
    raise KeyError(name)


_ALGEBRA_NAMES = {
    "super": ("k_z2", "k_z4", "k_s3", "lambda_v", "lambda_vw"),
    "z4": ("k_z4_c4", "k_z2_c4", "lambda_v_z4", "lambda_v3_z4"),
    "two_odd": ("lambda_e1", "lambda_e2", "lambda_e1_e2", "k_z2_v4"),
    "super_f5": ("k_z4_f5", "lambda_vw_f5"),
}


def build(name: str) -> ColorHopfAlgebra:
    return _algebras(CONTEXTS[context_of(name)])[name]


def vec(H: ColorHopfAlgebra, terms: dict[str, object]) -> Vec:
    """Vector of H from basis names and coefficients."""
    out: Vec = {}
    for label, c in terms.items():
        axpy(out, H.field(c), {H.space.names.index(label): H.field.one})
    return out


def morphism_from_images(A: ColorHopfAlgebra, B: ColorHopfAlgebra, images: dict[str, dict[str, object]], name: str) -> HopfMorphism:
    """Morphism given by the images of the basis vectors of A (missing ones go to 0)."""
    cols = [vec(B, images.get(label, {})) for label in A.space.names]
    return HopfMorphism(A, B, GradedLinearMap(A.space, B.space, cols, check=False), name)


# inventories, in basis-name notation

SUBALGEBRAS = {
    "k_z2": {"unit": [{"1": 1}], "whole": None},
    "k_z4": {"unit": [{"1": 1}], "z2": [{"1": 1}, {"g^2": 1}], "whole": None},
    "k_s3": {
        "unit": [{"e": 1}],
        "a3": [{"e": 1}, {"(123)": 1}, {"(132)": 1}],
        "c12": [{"e": 1}, {"(12)": 1}],
        "c13": [{"e": 1}, {"(13)": 1}],
        "whole": None,
    },
    "lambda_v": {"unit": [{"1": 1}], "whole": None},
    "lambda_vw": {
        "unit": [{"1": 1}],
        "v": [{"1": 1}, {"v": 1}],
        "w": [{"1": 1}, {"w": 1}],
        "v+w": [{"1": 1}, {"v": 1, "w": 1}],
        "whole": None,
    },
    "k_z4_c4": {"unit": [{"1": 1}], "z2": [{"1": 1}, {"g^2": 1}], "whole": None},
    "k_z2_c4": {"unit": [{"1": 1}], "whole": None},
    "lambda_v_z4": {"unit": [{"1": 1}], "whole": None},
    "lambda_v3_z4": {"unit": [{"1": 1}], "v": [{"1": 1}, {"v": 1}], "w": [{"1": 1}, {"w": 1}], "whole": None},
    "lambda_e1": {"unit": [{"1": 1}], "whole": None},
    "lambda_e2": {"unit": [{"1": 1}], "whole": None},
    "lambda_e1_e2": {
        "unit": [{"1⊗1": 1}],
        "v": [{"1⊗1": 1}, {"v⊗1": 1}],
        "w": [{"1⊗1": 1}, {"1⊗w": 1}],
        "whole": None,
    },
    "k_z2_v4": {"unit": [{"1": 1}], "whole": None},
    "k_z4_f5": {"unit": [{"1": 1}], "z2": [{"1": 1}, {"g^2": 1}], "whole": None},
    "lambda_vw_f5": {"unit": [{"1": 1}], "v": [{"1": 1}, {"v": 1}], "whole": None},
}


def subalgebra_vectors(H: ColorHopfAlgebra, label: str) -> list[Vec]:
    terms = SUBALGEBRAS[H.name][label]
    if terms is None:
        return [H.basis(i) for i in range(H.dim)]
    return [vec(H, t) for t in terms]


MORPHISMS = {
    # name: (source, target, images of source basis vectors)
    "pi_z4_z2": ("k_z4", "k_z2", {"1": {"1": 1}, "g": {"t": 1}, "g^2": {"1": 1}, "g^3": {"t": 1}}),
    "sign_s3": (
        "k_s3",
        "k_z2",
        {"e": {"1": 1}, "(123)": {"1": 1}, "(132)": {"1": 1}, "(12)": {"t": 1}, "(13)": {"t": 1}, "(23)": {"t": 1}},
    ),
    "incl_z2_z4": ("k_z2", "k_z4", {"1": {"1": 1}, "t": {"g^2": 1}}),
    "incl_z2_s3": ("k_z2", "k_s3", {"1": {"e": 1}, "t": {"(12)": 1}}),
    "inverse_z4": ("k_z4", "k_z4", {"1": {"1": 1}, "g": {"g^3": 1}, "g^2": {"g^2": 1}, "g^3": {"g": 1}}),
    "collapse_vw": ("lambda_vw", "lambda_v", {"1": {"1": 1}, "v": {"v": 1}, "w": {"v": 1}}),
    "proj_vw_v": ("lambda_vw", "lambda_v", {"1": {"1": 1}, "v": {"v": 1}}),
    "incl_v_vw": ("lambda_v", "lambda_vw", {"1": {"1": 1}, "v": {"v": 1}}),
    "pi_z4_z2_c4": ("k_z4_c4", "k_z2_c4", {"1": {"1": 1}, "g": {"t": 1}, "g^2": {"1": 1}, "g^3": {"t": 1}}),
    "incl_z2_z4_c4": ("k_z2_c4", "k_z4_c4", {"1": {"1": 1}, "t": {"g^2": 1}}),
    "drop_w_z4": ("lambda_v3_z4", "lambda_v_z4", {"1": {"1": 1}, "v": {"v": 1}}),
    "proj_e1": ("lambda_e1_e2", "lambda_e1", {"1⊗1": {"1": 1}, "v⊗1": {"v": 1}}),
    "incl_e2": ("lambda_e2", "lambda_e1_e2", {"1": {"1⊗1": 1}, "w": {"1⊗w": 1}}),
    "double_z4_f5": ("k_z4_f5", "k_z4_f5", {"1": {"1": 1}, "g": {"g^2": 1}, "g^2": {"1": 1}, "g^3": {"g^2": 1}}),
    "collapse_vw_f5": ("lambda_vw_f5", "lambda_vw_f5", {"1": {"1": 1}, "v": {"v": 1}, "w": {"v": 1}}),
}


def corpus_morphisms(algebras: dict[str, ColorHopfAlgebra] | None = None) -> dict[str, HopfMorphism]:
    algebras = algebras or corpus_algebras()
    out = {}
    for name, (src, tgt, images) in MORPHISMS.items():
        if src in algebras and tgt in algebras:
            out[name] = morphism_from_images(algebras[src], algebras[tgt], images, name)
    return out


MUTATIONS = [
    ("lambda_v", "flip_antipode_sign"),
    ("lambda_vw", "drop_compat_scalar"),
    ("k_z2", "break_degree"),
    ("k_s3", "flip_antipode_sign"),
    ("lambda_vw_f5", "drop_compat_scalar"),
]


def pairwise_products(algebras: dict[str, ColorHopfAlgebra] | None = None) -> dict[str, ColorHopfAlgebra]:
    """tensor_hopf(A, B) for every unordered pair (with repetition) sharing a context."""
    algebras = algebras or corpus_algebras()
    out = {}
    for names in _ALGEBRA_NAMES.values():
        present = [n for n in names if n in algebras]
        for a, b in itertools.combinations_with_replacement(present, 2):
            P = tensor_hopf(algebras[a], algebras[b])
            P.name = f"{a}⊗{b}"
            out[P.name] = P
    return out
