"""Color Hopf algebras as structure tensors, their verifier, morphisms,
tensor products and convolution.

All structure maps use the tensor basis ordering of ``linalg``: the pair
(i, j) of H (x) H is index i * dim H + j. Checks are exact equalities
evaluated one basis input at a time, so a failure always names the first
witness and its residual.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import DimensionMismatch, FieldMismatch, GroupMismatch, NotVerified
from .groups import Bicharacter
from .linalg import (
    GradedLinearMap,
    GradedVectorSpace,
    Vec,
    axpy,
    tensor_space,
    tensor_vec,
    unit_space,
    vscale,
    vsub,
)
from .scalars import Scalar


# reports


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: tuple | None = None
    residual: object = None

    def to_json(self, fmt: Callable[[Scalar], str]):
        out = {"check": self.name, "status": "pass" if self.passed else "fail"}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.residual is not None:
            if isinstance(self.residual, dict):
                out["residual"] = {str(k): fmt(v) for k, v in sorted(self.residual.items())}
            else:
                out["residual"] = fmt(self.residual)
        return out


@dataclass
class VerificationReport:
    subject: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    @property
    def failed_names(self) -> list[str]:
        return [c.name for c in self.failures]

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def add(self, name: str, witness=None, residual=None) -> None:
        self.checks.append(CheckResult(name, witness is None, witness, residual))

    def to_json(self, fmt: Callable[[Scalar], str]):
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checks": [c.to_json(fmt) for c in self.checks],
        }


def _first_mismatch(cases: Iterable[tuple[tuple, object, object]]):
    """First (witness, residual) among (witness, lhs, rhs) cases with lhs != rhs."""
    for witness, lhs, rhs in cases:
        if lhs != rhs:
            if isinstance(lhs, dict):
                return witness, vsub(lhs, rhs)
            return witness, lhs - rhs
    return None, None


# algebras


class ColorHopfAlgebra:
    """Structure tensors (m, u, Delta, epsilon, S) over a graded basis.

    Instances are not checked at construction. ``require_verified`` runs
    ``verify_hopf`` once per flag combination and caches the report.
    """

    def __init__(
        self,
        space: GradedVectorSpace,
        phi: Bicharacter,
        mult: GradedLinearMap,
        unit: Vec,
        comult: GradedLinearMap,
        counit: GradedLinearMap,
        antipode: GradedLinearMap,
        name: str = "",
    ):
        n = space.dim
        if phi.group != space.group:
            raise GroupMismatch("bicharacter and space use different groups")
        if phi.field != space.field:
            raise FieldMismatch("bicharacter and space use different fields")
        shapes = [
            (mult, n * n, n),
            (comult, n, n * n),
            (counit, n, 1),
            (antipode, n, n),
        ]
        for f, d, c in shapes:
            if f.domain.dim != d or f.codomain.dim != c:
                raise DimensionMismatch("structure map has the wrong shape")
        if any(not 0 <= i < n for i in unit):
            raise DimensionMismatch("unit vector index out of range")
        self.space = space
        self.phi = phi
        self.mult = mult
        self.unit = {i: c for i, c in unit.items() if c != 0}
        self.comult = comult
        self.counit = counit
        self.antipode = antipode
        self.name = name
        self._reports: dict = {}

    @classmethod
    def from_tensors(cls, space, phi, mult: dict, unit: Vec, comult: dict, counit: dict, antipode: list[Vec], name=""):
        """Build from sparse data: mult[(i, j)] and comult[i] are dicts keyed by k and (j, k)."""
        n = space.dim
        one = space.field.one
        mcols = [dict(mult.get((i, j), {})) for i in range(n) for j in range(n)]
        dcols = [{a * n + b: c for (a, b), c in comult.get(i, {}).items()} for i in range(n)]
        k = unit_space(space.field, space.group)
        T = tensor_space(space, space)
        return cls(
            space,
            phi,
            GradedLinearMap(T, space, mcols, check=False),
            dict(unit),
            GradedLinearMap(space, T, dcols, check=False),
            GradedLinearMap(space, k, [{0: counit[i] * one} if counit.get(i) else {} for i in range(n)], check=False),
            GradedLinearMap(space, space, antipode, check=False),
            name,
        )

    @property
    def field(self):
        return self.space.field

    @property
    def group(self):
        return self.space.group

    @property
    def dim(self) -> int:
        return self.space.dim

    def deg(self, i: int):
        return self.space.degrees[i]

    def basis(self, i: int) -> Vec:
        return {i: self.field.one}

    @property
    def one(self) -> Vec:
        return dict(self.unit)

    def mul_basis(self, i: int, j: int) -> Vec:
        return self.mult.cols[i * self.dim + j]

    def mul(self, x: Vec, y: Vec) -> Vec:
        n = self.dim
        cols = self.mult.cols
        acc: Vec = {}
        for i, a in x.items():
            for j, b in y.items():
                axpy(acc, a * b, cols[i * n + j])
        return acc

    def comul(self, x: Vec) -> Vec:
        return self.comult(x)

    def eps(self, x: Vec) -> Scalar:
        total = self.field.zero
        for i, c in x.items():
            e = self.counit.cols[i].get(0)
            if e:
                total = total + c * e
        return total

    def S(self, x: Vec) -> Vec:
        return self.antipode(x)

    def pairs(self, X: Vec):
        """Iterate (i, j, coefficient) over a vector of H (x) H."""
        n = self.dim
        for idx, c in X.items():
            i, j = divmod(idx, n)
            yield i, j, c

    def tensor_mul(self, X: Vec, Y: Vec) -> Vec:
        """Braided product in H (x) H: (a (x) b)(c (x) d) = phi(|b|,|c|) ac (x) bd."""
        n = self.dim
        phi = self.phi
        acc: Vec = {}
        for a1, a2, c in self.pairs(X):
            for b1, b2, d in self.pairs(Y):
                s = c * d * phi(self.deg(a2), self.deg(b1))
                axpy(acc, s, tensor_vec(self.mul_basis(a1, b1), self.mul_basis(a2, b2), n))
        return acc

    def braid(self, X: Vec) -> Vec:
        """c(a (x) b) = phi(|a|,|b|) b (x) a on H (x) H."""
        n = self.dim
        return {j * n + i: c * self.phi(self.deg(i), self.deg(j)) for i, j, c in self.pairs(X)}

    def apply_pair(self, f: Callable[[int], Vec], g: Callable[[int], Vec], X: Vec, dim_g_out: int) -> Vec:
        """(f (x) g)(X) for X in H (x) H, given f and g on basis indices."""
        acc: Vec = {}
        for i, j, c in self.pairs(X):
            axpy(acc, c, tensor_vec(f(i), g(j), dim_g_out))
        return acc

    def is_cocommutative(self) -> bool:
        return _check_cocommutativity(self)[0] is None

    def is_commutative(self) -> bool:
        return _check_commutativity(self)[0] is None

    def require_verified(self, cocommutative: bool = True) -> VerificationReport:
        report = verify_hopf(self, require_cocommutative=cocommutative)
        if not report.ok:
            raise NotVerified(f"{self.name or 'algebra'} fails {', '.join(report.failed_names)}", report)
        return report

    def structure_equal(self, other: ColorHopfAlgebra) -> bool:
        return (
            self.space == other.space
            and self.phi == other.phi
            and self.mult == other.mult
            and self.unit == other.unit
            and self.comult == other.comult
            and self.counit == other.counit
            and self.antipode == other.antipode
        )

    def __repr__(self):
        return f"ColorHopfAlgebra({self.name or '?'}, dim {self.dim})"


def _check_cocommutativity(H):
    return _first_mismatch(((i,), H.braid(H.comult.cols[i]), H.comult.cols[i]) for i in range(H.dim))


def _check_commutativity(H):
    n = H.dim

    def cases():
        for i in range(n):
            for j in range(n):
                lhs = vscale(H.phi(H.deg(i), H.deg(j)), H.mul_basis(j, i))
                yield (i, j), lhs, H.mul_basis(i, j)

    return _first_mismatch(cases())


def verify_hopf(H: ColorHopfAlgebra, require_cocommutative: bool = False, check_commutative: bool = False) -> VerificationReport:
    key = (require_cocommutative, check_commutative)
    if key in H._reports:
        return H._reports[key]
    n = H.dim
    one = H.field.one
    report = VerificationReport(H.name or "algebra")
    deg = H.space.degrees
    zero_deg = H.group.zero()
    T = tensor_space(H.space, H.space)

    # degree preservation of every structure map
    witness = None
    for label, f, dom, cod in (
        ("mult", H.mult, T.degrees, deg),
        ("comult", H.comult, deg, T.degrees),
        ("antipode", H.antipode, deg, deg),
    ):
        for j, col in enumerate(f.cols):
            for i in col:
                if cod[i] != dom[j]:
                    witness = witness or (label, i, j)
    for j, col in enumerate(H.counit.cols):
        if col and deg[j] != zero_deg:
            witness = witness or ("counit", 0, j)
    for i in H.unit:
        if deg[i] != zero_deg:
            witness = witness or ("unit", i)
    report.add("degrees", witness)

    def assoc():
        for i in range(n):
            for j in range(n):
                ij = H.mul_basis(i, j)
                for k in range(n):
                    yield (i, j, k), H.mul(ij, H.basis(k)), H.mul(H.basis(i), H.mul_basis(j, k))

    report.add("associativity", *_first_mismatch(assoc()))

    def unit_cases():
        u = H.one
        for i in range(n):
            e = H.basis(i)
            yield (i, "left"), H.mul(u, e), e
            yield (i, "right"), H.mul(e, u), e

    report.add("unit", *_first_mismatch(unit_cases()))

    D = H.comult.cols

    def coassoc():
        for i in range(n):
            left = H.apply_pair(lambda a: D[a], H.basis, D[i], n)
            right = H.apply_pair(H.basis, lambda b: D[b], D[i], n * n)
            yield (i,), left, right

    report.add("coassociativity", *_first_mismatch(coassoc()))

    def counit_cases():
        for i in range(n):
            left: Vec = {}
            right: Vec = {}
            for a, b, c in H.pairs(D[i]):
                axpy(left, c * H.eps({a: one}), {b: one})
                axpy(right, c * H.eps({b: one}), {a: one})
            yield (i, "left"), left, H.basis(i)
            yield (i, "right"), right, H.basis(i)

    report.add("counit", *_first_mismatch(counit_cases()))

    def compat():
        for i in range(n):
            for j in range(n):
                yield (i, j), H.comul(H.mul_basis(i, j)), H.tensor_mul(D[i], D[j])

    report.add("compatibility", *_first_mismatch(compat()))

    def counit_mult():
        for i in range(n):
            for j in range(n):
                yield (i, j), H.eps(H.mul_basis(i, j)), H.eps(H.basis(i)) * H.eps(H.basis(j))

    report.add("counit_multiplicative", *_first_mismatch(counit_mult()))
    report.add("comult_unit", *_first_mismatch([((), H.comul(H.one), tensor_vec(H.one, H.one, n))]))
    report.add("counit_unit", *_first_mismatch([((), H.eps(H.one), one)]))

    def antipode_cases(side):
        for i in range(n):
            acc: Vec = {}
            for a, b, c in H.pairs(D[i]):
                if side == "left":
                    axpy(acc, c, H.mul(H.S({a: one}), {b: one}))
                else:
                    axpy(acc, c, H.mul({a: one}, H.S({b: one})))
            yield (i,), acc, vscale(H.eps(H.basis(i)), H.one)

    report.add("antipode_left", *_first_mismatch(antipode_cases("left")))
    report.add("antipode_right", *_first_mismatch(antipode_cases("right")))
    if require_cocommutative:
        report.add("cocommutativity", *_check_cocommutativity(H))
    if check_commutative:
        report.add("commutativity", *_check_commutativity(H))
    H._reports[key] = report
    return report


def antipode_law_checks(H: ColorHopfAlgebra) -> VerificationReport:
    """Consequences of the axioms that the verifier does not test directly."""
    n = H.dim
    one = H.field.one
    D = H.comult.cols
    report = VerificationReport(H.name or "algebra")

    def anti_mult():
        for i in range(n):
            for j in range(n):
                rhs = vscale(H.phi(H.deg(i), H.deg(j)), H.mul(H.S(H.basis(j)), H.S(H.basis(i))))
                yield (i, j), H.S(H.mul_basis(i, j)), rhs

    report.add("antipode_antimultiplicative", *_first_mismatch(anti_mult()))

    def anti_comult():
        for i in range(n):
            lhs = H.comul(H.S(H.basis(i)))
            rhs = H.braid(H.apply_pair(lambda a: H.S({a: one}), lambda b: H.S({b: one}), D[i], n))
            yield (i,), lhs, rhs

    report.add("antipode_anticomultiplicative", *_first_mismatch(anti_comult()))
    report.add("counit_antipode", *_first_mismatch(((i,), H.eps(H.S(H.basis(i))), H.eps(H.basis(i))) for i in range(n)))
    if H.is_cocommutative() or H.is_commutative():
        report.add("antipode_involutive", *_first_mismatch(((i,), H.S(H.S(H.basis(i))), H.basis(i)) for i in range(n)))
    if H.is_cocommutative():
        P = tensor_hopf(H, H, verify=False)

        def comult_coalgebra_map():
            for i in range(n):
                lhs = P.comul(D[i])
                rhs = {}
                for a, b, c in H.pairs(D[i]):
                    # (Delta (x) Delta) lands in (H (x) H) (x) (H (x) H)
                    axpy(rhs, c, tensor_vec(D[a], D[b], n * n))
                yield (i,), lhs, rhs

        report.add("comult_coalgebra_map", *_first_mismatch(comult_coalgebra_map()))

        def comult_algebra_map():
            for i in range(n):
                for j in range(n):
                    yield (i, j), H.comul(H.mul_basis(i, j)), P.mul(D[i], D[j])

        report.add("comult_algebra_map", *_first_mismatch(comult_algebra_map()))
    return report


# trivial algebra and tensor products


def ground_algebra(field, group, phi) -> ColorHopfAlgebra:
    """The one-dimensional Hopf algebra k."""
    k = unit_space(field, group)
    one = field.one
    return ColorHopfAlgebra.from_tensors(
        k, phi, {(0, 0): {0: one}}, {0: one}, {0: {(0, 0): one}}, {0: one}, [{0: one}], name="k"
    )


def tensor_hopf(A: ColorHopfAlgebra, B: ColorHopfAlgebra, verify: bool = True) -> ColorHopfAlgebra:
    if A.field != B.field:
        raise FieldMismatch("tensor factors use different fields")
    if A.phi != B.phi:
        raise GroupMismatch("tensor factors use different gradings or bicharacters")
    if verify:
        A.require_verified(cocommutative=False)
        B.require_verified(cocommutative=False)
    V = tensor_space(A.space, B.space)
    na, nb = A.dim, B.dim
    n = na * nb
    phi = A.phi

    mcols = []
    for a in range(na):
        for b in range(nb):
            for c in range(na):
                s = phi(B.deg(b), A.deg(c))
                ac = A.mul_basis(a, c)
                for d in range(nb):
                    mcols.append(vscale(s, tensor_vec(ac, B.mul_basis(b, d), nb)))

    dcols = []
    for a in range(na):
        for b in range(nb):
            acc: Vec = {}
            for a1, a2, x in A.pairs(A.comult.cols[a]):
                for b1, b2, y in B.pairs(B.comult.cols[b]):
                    s = x * y * phi(A.deg(a2), B.deg(b1))
                    acc[(a1 * nb + b1) * n + (a2 * nb + b2)] = acc.get((a1 * nb + b1) * n + (a2 * nb + b2), 0) + s
            dcols.append({k: v for k, v in acc.items() if v != 0})

    counit = [vscale(A.eps({a: A.field.one}) * B.eps({b: B.field.one}), {0: A.field.one}) for a in range(na) for b in range(nb)]
    S = [tensor_vec(A.S({a: A.field.one}), B.S({b: B.field.one}), nb) for a in range(na) for b in range(nb)]
    k = unit_space(A.field, A.group)
    T = tensor_space(V, V)
    return ColorHopfAlgebra(
        V,
        phi,
        GradedLinearMap(T, V, mcols, check=False),
        tensor_vec(A.unit, B.unit, nb),
        GradedLinearMap(V, T, dcols, check=False),
        GradedLinearMap(V, k, counit, check=False),
        GradedLinearMap(V, V, S, check=False),
        name=f"{A.name or 'A'}⊗{B.name or 'B'}",
    )


def convolution(f: GradedLinearMap, g: GradedLinearMap, C: ColorHopfAlgebra, A: ColorHopfAlgebra) -> GradedLinearMap:
    """f * g = m_A o (f (x) g) o Delta_C."""
    if f.domain.dim != C.dim or g.domain.dim != C.dim or f.codomain.dim != A.dim or g.codomain.dim != A.dim:
        raise DimensionMismatch("convolution factors must map C into A")
    one = C.field.one
    cols = []
    for i in range(C.dim):
        acc: Vec = {}
        for a, b, c in C.pairs(C.comult.cols[i]):
            axpy(acc, c, A.mul(f({a: one}), g({b: one})))
        cols.append(acc)
    return GradedLinearMap(C.space, A.space, cols, check=False)


def unit_counit(C: ColorHopfAlgebra, A: ColorHopfAlgebra) -> GradedLinearMap:
    """u_A o epsilon_C."""
    return GradedLinearMap(C.space, A.space, [vscale(C.eps(C.basis(i)), A.one) for i in range(C.dim)], check=False)


# morphisms


class HopfMorphism:
    __slots__ = ("source", "target", "map", "name", "_report")

    def __init__(self, source: ColorHopfAlgebra, target: ColorHopfAlgebra, map: GradedLinearMap, name: str = ""):
        if map.domain.dim != source.dim or map.codomain.dim != target.dim:
            raise DimensionMismatch("morphism matrix does not match source and target")
        if source.field != target.field:
            raise FieldMismatch("source and target use different fields")
        if source.group != target.group:
            raise GroupMismatch("source and target use different groups")
        self.source = source
        self.target = target
        self.map = GradedLinearMap(source.space, target.space, map.cols, check=False)
        self.name = name
        self._report = None

    @classmethod
    def from_matrix(cls, source, target, rows, name="") -> HopfMorphism:
        return cls(source, target, GradedLinearMap.from_matrix(source.space, target.space, rows, check=False), name)

    def __call__(self, x: Vec) -> Vec:
        return self.map(x)

    def compose(self, inner: HopfMorphism) -> HopfMorphism:
        """self o inner."""
        return HopfMorphism(inner.source, self.target, self.map.compose(inner.map), f"{self.name}∘{inner.name}")

    def require_verified(self) -> VerificationReport:
        report = verify_morphism(self)
        if not report.ok:
            raise NotVerified(f"{self.name or 'morphism'} fails {', '.join(report.failed_names)}", report)
        return report

    def is_injective(self) -> bool:
        from .linalg import map_kernel

        return map_kernel(self.map).dim == 0

    def is_surjective(self) -> bool:
        return self.map.rank() == self.target.dim

    def __repr__(self):
        return f"HopfMorphism({self.name or '?'}: {self.source.name} -> {self.target.name})"


def verify_morphism(f: HopfMorphism) -> VerificationReport:
    if f._report is not None:
        return f._report
    A, B = f.source, f.target
    n = A.dim
    one = A.field.one
    F = f.map
    report = VerificationReport(f.name or "morphism")
    bad = F.degree_violations()
    report.add("degrees", bad[0] if bad else None)

    def mult():
        for i in range(n):
            fi = F.cols[i]
            for j in range(n):
                yield (i, j), F(A.mul_basis(i, j)), B.mul(fi, F.cols[j])

    report.add("multiplicative", *_first_mismatch(mult()))
    report.add("unital", *_first_mismatch([((), F(A.one), B.one)]))

    def comult():
        for i in range(n):
            lhs = A.apply_pair(lambda a: F.cols[a], lambda b: F.cols[b], A.comult.cols[i], B.dim)
            yield (i,), lhs, B.comul(F.cols[i])

    report.add("comultiplicative", *_first_mismatch(comult()))
    report.add("counital", *_first_mismatch(((i,), B.eps(F.cols[i]), A.eps({i: one})) for i in range(n)))
    report.add("antipode", *_first_mismatch(((i,), B.S(F.cols[i]), F(A.S({i: one}))) for i in range(n)))
    f._report = report
    return report


def identity_morphism(H: ColorHopfAlgebra) -> HopfMorphism:
    return HopfMorphism(H, H, GradedLinearMap.identity(H.space), f"id_{H.name}")


def counit_morphism(H: ColorHopfAlgebra, k: ColorHopfAlgebra | None = None) -> HopfMorphism:
    k = k or ground_algebra(H.field, H.group, H.phi)
    return HopfMorphism(H, k, H.counit, f"eps_{H.name}")


def unit_morphism(H: ColorHopfAlgebra, k: ColorHopfAlgebra | None = None) -> HopfMorphism:
    k = k or ground_algebra(H.field, H.group, H.phi)
    return HopfMorphism(k, H, GradedLinearMap(k.space, H.space, [H.one], check=False), f"u_{H.name}")


def trivial_morphism(A: ColorHopfAlgebra, B: ColorHopfAlgebra) -> HopfMorphism:
    """u_B o epsilon_A, the zero morphism of the category."""
    return HopfMorphism(A, B, unit_counit(A, B), f"u∘eps_{A.name}")
