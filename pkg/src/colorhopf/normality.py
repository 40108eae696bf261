"""The braided adjoint action, normal Hopf subalgebras, the correspondence
between Hopf subalgebras and quotient module coalgebras, and the test for
abelian objects."""
from __future__ import annotations

from dataclasses import dataclass

from .catops import (
    QuotientHopfPresentation,
    SubHopfPresentation,
    augmentation_ideal_vectors,
    ideal_closure,
    quotient_hopf,
    sub_hopf,
)
from .errors import CrossCheckFailure, NotCocommutative, NotHopfIdeal, NotModuleCoalgebra, NotVerified
from .hopf import ColorHopfAlgebra, HopfMorphism, tensor_hopf
from .linalg import (
    GradedLinearMap,
    GradedSubspace,
    GradedVectorSpace,
    QuotientPresentation,
    Vec,
    axpy,
    map_kernel,
    preimage_solver,
    quotient_space,
    tensor_space,
    tensor_vec,
)


@dataclass(eq=False)
class XiMap:
    algebra: ColorHopfAlgebra
    map: GradedLinearMap


def xi_apply(A: ColorHopfAlgebra, a: int, x: Vec) -> Vec:
    """xi(a (x) x) = sum phi(|a2|, |x|) a1 x S(a2), for a basis index a and x homogeneous or not."""
    one = A.field.one
    acc: Vec = {}
    for d, part in A.space.components(x).items():
        for a1, a2, c in A.pairs(A.comult.cols[a]):
            s = c * A.phi(A.deg(a2), d)
            axpy(acc, s, A.mul(A.mul({a1: one}, part), A.S({a2: one})))
    return acc


def xi_map(A: ColorHopfAlgebra) -> XiMap:
    """m o (m (x) S) o (Id (x) c) o (Delta (x) Id) as a matrix A (x) A -> A."""
    A.require_verified(cocommutative=False)
    if not A.is_cocommutative():
        raise NotCocommutative(f"{A.name} is not cocommutative")
    n = A.dim
    cols = [xi_apply(A, a, A.basis(x)) for a in range(n) for x in range(n)]
    return XiMap(A, GradedLinearMap(tensor_space(A.space, A.space), A.space, cols, check=False))


@dataclass
class NormalityResult:
    normal: bool
    witness: tuple | None = None
    image: Vec | None = None

    def __bool__(self):
        return self.normal


def is_normal(A: ColorHopfAlgebra, K: SubHopfPresentation | GradedSubspace) -> NormalityResult:
    """xi(a_i (x) k_j) in K for every basis vector a_i and carrier row k_j."""
    carrier = K.carrier if isinstance(K, SubHopfPresentation) else K
    for i in range(A.dim):
        for j, k in enumerate(carrier.rows):
            y = xi_apply(A, i, k)
            if not carrier.contains(y):
                return NormalityResult(False, (i, j), y)
    return NormalityResult(True)


# module coalgebra quotients


@dataclass(eq=False)
class ModuleCoalgebraQuotient:
    """H / L for a left ideal and coideal L: a coalgebra with a left H-action."""

    parent: ColorHopfAlgebra
    ideal: GradedSubspace
    presentation: QuotientPresentation
    comult: GradedLinearMap
    counit: GradedLinearMap
    action: GradedLinearMap

    @property
    def projection(self) -> GradedLinearMap:
        return self.presentation.projection


def _module_coalgebra(H: ColorHopfAlgebra, L: GradedSubspace) -> ModuleCoalgebraQuotient:
    pres = quotient_space(H.space, L)
    pi, sec = pres.projection, pres.section
    Q = pres.quotient
    d = Q.dim
    reps = [sec.cols[q] for q in range(d)]
    comult = [H.apply_pair(lambda a: pi.cols[a], lambda b: pi.cols[b], H.comul(r), d) for r in reps]
    counit = [{0: H.eps(r)} if H.eps(r) != 0 else {} for r in reps]
    action = [pi(H.mul(H.basis(h), reps[q])) for h in range(H.dim) for q in range(d)]
    from .linalg import unit_space

    return ModuleCoalgebraQuotient(
        H,
        L,
        pres,
        GradedLinearMap(Q, tensor_space(Q, Q), comult, check=False),
        GradedLinearMap(Q, unit_space(H.field, H.group), counit, check=False),
        GradedLinearMap(tensor_space(H.space, Q), Q, action, check=False),
    )


def newman_phi(H: ColorHopfAlgebra, K: SubHopfPresentation):
    """H / H K+; a Hopf quotient when that left ideal is a Hopf ideal."""
    H.require_verified(cocommutative=True)
    L = ideal_closure(H, augmentation_ideal_vectors(K), side="left")
    try:
        return quotient_hopf(H, L, f"{H.name}/{H.name}{K.algebra.name}+")
    except (NotHopfIdeal, NotVerified):
        return _module_coalgebra(H, L)


def _projection_of(pi) -> GradedLinearMap:
    if isinstance(pi, QuotientHopfPresentation):
        return pi.projection.map
    if isinstance(pi, ModuleCoalgebraQuotient):
        return pi.projection
    if isinstance(pi, HopfMorphism):
        return pi.map
    return pi


def module_coalgebra_witness(H: ColorHopfAlgebra, pi) -> tuple | None:
    """First reason the projection pi does not present a quotient module coalgebra."""
    p = _projection_of(pi)
    Q: GradedVectorSpace = p.codomain
    if p.degree_violations():
        return ("degrees",)
    if p.rank() != Q.dim:
        return ("surjective",)
    L = map_kernel(p)
    d = Q.dim
    for r, x in enumerate(L.rows):
        for i in range(H.dim):
            if not L.contains(H.mul(H.basis(i), x)):
                return ("left_ideal", i, r)
        if H.eps(x) != 0:
            return ("counit", r)
        if H.apply_pair(lambda a: p.cols[a], lambda b: p.cols[b], H.comul(x), d):
            return ("coideal", r)
    solve = preimage_solver(p)
    sec = [solve({q: H.field.one}) for q in range(d)]

    def act(h: int, y: Vec) -> Vec:
        acc: Vec = {}
        for q, c in y.items():
            axpy(acc, c, p(H.mul(H.basis(h), sec[q])))
        return acc

    def comult_q(y: Vec) -> Vec:
        acc: Vec = {}
        for q, c in y.items():
            axpy(acc, c, H.apply_pair(lambda a: p.cols[a], lambda b: p.cols[b], H.comul(sec[q]), d))
        return acc

    for h in range(H.dim):
        for q in range(d):
            hq = act(h, {q: H.field.one})
            lhs = comult_q(hq)
            rhs: Vec = {}
            # h . (q1 (x) q2) = phi(|h2|, |q1|) h1 q1 (x) h2 q2
            for h1, h2, c in H.pairs(H.comult.cols[h]):
                for idx, e in comult_q({q: H.field.one}).items():
                    q1, q2 = divmod(idx, d)
                    s = c * e * H.phi(H.deg(h2), Q.degrees[q1])
                    axpy(rhs, s, tensor_vec(act(h1, {q1: H.field.one}), act(h2, {q2: H.field.one}), d))
            if lhs != rhs:
                return ("comult_linear", h, q)
            eps_hq = sum((c * H.eps(sec[k]) for k, c in hq.items()), H.field.zero)
            if eps_hq != H.eps(H.basis(h)) * H.eps(sec[q]):
                return ("counit_linear", h, q)
    return None


def is_quotient_module_coalgebra(H: ColorHopfAlgebra, pi) -> bool:
    return module_coalgebra_witness(H, pi) is None


def coinvariants(H: ColorHopfAlgebra, pi) -> GradedSubspace:
    """{x : (Id (x) pi) Delta(x) = x (x) pi(1)}."""
    p = _projection_of(pi)
    d = p.codomain.dim
    p1 = p(H.one)
    cols = []
    for i in range(H.dim):
        v = H.apply_pair(H.basis, lambda b: p.cols[b], H.comult.cols[i], d)
        axpy(v, -H.field.one, tensor_vec(H.basis(i), p1, d))
        cols.append(v)
    return map_kernel(GradedLinearMap(H.space, tensor_space(H.space, p.codomain), cols, check=False))


def newman_psi(H: ColorHopfAlgebra, pi, name: str = "") -> SubHopfPresentation:
    H.require_verified(cocommutative=True)
    bad = module_coalgebra_witness(H, pi)
    if bad is not None:
        raise NotModuleCoalgebra(f"projection is not a quotient module coalgebra: {bad}")
    return sub_hopf(H, coinvariants(H, pi), name or f"{H.name}^coQ")


def newman_ideal(H: ColorHopfAlgebra, K: SubHopfPresentation) -> GradedSubspace:
    return ideal_closure(H, augmentation_ideal_vectors(K), side="left")


# abelian objects


@dataclass
class AbelianCheck:
    commutative: bool
    diagonal_normal: bool

    @property
    def abelian(self) -> bool:
        return self.commutative

    def __bool__(self):
        return self.abelian


def is_abelian_object(C: ColorHopfAlgebra) -> AbelianCheck:
    """Commutativity, cross-checked against normality of the diagonal image in C (x) C."""
    C.require_verified(cocommutative=True)
    commutative = C.is_commutative()
    P = tensor_hopf(C, C)
    image = GradedSubspace.span(P.space, [c for c in C.comult.cols])
    normal = is_normal(P, image).normal
    if commutative != normal:
        raise CrossCheckFailure(f"{C.name}: commutative={commutative} but diagonal normal={normal}")
    return AbelianCheck(commutative, normal)
