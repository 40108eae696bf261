"""Limits, colimits, Hopf kernels and cokernels in the category of
cocommutative color Hopf algebras.

Every construction solves an exact linear system, builds the induced
structure tensors on a basis of the result and then runs the verifier on
what it built.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    DoesNotCommute,
    NotCocommutative,
    NotHopfIdeal,
    NotParallel,
    NotSubalgebra,
    UniversalityFailure,
)
from .hopf import (
    ColorHopfAlgebra,
    HopfMorphism,
    tensor_hopf,
    trivial_morphism,
)
from .linalg import (
    GradedLinearMap,
    GradedSubspace,
    QuotientPresentation,
    Vec,
    axpy,
    map_kernel,
    quotient_space,
    tensor_space,
    tensor_vec,
    vscale,
)


@dataclass(eq=False)
class SubHopfPresentation:
    parent: ColorHopfAlgebra
    carrier: GradedSubspace
    algebra: ColorHopfAlgebra
    inclusion: HopfMorphism

    @property
    def dim(self) -> int:
        return self.carrier.dim


@dataclass(eq=False)
class QuotientHopfPresentation:
    parent: ColorHopfAlgebra
    ideal: GradedSubspace
    presentation: QuotientPresentation
    quotient: ColorHopfAlgebra
    projection: HopfMorphism


class ProductPresentation(NamedTuple):
    algebra: ColorHopfAlgebra
    proj_a: HopfMorphism
    proj_b: HopfMorphism


class Factorization(NamedTuple):
    p: HopfMorphism
    i: HopfMorphism
    hker: SubHopfPresentation
    ideal: GradedSubspace
    kernel: GradedSubspace


class PullbackPresentation(NamedTuple):
    sub: SubHopfPresentation
    restriction: HopfMorphism


# subalgebras


def _tensor_coords(U: GradedSubspace, W: GradedSubspace, X: Vec, nW: int):
    """Coordinates of X in the basis row_r (x) row_s of U (x) W, and the residual."""
    coords = {}
    resid = dict(X)
    for idx, c in X.items():
        i, j = divmod(idx, nW)
        r = U._pivots.get(i)
        s = W._pivots.get(j)
        if r is not None and s is not None:
            coords[(r, s)] = c
    for (r, s), c in coords.items():
        axpy(resid, -c, tensor_vec(U.rows[r], W.rows[s], nW))
    return coords, resid


def subalgebra_witness(H: ColorHopfAlgebra, U: GradedSubspace):
    """First reason U is not a Hopf subalgebra of H, or None."""
    n = H.dim
    if not U.contains(H.one):
        return ("unit",)
    for r, x in enumerate(U.rows):
        for s, y in enumerate(U.rows):
            if not U.contains(H.mul(x, y)):
                return ("mult", r, s)
        if _tensor_coords(U, U, H.comul(x), n)[1]:
            return ("comult", r)
        if not U.contains(H.S(x)):
            return ("antipode", r)
    return None


def sub_hopf(H: ColorHopfAlgebra, carrier: GradedSubspace, name: str = "") -> SubHopfPresentation:
    """Restrict the structure of H to a Hopf subalgebra, using the RREF rows as basis."""
    bad = subalgebra_witness(H, carrier)
    if bad is not None:
        raise NotSubalgebra(f"carrier is not closed: {bad}")
    n = H.dim
    space = carrier.basis_space()
    d = carrier.dim
    rows = carrier.rows
    mult = {(r, s): carrier.coords(H.mul(rows[r], rows[s])) for r in range(d) for s in range(d)}
    comult = {r: _tensor_coords(carrier, carrier, H.comul(rows[r]), n)[0] for r in range(d)}
    counit = {r: H.eps(rows[r]) for r in range(d)}
    antipode = [carrier.coords(H.S(rows[r])) for r in range(d)]
    K = ColorHopfAlgebra.from_tensors(
        space, H.phi, mult, carrier.coords(H.one), comult, {r: c for r, c in counit.items() if c != 0}, antipode,
        name=name or f"sub({H.name})",
    )
    K.require_verified(cocommutative=H.is_cocommutative())
    inclusion = HopfMorphism(K, H, carrier.inclusion(), f"incl_{K.name}")
    inclusion.require_verified()
    return SubHopfPresentation(H, carrier, K, inclusion)


def image_subalgebra(f: HopfMorphism, K: SubHopfPresentation | GradedSubspace, name: str = "") -> SubHopfPresentation:
    carrier = K.carrier if isinstance(K, SubHopfPresentation) else K
    image = GradedSubspace.span(f.target.space, [f(r) for r in carrier.rows])
    return sub_hopf(f.target, image, name or f"{f.name}(sub)")


# ideals and quotients


def ideal_closure(B: ColorHopfAlgebra, seed, side: str = "two") -> GradedSubspace:
    """Smallest subspace containing seed and closed under multiplication by B
    on the given side ("left", "right" or "two")."""
    if isinstance(seed, GradedSubspace):
        U = GradedSubspace.span(B.space, seed.rows)
    else:
        U = GradedSubspace.span(B.space, seed)
    n = B.dim
    while True:
        grown = list(U.rows)
        for x in U.rows:
            for i in range(n):
                e = B.basis(i)
                if side in ("left", "two"):
                    grown.append(B.mul(e, x))
                if side in ("right", "two"):
                    grown.append(B.mul(x, e))
        V = GradedSubspace.span(B.space, grown)
        if V.dim == U.dim:
            return V
        U = V


def hopf_ideal_witness(B: ColorHopfAlgebra, I: GradedSubspace):
    """First reason I is not a Hopf ideal of B, or None."""
    n = B.dim
    pres = quotient_space(B.space, I)
    pi = pres.projection
    nq = pres.quotient.dim
    for r, x in enumerate(I.rows):
        for i in range(n):
            e = B.basis(i)
            if not I.contains(B.mul(e, x)):
                return ("left_ideal", i, r)
            if not I.contains(B.mul(x, e)):
                return ("right_ideal", r, i)
        if B.eps(x) != 0:
            return ("counit", r)
        if B.apply_pair(lambda a: pi.cols[a], lambda b: pi.cols[b], B.comul(x), nq):
            return ("coideal", r)
        if not I.contains(B.S(x)):
            return ("antipode", r)
    return None


def quotient_hopf(B: ColorHopfAlgebra, I: GradedSubspace, name: str = "") -> QuotientHopfPresentation:
    bad = hopf_ideal_witness(B, I)
    if bad is not None:
        raise NotHopfIdeal(f"not a Hopf ideal: {bad}")
    pres = quotient_space(B.space, I)
    pi, sec = pres.projection, pres.section
    d = pres.quotient.dim
    nq = d
    reps = [sec.cols[q] for q in range(d)]
    mult = {(a, b): pi(B.mul(reps[a], reps[b])) for a in range(d) for b in range(d)}
    comult = {}
    for a in range(d):
        X = B.apply_pair(lambda x: pi.cols[x], lambda y: pi.cols[y], B.comul(reps[a]), nq)
        comult[a] = {divmod(k, nq): c for k, c in X.items()}
    counit = {a: B.eps(reps[a]) for a in range(d)}
    antipode = [pi(B.S(reps[a])) for a in range(d)]
    Q = ColorHopfAlgebra.from_tensors(
        pres.quotient, B.phi, mult, pi(B.one), comult, {a: c for a, c in counit.items() if c != 0}, antipode,
        name=name or f"{B.name}/I",
    )
    Q.require_verified(cocommutative=B.is_cocommutative())
    projection = HopfMorphism(B, Q, pi, f"proj_{Q.name}")
    projection.require_verified()
    return QuotientHopfPresentation(B, I, pres, Q, projection)


# limits


def _parallel(f: HopfMorphism, g: HopfMorphism) -> None:
    if f.source is not g.source and not f.source.structure_equal(g.source):
        raise NotParallel("morphisms have different sources")
    if f.target is not g.target and not f.target.structure_equal(g.target):
        raise NotParallel("morphisms have different targets")


def _require(f: HopfMorphism) -> None:
    f.source.require_verified(cocommutative=True)
    f.target.require_verified(cocommutative=True)
    f.require_verified()


def equalizer_subspace(f: HopfMorphism, g: HopfMorphism) -> GradedSubspace:
    """ker((Id (x) f - Id (x) g) o Delta) inside the common source."""
    _parallel(f, g)
    A, B = f.source, f.target
    nb = B.dim
    cols = []
    for i in range(A.dim):
        X = A.comult.cols[i]
        v = A.apply_pair(A.basis, lambda b: f.map.cols[b], X, nb)
        axpy(v, -A.field.one, A.apply_pair(A.basis, lambda b: g.map.cols[b], X, nb))
        cols.append(v)
    M = GradedLinearMap(A.space, tensor_space(A.space, B.space), cols, check=False)
    return map_kernel(M)


def equalizer(f: HopfMorphism, g: HopfMorphism, name: str = "") -> SubHopfPresentation:
    _parallel(f, g)
    _require(f)
    _require(g)
    return sub_hopf(f.source, equalizer_subspace(f, g), name or f"Eq({f.name},{g.name})")


def hkernel(f: HopfMorphism, name: str = "") -> SubHopfPresentation:
    """{x : x1 (x) f(x2) = x (x) 1}."""
    return equalizer(f, trivial_morphism(f.source, f.target), name or f"Hker({f.name})")


def binary_product(A: ColorHopfAlgebra, B: ColorHopfAlgebra) -> ProductPresentation:
    A.require_verified(cocommutative=True)
    B.require_verified(cocommutative=True)
    P = tensor_hopf(A, B)
    one = A.field.one
    nb = B.dim
    pa = [vscale(B.eps({b: one}), {a: one}) for a in range(A.dim) for b in range(nb)]
    pb = [vscale(A.eps({a: one}), {b: one}) for a in range(A.dim) for b in range(nb)]
    proj_a = HopfMorphism(P, A, GradedLinearMap(P.space, A.space, pa, check=False), f"pi_{A.name}")
    proj_b = HopfMorphism(P, B, GradedLinearMap(P.space, B.space, pb, check=False), f"pi_{B.name}")
    proj_a.require_verified()
    proj_b.require_verified()
    return ProductPresentation(P, proj_a, proj_b)


def diagonal(g: HopfMorphism, h: HopfMorphism, product: ProductPresentation | None = None) -> HopfMorphism:
    """<g, h> = (g (x) h) o Delta_H."""
    H = g.source
    if h.source is not H and not h.source.structure_equal(H):
        raise NotParallel("diagonal legs need a common source")
    if not H.is_cocommutative():
        raise NotCocommutative(f"{H.name} is not cocommutative")
    if product is None:
        product = binary_product(g.target, h.target)
    P = product.algebra
    nb = h.target.dim
    cols = [H.apply_pair(lambda a: g.map.cols[a], lambda b: h.map.cols[b], H.comult.cols[i], nb) for i in range(H.dim)]
    d = HopfMorphism(H, P, GradedLinearMap(H.space, P.space, cols, check=False), f"<{g.name},{h.name}>")
    d.require_verified()
    return d


# colimits


def augmentation_image(f: HopfMorphism) -> list[Vec]:
    """f(A+) spanned by f(a) - eps(a) 1 over the basis of A."""
    A, B = f.source, f.target
    out = []
    for i in range(A.dim):
        v = dict(f.map.cols[i])
        axpy(v, -A.eps(A.basis(i)), B.one)
        out.append(v)
    return out


def cokernel(f: HopfMorphism, name: str = "") -> QuotientHopfPresentation:
    _require(f)
    B = f.target
    I = ideal_closure(B, augmentation_image(f))
    return quotient_hopf(B, I, name or f"Coker({f.name})")


def coequalizer(f: HopfMorphism, g: HopfMorphism, name: str = "") -> QuotientHopfPresentation:
    _parallel(f, g)
    _require(f)
    _require(g)
    seed = [f.map.cols[i] for i in range(f.source.dim)]
    seed = [dict(axpy(dict(a), -f.source.field.one, b)) for a, b in zip(seed, g.map.cols)]
    I = ideal_closure(f.target, seed)
    return quotient_hopf(f.target, I, name or f"Coeq({f.name},{g.name})")


def augmentation_ideal_vectors(K: SubHopfPresentation) -> list[Vec]:
    """K+ spanned by k - eps(k) 1 over the carrier rows."""
    H = K.parent
    out = []
    for r in K.carrier.rows:
        v = dict(r)
        axpy(v, -H.eps(r), H.one)
        out.append(v)
    return out


def factorize(f: HopfMorphism) -> Factorization:
    """f = i o p with p onto A / A Hker(f)+ A and i injective."""
    _require(f)
    A, B = f.source, f.target
    hk = hkernel(f)
    ideal = ideal_closure(A, augmentation_ideal_vectors(hk))
    kernel = map_kernel(f.map)
    qp = quotient_hopf(A, ideal, f"Im({f.name})")
    M = qp.quotient
    i_map = f.map.compose(qp.presentation.section)
    i = HopfMorphism(M, B, i_map, f"mono({f.name})")
    i.require_verified()
    p = qp.projection
    p.name = f"epi({f.name})"
    return Factorization(p, i, hk, ideal, kernel)


def pullback_inclusion(p: HopfMorphism, C: SubHopfPresentation, name: str = "") -> PullbackPresentation:
    """p^-1(C) = {x : (p (x) Id) Delta(x) in C (x) A} with the restricted map onto C."""
    _require(p)
    A, B = p.source, p.target
    qs = quotient_space(B.space, C.carrier)
    q = qs.projection.compose(p.map)
    na = A.dim
    cols = [A.apply_pair(lambda a: q.cols[a], A.basis, A.comult.cols[i], na) for i in range(na)]
    M = GradedLinearMap(A.space, tensor_space(qs.quotient, A.space), cols, check=False)
    sub = sub_hopf(A, map_kernel(M), name or f"{p.name}^-1({C.algebra.name})")
    rcols = []
    for r in sub.carrier.rows:
        y = p(r)
        if not C.carrier.contains(y):
            raise UniversalityFailure("p(p^-1 C) is not inside C", y)
        rcols.append(C.carrier.coords(y))
    restriction = HopfMorphism(sub.algebra, C.algebra, GradedLinearMap(sub.algebra.space, C.algebra.space, rcols, check=False), f"{p.name}|")
    restriction.require_verified()
    return PullbackPresentation(sub, restriction)


# universal properties for supplied cones


def factor_through_sub(E: SubHopfPresentation, h: HopfMorphism) -> HopfMorphism:
    """The h' with incl o h' = h, when h lands in the carrier."""
    cols = []
    for j, c in enumerate(h.map.cols):
        if not E.carrier.contains(c):
            raise UniversalityFailure(f"h(e{j}) leaves the carrier", c)
        cols.append(E.carrier.coords(c))
    out = HopfMorphism(h.source, E.algebra, GradedLinearMap(h.source.space, E.algebra.space, cols, check=False), f"{h.name}'")
    out.require_verified()
    if E.inclusion.compose(out).map != h.map:
        raise UniversalityFailure("mediating map does not factor h")
    return out


def factor_through_equalizer(E: SubHopfPresentation, f: HopfMorphism, g: HopfMorphism, h: HopfMorphism) -> HopfMorphism:
    if f.compose(h).map != g.compose(h).map:
        raise DoesNotCommute("f o h != g o h")
    return factor_through_sub(E, h)


def factor_through_quotient(Qp: QuotientHopfPresentation, h: HopfMorphism) -> HopfMorphism:
    """The h' with h' o proj = h, when h vanishes on the ideal."""
    for r in Qp.ideal.rows:
        if h(r):
            raise DoesNotCommute("h does not vanish on the ideal")
    cols = h.map.compose(Qp.presentation.section).cols
    out = HopfMorphism(Qp.quotient, h.target, GradedLinearMap(Qp.quotient.space, h.target.space, cols, check=False), f"{h.name}'")
    out.require_verified()
    if out.compose(Qp.projection).map != h.map:
        raise UniversalityFailure("mediating map does not factor h")
    return out


def factor_through_coequalizer(Qp: QuotientHopfPresentation, f: HopfMorphism, g: HopfMorphism, h: HopfMorphism) -> HopfMorphism:
    if h.compose(f).map != h.compose(g).map:
        raise DoesNotCommute("h o f != h o g")
    return factor_through_quotient(Qp, h)


def factor_through_product(prod: ProductPresentation, g: HopfMorphism, h: HopfMorphism) -> HopfMorphism:
    d = diagonal(g, h, prod)
    if prod.proj_a.compose(d).map != g.map or prod.proj_b.compose(d).map != h.map:
        raise UniversalityFailure("diagonal does not recover its legs")
    return d


def factor_through(universal, *legs: HopfMorphism) -> HopfMorphism:
    """Mediating morphism for a cone (sub-objects, products) or cocone (quotients)."""
    if isinstance(universal, ProductPresentation):
        return factor_through_product(universal, *legs)
    if isinstance(universal, SubHopfPresentation):
        if len(legs) == 3:
            return factor_through_equalizer(universal, *legs)
        return factor_through_sub(universal, *legs)
    if isinstance(universal, QuotientHopfPresentation):
        if len(legs) == 3:
            return factor_through_coequalizer(universal, *legs)
        return factor_through_quotient(universal, *legs)
    raise TypeError(f"no universal property for {type(universal).__name__}")
