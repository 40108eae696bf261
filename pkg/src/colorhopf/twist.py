"""Twisting a color Hopf algebra into a super Hopf algebra.

Degrees are replaced by their parity u(g) in Z/2, the product is rescaled
by gamma(|x|,|y|)^-1 and the coproduct by gamma(|x1|,|x2|), where gamma is
the bicharacter from ``groups.build_gamma``. Unit, counit and antipode stay
as they are.
"""
from __future__ import annotations

from dataclasses import dataclass

from .catops import SubHopfPresentation, equalizer_subspace, subalgebra_witness
from .groups import Bicharacter, FgAbGroup, build_gamma, cocycle_failures, commutator_failures, u_bar
from .hopf import ColorHopfAlgebra, HopfMorphism, VerificationReport, verify_hopf
from .linalg import GradedLinearMap, GradedSubspace, GradedVectorSpace, tensor_space, unit_space, vscale

SUPER_GROUP = FgAbGroup(0, (2,))


@dataclass(eq=False)
class TwistResult:
    source: ColorHopfAlgebra
    gamma: Bicharacter
    target: ColorHopfAlgebra


def _rescaled(H: ColorHopfAlgebra, gamma: Bicharacter, phi: Bicharacter, degrees, name: str) -> ColorHopfAlgebra:
    n = H.dim
    space = GradedVectorSpace(H.field, phi.group, tuple(degrees), H.space.names)
    T = tensor_space(space, space)
    mcols = [vscale(1 / gamma(H.deg(i), H.deg(j)), H.mul_basis(i, j)) for i in range(n) for j in range(n)]
    dcols = [{k: c * gamma(H.deg(k // n), H.deg(k % n)) for k, c in col.items()} for col in H.comult.cols]
    return ColorHopfAlgebra(
        space,
        phi,
        GradedLinearMap(T, space, mcols, check=False),
        H.unit,
        GradedLinearMap(space, T, dcols, check=False),
        GradedLinearMap(space, unit_space(H.field, phi.group), H.counit.cols, check=False),
        GradedLinearMap(space, space, H.antipode.cols, check=False),
        name=name,
    )


def twist(H: ColorHopfAlgebra) -> TwistResult:
    H.require_verified(cocommutative=True)
    gamma = build_gamma(H.phi)
    eta = Bicharacter.eta(H.field)
    degrees = [(u_bar(H.phi, d),) for d in H.space.degrees]
    target = _rescaled(H, gamma, eta, degrees, f"F({H.name})")
    return TwistResult(H, gamma, target)


def twist_to_trivial(H: ColorHopfAlgebra) -> ColorHopfAlgebra:
    """The gamma-rescaled structure kept over the original group with the trivial bicharacter.

    This is a Hopf algebra for the trivial braiding exactly when every
    occurring degree is even.
    """
    gamma = build_gamma(H.phi)
    trivial = Bicharacter.trivial(H.group, H.field)
    return _rescaled(H, gamma, trivial, H.space.degrees, f"F0({H.name})")


def twist_morphism(f: HopfMorphism, source: TwistResult | None = None, target: TwistResult | None = None) -> HopfMorphism:
    source = source or twist(f.source)
    target = target or twist(f.target)
    return HopfMorphism(source.target, target.target, f.map, f"F({f.name})")


def gamma_checks(H: ColorHopfAlgebra, gamma: Bicharacter | None = None) -> VerificationReport:
    """Cocycle identity on generator triples and the factorization of phi on occurring degrees."""
    gamma = gamma or build_gamma(H.phi)
    report = VerificationReport(H.name)
    bad1 = cocycle_failures(gamma)
    report.add("gamma_cocycle", bad1[0] if bad1 else None)
    degrees = sorted(set(H.space.degrees))
    bad2 = commutator_failures(H.phi, gamma, degrees)
    report.add("gamma_factorizes_phi", bad2[0] if bad2 else None)
    return report


def twist_preserves_structure_checks(
    H: ColorHopfAlgebra,
    K: SubHopfPresentation | GradedSubspace | None = None,
    pair: tuple[HopfMorphism, HopfMorphism] | None = None,
    result: TwistResult | None = None,
) -> VerificationReport:
    result = result or twist(H)
    F = result.target
    report = VerificationReport(f"twist({H.name})")
    report.add("twisted_verifies", None if verify_hopf(F, require_cocommutative=True).ok else ("verify",))
    for label, before, after in (
        ("cocommutative", H.is_cocommutative(), F.is_cocommutative()),
        ("commutative", H.is_commutative(), F.is_commutative()),
    ):
        report.add(f"{label}_preserved", None if before == after else (before, after))
    if K is not None:
        carrier = K.carrier if isinstance(K, SubHopfPresentation) else K
        shared = GradedSubspace.span(F.space, carrier.rows)
        before = subalgebra_witness(H, carrier) is None
        after = subalgebra_witness(F, shared) is None
        report.add("subalgebra_reflected", None if before == after else (before, after))
    if pair is not None:
        f, g = pair
        ts = result if f.source is H else twist(f.source)
        tt = twist(f.target)
        E0 = equalizer_subspace(f, g)
        E1 = equalizer_subspace(twist_morphism(f, ts, tt), twist_morphism(g, ts, tt))
        report.add("equalizer_agrees", None if E0.rows == E1.rows else (E0.dim, E1.dim))
    return report
