"""The invariant battery run by ``colorhopf suite`` over a workspace."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .catops import (
    QuotientHopfPresentation,
    cokernel,
    factorize,
    hkernel,
    image_subalgebra,
    pullback_inclusion,
    sub_hopf,
    subalgebra_witness,
)
from .errors import ColorHopfError, NotVerified
from .groups import (
    Bicharacter,
    build_gamma,
    cocycle_failures,
    commutator_failures,
    u_bar,
    validate_commutation_factor,
)
from .hopf import (
    ColorHopfAlgebra,
    HopfMorphism,
    antipode_law_checks,
    trivial_morphism,
    verify_hopf,
    verify_morphism,
)
from .linalg import GradedSubspace, tensor_vec
from .normality import (
    is_abelian_object,
    is_normal,
    newman_ideal,
    newman_phi,
    newman_psi,
    xi_map,
)
from .serialize import Workspace
from .twist import gamma_checks, twist, twist_morphism, twist_preserves_structure_checks, twist_to_trivial


@dataclass
class Outcome:
    subject: str
    check: str
    passed: bool
    detail: object = None

    def to_json(self):
        out = {"object": self.subject, "check": self.check, "status": "pass" if self.passed else "fail"}
        if self.detail is not None:
            out["detail"] = str(self.detail)
        return out


@dataclass
class SuiteResult:
    outcomes: list[Outcome] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(o.passed for o in self.outcomes)

    @property
    def first_failure(self) -> Outcome | None:
        return next((o for o in self.outcomes if not o.passed), None)

    def record(self, subject, check, passed, detail=None):
        self.outcomes.append(Outcome(subject, check, bool(passed), None if passed else detail))

    def record_report(self, subject, report):
        for c in report.checks:
            self.record(subject, c.name, c.passed, c.witness)


def _bicharacter_checks(res: SuiteResult, label: str, phi: Bicharacter) -> None:
    report = validate_commutation_factor(phi)
    res.record(label, "commutation_factor", report.ok, report.failures[:1])
    if not report.ok:
        return
    G = phi.group
    box = G.box(1 if G.free_rank else 0)
    bad = [
        (g, h, k)
        for g, h, k in itertools.product(box, repeat=3)
        if phi(G.add(g, h), k) != phi(g, k) * phi(h, k) or phi(k, G.add(g, h)) != phi(k, g) * phi(k, h)
    ]
    res.record(label, "biadditive", not bad, bad[:1])
    bad = [(g, h) for g, h in itertools.product(box, repeat=2) if u_bar(phi, G.add(g, h)) != u_bar(phi, g) ^ u_bar(phi, h)]
    res.record(label, "parity_homomorphism", not bad, bad[:1])
    gamma = build_gamma(phi)
    bad = cocycle_failures(gamma)
    res.record(label, "gamma_cocycle", not bad, bad[:1])
    bad = commutator_failures(phi, gamma, G.box(2))
    res.record(label, "gamma_factorizes_phi", not bad, bad[:1])


def _guard(res: SuiteResult, subject: str, check: str, fn) -> None:
    try:
        fn()
    except NotVerified as exc:
        name = exc.report.failed_names[0] if exc.report is not None else check
        res.record(subject, name, False, exc)
    except ColorHopfError as exc:
        res.record(subject, check, False, exc)


def _algebra_checks(res: SuiteResult, name: str, H: ColorHopfAlgebra, subs: list[tuple[str, GradedSubspace]]) -> bool:
    report = verify_hopf(H, require_cocommutative=True)
    res.record_report(name, report)
    if not report.ok:
        return False
    res.record_report(name, antipode_law_checks(H))
    xi = xi_map(H).map
    n = H.dim

    def xi_coalgebra():
        one = H.field.one
        bad = None
        for a in range(n):
            for x in range(n):
                lhs = H.comul(xi.cols[a * n + x])
                # braided coproduct of a (x) x pushed through xi (x) xi
                rhs = {}
                for a1, a2, c in H.pairs(H.comult.cols[a]):
                    for x1, x2, d in H.pairs(H.comult.cols[x]):
                        s = c * d * H.phi(H.deg(a2), H.deg(x1))
                        term = tensor_vec(xi.cols[a1 * n + x1], xi.cols[a2 * n + x2], n)
                        for k, v in term.items():
                            rhs[k] = rhs.get(k, H.field.zero) + s * v
                rhs = {k: v for k, v in rhs.items() if v != 0}
                if lhs != rhs and bad is None:
                    bad = (a, x)
                if H.eps(xi.cols[a * n + x]) != H.eps({a: one}) * H.eps({x: one}) and bad is None:
                    bad = (a, x, "counit")
        res.record(name, "xi_coalgebra_map", bad is None, bad)

    _guard(res, name, "xi_coalgebra_map", xi_coalgebra)
    if H.is_commutative():
        bad = next(
            ((a, x) for a in range(n) for x in range(n) if xi.cols[a * n + x] != {k: H.eps(H.basis(a)) * c for k, c in H.basis(x).items() if H.eps(H.basis(a)) != 0}),
            None,
        )
        res.record(name, "xi_trivial_when_commutative", bad is None, bad)

    def abelian():
        is_abelian_object(H)
        res.record(name, "abelian_routes_agree", True)

    _guard(res, name, "abelian_routes_agree", abelian)

    def twisted():
        result = twist(H)
        res.record_report(name, gamma_checks(H, result.gamma))
        res.record_report(name, twist_preserves_structure_checks(H, result=result))
        if all(u_bar(H.phi, d) == 0 for d in H.space.degrees):
            plain = twist_to_trivial(H)
            res.record(name, "even_twist_is_ordinary", verify_hopf(plain, require_cocommutative=True).ok)
        for label, U in subs:
            res.record_report(f"{name}:{label}", twist_preserves_structure_checks(H, U, result=result))

    _guard(res, name, "twist", twisted)
    for label, U in subs:
        _guard(res, f"{name}:{label}", "subalgebra", lambda: _subalgebra_checks(res, f"{name}:{label}", H, U))
    return True


def _subalgebra_checks(res: SuiteResult, label: str, H: ColorHopfAlgebra, U: GradedSubspace) -> None:
    if subalgebra_witness(H, U) is not None:
        return
    K = sub_hopf(H, U)
    Q = newman_phi(H, K)
    back = newman_psi(H, Q)
    res.record(label, "newman_psi_phi", back.carrier == U, (back.carrier.dim, U.dim))
    again = newman_ideal(H, back)
    res.record(label, "newman_phi_psi", again == Q.ideal, (again.dim, Q.ideal.dim))
    normal = is_normal(H, K).normal
    closes = isinstance(Q, QuotientHopfPresentation)
    incl = K.inclusion
    kernel_of_cokernel = hkernel(cokernel(incl).projection).carrier == U
    res.record(label, "normal_kernel_equivalence", normal == closes == kernel_of_cokernel, (normal, closes, kernel_of_cokernel))


def _morphism_checks(res: SuiteResult, name: str, f: HopfMorphism, ws: Workspace) -> None:
    report = verify_morphism(f)
    res.record_report(name, report)
    if not report.ok:
        return
    A, B = f.source, f.target

    def factorization():
        F = factorize(f)
        res.record(name, "kernel_is_ideal_of_hkernel", F.ideal == F.kernel, (F.ideal.dim, F.kernel.dim))
        res.record(name, "i_injective", F.i.is_injective())
        res.record(name, "p_surjective", F.p.is_surjective())
        res.record(name, "i_after_p", F.i.compose(F.p).map == f.map)
        res.record(name, "hkernel_normal", is_normal(A, F.hker).normal)
        mono = F.hker.dim == 1
        res.record(name, "mono_iff_injective", mono == f.is_injective(), (mono, f.is_injective()))
        after = twist_preserves_structure_checks(A, pair=(f, trivial_morphism(A, B)))
        res.record_report(name, after)
        res.record(name, "twisted_morphism", verify_morphism(twist_morphism(f)).ok)

    _guard(res, name, "factorize", factorization)
    if f.is_surjective():

        def surjective():
            xa, xb = xi_map(A).map, xi_map(B).map
            na = A.dim
            bad = None
            for a in range(na):
                for x in range(na):
                    lhs = {}
                    for i, c in f.map.cols[a].items():
                        for j, d in f.map.cols[x].items():
                            for k, v in xb.cols[i * B.dim + j].items():
                                lhs[k] = lhs.get(k, A.field.zero) + c * d * v
                    lhs = {k: v for k, v in lhs.items() if v != 0}
                    if lhs != f(xa.cols[a * na + x]):
                        bad = bad or (a, x)
            res.record(name, "xi_natural", bad is None, bad)
            for sname, (amb, U) in ws.subspaces.items():
                if ws.algebras.get(amb) is B and subalgebra_witness(B, U) is None:
                    C = sub_hopf(B, U)
                    pb = pullback_inclusion(f, C)
                    res.record(f"{name}:{sname}", "pullback_surjective", pb.restriction.is_surjective())

        _guard(res, name, "xi_natural", surjective)


def _condition_six(res: SuiteResult, ws: Workspace) -> None:
    for (fn, f), (gn, g) in itertools.product(ws.morphisms.items(), repeat=2):
        if g.source is not f.target:
            continue
        if not (verify_morphism(f).ok and verify_morphism(g).ok):
            continue

        def check():
            mu = cokernel(f).projection
            image = image_subalgebra(mu, hkernel(g))
            res.record(f"{fn},{gn}", "cokernel_image_of_kernel_normal", is_normal(mu.target, image).normal)

        _guard(res, f"{fn},{gn}", "cokernel_image_of_kernel_normal", check)


def run_suite(ws: Workspace) -> SuiteResult:
    res = SuiteResult()
    if ws.phi is not None:
        _bicharacter_checks(res, "phi", ws.phi)
    seen = []
    for name, H in ws.algebras.items():
        if H.phi not in seen:
            seen.append(H.phi)
            _bicharacter_checks(res, f"phi({name})", H.phi)
    for name, H in ws.algebras.items():
        subs = [(s, U) for s, (a, U) in ws.subspaces.items() if a == name]
        _algebra_checks(res, name, H, subs)
    for name, f in ws.morphisms.items():
        _morphism_checks(res, name, f, ws)
    _condition_six(res, ws)
    return res
