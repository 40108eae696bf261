"""Command-line front end.

Exit codes: 0 when every check passes, 1 on a mathematical failure, 2 on
malformed input. Reports go to stdout as JSON; a one-line human summary goes
to stderr unless ``--json`` is given.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import corpus
from .catops import (
    QuotientHopfPresentation,
    SubHopfPresentation,
    binary_product,
    coequalizer,
    cokernel,
    equalizer,
    factorize,
    hkernel,
    pullback_inclusion,
    sub_hopf,
)
from .errors import ColorHopfError, NotVerified
from .hopf import ColorHopfAlgebra, verify_hopf, verify_morphism
from .linalg import GradedSubspace
from .normality import ModuleCoalgebraQuotient, is_abelian_object, is_normal, newman_phi, newman_psi
from .serialize import (
    Workspace,
    WorkspaceError,
    algebra_to_json,
    corpus_workspace,
    dumps,
    load_workspace,
    matrix_to_json,
    subspace_to_json,
)
from .suite import run_suite
from .twist import gamma_checks, twist, twist_preserves_structure_checks

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class Assertions:
    """Named pass/fail lines attached to a construction report."""

    def __init__(self):
        self.lines: list[dict] = []

    def add(self, text: str, passed: bool) -> None:
        self.lines.append({"property": text, "status": "pass" if passed else "fail"})

    @property
    def ok(self) -> bool:
        return all(line["status"] == "pass" for line in self.lines)

    def to_json(self) -> list[str]:
        return [f"{line['property']}: {line['status']}" for line in self.lines]


def _sub_json(K: SubHopfPresentation, ambient: str) -> dict:
    return {
        "dim": K.dim,
        "carrier": subspace_to_json(K.carrier, ambient),
        "algebra": algebra_to_json(K.algebra),
        "inclusion": matrix_to_json(K.inclusion.map),
    }


def _quotient_json(Q: QuotientHopfPresentation, ambient: str) -> dict:
    return {
        "dim": Q.quotient.dim,
        "ideal": subspace_to_json(Q.ideal, ambient),
        "algebra": algebra_to_json(Q.quotient),
        "projection": matrix_to_json(Q.projection.map),
    }


def _carrier(ws: Workspace, H: ColorHopfAlgebra, name: str) -> GradedSubspace:
    ambient, U = ws.subspace(name)
    if ws.algebra(ambient) is not H:
        raise WorkspaceError(f"subspace {name} lives in {ambient}, not {H.name}")
    return U


def _name_of(ws: Workspace, H: ColorHopfAlgebra) -> str:
    return next((n for n, A in ws.algebras.items() if A is H), H.name)


# commands


def cmd_verify(ws: Workspace, name: str) -> tuple[int, dict]:
    if name in ws.algebras:
        report = verify_hopf(ws.algebras[name])
    elif name in ws.morphisms:
        report = verify_morphism(ws.morphisms[name])
    else:
        raise WorkspaceError(f"unknown name {name!r}")
    fmt = (ws.algebras[name] if name in ws.algebras else ws.morphisms[name].source).field.format
    out = report.to_json(fmt)
    out["name"] = name
    return (EXIT_PASS if report.ok else EXIT_FAIL), out


def _op_hker(ws, a, args):
    f = ws.morphism(args[0])
    K = hkernel(f)
    src = _name_of(ws, f.source)
    a.add("Hker(f) is a sub-Hopf algebra", True)
    a.add("Hker(f) is normal", is_normal(f.source, K).normal)
    return {"hker": _sub_json(K, src)}


def _op_coker(ws, a, args):
    f = ws.morphism(args[0])
    Q = cokernel(f)
    a.add("Coker(f) is a Hopf quotient", True)
    a.add("Coker(f) after f is trivial", Q.projection.compose(f).map == _trivial_map(f.source, Q.quotient))
    return {"coker": _quotient_json(Q, _name_of(ws, f.target))}


def _trivial_map(A, B):
    from .hopf import trivial_morphism

    return trivial_morphism(A, B).map


def _op_equalizer(ws, a, args):
    f, g = ws.morphism(args[0]), ws.morphism(args[1])
    E = equalizer(f, g)
    a.add("f after inclusion = g after inclusion", f.compose(E.inclusion).map == g.compose(E.inclusion).map)
    return {"equalizer": _sub_json(E, _name_of(ws, f.source))}


def _op_coequalizer(ws, a, args):
    f, g = ws.morphism(args[0]), ws.morphism(args[1])
    Q = coequalizer(f, g)
    a.add("projection after f = projection after g", Q.projection.compose(f).map == Q.projection.compose(g).map)
    return {"coequalizer": _quotient_json(Q, _name_of(ws, f.target))}


def _op_product(ws, a, args):
    A, B = ws.algebra(args[0]), ws.algebra(args[1])
    P = binary_product(A, B)
    a.add("product verifies", verify_hopf(P.algebra).ok)
    a.add("projections are Hopf morphisms", verify_morphism(P.proj_a).ok and verify_morphism(P.proj_b).ok)
    return {
        "product": algebra_to_json(P.algebra),
        "proj_a": matrix_to_json(P.proj_a.map),
        "proj_b": matrix_to_json(P.proj_b.map),
    }


def _op_factorize(ws, a, args):
    f = ws.morphism(args[0])
    F = factorize(f)
    src = _name_of(ws, f.source)
    a.add("ker(f)=A(Hker f)+A", F.ideal == F.kernel)
    a.add("i injective", F.i.is_injective())
    a.add("p surjective", F.p.is_surjective())
    a.add("i after p = f", F.i.compose(F.p).map == f.map)
    return {
        "hker": _sub_json(F.hker, src),
        "image": algebra_to_json(F.p.target),
        "p": matrix_to_json(F.p.map),
        "i": matrix_to_json(F.i.map),
    }


def _op_pullback(ws, a, args):
    p = ws.morphism(args[0])
    C = sub_hopf(p.target, _carrier(ws, p.target, args[1]))
    pb = pullback_inclusion(p, C)
    a.add("restriction lands in C", p.compose(pb.sub.inclusion).map == C.inclusion.compose(pb.restriction).map)
    if p.is_surjective():
        a.add("restriction surjective", pb.restriction.is_surjective())
    return {"pullback": _sub_json(pb.sub, _name_of(ws, p.source)), "restriction": matrix_to_json(pb.restriction.map)}


def _op_normal(ws, a, args):
    H = ws.algebra(args[0])
    K = sub_hopf(H, _carrier(ws, H, args[1]))
    res = is_normal(H, K)
    out = {"normal": res.normal}
    if res.witness is not None:
        out["witness"] = {"pair": list(res.witness), "image": [H.field.format(c) for c in _dense(H, res.image)]}
    return out


def _dense(H, x):
    return [x.get(i, H.field.zero) for i in range(H.dim)]


def _op_newman_phi(ws, a, args):
    H = ws.algebra(args[0])
    K = sub_hopf(H, _carrier(ws, H, args[1]))
    Q = newman_phi(H, K)
    name = _name_of(ws, H)
    back = newman_psi(H, Q)
    a.add("psi(phi(K)) = K", back.carrier == K.carrier)
    if isinstance(Q, ModuleCoalgebraQuotient):
        return {"kind": "module_coalgebra", "ideal": subspace_to_json(Q.ideal, name), "dim": Q.presentation.quotient.dim}
    return {"kind": "hopf_quotient", "quotient": _quotient_json(Q, name)}


def _op_newman_psi(ws, a, args):
    f = ws.morphism(args[0])
    K = newman_psi(f.source, f)
    a.add("coinvariants form a sub-Hopf algebra", True)
    return {"coinvariants": _sub_json(K, _name_of(ws, f.source))}


def _op_twist(ws, a, args):
    H = ws.algebra(args[0])
    result = twist(H)
    a.add("twisted algebra verifies", verify_hopf(result.target).ok)
    a.add("gamma satisfies the cocycle and factorization identities", gamma_checks(H, result.gamma).ok)
    a.add("structure preserved", twist_preserves_structure_checks(H, result=result).ok)
    G = result.gamma.group
    return {
        "algebra": algebra_to_json(result.target),
        "gamma": result.gamma.matrix_json(),
        "gamma_group": G.to_json(),
    }


def _op_abelian(ws, a, args):
    H = ws.algebra(args[0])
    chk = is_abelian_object(H)
    a.add("routes agree", True)
    return {"abelian": chk.abelian, "commutative": chk.commutative, "diagonal_normal": chk.diagonal_normal}


CONSTRUCTIONS = {
    "hker": (_op_hker, 1),
    "coker": (_op_coker, 1),
    "equalizer": (_op_equalizer, 2),
    "coequalizer": (_op_coequalizer, 2),
    "product": (_op_product, 2),
    "factorize": (_op_factorize, 1),
    "pullback": (_op_pullback, 2),
    "normal": (_op_normal, 2),
    "newman_phi": (_op_newman_phi, 2),
    "newman": (_op_newman_phi, 2),
    "newman_psi": (_op_newman_psi, 1),
    "twist": (_op_twist, 1),
    "abelian": (_op_abelian, 1),
}


def cmd_construct(ws: Workspace, op: str, args: list[str]) -> tuple[int, dict]:
    fn, arity = CONSTRUCTIONS[op]
    if len(args) != arity:
        raise WorkspaceError(f"{op} takes {arity} argument(s), got {len(args)}")
    a = Assertions()
    try:
        result = fn(ws, a, args)
    except NotVerified as exc:
        return EXIT_FAIL, {"op": op, "args": args, "error": str(exc), "failed": exc.report.failed_names if exc.report else []}
    except WorkspaceError:
        raise
    except ColorHopfError as exc:
        return EXIT_FAIL, {"op": op, "args": args, "error": f"{type(exc).__name__}: {exc}"}
    return (EXIT_PASS if a.ok else EXIT_FAIL), {"op": op, "args": args, "assertions": a.to_json(), "result": result}


def cmd_suite(ws: Workspace) -> tuple[int, dict]:
    res = run_suite(ws)
    out = {"checks": len(res.outcomes), "failed": sum(not o.passed for o in res.outcomes)}
    first = res.first_failure
    if first is not None:
        out["counterexample"] = first.to_json()
    return (EXIT_PASS if res.ok else EXIT_FAIL), out


def cmd_corpus(action: str, name: str | None, with_mutations: bool) -> tuple[int, dict]:
    mutations = corpus.MUTATIONS if with_mutations else ()
    ws = corpus_workspace(mutations)
    if action == "list":
        return EXIT_PASS, {
            "algebras": sorted(ws.algebras),
            "morphisms": sorted(ws.morphisms),
            "subspaces": sorted(ws.subspaces),
        }
    if name in (None, "all"):
        return EXIT_PASS, ws.to_json()
    H = ws.algebra(name)
    single = Workspace(ws.field, ws.group, ws.phi, {name: H})
    single.subspaces = {k: v for k, v in ws.subspaces.items() if v[0] == name}
    single.morphisms = {
        k: f for k, f in ws.morphisms.items() if f.source is H and f.target is H
    }
    return EXIT_PASS, single.to_json()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="colorhopf", description="Verify and construct finite-dimensional color Hopf algebras.")
    parser.add_argument("--workspace", help="workspace JSON file (default: the built-in corpus)")
    parser.add_argument("--out", help="also write the JSON report to this path")
    parser.add_argument("--json", action="store_true", help="suppress the human summary on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the axiom checks on an algebra or morphism")
    p.add_argument("name")
    for op, (_, arity) in CONSTRUCTIONS.items():
        p = sub.add_parser(op, help=f"construction taking {arity} name(s)")
        p.add_argument("args", nargs="*")
    sub.add_parser("suite", help="run the full invariant battery over the workspace")
    p = sub.add_parser("corpus", help="list or emit the built-in corpus")
    p.add_argument("action", choices=["list", "emit"])
    p.add_argument("name", nargs="?")
    p.add_argument("--with-mutations", action="store_true", help="add the mutated_<name> algebras")
    return parser


def _summary(command: str, code: int, report: dict) -> str:
    status = {EXIT_PASS: "pass", EXIT_FAIL: "FAIL", EXIT_INPUT: "input error"}[code]
    if command == "suite":
        extra = f"{report['checks']} checks, {report['failed']} failed"
        if "counterexample" in report:
            c = report["counterexample"]
            extra += f"; first: {c['object']} / {c['check']}"
        return f"suite: {status} ({extra})"
    if command == "verify" and "checks" in report:
        failed = [c["check"] for c in report["checks"] if c["status"] != "pass"]
        return f"verify {report.get('name')}: {status}" + (f" ({', '.join(failed)})" if failed else "")
    if "assertions" in report:
        verdict = {k: v for k, v in report["result"].items() if k in ("normal", "kind", "abelian")}
        lines = report["assertions"] + [f"{k}={v}" for k, v in verdict.items()]
        return f"{command}: {status}; " + "; ".join(lines)
    if "error" in report:
        return f"{command}: {status}: {report['error']}"
    return f"{command}: {status}"


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        if ns.command == "corpus":
            code, report = cmd_corpus(ns.action, ns.name, ns.with_mutations)
        else:
            ws = load_workspace(ns.workspace) if ns.workspace else corpus_workspace()
            if ns.command == "verify":
                code, report = cmd_verify(ws, ns.name)
            elif ns.command == "suite":
                code, report = cmd_suite(ws)
            else:
                code, report = cmd_construct(ws, ns.command, ns.args)
    except WorkspaceError as exc:
        code, report = EXIT_INPUT, {"error": str(exc)}
    text = dumps(report)
    sys.stdout.write(text)
    if ns.out:
        Path(ns.out).write_text(text, encoding="utf-8")
    if not ns.json:
        print(_summary(ns.command, code, report), file=sys.stderr)
    return code
