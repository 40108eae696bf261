"""JSON encoding of fields, groups, algebras, morphisms, subspaces and workspaces.

Scalars are written as strings ("a/b" over Q, residues over F_p) so files
round-trip exactly. The multiplication and comultiplication are stored
sparsely, everything else as dense row-major matrices.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from .errors import ColorHopfError
from .groups import Bicharacter, FgAbGroup, validate_commutation_factor
from .hopf import ColorHopfAlgebra, HopfMorphism
from .linalg import GradedLinearMap, GradedSubspace, GradedVectorSpace, dense, from_dense
from .scalars import FieldSpec


class WorkspaceError(ColorHopfError):
    """Malformed input: bad JSON, unknown references, invalid commutation factor."""


def _fmt_vec(field: FieldSpec, x: dict, dim: int) -> list[str]:
    return [field.format(c) for c in dense(x, dim, field.zero)]


def _parse_vec(field: FieldSpec, values) -> dict:
    return from_dense([field.parse(v) for v in values])


def matrix_to_json(f: GradedLinearMap) -> list[list[str]]:
    fmt = f.codomain.field.format
    return [[fmt(x) for x in row] for row in f.matrix()]


def algebra_to_json(H: ColorHopfAlgebra) -> dict:
    F = H.field
    n = H.dim
    fmt = F.format
    mult = []
    for idx, col in enumerate(H.mult.cols):
        if col:
            i, j = divmod(idx, n)
            mult.append([i, j, [[k, fmt(c)] for k, c in sorted(col.items())]])
    comult = []
    for i, col in enumerate(H.comult.cols):
        if col:
            comult.append([i, [[k // n, k % n, fmt(c)] for k, c in sorted(col.items())]])
    if len(H.unit) == 1 and list(H.unit.values())[0] == 1:
        unit = next(iter(H.unit))
    else:
        unit = _fmt_vec(F, H.unit, n)
    return {
        "name": H.name,
        "field": F.to_json(),
        "group": H.group.to_json(),
        "phi": H.phi.matrix_json(),
        "space": H.space.to_json(),
        "mult": mult,
        "unit": unit,
        "comult": comult,
        "counit": [[i, fmt(c[0])] for i, c in enumerate(H.counit.cols) if c],
        "antipode": matrix_to_json(H.antipode),
    }


def algebra_from_json(data: dict, defaults: dict | None = None, name: str = "") -> ColorHopfAlgebra:
    defaults = defaults or {}
    try:
        F = FieldSpec.from_json(data["field"]) if "field" in data else defaults["field"]
        G = FgAbGroup.from_json(data["group"]) if "group" in data else defaults["group"]
        phi = Bicharacter.from_json(G, F, data["phi"]) if "phi" in data else defaults["phi"]
        space = GradedVectorSpace.from_json(data["space"], F, G)
        mult = {(i, j): {k: F.parse(c) for k, c in terms} for i, j, terms in data["mult"]}
        comult = {i: {(j, k): F.parse(c) for j, k, c in terms} for i, terms in data["comult"]}
        unit = data["unit"]
        unit = {unit: F.one} if isinstance(unit, int) else _parse_vec(F, unit)
        counit = {i: F.parse(c) for i, c in data["counit"]}
        rows = [[F.parse(x) for x in row] for row in data["antipode"]]
        antipode = GradedLinearMap.from_matrix(space, space, rows, check=False).cols
    except (KeyError, TypeError, ValueError) as exc:
        raise WorkspaceError(f"malformed algebra {name or data.get('name', '?')}: {exc!r}") from exc
    report = validate_commutation_factor(phi)
    if not report.ok:
        raise WorkspaceError(f"phi of {name} is not a commutation factor: {report.failures[0]}")
    return ColorHopfAlgebra.from_tensors(space, phi, mult, unit, comult, counit, list(antipode), name=name or data.get("name", ""))


def morphism_to_json(f: HopfMorphism, source: str, target: str) -> dict:
    return {"source": source, "target": target, "matrix": matrix_to_json(f.map)}


def subspace_to_json(U: GradedSubspace, ambient: str) -> dict:
    F = U.ambient.field
    return {"ambient": ambient, "rows": [_fmt_vec(F, r, U.ambient.dim) for r in U.rows]}


@dataclass
class Workspace:
    field: FieldSpec | None = None
    group: FgAbGroup | None = None
    phi: Bicharacter | None = None
    algebras: dict[str, ColorHopfAlgebra] = dc_field(default_factory=dict)
    morphisms: dict[str, HopfMorphism] = dc_field(default_factory=dict)
    subspaces: dict[str, tuple[str, GradedSubspace]] = dc_field(default_factory=dict)

    def algebra(self, name: str) -> ColorHopfAlgebra:
        if name not in self.algebras:
            raise WorkspaceError(f"unknown name {name!r}")
        return self.algebras[name]

    def morphism(self, name: str) -> HopfMorphism:
        if name not in self.morphisms:
            raise WorkspaceError(f"unknown name {name!r}")
        return self.morphisms[name]

    def subspace(self, name: str) -> tuple[str, GradedSubspace]:
        if name not in self.subspaces:
            raise WorkspaceError(f"unknown name {name!r}")
        return self.subspaces[name]

    def to_json(self) -> dict:
        names = {id(H): n for n, H in self.algebras.items()}
        out = {}
        if self.field is not None:
            out["field"] = self.field.to_json()
        if self.group is not None:
            out["group"] = self.group.to_json()
        if self.phi is not None:
            out["phi"] = self.phi.matrix_json()
        out["algebras"] = {n: algebra_to_json(H) for n, H in self.algebras.items()}
        out["morphisms"] = {
            n: morphism_to_json(f, names[id(f.source)], names[id(f.target)]) for n, f in self.morphisms.items()
        }
        out["subspaces"] = {n: subspace_to_json(U, a) for n, (a, U) in self.subspaces.items()}
        return out


def dumps(data) -> str:
    return json.dumps(data, indent=1, ensure_ascii=False, sort_keys=True) + "\n"


def workspace_from_json(data: dict) -> Workspace:
    if not isinstance(data, dict):
        raise WorkspaceError("workspace must be a JSON object")
    ws = Workspace()
    try:
        if "field" in data:
            ws.field = FieldSpec.from_json(data["field"])
        if "group" in data:
            ws.group = FgAbGroup.from_json(data["group"])
        if "phi" in data:
            ws.phi = Bicharacter.from_json(ws.group, ws.field, data["phi"])
    except (KeyError, TypeError, ValueError, ColorHopfError) as exc:
        raise WorkspaceError(f"malformed workspace header: {exc!r}") from exc
    if ws.phi is not None:
        report = validate_commutation_factor(ws.phi)
        if not report.ok:
            raise WorkspaceError(f"phi is not a commutation factor: {report.failures[0]}")
    defaults = {"field": ws.field, "group": ws.group, "phi": ws.phi}
    for name, obj in data.get("algebras", {}).items():
        try:
            ws.algebras[name] = algebra_from_json(obj, defaults, name)
        except ColorHopfError as exc:
            if isinstance(exc, WorkspaceError):
                raise
            raise WorkspaceError(f"malformed algebra {name}: {exc}") from exc
    for name, obj in data.get("morphisms", {}).items():
        try:
            A, B = ws.algebra(obj["source"]), ws.algebra(obj["target"])
            rows = [[A.field.parse(x) for x in row] for row in obj["matrix"]]
            ws.morphisms[name] = HopfMorphism.from_matrix(A, B, rows, name)
        except (KeyError, TypeError, ValueError) as exc:
            raise WorkspaceError(f"malformed morphism {name}: {exc!r}") from exc
        except ColorHopfError as exc:
            if isinstance(exc, WorkspaceError):
                raise
            raise WorkspaceError(f"malformed morphism {name}: {exc}") from exc
    for name, obj in data.get("subspaces", {}).items():
        try:
            A = ws.algebra(obj["ambient"])
            vectors = [_parse_vec(A.field, row) for row in obj["rows"]]
            if any(len(row) != A.dim for row in obj["rows"]):
                raise WorkspaceError(f"subspace {name}: row length differs from dim {obj['ambient']}")
            ws.subspaces[name] = (obj["ambient"], GradedSubspace.from_vectors(A.space, vectors))
        except (KeyError, TypeError, ValueError) as exc:
            raise WorkspaceError(f"malformed subspace {name}: {exc!r}") from exc
        except ColorHopfError as exc:
            if isinstance(exc, WorkspaceError):
                raise
            raise WorkspaceError(f"malformed subspace {name}: {exc}") from exc
    return ws


def load_workspace(path) -> Workspace:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise WorkspaceError(f"cannot read workspace {path}: {exc}") from exc
    return workspace_from_json(data)


def corpus_workspace(mutations=()) -> Workspace:
    """The shipped workspace: every corpus algebra, morphism and inventoried subalgebra.

    Each (algebra, kind) pair in ``mutations`` adds ``mutated_<algebra>`` built by
    ``corpus.mutate``; the unmutated original stays in place.
    """
    from . import corpus

    algebras = corpus.corpus_algebras()
    ws = Workspace(field=corpus.Q, group=FgAbGroup(0, (2,)), phi=corpus.eta())
    ws.algebras = dict(algebras)
    ws.morphisms = corpus.corpus_morphisms(algebras)
    for name, H in algebras.items():
        for label in corpus.SUBALGEBRAS[name]:
            if label == "whole":
                continue
            U = GradedSubspace.span(H.space, corpus.subalgebra_vectors(H, label))
            ws.subspaces[f"{name}.{label}"] = (name, U)
    for name, kind in mutations:
        ws.algebras[f"mutated_{name}"] = corpus.mutate(algebras[name], kind)
    return ws
