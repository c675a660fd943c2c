"""JSON forms of algebras and ideal sets."""

from __future__ import annotations

import json
from fractions import Fraction

from .exactnum import Subspace, format_rational, parse_rational
from .ideals import IdealSet, PencilWitness, Status
from .lie import LieAlgebra


class FormatError(ValueError):
    pass


def _q(x) -> str | int:
    x = Fraction(x)
    return int(x) if x.denominator == 1 else format_rational(x)


def algebra_to_json(L: LieAlgebra) -> dict:
    brackets = []
    for (i, j), v in sorted(L.nonzero_brackets().items()):
        if i < j:
            brackets.append({"i": L.basis_names[i], "j": L.basis_names[j], "value": [_q(x) for x in v]})
    return {"dim": L.dim, "basis": list(L.basis_names), "brackets": brackets}


def algebra_from_json(data) -> LieAlgebra:
    try:
        n = int(data["dim"])
        names = [str(b) for b in data.get("basis", [f"e{i}" for i in range(n)])]
        if len(names) != n:
            raise FormatError("basis length differs from dim")
        pos = {nm: k for k, nm in enumerate(names)}
        table = {}
        for b in data.get("brackets", []):
            i, j = b["i"], b["j"]
            i = pos[i] if i in pos else int(i)
            j = pos[j] if j in pos else int(j)
            v = [parse_rational(x) for x in b["value"]]
            if i == j:
                if any(v):
                    raise FormatError(f"[{names[i]}, {names[i]}] must vanish")
                continue
            if i > j:
                i, j, v = j, i, [-x for x in v]
            if (i, j) in table:
                raise FormatError(f"bracket [{names[i]}, {names[j]}] given twice")
            table[(i, j)] = v
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"malformed algebra: {exc}") from exc
    return LieAlgebra(n, table, names)


def subspace_to_json(S: Subspace) -> list:
    return [[_q(x) for x in row] for row in S.basis]


def subspace_from_json(rows, n: int) -> Subspace:
    return Subspace.span([[parse_rational(x) for x in r] for r in rows], n)


def idealset_to_json(result: IdealSet) -> dict:
    out = {
        "ambient_dim": result.algebra.dim,
        "algebra": algebra_to_json(result.algebra),
        "status": result.status.value,
        "ideals": [subspace_to_json(I) for I in result.ideals],
    }
    w = result.witness
    if w is not None:
        out["witness"] = {
            "base": subspace_to_json(w.base),
            "source": subspace_to_json(w.source),
            "target": subspace_to_json(w.target),
            "phi": [[_q(x) for x in r] for r in w.phi],
            "directions": [[[_q(x) for x in p], [_q(x) for x in q]] for p, q in w.directions],
        }
    return out


def idealset_from_json(data) -> IdealSet:
    try:
        L = algebra_from_json(data["algebra"])
        n = int(data["ambient_dim"])
        status = Status(data["status"])
        ideals = tuple(sorted((subspace_from_json(r, n) for r in data["ideals"]), key=Subspace.sort_key))
        witness = None
        if "witness" in data:
            w = data["witness"]
            witness = PencilWitness(
                subspace_from_json(w["base"], n),
                subspace_from_json(w["source"], n),
                subspace_from_json(w["target"], n),
                tuple(tuple(parse_rational(x) for x in r) for r in w["phi"]),
                tuple(
                    (tuple(parse_rational(x) for x in p), tuple(parse_rational(x) for x in q))
                    for p, q in w["directions"]
                ),
            )
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed ideal set: {exc}") from exc
    return IdealSet(L, ideals, status, witness)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
